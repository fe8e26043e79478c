#include "doctest.h"

#include "adjalex/curves.hpp"
#include "adjalex/toric.hpp"

using namespace adjalex;

namespace {

std::vector<long> ms(const ResolutionData& rd) {
    std::vector<long> out;
    for (const auto& e : rd.entries) out.push_back(e.m);
    return out;
}

std::vector<long> ks(const ResolutionData& rd) {
    std::vector<long> out;
    for (const auto& e : rd.entries) out.push_back(e.k);
    return out;
}

ResolutionData family_resolution(const std::string& fam) {
    TorusCurveSpec spec = family_instance(fam, {});
    BiPoly f = spec.f();
    LocalModel lm = local_model(f, auto_phi(f, 40), &spec.f2);
    return resolve(lm.germ, 40);
}

}  // namespace

TEST_CASE("weighted degree and canonical multiplicity") {
    CHECK(weighted_degree(parse_poly("u^20+v^5", kUV), {1, 4}) == 20);
    CHECK(canonical_multiplicity({2, 9}) == 10);
    CHECK(canonical_multiplicity({1, 1}) == 1);
}

TEST_CASE("non-degenerate Brieskorn resolution") {
    ResolutionData rd = resolve(TruncBiPoly{parse_poly("u^20+v^5", kUV), kExact});
    CHECK_FALSE(rd.degenerate());
    CHECK(ms(rd) == std::vector<long>{5, 10, 15, 20});
    CHECK(ks(rd) == std::vector<long>{1, 2, 3, 4});
    CHECK(rd.points.empty() == false);
    for (const auto& p : rd.points) CHECK_FALSE(p.singular);
}

TEST_CASE("resolution ledger of the B9sq_B52_B21 family") {
    ResolutionData rd = family_resolution("B9sq_B52_B21");
    CHECK(ms(rd) == std::vector<long>{5, 10, 14, 18, 40, 20, 42, 44, 90, 45});
    CHECK(ks(rd) == std::vector<long>{1, 2, 3, 4, 10, 5, 11, 12, 26, 13});
    CHECK(rd.display_f().find("40E(Q5)") != std::string::npos);
}

TEST_CASE("resolution ledger of the B292_B21_B52 family") {
    ResolutionData rd = family_resolution("B292_B21_B52");
    std::vector<long> m{5}, k{1};
    for (long i = 10; i <= 34; i += 2) m.push_back(i);
    for (long i = 2; i <= 14; ++i) k.push_back(i);
    m.insert(m.end(), {70, 35, 12, 14, 30, 15});
    k.insert(k.end(), {30, 15, 3, 4, 10, 5});
    CHECK(ms(rd) == m);
    CHECK(ks(rd) == k);
    int singular = 0;
    for (const auto& p : rd.points)
        if (p.singular) {
            ++singular;
            CHECK(p.S == WeightVector{2, 5});
        }
    CHECK(singular == 1);
}

TEST_CASE("valuation along the divisor of a singular point") {
    ResolutionData rd = family_resolution("B292_B21_B52");
    const ChartChange* cc = nullptr;
    for (const auto& p : rd.points)
        if (p.singular) cc = &p;
    REQUIRE(cc != nullptr);
    CHECK(valuation_at(parse_poly("u", kUV), *cc) == 2);
    CHECK(valuation_at(parse_poly("v", kUV), *cc) == 4);
    CHECK(valuation_at(parse_poly("v+4/9*u^2", kUV), *cc) == 6);
    CHECK(valuation_at(parse_poly("v+4/9*u^2-4/9*u^3", kUV), *cc) == 8);
}
