#include "doctest.h"

#include <random>

#include "adjalex/branches.hpp"

using namespace adjalex;

TEST_CASE("branches of a two-face germ") {
    auto br = puiseux_branches(parse_poly("u^25+u^10*v^2+v^5", kUV), 8);
    long total = 0;
    for (const auto& b : br) total += b.count * b.ramification();
    CHECK(total == 5);
    bool saw2 = false, saw3 = false;
    for (const auto& b : br) {
        saw2 |= b.ramification() == 2;
        saw3 |= b.ramification() == 3;
    }
    CHECK(saw2);
    CHECK(saw3);
}

TEST_CASE("exact branches are recognised") {
    auto br = puiseux_branches(parse_poly("v^4+u^25", kUV), 8);
    REQUIRE(br.size() == 1);
    CHECK(br[0].N == 4);
    CHECK(br[0].v_series.is_exact());
}

TEST_CASE("axis branch") {
    auto br = puiseux_branches(parse_poly("u*(v-u^2)", kUV), 8);
    int axes = 0;
    for (const auto& b : br) axes += b.axis;
    CHECK(axes == 1);
}

TEST_CASE("irrational conjugate branches form a family") {
    auto br = puiseux_branches(parse_poly("v^5+u^20", kUV), 8);
    long total = 0;
    for (const auto& b : br) total += b.count * b.ramification();
    CHECK(total == 5);
    CHECK(intersection_multiplicity(parse_poly("v^5+u^20", kUV), parse_poly("v", kUV)) == 20);
}

TEST_CASE("intersection multiplicities against the resultant") {
    BiPoly f = parse_poly("u^25+u^10*v^2+v^5", kUV);
    CHECK(intersection_multiplicity(f, parse_poly("v", kUV)) == 25);
    CHECK(intersection_multiplicity(f, parse_poly("u", kUV)) == 5);
    BiPoly g = parse_poly("v^5+u^20", kUV);
    CHECK(intersection_multiplicity(g, parse_poly("v+u^4+u^7", kUV)) == resultant_order(g, parse_poly("v+u^4+u^7", kUV)));
    CHECK(intersection_multiplicity(parse_poly("v^2-u^3", kUV), parse_poly("v^2-u^3+u^4", kUV)) == 8);
}

TEST_CASE("common components are rejected") {
    CHECK_THROWS_AS(intersection_multiplicity(parse_poly("(v+u^4)*(v-u^4)", kUV), parse_poly("v+u^4", kUV)), Error);
}

TEST_CASE("square-free certificate") {
    CHECK_NOTHROW(certify_squarefree(parse_poly("u^25+u^10*v^2+v^5", kUV)));
    CHECK_THROWS_AS(certify_squarefree(parse_poly("(v-u^2)^2*(v+u)", kUV)), Error);
}

TEST_CASE("branch order of a polynomial along a branch") {
    auto br = puiseux_branches(parse_poly("v^2-u^3", kUV), 8);
    REQUIRE(br.size() == 1);
    CHECK(branch_order(parse_poly("v", kUV), br[0]) == 3);
    CHECK(branch_order(parse_poly("u", kUV), br[0]) == 2);
}

TEST_CASE("randomised oracle equivalence") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> c(-4, 4);
    std::uniform_int_distribution<int> e(1, 6);
    int checked = 0;
    while (checked < 40) {
        BiPoly f = BiPoly::monomial(1, 0, e(rng)) + BiPoly::monomial(c(rng) == 0 ? 1 : c(rng), e(rng) + 1, 0) +
                   BiPoly::monomial(c(rng), e(rng), 1);
        BiPoly g = BiPoly::monomial(1, 0, 1) + BiPoly::monomial(c(rng), e(rng), 0) + BiPoly::monomial(c(rng), e(rng), 1);
        if (sgn(f.coeff(0, 0)) != 0 || sgn(g.coeff(0, 0)) != 0) continue;
        try {
            long r = resultant_order(f, g);
            CHECK(intersection_multiplicity(f, g) == r);
            ++checked;
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::Precondition && err.kind() != ErrorKind::Unsupported) throw;
        }
    }
}
