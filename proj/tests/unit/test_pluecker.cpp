#include "doctest.h"

#include "adjalex/error.hpp"
#include "adjalex/pluecker.hpp"

using namespace adjalex;

namespace {

std::vector<std::string> surviving(long d, const std::vector<SingularityRecord>& recs) {
    std::vector<std::string> out;
    for (const auto& v : enumerate_splittings(d, recs))
        if (v.feasible()) out.push_back(partition_string(v.degrees));
    return out;
}

const PartitionVerdict& find(const std::vector<PartitionVerdict>& all, const std::string& p) {
    for (const auto& v : all)
        if (partition_string(v.degrees) == p) return v;
    throw std::runtime_error("partition not listed: " + p);
}

}  // namespace

TEST_CASE("Euler characteristic bound") {
    CHECK(euler_check(10, 71, 1).chi == 1);
    CHECK(euler_check(10, 71, 1).feasible);
    CHECK(euler_check(3, 10, 1).chi == 10);
    CHECK_FALSE(euler_check(3, 10, 1).feasible);
    CHECK(euler_check(7, 35, 2).chi == 8);
    CHECK(euler_check(2, 0, 1).chi == 2);
    CHECK(euler_check(2, 0, 1).feasible);
    CHECK(euler_check(1, 0, 1).chi == 2);
}

TEST_CASE("profiles") {
    BranchProfile b = brieskorn_profile(20, 5);
    CHECK(b.branches.size() == 5);
    CHECK(b.mu() == 76);
    CHECK(b.intersection[0][1] == 4);

    BranchProfile c = parse_profile("B29,2oB6,3");
    CHECK(c.branches.size() == 4);
    CHECK(c.mu() == 61);
    CHECK(parse_profile("B15,2∘B10,3").mu() == 71);
    CHECK(parse_profile("B15,2*B10,3").mu() == 71);
    CHECK(parse_profile("B25,4").mu() == 72);

    SingularityRecord r = record_from_profile("O", c);
    CHECK(r.mu == 61);
    CHECK(r.r_loc == 4);

    CHECK_THROWS_AS(parse_profile("B29"), Error);
    CHECK_THROWS_AS(parse_profile("B2,2oB3,2oB5,2"), Error);
    CHECK_THROWS_AS(parse_profile(""), Error);
}

TEST_CASE("partition order and naming") {
    auto all = enumerate_splittings(10, {});
    CHECK(all.size() == 42);
    CHECK(partition_string(all.front().degrees) == "{10}");
    CHECK(partition_string(all.back().degrees) == "{1,1,1,1,1,1,1,1,1,1}");
    for (std::size_t i = 0; i + 1 < all.size(); ++i) CHECK(all[i].degrees > all[i + 1].degrees);
}

TEST_CASE("B29,2oB6,3 at degree ten") {
    std::vector<SingularityRecord> recs{record_from_profile("O", parse_profile("B29,2oB6,3"))};
    CHECK(surviving(10, recs) == std::vector<std::string>{"{10}", "{9,1}"});
    auto all = enumerate_splittings(10, recs);
    CHECK(find(all, "{9,1}").survivors.size() == 3);
    const PartitionVerdict& p82 = find(all, "{8,2}");
    CHECK_FALSE(p82.feasible());
    REQUIRE(p82.witness.has_value());
    CHECK_FALSE(p82.witness->feasible);
    CHECK_FALSE(find(all, "{7,3}").feasible());
}

TEST_CASE("B20,5 at degree ten") {
    std::vector<SingularityRecord> recs{record_from_profile("O", parse_profile("B20,5"))};
    CHECK(surviving(10, recs) == std::vector<std::string>{"{2,2,2,2,2}"});
    CHECK(find(enumerate_splittings(10, recs), "{2,2,2,2,2}").survivors.size() == 1);
}

TEST_CASE("irreducible configurations") {
    for (const char* t : {"B15,2oB10,3", "B25,4"}) {
        CAPTURE(t);
        std::vector<SingularityRecord> recs{record_from_profile("O", parse_profile(t))};
        CHECK(surviving(10, recs) == std::vector<std::string>{"{10}"});
    }
}

TEST_CASE("records without a profile move as a unit") {
    std::vector<SingularityRecord> recs{{"P", 6, 1, std::nullopt}};
    auto all = enumerate_splittings(4, recs);
    CHECK(find(all, "{4}").feasible());
    CHECK_FALSE(find(all, "{3,1}").feasible());
}

TEST_CASE("adding singularities never creates survivors") {
    std::vector<SingularityRecord> one{record_from_profile("O", parse_profile("B29,2oB6,3"))};
    std::vector<SingularityRecord> two = one;
    two.push_back({"P", 1, 2, std::nullopt});
    auto a = enumerate_splittings(10, one);
    auto b = enumerate_splittings(10, two);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (!a[i].feasible()) CHECK_FALSE(b[i].feasible());
}

TEST_CASE("a node on a line pair") {
    std::vector<SingularityRecord> recs{record_from_profile("N", parse_profile("B2,2"))};
    CHECK(surviving(2, recs) == std::vector<std::string>{"{1,1}"});
}
