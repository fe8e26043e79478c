#include "doctest.h"

#include <random>

#include "adjalex/linalg.hpp"

using namespace adjalex;

namespace {

Matrix from(const std::vector<std::vector<long>>& rows) {
    Matrix m(0, rows.front().size());
    for (const auto& r : rows) {
        std::vector<Rational> v;
        for (long x : r) v.emplace_back(x);
        m.append_row(v);
    }
    return m;
}

}  // namespace

TEST_CASE("rref and rank") {
    Matrix m = from({{1, 2, 3}, {2, 4, 6}, {1, 0, 1}});
    Echelon e = rref(m);
    CHECK(e.reduced.rows() == 2);
    CHECK(e.pivots == std::vector<std::size_t>{0, 1});
    CHECK(rank(m) == 2);
    CHECK(e.reduced.at(1, 2) == 1);
}

TEST_CASE("null space vectors are annihilated") {
    Matrix m = from({{1, 2, 3, 4}, {0, 1, 1, 1}});
    auto ns = nullspace(m);
    REQUIRE(ns.size() == 2);
    for (const auto& v : ns)
        for (std::size_t r = 0; r < m.rows(); ++r) {
            Rational s = 0;
            for (std::size_t c = 0; c < m.cols(); ++c) s += m.at(r, c) * v[c];
            CHECK(s == 0);
        }
}

TEST_CASE("rank-nullity on random integer matrices") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-3, 3);
    for (int trial = 0; trial < 50; ++trial) {
        std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = dist(rng) * (r % 3 == 2 ? 0 : 1);
        CHECK(rank(m) + nullspace(m).size() == cols);
    }
}

TEST_CASE("incremental row space") {
    RowSpace rs(3);
    CHECK(rs.add({1, 1, 0}));
    CHECK(rs.add({0, 1, 1}));
    CHECK_FALSE(rs.add({1, 2, 1}));
    CHECK(rs.contains({2, 0, -2}));
    CHECK_FALSE(rs.contains({0, 0, 1}));
    CHECK(rs.rank() == 2);
}
