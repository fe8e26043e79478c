#include "doctest.h"

#include "adjalex/newton.hpp"

using namespace adjalex;

namespace {

std::vector<WeightVector> vecs(const Fan& f) { return f.vectors; }

}  // namespace

TEST_CASE("Newton boundary of a two-face germ") {
    NewtonData nd = newton_boundary(parse_poly("u^25+u^10*v^2+v^5", kUV));
    REQUIRE(nd.faces.size() == 2);
    CHECK(nd.faces[0].weight == WeightVector{3, 10});
    CHECK(nd.faces[1].weight == WeightVector{2, 15});
    CHECK(nd.faces[0].degree == 50);
    CHECK(nd.vertices.front() == Exp{0, 5});
    CHECK(nd.vertices.back() == Exp{25, 0});
    CHECK(nd.nondegenerate());
}

TEST_CASE("degenerate face detection") {
    NewtonData nd = newton_boundary(parse_poly("v^5+u^2*(v^2+u^9)^2", kUV));
    REQUIRE(nd.faces.size() == 2);
    CHECK_FALSE(nd.faces[0].degenerate);
    CHECK(nd.faces[1].degenerate);
    CHECK_FALSE(nd.nondegenerate());
    REQUIRE(nd.faces[1].roots.size() == 1);
    CHECK(nd.faces[1].roots[0].gamma == -1);
    CHECK(nd.faces[1].roots[0].multiplicity == 2);
}

TEST_CASE("irrational face factors are kept as blocks") {
    NewtonData nd = newton_boundary(parse_poly("v^2-2*u^2", kUV));
    REQUIRE(nd.faces.size() == 1);
    CHECK(nd.faces[0].roots.empty());
    REQUIRE(nd.faces[0].irrational.size() == 1);
    CHECK(nd.faces[0].irrational[0].poly.degree() == 2);
}

TEST_CASE("canonical regular subdivisions") {
    Fan a = canonical_subdivision({kE1, {1, 2}, {2, 9}, kE2});
    std::vector<WeightVector> want_a{kE1, {1, 1}, {1, 2}, {1, 3}, {1, 4}, {2, 9}, {1, 5}, kE2};
    CHECK(vecs(a) == want_a);
    Fan b = canonical_subdivision({kE1, {2, 5}, kE2});
    std::vector<WeightVector> want_b{kE1, {1, 1}, {1, 2}, {2, 5}, {1, 3}, kE2};
    CHECK(vecs(b) == want_b);
    for (const Fan* f : {&a, &b})
        for (std::size_t i = 0; i + 1 < f->vectors.size(); ++i) CHECK(det(f->vectors[i], f->vectors[i + 1]) == 1);
    CHECK_THROWS_AS(canonical_subdivision({kE2, kE1}), Error);
}

TEST_CASE("face fan marks the face vectors") {
    NewtonData nd = newton_boundary(parse_poly("u^20+v^5", kUV));
    Fan f = face_fan(nd);
    REQUIRE(f.face_markers.size() == 1);
    CHECK(f.vectors[f.face_markers[0]] == WeightVector{1, 4});
    CHECK(fan_to_dot(f).find("shape=box") != std::string::npos);
}

TEST_CASE("Milnor numbers by closed form and Newton number") {
    const std::pair<long, long> cases[] = {{15, 2}, {10, 3}, {29, 2}, {20, 5}, {6, 3}};
    const long expect[] = {14, 18, 28, 76, 10};
    for (std::size_t i = 0; i < 5; ++i) {
        auto [p, q] = cases[i];
        CHECK(brieskorn_mu(p, q) == expect[i]);
        BiPoly f = BiPoly::monomial(1, static_cast<int>(p), 0) + BiPoly::monomial(1, 0, static_cast<int>(q));
        CHECK(newton_number(f) == expect[i]);
    }
    CHECK(newton_number(parse_poly("u^25+u^10*v^2+v^5", kUV)) == 71);
}
