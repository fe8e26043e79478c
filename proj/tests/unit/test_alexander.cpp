#include "doctest.h"

#include "adjalex/alexander.hpp"

using namespace adjalex;

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == UniPoly({-1, 1}));
    CHECK(cyclotomic(2) == UniPoly({1, 1}));
    CHECK(cyclotomic(5) == UniPoly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(10) == UniPoly({1, -1, 1, -1, 1}));
    CHECK(cyclotomic(6) == UniPoly({1, -1, 1}));
}

TEST_CASE("generic Alexander polynomial") {
    CHECK(generic_delta(5, 2) == cyclotomic(10));
    CHECK(generic_delta(3, 2) == UniPoly({1, -1, 1}));
    for (auto [p, q] : {std::pair<long, long>{5, 2}, {3, 2}, {2, 2}, {4, 6}, {5, 5}}) {
        CAPTURE(p);
        CAPTURE(q);
        CHECK(generic_delta(p, q).degree() == (p - 1) * (q - 1));
    }
    CHECK_THROWS_AS(generic_delta(1, 3), Error);
}

TEST_CASE("assembly from l-values") {
    AlexanderPolynomial a = assemble({{3, 0}, {4, 0}, {5, 0}, {6, 0}, {7, 1}, {9, 1}}, 10, 1);
    CHECK(a.factored() == "(Φ10)");
    CHECK(a.reduced == cyclotomic(10));
    CHECK(a.full == cyclotomic(10));

    std::map<long, long> ell{{3, 1}, {4, 1}, {5, 2}, {6, 2}, {7, 3}, {8, 3}, {9, 4}};
    AlexanderPolynomial b = assemble(ell, 10, 5);
    CHECK(b.factored() == "(t-1)^4 (t+1)^4 (Φ10)^4 (Φ5)^3");
    CHECK(b.reduced.degree() == 32);
    CHECK(b.full.degree() == 36);
    CHECK(b.full.eval(1) == 0);

    AlexanderPolynomial c = assemble(ell, 10, 0);
    CHECK(c.full.is_zero());
    CHECK(c.factored() == "(t+1)^4 (Φ10)^4 (Φ5)^3");

    CHECK(assemble({}, 6, 1).factored() == "1");
    CHECK_THROWS_AS(assemble({{3, 1}}, 10, 1), Error);
    CHECK_THROWS_AS(assemble({{10, 1}}, 10, 1), Error);
}

TEST_CASE("content normalisation") {
    CHECK(normalize_content(parse_poly("-2/3*x*y-4/3*y^2")) == parse_poly("x*y+2*y^2"));
}

TEST_CASE("line at infinity") {
    CHECK(line_at_infinity_generic(parse_poly("x^2+y^2-1")));
    CHECK_FALSE(line_at_infinity_generic(parse_poly("x^2*y+1")));
}

TEST_CASE("five conics through one point") {
    BiPoly f = BiPoly::constant(1);
    for (int l = 1; l <= 5; ++l) f = f * parse_poly("y+x^2+" + std::to_string(l) + "*y^2");
    GlobalCurve C;
    C.f = f;
    C.d = 10;
    C.r = 5;
    C.points.push_back(make_point_auto(f, 0, 0));
    std::vector<PointData> data{point_data(C.points[0], C.d)};
    EllResult er = ell_values(C, data, EllMode::Matrix);
    REQUIRE(er.rows.size() == 9);
    for (const auto& row : er.rows) {
        CAPTURE(row.k);
        CHECK(row.rank + row.kernel_dim == row.columns);
        CHECK(static_cast<long>(row.kernel.size()) == row.kernel_dim);
    }
    std::map<long, long> ell = er.ell();
    std::vector<long> got;
    for (long k = 3; k <= 9; ++k) got.push_back(ell[k]);
    CHECK(got == std::vector<long>{1, 1, 2, 2, 3, 3, 4});
    CHECK(assemble(ell, 10, 5).factored() == "(t-1)^4 (t+1)^4 (Φ10)^4 (Φ5)^3");
}

TEST_CASE("shortcut and matrix paths agree on a germ-only curve") {
    GlobalCurve C;
    C.d = 10;
    C.r = 1;
    C.irreducible_asserted = true;
    C.points.push_back(germ_point(parse_poly("u^25+u^10*v^2+v^5", kUV)));
    std::vector<PointData> data{point_data(C.points[0], C.d)};
    EllResult er = ell_values(C, data, EllMode::Shortcut);
    CHECK(assemble(er.ell(), 10, 1).factored() == "(Φ10)");
}
