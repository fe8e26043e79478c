#include "doctest.h"

#include "adjalex/exactpoly.hpp"

using namespace adjalex;

TEST_CASE("rationals parse and print") {
    CHECK(parse_rational("-13/9") == rat(-13, 9));
    CHECK(parse_rational("6/4") == rat(3, 2));
    CHECK(to_string(rat(4, -6)) == "-2/3");
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
}

TEST_CASE("univariate division, gcd and square-free parts") {
    UniPoly a({-1, 0, 1});  // t^2 - 1
    UniPoly b({1, 1});      // t + 1
    auto [q, r] = divmod(a, b);
    CHECK(q == UniPoly({-1, 1}));
    CHECK(r.is_zero());
    CHECK(gcd(a, UniPoly({1, 2, 1})).monic() == b);

    UniPoly p = UniPoly({1, 1}) * UniPoly({1, 1}) * UniPoly({-2, 0, 1});
    auto sq = squarefree_decomposition(p);
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].first == UniPoly({-2, 0, 1}));
    CHECK(sq[0].second == 1);
    CHECK(sq[1].first == UniPoly({1, 1}));
    CHECK(sq[1].second == 2);

    auto roots = rational_roots(UniPoly({rat(-1, 3), 1}) * UniPoly({2, 1}) * UniPoly({1, 0, 1}));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0] == -2);
    CHECK(roots[1] == rat(1, 3));
}

TEST_CASE("bivariate parsing round trip") {
    BiPoly f = parse_poly("y^2-(x+1)*x^2+3/2*x*y");
    CHECK(f.coeff(3, 0) == -1);
    CHECK(f.coeff(2, 0) == -1);
    CHECK(f.coeff(1, 1) == rat(3, 2));
    CHECK(parse_poly(f.to_string()) == f);
    CHECK(parse_poly("u^3*v", kUV) == BiPoly::monomial(1, 3, 1));
    CHECK_THROWS_AS(parse_poly("x^"), Error);
    CHECK_THROWS_AS(parse_poly("z"), Error);
}

TEST_CASE("bivariate arithmetic") {
    BiPoly x = BiPoly::first(), y = BiPoly::second();
    BiPoly f = (x + y).pow(3);
    CHECK(f.coeff(2, 1) == 3);
    CHECK(f.total_degree() == 3);
    CHECK(f.order() == 3);
    CHECK(f.derivative_first() == Rational(3) * (x + y).pow(2));
    CHECK(f.weighted_order(2, 1) == 3);
    CHECK(f.eval(1, 2) == 27);
    CHECK(f.swap_vars() == f);
    CHECK((f - f).is_zero());
}

TEST_CASE("composition and truncated multiplication") {
    BiPoly x = BiPoly::first(), y = BiPoly::second();
    BiPoly f = y * y - x.pow(3);
    BiPoly g = compose(f, x, y + x);
    CHECK(g == (y + x).pow(2) - x.pow(3));
    BiPoly h = multiply(x + y, x + y, [](const Exp& e) { return e.a + e.b < 2; });
    CHECK(h.is_zero());
}

TEST_CASE("shift substitution and series roots") {
    BiPoly f = parse_poly("y^2+x^2*y+x^4");
    TruncBiPoly g = substitute_shift(f, TruncSeries::exact(UniPoly({0, 0, -1})));
    CHECK(g.is_exact());
    CHECK(g.poly == parse_poly("y^2-x^2*y+x^4"));

    TruncSeries r = series_root(parse_poly("y-x-y^2"), 6);
    // y = x + x^2 + 2x^3 + 5x^4 + 14x^5 + 42x^6
    CHECK(r.coeff(1) == 1);
    CHECK(r.coeff(3) == 2);
    CHECK(r.coeff(5) == 14);
    CHECK(r.coeff(6) == 42);
    CHECK_THROWS_AS(r.coeff(7), Error);
}

TEST_CASE("truncated series arithmetic keeps the smaller order") {
    TruncSeries a({1, 1}, 3);
    TruncSeries b = TruncSeries::exact(UniPoly({0, 1}));
    TruncSeries c = a * b;
    CHECK(c.order() == 4);
    CHECK(c.coeff(2) == 1);
    CHECK((a + b).order() == 3);
}

TEST_CASE("resultant order") {
    CHECK(resultant_order(parse_poly("y^2-x^3"), parse_poly("y")) == 3);
    CHECK_THROWS_AS(resultant_order(parse_poly("y^2-x^3"), parse_poly("x")), Error);
    CHECK(resultant_order(parse_poly("y^5+x^20"), parse_poly("y+x^4+x^7")) == 23);
}
