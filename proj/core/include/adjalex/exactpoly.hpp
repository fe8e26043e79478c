#pragma once

#include <gmpxx.h>

#include <climits>
#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adjalex/error.hpp"

namespace adjalex {

using Rational = mpq_class;
using Integer = mpz_class;

Rational rat(long num, long den = 1);
std::string to_string(const Rational& r);
Rational parse_rational(std::string_view text);

// Sentinel truncation order for values that are exact.
inline constexpr int kExact = INT_MAX;

inline int min_order(int a, int b) { return a < b ? a : b; }

// ---------------------------------------------------------------------------
// Dense univariate polynomial over Q.

class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs);

    static UniPoly constant(const Rational& c);
    static UniPoly monomial(const Rational& c, int e);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    Rational leading() const;
    int valuation() const;

    Rational eval(const Rational& x) const;
    UniPoly derivative() const;
    UniPoly monic() const;
    UniPoly primitive() const;  // integer coefficients, content 1, positive leading

    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o);
    UniPoly& operator-=(const UniPoly& o);
    friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
    friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
    friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
    friend UniPoly operator*(const UniPoly& a, const Rational& s);
    friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

    std::string to_string(const std::string& var = "t") const;

private:
    std::vector<Rational> c_;
    void trim();
};

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
UniPoly gcd(UniPoly a, UniPoly b);
// Yun decomposition into monic square-free factors with multiplicities.
std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p);
// Distinct rational roots, ascending.
std::vector<Rational> rational_roots(const UniPoly& p);

// ---------------------------------------------------------------------------
// Sparse bivariate polynomial over Q. The exponent pair (a, b) stands for
// first^a * second^b, printed as x,y or u,v depending on context.

struct Exp {
    int a = 0;
    int b = 0;
    bool operator==(const Exp&) const = default;
};

struct GrlexLess {
    bool operator()(const Exp& x, const Exp& y) const {
        int dx = x.a + x.b, dy = y.a + y.b;
        if (dx != dy) return dx < dy;
        return x.b < y.b;
    }
};

struct VarNames {
    std::string first = "x";
    std::string second = "y";
};

inline const VarNames kXY{"x", "y"};
inline const VarNames kUV{"u", "v"};

class BiPoly {
public:
    using TermMap = std::map<Exp, Rational, GrlexLess>;

    BiPoly() = default;
    static BiPoly constant(const Rational& c);
    static BiPoly monomial(const Rational& c, int a, int b);
    static BiPoly first() { return monomial(1, 1, 0); }
    static BiPoly second() { return monomial(1, 0, 1); }

    bool is_zero() const { return t_.empty(); }
    std::size_t size() const { return t_.size(); }
    const TermMap& terms() const { return t_; }
    Rational coeff(int a, int b) const;
    void add_term(int a, int b, const Rational& c);

    int total_degree() const;
    int degree_first() const;
    int degree_second() const;
    int order() const;  // lowest total degree
    // min over support of p*a + q*b; throws on zero
    long weighted_order(long p, long q) const;
    BiPoly weighted_part(long p, long q, long w) const;

    BiPoly pow(unsigned n) const;
    BiPoly derivative_first() const;
    BiPoly derivative_second() const;
    Rational eval(const Rational& x, const Rational& y) const;
    // coefficient of second^b as a polynomial in first
    UniPoly coeff_of_second(int b) const;
    // coefficient of first^a as a polynomial in second
    UniPoly coeff_of_first(int a) const;
    BiPoly swap_vars() const;

    BiPoly truncate_first(int n) const;             // keep a < n
    BiPoly truncate_total(int n) const;             // keep a + b < n
    BiPoly truncate_weight(long p, long q, long w) const;  // keep p a + q b < w

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& o);
    BiPoly& operator-=(const BiPoly& o);
    BiPoly& operator*=(const Rational& s);
    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(BiPoly a, const Rational& s) { return a *= s; }
    friend BiPoly operator*(const Rational& s, BiPoly a) { return a *= s; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);
    friend bool operator==(const BiPoly& a, const BiPoly& b) { return a.t_ == b.t_; }

    std::string to_string(const VarNames& names = kXY) const;

private:
    TermMap t_;
};

using TermFilter = std::function<bool(const Exp&)>;

BiPoly multiply(const BiPoly& a, const BiPoly& b, const TermFilter& keep);
// f(X, Y); products are filtered by keep when given (keep must be
// closed under divisibility for the result to be a valid truncation).
BiPoly compose(const BiPoly& f, const BiPoly& X, const BiPoly& Y, const TermFilter& keep = {});

BiPoly parse_poly(std::string_view text, const VarNames& names = kXY);

// ---------------------------------------------------------------------------
// Truncated power series in one variable: sum_{i<D} c_i u^i + O(u^D).

class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::vector<Rational> coeffs, int order);
    static TruncSeries exact(const UniPoly& p);
    static TruncSeries from_poly(const UniPoly& p, int order);

    int order() const { return order_; }
    bool is_exact() const { return order_ == kExact; }
    Rational coeff(int i) const;
    const std::vector<Rational>& coeffs() const { return c_; }
    UniPoly known_part() const { return UniPoly(c_); }
    int valuation() const;  // lowest nonzero known exponent; order() if none

    TruncSeries with_order(int order) const;
    TruncSeries operator-() const;
    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b);
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b);
    // compares shared prefix
    friend bool operator==(const TruncSeries& a, const TruncSeries& b);

    std::string to_string(const std::string& var = "u") const;

private:
    std::vector<Rational> c_;
    int order_ = kExact;
    void normalize();
};

// Bivariate polynomial known exactly for terms of first-variable degree
// below bound; kExact means fully exact.
struct TruncBiPoly {
    BiPoly poly;
    int bound = kExact;

    bool is_exact() const { return bound == kExact; }
    // weighted order, certified against the truncation; throws Truncation
    long weighted_order(long p, long q) const;
};

TruncBiPoly substitute_shift(const BiPoly& f, const TruncSeries& phi);
TruncSeries series_root(const BiPoly& f, int order);
// ord_u Res_v(f, g)
long resultant_order(const BiPoly& f, const BiPoly& g);

}  // namespace adjalex
