#include "adjalex/exactpoly.hpp"

#include <algorithm>
#include <cctype>
#include <optional>
#include <sstream>

namespace adjalex {

Rational rat(long num, long den) {
    require(den != 0, ErrorKind::Precondition, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

Rational parse_rational(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(Integer(s));
        Integer n(s.substr(0, slash)), d(s.substr(slash + 1));
        require(d != 0, ErrorKind::Syntax, "zero denominator in '" + s + "'");
        Rational r(n, d);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        fail(ErrorKind::Syntax, "malformed rational '" + s + "'");
    }
}

namespace {

// Appends one signed term to out; mono is the monomial text ("" for 1).
void append_term(std::string& out, const Rational& c, const std::string& mono) {
    bool neg = sgn(c) < 0;
    Rational a = abs(c);
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? "-" : "+";
    }
    if (mono.empty()) {
        out += a.get_str();
    } else if (a == 1) {
        out += mono;
    } else {
        out += a.get_str() + "*" + mono;
    }
}

std::string power_text(const std::string& var, int e) {
    if (e == 0) return "";
    if (e == 1) return var;
    return var + "^" + std::to_string(e);
}

}  // namespace

// ---------------------------------------------------------------------------
// UniPoly

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int e) {
    std::vector<Rational> v(e + 1);
    v[e] = c;
    return UniPoly(std::move(v));
}

void UniPoly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

Rational UniPoly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }

int UniPoly::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return -1;
}

Rational UniPoly::eval(const Rational& x) const {
    Rational r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

UniPoly UniPoly::primitive() const {
    if (is_zero()) return *this;
    Integer l = 1;
    for (const auto& c : c_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> z(c_.size());
    Integer g = 0;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        z[i] = c_[i].get_num() * (l / c_[i].get_den());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), z[i].get_mpz_t());
    }
    if (sgn(z.back()) < 0) g = -g;
    std::vector<Rational> out(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = Rational(z[i] / g);
    return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(r));
}

UniPoly operator*(const UniPoly& a, const Rational& s) {
    if (sgn(s) == 0) return {};
    UniPoly r = a;
    for (auto& c : r.c_) c *= s;
    return r;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int i = degree(); i >= 0; --i)
        if (sgn(c_[i]) != 0) append_term(out, c_[i], power_text(var, i));
    return out;
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    require(!b.is_zero(), ErrorKind::Precondition, "polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    int db = b.degree();
    if (a.degree() < db) return {UniPoly{}, a};
    std::vector<Rational> q(a.degree() - db + 1);
    Rational inv = 1 / b.leading();
    for (int i = a.degree(); i >= db; --i) {
        if (sgn(r[i]) == 0) continue;
        Rational f = r[i] * inv;
        q[i - db] = f;
        for (int j = 0; j <= db; ++j) r[i - db + j] -= f * b.coeff(j);
    }
    r.resize(db);
    return {UniPoly(std::move(q)), UniPoly(std::move(r))};
}

UniPoly gcd(UniPoly a, UniPoly b) {
    while (!b.is_zero()) {
        UniPoly r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

std::vector<std::pair<UniPoly, int>> squarefree_decomposition(const UniPoly& p) {
    require(!p.is_zero(), ErrorKind::Precondition, "square-free decomposition of zero");
    std::vector<std::pair<UniPoly, int>> out;
    UniPoly f = p.monic();
    if (f.degree() == 0) return out;
    UniPoly fp = f.derivative();
    UniPoly b = gcd(f, fp);
    UniPoly c = divmod(f, b).first;
    UniPoly d = divmod(fp, b).first - c.derivative();
    int i = 1;
    while (c.degree() > 0) {
        UniPoly a = gcd(c, d);
        if (a.degree() > 0) out.emplace_back(a, i);
        c = divmod(c, a).first;
        d = divmod(d, a).first - c.derivative();
        ++i;
    }
    return out;
}

namespace {

using ModPoly = std::vector<long long>;

void mod_trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

long long mod_pow(long long b, long long e, long long p) {
    long long r = 1;
    b %= p;
    if (b < 0) b += p;
    while (e > 0) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

ModPoly mod_rem(ModPoly a, const ModPoly& b, long long p) {
    long long inv = mod_pow(b.back(), p - 2, p);
    int db = static_cast<int>(b.size()) - 1;
    for (int i = static_cast<int>(a.size()) - 1; i >= db; --i) {
        long long f = a[i] * inv % p;
        if (f == 0) continue;
        for (int j = 0; j <= db; ++j) a[i - db + j] = ((a[i - db + j] - f * b[j]) % p + p) % p;
    }
    if (static_cast<int>(a.size()) > db) a.resize(db);
    mod_trim(a);
    return a;
}

int mod_gcd_degree(ModPoly a, ModPoly b, long long p) {
    mod_trim(a);
    mod_trim(b);
    while (!b.empty()) {
        ModPoly r = mod_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return static_cast<int>(a.size()) - 1;
}

bool is_prime(long long n) {
    if (n < 2) return false;
    for (long long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer eval_int(const std::vector<Integer>& z, const Integer& x, const Integer& mod) {
    Integer r = 0;
    for (auto it = z.rbegin(); it != z.rend(); ++it) {
        r = r * x + *it;
        mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
    }
    return r;
}

}  // namespace

std::vector<Rational> rational_roots(const UniPoly& poly) {
    require(!poly.is_zero(), ErrorKind::Precondition, "roots of the zero polynomial");
    std::vector<Rational> roots;
    if (poly.degree() <= 0) return roots;
    UniPoly q = divmod(poly, gcd(poly, poly.derivative())).first;
    if (sgn(q.coeff(0)) == 0) {
        roots.push_back(0);
        std::vector<Rational> c(q.coeffs().begin() + 1, q.coeffs().end());
        q = UniPoly(std::move(c));
    }
    if (q.degree() == 1) {
        roots.push_back(-q.coeff(0) / q.coeff(1));
    } else if (q.degree() > 1) {
        q = q.primitive();
        std::vector<Integer> z;
        for (const auto& c : q.coeffs()) z.push_back(c.get_num());
        std::vector<Integer> dz;
        for (std::size_t i = 1; i < z.size(); ++i) dz.push_back(z[i] * static_cast<long>(i));
        long long p = 101;
        for (;; ++p) {
            if (!is_prime(p)) continue;
            Integer P(static_cast<long>(p));
            if (z.back() % P == 0) continue;
            ModPoly a, b;
            for (const auto& c : z) {
                Integer r;
                mpz_mod(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
                a.push_back(r.get_si());
            }
            for (const auto& c : dz) {
                Integer r;
                mpz_mod(r.get_mpz_t(), c.get_mpz_t(), P.get_mpz_t());
                b.push_back(r.get_si());
            }
            if (mod_gcd_degree(a, b, p) == 0) break;
        }
        Integer P(static_cast<long>(p));
        Integer bound = 2 * abs(z.front()) * abs(z.back()) + 1;
        Integer M = P;
        while (M <= bound) M *= M;
        for (long long r0 = 0; r0 < p; ++r0) {
            if (eval_int(z, Integer(static_cast<long>(r0)), P) != 0) continue;
            Integer r(static_cast<long>(r0)), mod = P;
            while (mod < M) {
                mod *= mod;
                Integer fv = eval_int(z, r, mod), dv = eval_int(dz, r, mod), inv;
                mpz_invert(inv.get_mpz_t(), dv.get_mpz_t(), mod.get_mpz_t());
                r = r - fv * inv;
                mpz_mod(r.get_mpz_t(), r.get_mpz_t(), mod.get_mpz_t());
            }
            Integer s = z.back() * r;
            mpz_mod(s.get_mpz_t(), s.get_mpz_t(), mod.get_mpz_t());
            if (2 * s > mod) s -= mod;
            Rational cand(s, z.back());
            cand.canonicalize();
            if (sgn(q.eval(cand)) == 0) roots.push_back(cand);
        }
    }
    std::sort(roots.begin(), roots.end());
    roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
    return roots;
}

// ---------------------------------------------------------------------------
// BiPoly

BiPoly BiPoly::constant(const Rational& c) { return monomial(c, 0, 0); }

BiPoly BiPoly::monomial(const Rational& c, int a, int b) {
    BiPoly p;
    p.add_term(a, b, c);
    return p;
}

Rational BiPoly::coeff(int a, int b) const {
    auto it = t_.find(Exp{a, b});
    return it == t_.end() ? Rational(0) : it->second;
}

void BiPoly::add_term(int a, int b, const Rational& c) {
    if (sgn(c) == 0) return;
    require(a >= 0 && b >= 0, ErrorKind::Precondition, "negative exponent");
    auto [it, inserted] = t_.try_emplace(Exp{a, b}, c);
    if (!inserted) {
        it->second += c;
        if (sgn(it->second) == 0) t_.erase(it);
    }
}

int BiPoly::total_degree() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.a + e.b);
    return d;
}

int BiPoly::degree_first() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.a);
    return d;
}

int BiPoly::degree_second() const {
    int d = -1;
    for (const auto& [e, c] : t_) d = std::max(d, e.b);
    return d;
}

int BiPoly::order() const {
    require(!is_zero(), ErrorKind::Precondition, "order of the zero polynomial");
    return t_.begin()->first.a + t_.begin()->first.b;
}

long BiPoly::weighted_order(long p, long q) const {
    require(!is_zero(), ErrorKind::Precondition, "weighted order of the zero polynomial");
    long m = -1;
    for (const auto& [e, c] : t_) {
        long w = p * e.a + q * e.b;
        if (m < 0 || w < m) m = w;
    }
    return m;
}

BiPoly BiPoly::weighted_part(long p, long q, long w) const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (p * e.a + q * e.b == w) r.t_.emplace(e, c);
    return r;
}

BiPoly BiPoly::pow(unsigned n) const {
    BiPoly r = constant(1), base = *this;
    while (n > 0) {
        if (n & 1) r = r * base;
        n >>= 1;
        if (n > 0) base = base * base;
    }
    return r;
}

BiPoly BiPoly::derivative_first() const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.a > 0) r.add_term(e.a - 1, e.b, c * e.a);
    return r;
}

BiPoly BiPoly::derivative_second() const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.b > 0) r.add_term(e.a, e.b - 1, c * e.b);
    return r;
}

Rational BiPoly::eval(const Rational& x, const Rational& y) const {
    Rational s = 0;
    for (const auto& [e, c] : t_) {
        Rational t = c;
        for (int i = 0; i < e.a; ++i) t *= x;
        for (int i = 0; i < e.b; ++i) t *= y;
        s += t;
    }
    return s;
}

UniPoly BiPoly::coeff_of_second(int b) const {
    std::vector<Rational> v;
    for (const auto& [e, c] : t_) {
        if (e.b != b) continue;
        if (static_cast<int>(v.size()) <= e.a) v.resize(e.a + 1);
        v[e.a] = c;
    }
    return UniPoly(std::move(v));
}

UniPoly BiPoly::coeff_of_first(int a) const {
    std::vector<Rational> v;
    for (const auto& [e, c] : t_) {
        if (e.a != a) continue;
        if (static_cast<int>(v.size()) <= e.b) v.resize(e.b + 1);
        v[e.b] = c;
    }
    return UniPoly(std::move(v));
}

BiPoly BiPoly::swap_vars() const {
    BiPoly r;
    for (const auto& [e, c] : t_) r.t_.emplace(Exp{e.b, e.a}, c);
    return r;
}

BiPoly BiPoly::truncate_first(int n) const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.a < n) r.t_.emplace_hint(r.t_.end(), e, c);
    return r;
}

BiPoly BiPoly::truncate_total(int n) const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (e.a + e.b < n) r.t_.emplace_hint(r.t_.end(), e, c);
    return r;
}

BiPoly BiPoly::truncate_weight(long p, long q, long w) const {
    BiPoly r;
    for (const auto& [e, c] : t_)
        if (p * e.a + q * e.b < w) r.t_.emplace_hint(r.t_.end(), e, c);
    return r;
}

BiPoly BiPoly::operator-() const {
    BiPoly r = *this;
    for (auto& [e, c] : r.t_) c = -c;
    return r;
}

BiPoly& BiPoly::operator+=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.a, e.b, c);
    return *this;
}

BiPoly& BiPoly::operator-=(const BiPoly& o) {
    for (const auto& [e, c] : o.t_) add_term(e.a, e.b, -c);
    return *this;
}

BiPoly& BiPoly::operator*=(const Rational& s) {
    if (sgn(s) == 0) {
        t_.clear();
        return *this;
    }
    for (auto& [e, c] : t_) c *= s;
    return *this;
}

BiPoly multiply(const BiPoly& a, const BiPoly& b, const TermFilter& keep) {
    BiPoly r;
    Rational t;
    for (const auto& [ea, ca] : a.terms()) {
        for (const auto& [eb, cb] : b.terms()) {
            Exp e{ea.a + eb.a, ea.b + eb.b};
            if (keep && !keep(e)) continue;
            mpq_mul(t.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
            r.add_term(e.a, e.b, t);
        }
    }
    return r;
}

BiPoly operator*(const BiPoly& a, const BiPoly& b) { return multiply(a, b, {}); }

BiPoly compose(const BiPoly& f, const BiPoly& X, const BiPoly& Y, const TermFilter& keep) {
    if (f.is_zero()) return {};
    int da = f.degree_first(), db = f.degree_second();
    auto filtered = [&](const BiPoly& p) {
        if (!keep) return p;
        BiPoly r;
        for (const auto& [e, c] : p.terms())
            if (keep(e)) r.add_term(e.a, e.b, c);
        return r;
    };
    std::vector<BiPoly> xp(da + 1), yp(db + 1);
    xp[0] = BiPoly::constant(1);
    for (int i = 1; i <= da; ++i) xp[i] = multiply(xp[i - 1], X, keep);
    yp[0] = BiPoly::constant(1);
    for (int i = 1; i <= db; ++i) yp[i] = multiply(yp[i - 1], Y, keep);
    std::vector<BiPoly> coef(db + 1);
    for (const auto& [e, c] : f.terms()) coef[e.b] += xp[e.a] * c;
    BiPoly r;
    for (int b = 0; b <= db; ++b) {
        if (coef[b].is_zero()) continue;
        r += multiply(filtered(coef[b]), yp[b], keep);
    }
    return r;
}

std::string BiPoly::to_string(const VarNames& names) const {
    if (is_zero()) return "0";
    std::string out;
    for (auto it = t_.rbegin(); it != t_.rend(); ++it) {
        std::string mono = power_text(names.first, it->first.a);
        std::string y = power_text(names.second, it->first.b);
        if (!y.empty()) mono = mono.empty() ? y : mono + "*" + y;
        append_term(out, it->second, mono);
    }
    return out;
}

// ---------------------------------------------------------------------------
// Parser

namespace {

class Parser {
public:
    Parser(std::string_view s, const VarNames& names) : s_(s), names_(names) {}

    BiPoly parse() {
        skip();
        if (pos_ == s_.size()) error("empty expression");
        BiPoly r = expr();
        skip();
        if (pos_ != s_.size()) error(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    std::string_view s_;
    const VarNames& names_;
    std::size_t pos_ = 0;

    [[noreturn]] void error(const std::string& msg) {
        fail(ErrorKind::Syntax, "syntax error at position " + std::to_string(pos_) + ": " + msg);
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    BiPoly expr() {
        BiPoly r = term();
        for (;;) {
            if (eat('+')) r += term();
            else if (eat('-')) r -= term();
            else return r;
        }
    }

    BiPoly term() {
        BiPoly r = unary();
        for (;;) {
            if (eat('*')) {
                r = r * unary();
            } else if (eat('/')) {
                std::size_t at = pos_;
                BiPoly d = unary();
                if (d.is_zero() || d.total_degree() != 0) {
                    pos_ = at;
                    error("division by a non-constant or zero");
                }
                r *= 1 / d.coeff(0, 0);
            } else {
                return r;
            }
        }
    }

    BiPoly unary() {
        if (eat('-')) return -unary();
        if (eat('+')) return unary();
        return power();
    }

    BiPoly power() {
        BiPoly base = primary();
        if (eat('^')) {
            skip();
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            if (start == pos_) error("expected integer exponent");
            unsigned long e = std::stoul(std::string(s_.substr(start, pos_ - start)));
            if (e > 10000) error("exponent too large");
            return base.pow(static_cast<unsigned>(e));
        }
        return base;
    }

    BiPoly primary() {
        skip();
        if (pos_ >= s_.size()) error("unexpected end of input");
        char c = s_[pos_];
        if (c == '(') {
            ++pos_;
            BiPoly r = expr();
            if (!eat(')')) error("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return BiPoly::constant(Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
        }
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            std::size_t start = pos_;
            while (pos_ < s_.size() &&
                   (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
                ++pos_;
            std::string name(s_.substr(start, pos_ - start));
            if (name == names_.first) return BiPoly::first();
            if (name == names_.second) return BiPoly::second();
            pos_ = start;
            error("unknown variable '" + name + "'");
        }
        error(std::string("unexpected '") + c + "'");
    }
};

}  // namespace

BiPoly parse_poly(std::string_view text, const VarNames& names) { return Parser(text, names).parse(); }

// ---------------------------------------------------------------------------
// TruncSeries

TruncSeries::TruncSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
    require(order >= 0, ErrorKind::Precondition, "negative truncation order");
    normalize();
}

TruncSeries TruncSeries::exact(const UniPoly& p) { return TruncSeries(p.coeffs(), kExact); }

TruncSeries TruncSeries::from_poly(const UniPoly& p, int order) { return TruncSeries(p.coeffs(), order); }

void TruncSeries::normalize() {
    if (order_ != kExact && static_cast<int>(c_.size()) > order_) c_.resize(order_);
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Rational TruncSeries::coeff(int i) const {
    if (i >= order_) fail(ErrorKind::Truncation, "series coefficient " + std::to_string(i) + " beyond truncation order " + std::to_string(order_));
    if (i < 0 || i >= static_cast<int>(c_.size())) return 0;
    return c_[i];
}

int TruncSeries::valuation() const {
    for (std::size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return order_;
}

TruncSeries TruncSeries::with_order(int order) const { return TruncSeries(c_, min_order(order, order_)); }

TruncSeries TruncSeries::operator-() const {
    TruncSeries r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
    return TruncSeries(std::move(c), min_order(a.order_, b.order_));
}

TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return a + (-b); }

TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
    auto shifted = [](int order, int val) {
        if (order == kExact) return kExact;
        long s = static_cast<long>(order) + val;
        return s >= kExact ? kExact - 1 : static_cast<int>(s);
    };
    int va = a.valuation(), vb = b.valuation();
    if (a.order_ != kExact && va >= a.order_) va = a.order_;
    if (b.order_ != kExact && vb >= b.order_) vb = b.order_;
    int order = min_order(shifted(a.order_, vb), shifted(b.order_, va));
    std::vector<Rational> c;
    if (!a.c_.empty() && !b.c_.empty()) {
        std::size_t n = a.c_.size() + b.c_.size() - 1;
        if (order != kExact) n = std::min<std::size_t>(n, order);
        c.resize(n);
        for (std::size_t i = 0; i < a.c_.size() && i < n; ++i)
            for (std::size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return TruncSeries(std::move(c), order);
}

bool operator==(const TruncSeries& a, const TruncSeries& b) {
    int n = min_order(a.order_, b.order_);
    std::size_t lim = std::max(a.c_.size(), b.c_.size());
    if (n != kExact) lim = std::min<std::size_t>(lim, n);
    for (std::size_t i = 0; i < lim; ++i) {
        Rational x = i < a.c_.size() ? a.c_[i] : Rational(0);
        Rational y = i < b.c_.size() ? b.c_[i] : Rational(0);
        if (x != y) return false;
    }
    return true;
}

std::string TruncSeries::to_string(const std::string& var) const {
    std::string out;
    for (int i = static_cast<int>(c_.size()) - 1; i >= 0; --i)
        if (sgn(c_[i]) != 0) append_term(out, c_[i], power_text(var, i));
    if (out.empty()) out = "0";
    if (order_ != kExact) out += "+O(" + power_text(var, order_ == 0 ? 0 : order_) + ")";
    return out;
}

long TruncBiPoly::weighted_order(long p, long q) const {
    long m = -1;
    for (const auto& [e, c] : poly.terms()) {
        long w = p * e.a + q * e.b;
        if (m < 0 || w < m) m = w;
    }
    if (bound != kExact) {
        long limit = p * static_cast<long>(bound);
        if (m < 0 || m > limit)
            fail(ErrorKind::Truncation, "weighted order with respect to (" + std::to_string(p) + "," +
                                            std::to_string(q) + ") not determined below truncation " +
                                            std::to_string(bound));
    }
    require(m >= 0, ErrorKind::Precondition, "weighted order of the zero polynomial");
    return m;
}

TruncBiPoly substitute_shift(const BiPoly& f, const TruncSeries& phi) {
    require(phi.order() > 0, ErrorKind::Precondition, "coordinate change with truncation order 0");
    require(sgn(phi.coeff(0)) == 0, ErrorKind::Precondition, "coordinate change with nonzero constant term");
    BiPoly y = BiPoly::second();
    const auto& c = phi.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) y.add_term(static_cast<int>(i), 0, c[i]);
    int bound = phi.order();
    TermFilter keep;
    if (bound != kExact) keep = [bound](const Exp& e) { return e.a < bound; };
    return TruncBiPoly{compose(f, BiPoly::first(), y, keep), bound};
}

namespace {

// f(u, r(u)) mod u^n as a coefficient vector
std::vector<Rational> eval_on_series(const BiPoly& f, const std::vector<Rational>& r, int n) {
    auto mul = [n](const std::vector<Rational>& a, const std::vector<Rational>& b) {
        std::vector<Rational> c(n);
        for (int i = 0; i < n && i < static_cast<int>(a.size()); ++i) {
            if (sgn(a[i]) == 0) continue;
            for (int j = 0; i + j < n && j < static_cast<int>(b.size()); ++j) c[i + j] += a[i] * b[j];
        }
        return c;
    };
    int db = f.degree_second();
    std::vector<Rational> acc(n);
    std::vector<Rational> rp(n);
    rp[0] = 1;
    for (int b = 0; b <= db; ++b) {
        UniPoly cb = f.coeff_of_second(b);
        if (!cb.is_zero()) {
            auto t = mul(cb.coeffs(), rp);
            for (int i = 0; i < n; ++i) acc[i] += t[i];
        }
        if (b < db) rp = mul(rp, r);
    }
    return acc;
}

}  // namespace

TruncSeries series_root(const BiPoly& f, int order) {
    require(sgn(f.coeff(0, 0)) == 0, ErrorKind::Precondition, "series_root: f(0,0) != 0");
    Rational lin = f.coeff(0, 1);
    require(sgn(lin) != 0, ErrorKind::Precondition, "series_root: degenerate linear part, df/dy(0,0) = 0");
    std::vector<Rational> r(order + 1);
    for (int i = 1; i <= order; ++i) {
        auto val = eval_on_series(f, r, i + 1);
        r[i] = -val[i] / lin;
    }
    return TruncSeries(std::move(r), order + 1);
}

namespace {

using Series = std::vector<Rational>;  // coefficients mod u^N, size N

int series_val(const Series& s) {
    for (std::size_t i = 0; i < s.size(); ++i)
        if (sgn(s[i]) != 0) return static_cast<int>(i);
    return -1;
}

std::optional<long> eliminate(const std::vector<std::vector<UniPoly>>& mat, int N) {
    std::size_t n = mat.size();
    std::vector<std::vector<Series>> M(n, std::vector<Series>(n, Series(N)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (int k = 0; k <= mat[i][j].degree() && k < N; ++k) M[i][j][k] = mat[i][j].coeff(k);
    std::vector<bool> row_done(n, false), col_done(n, false);
    long total = 0;
    for (std::size_t step = 0; step < n; ++step) {
        int best = -1;
        std::size_t pr = 0, pc = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if (row_done[i]) continue;
            for (std::size_t j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                int v = series_val(M[i][j]);
                if (v >= 0 && (best < 0 || v < best)) {
                    best = v;
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best < 0) return std::nullopt;
        total += best;
        const Series& piv = M[pr][pc];
        int K = N - best;
        // inverse of the unit part of the pivot, mod u^K
        Series unit(K), inv(K);
        for (int k = 0; k < K; ++k) unit[k] = piv[k + best];
        inv[0] = 1 / unit[0];
        for (int k = 1; k < K; ++k) {
            Rational s = 0;
            for (int j = 1; j <= k; ++j) s += unit[j] * inv[k - j];
            inv[k] = -s * inv[0];
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (row_done[i] || i == pr) continue;
            const Series& e = M[i][pc];
            int ve = series_val(e);
            if (ve < 0) continue;
            // factor = e / piv, known mod u^K
            Series fac(K);
            for (int k = 0; k < K; ++k) {
                Rational s = 0;
                for (int j = 0; j <= k; ++j) {
                    int idx = j + best;
                    if (idx < N && sgn(e[idx]) != 0) s += e[idx] * inv[k - j];
                }
                fac[k] = s;
            }
            for (std::size_t j = 0; j < n; ++j) {
                if (col_done[j]) continue;
                const Series& rr = M[pr][j];
                Series& tgt = M[i][j];
                for (int a = 0; a < K; ++a) {
                    if (sgn(fac[a]) == 0) continue;
                    for (int b = 0; a + b < N; ++b)
                        if (sgn(rr[b]) != 0) tgt[a + b] -= fac[a] * rr[b];
                }
            }
        }
        row_done[pr] = true;
        col_done[pc] = true;
    }
    return total;
}

Rational det_rational(std::vector<std::vector<Rational>> a) {
    std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && sgn(a[p][c]) == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (sgn(a[r][c]) == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return det;
}

}  // namespace

long resultant_order(const BiPoly& f, const BiPoly& g) {
    UniPoly f0 = f.coeff_of_first(0), g0 = g.coeff_of_first(0);
    require(!f0.is_zero() && !g0.is_zero(), ErrorKind::Precondition,
            "resultant_order: v-irregular input (f(0,v) or g(0,v) vanishes identically)");
    UniPoly common = gcd(f0, g0);
    require(common.valuation() == common.degree(), ErrorKind::Precondition,
            "resultant_order: common zero on u = 0 away from the origin");
    int m = std::max(f.degree_second(), 0), n = std::max(g.degree_second(), 0);
    if (m + n == 0) return 0;
    UniPoly lf = f.coeff_of_second(m), lg = g.coeff_of_second(n);
    require(sgn(lf.coeff(0)) != 0 || sgn(lg.coeff(0)) != 0, ErrorKind::Precondition,
            "resultant_order: both leading v-coefficients vanish at u = 0");
    std::size_t size = static_cast<std::size_t>(m + n);
    std::vector<std::vector<UniPoly>> mat(size, std::vector<UniPoly>(size));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) mat[i][i + j] = f.coeff_of_second(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) mat[n + i][i + j] = g.coeff_of_second(n - j);

    // identically zero resultant check: specialise at enough points
    long deg_bound = static_cast<long>(m) * std::max(g.degree_first(), 0) +
                     static_cast<long>(n) * std::max(f.degree_first(), 0);
    bool nonzero = false;
    for (long pt = 1; pt <= deg_bound + 1 && !nonzero; ++pt) {
        std::vector<std::vector<Rational>> s(size, std::vector<Rational>(size));
        for (std::size_t i = 0; i < size; ++i)
            for (std::size_t j = 0; j < size; ++j) s[i][j] = mat[i][j].eval(Rational(pt));
        nonzero = sgn(det_rational(std::move(s))) != 0;
    }
    require(nonzero, ErrorKind::Precondition, "resultant_order: identically zero resultant (common factor)");

    for (int N = 16;; N *= 2) {
        auto r = eliminate(mat, N);
        if (r) return *r;
    }
}

}  // namespace adjalex
