#include "adjalex/alexander.hpp"

#include <algorithm>
#include <future>
#include <numeric>

namespace adjalex {

namespace {

BiPoly shift_origin(const BiPoly& f, const Rational& x0, const Rational& y0) {
    BiPoly X = BiPoly::first() + BiPoly::constant(x0);
    BiPoly Y = BiPoly::second() + BiPoly::constant(y0);
    return compose(f, X, Y);
}

std::string point_name(const Rational& x0, const Rational& y0) {
    return "(" + to_string(x0) + "," + to_string(y0) + ")";
}

long column_count(long k) { return k < 3 ? 0 : (k - 1) * (k - 2) / 2; }

}  // namespace

SingularPoint make_point(const BiPoly& f, const Rational& x0, const Rational& y0, const UniPoly& phi, int trunc,
                         const std::string& label) {
    BiPoly g = shift_origin(f, x0, y0);
    require(sgn(g.coeff(0, 0)) == 0, ErrorKind::Config, "point " + point_name(x0, y0) + " is not on the curve");
    SingularPoint P;
    P.label = label;
    P.x0 = x0;
    P.y0 = y0;
    P.phi = phi;
    P.germ = substitute_shift(g, TruncSeries::exact(phi));
    P.resolution = resolve(P.germ, trunc);
    return P;
}

SingularPoint make_point_auto(const BiPoly& f, const Rational& x0, const Rational& y0, int phi_order, int trunc,
                              const std::string& label) {
    BiPoly g = shift_origin(f, x0, y0);
    require(sgn(g.coeff(0, 0)) == 0, ErrorKind::Config, "point " + point_name(x0, y0) + " is not on the curve");
    return make_point(f, x0, y0, auto_phi(g, phi_order), trunc, label);
}

SingularPoint germ_point(const BiPoly& germ, int trunc, const std::string& label) {
    require(sgn(germ.coeff(0, 0)) == 0, ErrorKind::Config, "germ does not vanish at the origin");
    SingularPoint P;
    P.label = label;
    P.germ = TruncBiPoly{germ, kExact};
    P.resolution = resolve(P.germ, trunc);
    return P;
}

bool line_at_infinity_generic(const BiPoly& f) {
    const int d = f.total_degree();
    if (d <= 0) return true;
    std::vector<Rational> h(static_cast<std::size_t>(d) + 1);
    for (const auto& [e, c] : f.terms())
        if (e.a + e.b == d) h[static_cast<std::size_t>(e.a)] = c;
    UniPoly top(std::move(h));
    if (d - top.degree() > 1) return false;
    return gcd(top, top.derivative()).degree() == 0;
}

PointData point_data(const SingularPoint& P, long d) {
    PointData out;
    for (long k = 1; k < d; ++k) {
        out.ideals.push_back(adjunction_ideal(P.resolution, d, k));
        out.iota.push_back(iota(out.ideals.back(), P.germ));
    }
    return out;
}

SigmaMatrix sigma_matrix(const GlobalCurve& C, const std::vector<PointData>& data, long k) {
    require(C.f.has_value(), ErrorKind::Precondition, "sigma_matrix needs the curve polynomial");
    require(data.size() == C.points.size(), ErrorKind::Precondition, "point data does not match the curve");
    SigmaMatrix S;
    S.k = k;
    for (long t = 0; t <= k - 3; ++t)
        for (long j = 0; j <= t; ++j) S.columns.push_back(Exp{static_cast<int>(t - j), static_cast<int>(j)});
    const std::size_t ncols = S.columns.size();
    std::vector<std::vector<Rational>> rows;
    for (std::size_t p = 0; p < C.points.size(); ++p) {
        const SingularPoint& P = C.points[p];
        const AdjunctionIdeal& J = data[p].ideals.at(static_cast<std::size_t>(k - 1));
        S.rho.push_back(J.rho);
        if (J.rho == 0) continue;
        const int D = J.D;
        TermFilter keep = [D](const Exp& e) { return e.a + e.b < D; };
        BiPoly X = BiPoly::first() + BiPoly::constant(P.x0);
        BiPoly Y = BiPoly::second() + BiPoly::constant(P.y0);
        for (int i = 0; i <= P.phi.degree(); ++i) Y.add_term(i, 0, P.phi.coeff(i));
        std::vector<BiPoly> xp{BiPoly::constant(1)}, yp{BiPoly::constant(1)};
        for (long i = 1; i <= k - 3; ++i) {
            xp.push_back(multiply(xp.back(), X, keep));
            yp.push_back(multiply(yp.back(), Y, keep));
        }
        std::vector<std::vector<Rational>> block(static_cast<std::size_t>(J.rho), std::vector<Rational>(ncols));
        for (std::size_t c = 0; c < ncols; ++c) {
            const Exp& e = S.columns[c];
            auto img = quotient_image(J, multiply(xp[static_cast<std::size_t>(e.a)], yp[static_cast<std::size_t>(e.b)], keep));
            for (std::size_t r = 0; r < img.size(); ++r) block[r][c] = img[r];
        }
        for (auto& row : block) rows.push_back(std::move(row));
    }
    S.m = Matrix(0, ncols);
    for (const auto& row : rows) S.m.append_row(row);
    return S;
}

BiPoly normalize_content(const BiPoly& g) {
    if (g.is_zero()) return g;
    Integer den = 1, num = 0;
    for (const auto& [e, c] : g.terms()) den = lcm(den, Integer(c.get_den()));
    for (const auto& [e, c] : g.terms()) num = gcd(num, Integer(c.get_num()));
    Rational scale = Rational(den) / Rational(num);
    if (sgn(g.terms().rbegin()->second) < 0) scale = -scale;
    scale.canonicalize();
    return g * scale;
}

std::map<long, long> EllResult::ell() const {
    std::map<long, long> out;
    for (const auto& r : rows) out[r.k] = r.ell;
    return out;
}

EllResult ell_values(const GlobalCurve& C, const std::vector<PointData>& data, EllMode mode, bool parallel) {
    require(C.d >= 1, ErrorKind::Precondition, "curve degree must be positive");
    require(data.size() == C.points.size(), ErrorKind::Precondition, "point data does not match the curve");
    EllResult res;
    if (C.f && !line_at_infinity_generic(*C.f))
        res.warnings.push_back("the line at infinity is not transversal to C");
    auto one = [&](long k) {
        EllRow row;
        row.k = k;
        for (const auto& pd : data) {
            row.sum_rho += pd.ideals.at(static_cast<std::size_t>(k - 1)).rho;
            row.sum_iota += pd.iota.at(static_cast<std::size_t>(k - 1));
        }
        row.columns = column_count(k);
        row.hypothesis = row.sum_iota > C.d * (k - 3);
        EllMode m = mode;
        if (m == EllMode::Auto) {
            if (C.f)
                m = EllMode::Matrix;
            else if (row.hypothesis && C.irreducible_asserted)
                m = EllMode::Shortcut;
            else
                fail(ErrorKind::Precondition, "k=" + std::to_string(k) +
                                                  ": no curve polynomial and the injectivity shortcut does not apply");
        }
        if (m == EllMode::Matrix) {
            SigmaMatrix S = sigma_matrix(C, data, k);
            auto kernel = nullspace(S.m);
            row.path = "matrix";
            row.rank = static_cast<long>(S.m.rows() ? rank(S.m) : 0);
            row.kernel_dim = static_cast<long>(kernel.size());
            require(row.rank + row.kernel_dim == row.columns, ErrorKind::Inconsistency, "rank-nullity violated");
            for (const auto& v : kernel) {
                BiPoly g;
                for (std::size_t c = 0; c < v.size(); ++c) g.add_term(S.columns[c].a, S.columns[c].b, v[c]);
                row.kernel.push_back(normalize_content(g));
            }
            row.ell = row.sum_rho - row.rank;
            return row;
        }
        if (m == EllMode::Shortcut)
            require(row.hypothesis && C.irreducible_asserted, ErrorKind::Precondition,
                    "k=" + std::to_string(k) + ": shortcut requested but " +
                        (row.hypothesis ? std::string("irreducibility is not asserted")
                                        : "sum of iota <= d(k-3)"));
        row.path = m == EllMode::Shortcut ? "shortcut" : "asserted";
        row.rank = row.columns;
        row.kernel_dim = 0;
        row.ell = row.sum_rho - row.columns;
        require(row.ell >= 0, ErrorKind::Inconsistency,
                "k=" + std::to_string(k) + ": negative rho-tilde under asserted injectivity");
        return row;
    };
    if (parallel) {
        std::vector<std::future<EllRow>> jobs;
        for (long k = 1; k < C.d; ++k) jobs.push_back(std::async(std::launch::async, one, k));
        for (auto& j : jobs) res.rows.push_back(j.get());
    } else {
        for (long k = 1; k < C.d; ++k) res.rows.push_back(one(k));
    }
    bool shortcut = false, asserted = false;
    for (const auto& r : res.rows) {
        if (r.k < 3 && r.ell != 0)
            res.warnings.push_back("l_" + std::to_string(r.k) + " = " + std::to_string(r.ell) + " is nonzero for k < 3");
        shortcut |= r.path == "shortcut";
        asserted |= r.path == "asserted";
    }
    if (shortcut)
        res.warnings.push_back("injectivity hypothesis holds but irreducibility is only asserted, not proven");
    if (asserted) res.warnings.push_back("injectivity of sigma_k is asserted, not computed");
    return res;
}

UniPoly cyclotomic(long n) {
    require(n >= 1, ErrorKind::Precondition, "cyclotomic index must be positive");
    UniPoly p = UniPoly::monomial(1, static_cast<int>(n)) - UniPoly::constant(1);
    for (long e = 1; e < n; ++e)
        if (n % e == 0) {
            auto [q, r] = divmod(p, cyclotomic(e));
            require(r.is_zero(), ErrorKind::Inconsistency, "cyclotomic division is not exact");
            p = q;
        }
    return p;
}

std::string AlexanderPolynomial::factored() const {
    std::string out;
    for (const auto& [n, e] : factors) {
        if (e == 0) continue;
        std::string base = n == 1 ? "(t-1)" : n == 2 ? "(t+1)" : "(Φ" + std::to_string(n) + ")";
        if (!out.empty()) out += " ";
        out += base + (e > 1 ? "^" + std::to_string(e) : "");
    }
    return out.empty() ? "1" : out;
}

AlexanderPolynomial assemble(const std::map<long, long>& ell, long d, long r) {
    require(d >= 1, ErrorKind::Precondition, "degree must be positive");
    require(r >= 0, ErrorKind::Precondition, "component count must be nonnegative");
    auto l = [&](long k) {
        auto it = ell.find(k);
        long v = it == ell.end() ? 0 : it->second;
        require(v >= 0, ErrorKind::Precondition, "negative l_" + std::to_string(k));
        return v;
    };
    for (const auto& [k, v] : ell)
        require(k >= 1 && k < d, ErrorKind::Precondition, "l_" + std::to_string(k) + " outside 1..d-1");
    AlexanderPolynomial A;
    A.d = d;
    A.r = r;
    A.ell = ell;
    std::map<long, long> expo;
    for (long k = 1; k < d; ++k) {
        long n = d / std::gcd(k, d);
        long e = l(k) + l(d - k);
        auto [it, fresh] = expo.emplace(n, e);
        require(fresh || it->second == e, ErrorKind::Inconsistency,
                "multiplicities are not constant on the orbit of primitive " + std::to_string(n) + "-th roots");
    }
    if (r > 0) A.factors.push_back({1, r - 1});
    if (expo.count(2)) A.factors.push_back({2, expo[2]});
    for (auto it = expo.rbegin(); it != expo.rend(); ++it)
        if (it->first != 2) A.factors.push_back(*it);
    A.reduced = UniPoly::constant(1);
    for (const auto& [n, e] : expo)
        for (long i = 0; i < e; ++i) A.reduced = A.reduced * cyclotomic(n);
    if (r > 0) {
        A.full = A.reduced;
        for (long i = 0; i < r - 1; ++i) A.full = A.full * cyclotomic(1);
    }
    return A;
}

UniPoly generic_delta(long p, long q) {
    require(p >= 2 && q >= 2, ErrorKind::Precondition, "generic_delta needs p, q >= 2");
    const long r = std::gcd(p, q);
    auto tm1 = [](long n) { return UniPoly::monomial(1, static_cast<int>(n)) - UniPoly::constant(1); };
    UniPoly num = tm1(1);
    for (long i = 0; i < r; ++i) num = num * tm1(p * q / r);
    auto [quot, rem] = divmod(num, tm1(p) * tm1(q));
    require(rem.is_zero(), ErrorKind::Inconsistency, "generic_delta: division is not exact");
    return quot;
}

}  // namespace adjalex
