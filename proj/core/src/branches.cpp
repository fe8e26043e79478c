#include "adjalex/branches.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>

namespace adjalex {

namespace {

// Expansion state: u = alpha t^N, v = V(t) + lambda t^M w, F(t, w) the
// transformed equation known for t-degree below F.bound.
struct State {
    Rational alpha = 1;
    long N = 1;
    UniPoly V;
    Rational lambda = 1;
    long M = 0;
    TruncBiPoly F;
};

Rational power(const Rational& x, long e) {
    Rational r = 1;
    for (long i = 0; i < e; ++i) r *= x;
    return r;
}

std::vector<Rational> binomial_row(long n) {
    std::vector<Rational> row{Rational(1)};
    for (long k = 1; k <= n; ++k) row.push_back(row.back() * Rational(n - k + 1) / Rational(k));
    return row;
}

// divides F by w^k when w divides it; returns k
int strip_second(BiPoly& F) {
    int k = INT_MAX;
    for (const auto& [e, c] : F.terms()) k = std::min(k, e.b);
    if (k == 0 || k == INT_MAX) return 0;
    BiPoly out;
    for (const auto& [e, c] : F.terms()) out.add_term(e.a, e.b - k, c);
    F = std::move(out);
    return k;
}

UniPoly scale_argument(const UniPoly& V, const Rational& g, long p) {
    UniPoly out;
    for (int i = 0; i <= V.degree(); ++i)
        if (sgn(V.coeff(i)) != 0) out += UniPoly::monomial(V.coeff(i) * power(g, i), static_cast<int>(p * i));
    return out;
}

State descend(const State& st, const WeightVector& w, long d, const Rational& gamma) {
    const long p = w.p, q = w.q;
    long e = 0;
    while ((1 + q * e) % p != 0) ++e;
    const Rational c = power(gamma, (1 + q * e) / p);
    const Rational ge = power(gamma, e);
    State nx;
    nx.alpha = st.alpha * power(ge, st.N);
    nx.N = p * st.N;
    nx.M = p * st.M + q;
    nx.lambda = st.lambda * power(ge, st.M);
    nx.V = scale_argument(st.V, ge, p) + UniPoly::monomial(nx.lambda * c, static_cast<int>(nx.M));
    long bound = st.F.is_exact() ? kExact : p * static_cast<long>(st.F.bound) - d;
    require(st.F.is_exact() || bound > 0, ErrorKind::Truncation, "Puiseux expansion: truncation too low");
    BiPoly G;
    for (const auto& [ex, coef] : st.F.poly.terms()) {
        long s = p * ex.a + q * ex.b - d;
        if (!st.F.is_exact() && s >= bound) continue;
        Rational base = coef * power(ge, ex.a);
        auto row = binomial_row(ex.b);
        for (long j = 0; j <= ex.b; ++j)
            G.add_term(static_cast<int>(s), static_cast<int>(j), base * row[j] * power(c, ex.b - j));
    }
    nx.F = TruncBiPoly{std::move(G), st.F.is_exact() ? kExact : static_cast<int>(bound)};
    return nx;
}

BranchParam exact_branch(const State& st) {
    BranchParam br;
    br.alpha = st.alpha;
    br.N = st.N;
    br.v_series = TruncSeries::exact(st.V);
    return br;
}

bool is_root(const BiPoly& F, const UniPoly& W) {
    UniPoly acc;
    std::vector<UniPoly> pw{UniPoly::constant(1)};
    for (const auto& [e, c] : F.terms()) {
        while (static_cast<int>(pw.size()) <= e.b) pw.push_back(pw.back() * W);
        acc += pw[e.b] * UniPoly::monomial(c, e.a);
    }
    return acc.is_zero();
}

void expand(const State& st, int order, int depth, std::vector<BranchParam>& out) {
    require(depth < 256, ErrorKind::Inconsistency, "Puiseux expansion did not terminate (is f reduced?)");
    State cur = st;
    if (cur.F.is_exact()) {
        int k = strip_second(cur.F.poly);
        require(k <= 1, ErrorKind::Precondition, "f is not reduced: repeated branch");
        if (k == 1) out.push_back(exact_branch(cur));
    }
    if (cur.F.poly.is_zero()) return;
    if (sgn(cur.F.poly.coeff(0, 0)) != 0) return;
    NewtonData nd = newton_boundary(cur.F);
    for (const auto& face : nd.faces) {
        for (const auto& blk : face.irrational) {
            if (blk.multiplicity >= 2)
                fail(ErrorKind::Unsupported, "repeated irrational factor " + blk.poly.to_string("z") +
                                                 " on face " + to_string(face.weight));
            BranchParam br;
            br.family = true;
            br.alpha = cur.alpha;
            br.N = cur.N;
            br.v_series = TruncSeries::exact(cur.V);
            br.lambda = cur.lambda;
            br.M = cur.M;
            br.face = face.weight;
            br.block = blk.poly.monic();
            br.count = blk.poly.degree();
            out.push_back(br);
        }
        for (const auto& r : face.roots) {
            State nx = descend(cur, face.weight, face.degree, r.gamma);
            if (r.multiplicity >= 2) {
                expand(nx, order, depth + 1, out);
                continue;
            }
            int K = nx.F.is_exact() ? order : std::min(order, nx.F.bound - 1);
            require(K >= 1, ErrorKind::Truncation, "Puiseux expansion: truncation too low for the Hensel step");
            TruncSeries W = series_root(nx.F.poly, K).with_order(K + 1);
            if (nx.F.is_exact() && W.known_part().degree() < K / 2 && is_root(nx.F.poly, W.known_part())) {
                W = TruncSeries::exact(W.known_part());
                State ex = nx;
                ex.V = nx.V + W.known_part() * UniPoly::monomial(nx.lambda, static_cast<int>(nx.M));
                out.push_back(exact_branch(ex));
                continue;
            }
            std::vector<Rational> v(nx.M + K + 1);
            for (int i = 0; i <= nx.V.degree() && i < static_cast<int>(v.size()); ++i) v[i] += nx.V.coeff(i);
            for (int i = 0; i <= K; ++i) v[nx.M + i] += nx.lambda * W.coeff(i);
            BranchParam br;
            br.alpha = nx.alpha;
            br.N = nx.N;
            br.v_series = TruncSeries(std::move(v), static_cast<int>(nx.M + K + 1));
            out.push_back(br);
        }
    }
}

TruncSeries series_pow(const TruncSeries& x, int n) {
    TruncSeries r = TruncSeries::exact(UniPoly::constant(1));
    for (int i = 0; i < n; ++i) r = r * x;
    return r;
}

}  // namespace

std::string BranchParam::describe() const {
    std::ostringstream os;
    auto u_part = [&](long e) {
        std::string a = alpha == 1 ? "" : to_string(alpha) + "*";
        return "u = " + a + "t^" + std::to_string(e);
    };
    if (axis) return "u = 0, v = t";
    if (family) {
        os << count << " conjugate branches: " << u_part(N * face.p) << ", v = ";
        UniPoly V = scale_argument(v_series.known_part(), 1, face.p);
        if (!V.is_zero()) os << V.to_string("t") << " + ";
        os << (lambda == 1 ? "" : to_string(lambda) + "*") << "z^(1/" << face.p << ")*t^" << (M * face.p + face.q)
           << " + ..., z root of " << block.to_string("z");
        return os.str();
    }
    os << u_part(N) << ", v = ";
    int val = v_series.valuation();
    if (val >= v_series.order()) {
        os << (v_series.is_exact() ? "0" : "O(t^" + std::to_string(v_series.order()) + ")");
    } else if (v_series.is_exact()) {
        os << v_series.known_part().to_string("t");
    } else {
        Rational c = v_series.coeff(val);
        os << (c == 1 ? "" : c == -1 ? "-" : to_string(c) + "*") << "t^" << val << " + O(t^" << (val + 1) << ")";
    }
    return os.str();
}

std::vector<BranchParam> puiseux_branches(const TruncBiPoly& f, int order) {
    require(order >= 1, ErrorKind::Precondition, "branch order must be positive");
    require(!f.poly.is_zero(), ErrorKind::Precondition, "branches of the zero polynomial");
    std::vector<BranchParam> out;
    if (sgn(f.poly.coeff(0, 0)) != 0) return out;
    State st;
    st.F = f;
    if (f.is_exact()) {
        certify_squarefree(f.poly);
        BiPoly swapped = f.poly.swap_vars();
        int k = strip_second(swapped);
        require(k <= 1, ErrorKind::Precondition, "f is not reduced: u^2 divides f");
        if (k == 1) {
            BranchParam br;
            br.axis = true;
            out.push_back(br);
            st.F.poly = swapped.swap_vars();
        }
    }
    if (st.F.is_exact()) {
        // expand from a truncation first; fall back to the exact germ
        int a_end = INT_MAX;
        for (const auto& [e, c] : st.F.poly.terms())
            if (e.b == 0) a_end = std::min(a_end, e.a);
        const int full = st.F.poly.degree_first() + 1;
        if (a_end != INT_MAX) {
            for (long B = 2L * (order + a_end + 1); B < full; B *= 2) {
                State tr = st;
                tr.F = TruncBiPoly{st.F.poly.truncate_first(static_cast<int>(B)), static_cast<int>(B)};
                std::vector<BranchParam> attempt = out;
                try {
                    expand(tr, order, 0, attempt);
                    return attempt;
                } catch (const Error& e) {
                    if (e.kind() != ErrorKind::Truncation) throw;
                }
            }
        }
    }
    expand(st, order, 0, out);
    return out;
}

std::vector<BranchParam> puiseux_branches(const BiPoly& f, int order) {
    return puiseux_branches(TruncBiPoly{f, kExact}, order);
}

long branch_order(const BiPoly& g, const BranchParam& br) {
    require(!g.is_zero(), ErrorKind::Precondition, "order of the zero polynomial");
    if (br.axis) {
        UniPoly r = g.coeff_of_first(0);
        require(!r.is_zero(), ErrorKind::Precondition, "polynomial vanishes on the branch u = 0");
        return r.valuation();
    }
    if (br.family) {
        BiPoly X = BiPoly::monomial(br.alpha, static_cast<int>(br.N), 0);
        BiPoly Y = BiPoly::monomial(br.lambda, static_cast<int>(br.M), 1);
        const UniPoly V = br.v_series.known_part();
        for (int i = 0; i <= V.degree(); ++i) Y.add_term(i, 0, V.coeff(i));
        BiPoly G = compose(g, X, Y);
        require(!G.is_zero(), ErrorKind::Precondition, "polynomial vanishes on a branch family");
        const long p = br.face.p, q = br.face.q;
        long d = G.weighted_order(p, q);
        BiPoly init = G.weighted_part(p, q, d);
        int bmin = INT_MAX;
        for (const auto& [e, c] : init.terms()) bmin = std::min(bmin, e.b);
        std::vector<Rational> h;
        for (const auto& [e, c] : init.terms()) {
            std::size_t i = static_cast<std::size_t>((e.b - bmin) / p);
            if (h.size() <= i) h.resize(i + 1);
            h[i] += c;
        }
        UniPoly H(std::move(h));
        require(gcd(H, br.block).degree() == 0, ErrorKind::Unsupported,
                "order along the conjugate family " + br.block.to_string("z") + " is not determined by the initial form");
        return d;
    }
    TruncSeries acc = TruncSeries::exact(UniPoly{});
    std::map<int, TruncSeries> vpow;
    for (const auto& [e, c] : g.terms()) {
        auto it = vpow.find(e.b);
        if (it == vpow.end()) it = vpow.emplace(e.b, series_pow(br.v_series, e.b)).first;
        TruncSeries term = TruncSeries::exact(UniPoly::monomial(c * power(br.alpha, e.a), static_cast<int>(br.N * e.a)));
        acc = acc + term * it->second;
    }
    int val = acc.valuation();
    if (val >= acc.order()) {
        require(!acc.is_exact(), ErrorKind::Precondition, "polynomial vanishes on a branch");
        fail(ErrorKind::Truncation, "branch order exceeds the expansion precision");
    }
    return val;
}

long intersection_multiplicity(const BiPoly& f, const BiPoly& g, int order) {
    for (int K = std::max(order, 4); K <= 4096; K *= 2) {
        try {
            long total = 0;
            for (const auto& br : puiseux_branches(f, K)) total += br.count * branch_order(g, br);
            return total;
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Truncation) throw;
        }
    }
    fail(ErrorKind::Truncation, "intersection multiplicity not determined");
}

namespace {

using u64 = std::uint64_t;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<unsigned __int128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

bool reduce(const Rational& c, u64 p, u64& out) {
    Integer n = c.get_num() % p, d = c.get_den() % p;
    if (n < 0) n += p;
    if (d == 0) return false;
    out = mulmod(n.get_ui(), powmod(d.get_ui(), p - 2, p), p);
    return true;
}

using ModPoly = std::vector<u64>;

void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

ModPoly mod_gcd(ModPoly a, ModPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        u64 inv = powmod(b.back(), p - 2, p);
        while (a.size() >= b.size()) {
            u64 c = mulmod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = (a[shift + i] + p - mulmod(c, b[i], p)) % p;
            trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// f(x0, second) when by_second, else f(first, x0), reduced mod p
bool specialisation_squarefree(const BiPoly& f, bool by_second, long x0, u64 p) {
    const int n = by_second ? f.degree_second() : f.degree_first();
    if (n <= 0) return true;
    u64 x;
    reduce(Rational(x0), p, x);
    std::vector<u64> acc(static_cast<std::size_t>(n) + 1);
    for (const auto& [e, c] : f.terms()) {
        u64 r;
        if (!reduce(c, p, r)) return false;
        int fixed = by_second ? e.a : e.b, free = by_second ? e.b : e.a;
        acc[free] = (acc[free] + mulmod(r, powmod(x, static_cast<u64>(fixed), p), p)) % p;
    }
    if (acc.back() == 0) return false;
    ModPoly a(acc.begin(), acc.end());
    ModPoly da(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) da[i - 1] = mulmod(a[i], i % p, p);
    return mod_gcd(a, da, p).size() == 1;
}

}  // namespace

void certify_squarefree(const BiPoly& f) {
    require(!f.is_zero(), ErrorKind::Precondition, "zero polynomial");
    // a square factor h^2 survives every specialisation of full degree, in
    // the direction of a variable h depends on
    const u64 primes[] = {2147483647ULL, 2147483629ULL, 2147483587ULL, 2147483579ULL};
    for (bool by_second : {true, false}) {
        bool ok = false;
        for (u64 p : primes) {
            for (long x0 = 1; x0 <= 8 && !ok; ++x0) ok = specialisation_squarefree(f, by_second, x0, p);
            if (ok) break;
        }
        require(ok, ErrorKind::Precondition,
                std::string("f is not reduced: repeated factor in ") + (by_second ? "v" : "u"));
    }
}

}  // namespace adjalex
