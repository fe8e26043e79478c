#include "adjalex/adjunction.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

namespace adjalex {

namespace {

long floor_div(long a, long b) {
    long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long threshold(long k, long m, long d, long kdiv) { return floor_div(k * m, d) - kdiv; }

struct Frame {
    std::vector<ValuationCondition> conds;
    const std::vector<ChartChange>* points = nullptr;
};

bool monomial_member(const Frame& fr, const Exp& e) {
    for (const auto& c : fr.conds) {
        if (c.point < 0) {
            if (c.weight.p * e.a + c.weight.q * e.b < c.threshold) return false;
        } else {
            const ChartChange& cc = (*fr.points)[static_cast<std::size_t>(c.point)];
            long mP = cc.P.p * e.a + cc.P.q * e.b;
            if (c.weight.p * mP < c.threshold) return false;
        }
    }
    return true;
}

std::vector<Rational> to_vector(const BiPoly& g, const std::map<std::pair<int, int>, std::size_t>& index,
                                std::size_t dim, int D) {
    std::vector<Rational> v(dim);
    for (const auto& [e, c] : g.terms()) {
        if (e.a + e.b >= D) continue;
        v[index.at({e.a, e.b})] = c;
    }
    return v;
}

std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (sgn(v[c]) != 0 && sgn(m.at(r, c)) != 0) out[r] += m.at(r, c) * v[c];
    return out;
}

bool all_zero(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [](const Rational& x) { return sgn(x) == 0; });
}

BiPoly shifted(const BiPoly& g, int r, int s) {
    BiPoly out;
    for (const auto& [e, c] : g.terms()) out.add_term(e.a + r, e.b + s, c);
    return out;
}

// coordinates of g on the monomials outside the monomial part
struct Quotient {
    std::vector<Exp> standard;
    std::map<std::pair<int, int>, std::size_t> pos;
    int D = 0;

    std::vector<Rational> project(const BiPoly& g) const {
        std::vector<Rational> v(standard.size());
        for (const auto& [e, c] : g.terms()) {
            auto it = pos.find({e.a, e.b});
            if (it != pos.end()) v[it->second] = c;
        }
        return v;
    }

    // adds the products of g with all monomials of degree < D
    void add_multiples(RowSpace& W, const BiPoly& g) const {
        int o = g.is_zero() ? D : g.order();
        for (int t = 0; t + o < D; ++t)
            for (int s = 0; s <= t; ++s) {
                auto v = project(shifted(g, t - s, s));
                if (!all_zero(v)) W.add(std::move(v));
            }
    }
};

Quotient make_quotient(const AdjunctionIdeal& J) {
    Quotient q;
    q.D = J.D;
    for (const auto& e : J.basis) {
        bool member = std::any_of(J.monomial_generators.begin(), J.monomial_generators.end(),
                                  [&](const Exp& g) { return e.a >= g.a && e.b >= g.b; });
        if (!member) {
            q.pos[{e.a, e.b}] = q.standard.size();
            q.standard.push_back(e);
        }
    }
    return q;
}

AdjunctionIdeal build(const Frame& fr, long d, long k, const std::vector<Candidate>* cands) {
    require(d >= 1 && k >= 1, ErrorKind::Precondition, "adjunction ideal needs d >= 1 and k >= 1");
    AdjunctionIdeal J;
    J.d = d;
    J.k = k;
    const int cap = 4096;
    int D = 0;
    for (;; ++D) {
        require(D <= cap, ErrorKind::Precondition, "adjunction ideal has infinite codimension");
        bool all = true;
        for (int a = 0; a <= D && all; ++a) all = monomial_member(fr, Exp{a, D - a});
        if (all) break;
    }
    J.D = D;
    std::map<std::pair<int, int>, std::size_t> index;
    for (int t = 0; t < D; ++t)
        for (int b = 0; b <= t; ++b) {
            index[{t - b, b}] = J.basis.size();
            J.basis.push_back(Exp{t - b, b});
        }
    int last = INT_MAX;
    for (int b = 0; b <= D; ++b) {
        int a = 0;
        while (!monomial_member(fr, Exp{a, b})) ++a;
        if (a < last) {
            J.monomial_generators.push_back(Exp{a, b});
            last = a;
        }
        if (a == 0) break;
    }

    const std::size_t n = J.basis.size();
    Matrix C(0, n);
    for (const auto& c : fr.conds) {
        if (c.point < 0) {
            for (std::size_t i = 0; i < n; ++i) {
                const Exp& e = J.basis[i];
                if (c.weight.p * e.a + c.weight.q * e.b < c.threshold) {
                    std::vector<Rational> row(n);
                    row[i] = 1;
                    C.append_row(row);
                }
            }
            continue;
        }
        if (c.threshold <= 0) continue;
        const ChartChange& cc = (*fr.points)[static_cast<std::size_t>(c.point)];
        std::vector<BiPoly> monos;
        for (const auto& e : J.basis) monos.push_back(BiPoly::monomial(1, e.a, e.b));
        auto pulls = chart_pullbacks(monos, cc, c.threshold);
        std::map<std::pair<int, int>, std::vector<Rational>> rows;
        for (std::size_t i = 0; i < n; ++i)
            for (const auto& [e, coef] : pulls[i].terms()) {
                auto& row = rows[{e.a, e.b}];
                if (row.empty()) row.resize(n);
                row[i] = coef;
            }
        for (auto& [key, row] : rows) C.append_row(row);
    }
    J.constraints = C.rows() ? rref(C).reduced : Matrix(0, n);
    J.rho = static_cast<long>(J.constraints.rows());

    Quotient q = make_quotient(J);
    const long standard = static_cast<long>(q.standard.size());
    require(standard >= J.rho, ErrorKind::Inconsistency, "monomial part larger than the ideal");
    if (standard == J.rho) return J;

    // non-monomial members: greedy search over u^r v^s * candidate
    std::vector<Candidate> bases = cands ? *cands : std::vector<Candidate>{};
    const std::size_t target = static_cast<std::size_t>(standard - J.rho);
    RowSpace W(q.standard.size());
    std::vector<ExtraGenerator> chosen;
    std::vector<std::pair<int, int>> mult;
    for (int t = 0; t < D; ++t)
        for (int s = t; s >= 0; --s) mult.push_back({t - s, s});
    for (const auto& [r, s] : mult) {
        if (W.rank() == target) break;
        for (const auto& base : bases) {
            BiPoly g = shifted(base.poly, r, s);
            if (g.order() >= D) continue;
            auto vec = to_vector(g, index, n, D);
            if (!all_zero(mat_vec(J.constraints, vec))) continue;
            auto proj = q.project(g);
            if (all_zero(proj) || W.contains(proj)) continue;
            q.add_multiples(W, g);
            chosen.push_back(ExtraGenerator{base.name, r, s, g});
            break;
        }
    }
    // drop generators made redundant by later ones
    for (std::size_t i = 0; i < chosen.size();) {
        RowSpace V(q.standard.size());
        for (std::size_t j = 0; j < chosen.size(); ++j)
            if (j != i) q.add_multiples(V, chosen[j].poly);
        if (V.rank() == W.rank()) {
            chosen.erase(chosen.begin() + static_cast<long>(i));
        } else {
            ++i;
        }
    }
    std::sort(chosen.begin(), chosen.end(), [](const ExtraGenerator& a, const ExtraGenerator& b) {
        return a.s != b.s ? a.s < b.s : a.r > b.r;
    });
    J.extra_generators = std::move(chosen);
    for (const auto& b : bases)
        if (std::any_of(J.extra_generators.begin(), J.extra_generators.end(),
                        [&](const ExtraGenerator& e) { return e.base == b.name; }))
            J.bases.push_back(b);
    J.complete = W.rank() == target;
    return J;
}

Frame frame_of(const ResolutionData& rd, long d, long k) {
    Frame fr;
    fr.conds = adjunction_conditions(rd, d, k);
    fr.points = &rd.points;
    return fr;
}

}  // namespace

std::string monomial_string(const Exp& e, const VarNames& names) {
    if (e.a == 0 && e.b == 0) return "1";
    std::string s;
    if (e.a > 0) s += names.first + (e.a > 1 ? "^" + std::to_string(e.a) : "");
    if (e.b > 0) s += (s.empty() ? "" : "*") + names.second + (e.b > 1 ? "^" + std::to_string(e.b) : "");
    return s;
}

std::string ExtraGenerator::label() const { return base + "^(" + std::to_string(r) + "," + std::to_string(s) + ")"; }

std::string AdjunctionIdeal::to_string() const {
    std::string out = "<";
    bool first = true;
    for (const auto& g : monomial_generators) {
        out += (first ? "" : ", ") + monomial_string(g);
        first = false;
    }
    for (const auto& g : extra_generators) {
        out += (first ? "" : ", ") + g.label();
        first = false;
    }
    return out + ">";
}

std::vector<BiPoly> AdjunctionIdeal::generators() const {
    std::vector<BiPoly> out;
    for (const auto& g : monomial_generators) out.push_back(BiPoly::monomial(1, g.a, g.b));
    for (const auto& g : extra_generators) out.push_back(g.poly);
    return out;
}

std::vector<ValuationCondition> adjunction_conditions(const ResolutionData& rd, long d, long k) {
    std::vector<ValuationCondition> out;
    for (std::size_t i = 0; i < rd.newton.faces.size(); ++i) {
        const WeightVector P = rd.newton.faces[i].weight;
        long m = rd.germ.weighted_order(P.p, P.q);
        out.push_back({P, -1, threshold(k, m, d, canonical_multiplicity(P)), "P" + std::to_string(i + 1)});
    }
    for (std::size_t j = 0; j < rd.points.size(); ++j) {
        const ChartChange& cc = rd.points[j];
        if (!cc.singular) continue;
        const DivisorEntry& e = rd.entry(cc.entry_S);
        out.push_back({cc.S, static_cast<int>(j), threshold(k, e.m, d, e.k), e.label});
    }
    return out;
}

bool membership(const BiPoly& phi, const ResolutionData& rd, long d, long k) {
    if (phi.is_zero()) return true;
    for (const auto& c : adjunction_conditions(rd, d, k)) {
        if (c.threshold <= 0) continue;
        long m = c.point < 0 ? phi.weighted_order(c.weight.p, c.weight.q)
                             : valuation_at(phi, rd.points[static_cast<std::size_t>(c.point)]);
        if (m < c.threshold) return false;
    }
    return true;
}

AdjunctionIdeal ideal_nondegenerate(const NewtonData& nd, long d, long k) {
    require(nd.nondegenerate(), ErrorKind::Precondition,
            "ideal_nondegenerate: degenerate face present, use the two-stage path");
    Frame fr;
    for (std::size_t i = 0; i < nd.faces.size(); ++i) {
        const NewtonFace& f = nd.faces[i];
        fr.conds.push_back(
            {f.weight, -1, threshold(k, f.degree, d, canonical_multiplicity(f.weight)), "P" + std::to_string(i + 1)});
    }
    return build(fr, d, k, nullptr);
}

AdjunctionIdeal ideal_degenerate(const ResolutionData& rd, long d, long k, const std::vector<Candidate>* candidates) {
    std::vector<Candidate> own;
    if (!candidates) {
        own = correction_family(rd);
        candidates = &own;
    }
    for (const auto& c : *candidates)
        require(!c.poly.is_zero(), ErrorKind::Precondition, "candidate " + c.name + " is zero");
    return build(frame_of(rd, d, k), d, k, candidates);
}

AdjunctionIdeal adjunction_ideal(const ResolutionData& rd, long d, long k) {
    if (!rd.degenerate()) return ideal_nondegenerate(rd.newton, d, k);
    return ideal_degenerate(rd, d, k);
}

std::vector<Candidate> correction_family(const ResolutionData& rd, int levels) {
    std::vector<Candidate> out;
    for (const auto& cc : rd.points) {
        if (!cc.singular) continue;
        const std::string tag = std::to_string(cc.face + 1);
        BiPoly g = BiPoly::monomial(1, 0, static_cast<int>(cc.P.p)) -
                   BiPoly::monomial(cc.gamma, static_cast<int>(cc.P.q), 0);
        out.push_back({"h" + tag, g});
        for (int level = 1; level <= levels; ++level) {
            // lowest w-free term of the pull-back
            long a0 = -1;
            Rational coef;
            for (long limit = 64; limit <= (1L << 14) && a0 < 0; limit *= 2) {
                BiPoly pb = chart_pullbacks({g}, cc, limit).front();
                UniPoly wfree = pb.coeff_of_second(0);
                if (!wfree.is_zero() && cc.S.p * static_cast<long>(wfree.valuation()) < limit) {
                    a0 = wfree.valuation();
                    coef = wfree.coeff(static_cast<int>(a0));
                }
            }
            if (a0 < 0) break;
            // monomial of P-weight a0 with the least v-exponent
            int best_b = -1;
            for (long b = 0; b * cc.P.q <= a0; ++b)
                if ((a0 - b * cc.P.q) % cc.P.p == 0) {
                    best_b = static_cast<int>(b);
                    break;
                }
            if (best_b < 0) break;
            int a = static_cast<int>((a0 - best_b * cc.P.q) / cc.P.p);
            long j = cc.next.p * a + cc.next.q * best_b;
            Rational unit = 1;
            for (long i = 0; i < j; ++i) unit *= cc.gamma;
            g -= BiPoly::monomial(coef / unit, a, best_b);
            std::string name = "r" + tag;
            if (level > 1) name += "_" + std::to_string(level);
            out.push_back({name, g});
        }
    }
    return out;
}

long rho_staircase(const AdjunctionIdeal& J) {
    require(J.is_monomial(), ErrorKind::Precondition, "rho_staircase needs a monomial ideal");
    const auto& gens = J.monomial_generators;
    require(!gens.empty() && gens.front().b == 0 && gens.back().a == 0, ErrorKind::Precondition,
            "monomial ideal of infinite codimension");
    // generators sorted by increasing b, decreasing a
    long count = 0;
    for (std::size_t i = 0; i + 1 < gens.size(); ++i)
        count += static_cast<long>(gens[i].a) * (gens[i + 1].b - gens[i].b);
    return count;
}

long rho_linear(const AdjunctionIdeal& J) {
    Quotient q = make_quotient(J);
    RowSpace W(q.standard.size());
    for (const auto& g : J.extra_generators) q.add_multiples(W, g.poly);
    return static_cast<long>(q.standard.size() - W.rank());
}

std::vector<Rational> quotient_image(const AdjunctionIdeal& J, const BiPoly& g) {
    std::map<std::pair<int, int>, std::size_t> index;
    for (std::size_t i = 0; i < J.basis.size(); ++i) index[{J.basis[i].a, J.basis[i].b}] = i;
    return mat_vec(J.constraints, to_vector(g, index, J.basis.size(), J.D));
}

bool contains(const AdjunctionIdeal& J, const BiPoly& g) { return all_zero(quotient_image(J, g)); }

long iota(const AdjunctionIdeal& J, const std::vector<BranchParam>& branches) {
    auto gens = J.generators();
    require(!gens.empty(), ErrorKind::Precondition, "ideal without generators");
    long total = 0;
    for (const auto& br : branches) {
        long best = -1;
        for (const auto& g : gens) {
            long o = branch_order(g, br);
            if (best < 0 || o < best) best = o;
        }
        total += br.count * best;
    }
    return total;
}

long iota(const AdjunctionIdeal& J, const TruncBiPoly& germ, int order) {
    for (int K = std::max(order, 4); K <= 4096; K *= 2) {
        try {
            return iota(J, puiseux_branches(germ, K));
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Truncation) throw;
        }
    }
    fail(ErrorKind::Truncation, "iota: branch precision exhausted");
}

long iota_oracle(const AdjunctionIdeal& J, const BiPoly& germ, unsigned seed, int rounds) {
    auto gens = J.generators();
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> dist(1, 997);
    long best = -1;
    for (int r = 0; r < rounds; ++r) {
        BiPoly g;
        for (const auto& h : gens) g += h * Rational(dist(rng));
        long o = resultant_order(germ, g);
        if (best < 0 || o < best) best = o;
    }
    return best;
}

}  // namespace adjalex
