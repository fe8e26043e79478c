#include "adjalex/toric.hpp"

#include <sstream>

namespace adjalex {

long weighted_degree(const BiPoly& g, const WeightVector& Q) { return g.weighted_order(Q.p, Q.q); }

long canonical_multiplicity(const WeightVector& Q) { return Q.p + Q.q - 1; }

namespace {

// v1 = gamma + w + H(u1) as a polynomial in (u1, w)
BiPoly translated_coordinate(const Rational& gamma, const UniPoly& H) {
    BiPoly y = BiPoly::second();
    y.add_term(0, 0, gamma);
    for (int i = 0; i <= H.degree(); ++i) y.add_term(i, 0, H.coeff(i));
    return y;
}

WeightVector next_in_fan(const Fan& fan, const WeightVector& P) {
    std::size_t idx = fan.index_of(P);
    require(idx + 1 < fan.vectors.size(), ErrorKind::Precondition, "face vector has no successor in fan");
    return fan.vectors[idx + 1];
}

std::string ledger_display(const std::vector<DivisorEntry>& entries, bool use_m, const char* head) {
    std::ostringstream os;
    os << head << " =";
    bool first = true;
    for (const auto& e : entries) {
        os << (first ? " " : " + ") << (use_m ? e.m : e.k) << "E(" << e.label << ")";
        first = false;
    }
    return os.str();
}

}  // namespace

std::string ResolutionData::display_f() const { return ledger_display(entries, true, "(pi*f)"); }
std::string ResolutionData::display_k() const { return ledger_display(entries, false, "(pi*K)"); }

TruncBiPoly strict_transform_at(const TruncBiPoly& f, const Fan& fan, const NewtonData& nd, std::size_t face_index,
                                const Rational& gamma, const UniPoly& translation, int trunc, int w_max) {
    require(face_index < nd.faces.size(), ErrorKind::Precondition, "face index out of range");
    require(translation.is_zero() || sgn(translation.coeff(0)) == 0, ErrorKind::Precondition,
            "translation must vanish at 0");
    const WeightVector P = nd.faces[face_index].weight;
    const WeightVector next = next_in_fan(fan, P);
    long mP = f.weighted_order(P.p, P.q);
    long mQ = f.weighted_order(next.p, next.q);
    long bound = trunc;
    if (!f.is_exact()) bound = std::min<long>(bound, P.p * static_cast<long>(f.bound) - mP);
    require(bound > 0, ErrorKind::Truncation, "strict transform: germ truncation too low");
    BiPoly chart;
    for (const auto& [e, c] : f.poly.terms()) {
        long i = P.p * e.a + P.q * e.b - mP;
        long j = next.p * e.a + next.q * e.b - mQ;
        if (i < bound) chart.add_term(static_cast<int>(i), static_cast<int>(j), c);
    }
    require(sgn(chart.coeff_of_first(0).eval(gamma)) == 0, ErrorKind::Precondition,
            "strict transform: " + gamma.get_str() + " is not a root of the face polynomial");
    int b = static_cast<int>(bound);
    TermFilter keep = [b, w_max](const Exp& e) { return e.a < b && e.b <= w_max; };
    BiPoly g = compose(chart, BiPoly::first(), translated_coordinate(gamma, translation), keep);
    return TruncBiPoly{std::move(g), b};
}

std::vector<DivisorEntry> stage2_multiplicities(const DivisorEntry& parent, const Fan& subfan,
                                                const TruncBiPoly& f_tilde) {
    std::vector<DivisorEntry> out;
    for (std::size_t i = 1; i + 1 < subfan.vectors.size(); ++i) {
        const WeightVector& T = subfan.vectors[i];
        DivisorEntry e;
        e.vector = T;
        e.stage = 2;
        e.epsilon = T.p;
        e.m = T.p * parent.m + f_tilde.weighted_order(T.p, T.q);
        e.k = canonical_multiplicity(T) + T.p * parent.k;
        out.push_back(e);
    }
    return out;
}

namespace {

ChartChange find_translation(const TruncBiPoly& f, const Fan& fan, const NewtonData& nd, std::size_t face_index,
                             const FaceRoot& root, int trunc) {
    ChartChange cc;
    cc.face = face_index;
    cc.P = nd.faces[face_index].weight;
    cc.next = next_in_fan(fan, cc.P);
    cc.gamma = root.gamma;
    cc.multiplicity = root.multiplicity;
    if (root.multiplicity == 1) return cc;
    const int nu = root.multiplicity;
    int N = 24;
    const int cap = std::max(8 * trunc, 64);
    for (int iter = 0; iter < 4 * cap; ++iter) {
        TruncBiPoly g = strict_transform_at(f, fan, nd, face_index, cc.gamma, cc.translation, N, nu + N);
        NewtonData local;
        try {
            local = newton_boundary(g);
        } catch (const Error& e) {
            if (e.kind() != ErrorKind::Truncation) throw;
            if (N >= cap || g.bound < N)
                fail(ErrorKind::Truncation, "translated germ at " + to_string(cc.P) + ", gamma=" + cc.gamma.get_str() +
                                                " not resolved below truncation " + std::to_string(N));
            N *= 2;
            continue;
        }
        require(!local.vertices.empty() && local.vertices.front() == Exp{0, nu}, ErrorKind::Inconsistency,
                "translated germ does not start at the expected vertex");
        const NewtonFace& face = local.faces.front();
        if (local.faces.size() == 1 && !face.degenerate) {
            cc.singular = true;
            cc.S = face.weight;
            cc.germ = std::move(g);
            return cc;
        }
        bool shift = local.faces.size() == 1 && face.weight.p == 1 && face.roots.size() == 1 &&
                     face.irrational.empty() && face.roots[0].multiplicity == nu;
        if (!shift)
            fail(ErrorKind::Unsupported, "translated germ at " + to_string(cc.P) + ", gamma=" + cc.gamma.get_str() +
                                             " is not a single non-degenerate face after translation");
        cc.translation += UniPoly::monomial(face.roots[0].gamma, static_cast<int>(face.weight.q));
    }
    fail(ErrorKind::Truncation, "translation search did not terminate");
}

}  // namespace

ResolutionData resolve(const TruncBiPoly& germ, int trunc) {
    ResolutionData rd;
    rd.germ = germ;
    rd.newton = newton_boundary(germ);
    rd.fan = face_fan(rd.newton);
    for (std::size_t i = 1; i + 1 < rd.fan.vectors.size(); ++i) {
        const WeightVector& Q = rd.fan.vectors[i];
        DivisorEntry e;
        e.vector = Q;
        e.stage = 1;
        e.m = germ.weighted_order(Q.p, Q.q);
        e.k = canonical_multiplicity(Q);
        e.label = "Q" + std::to_string(i);
        rd.entries.push_back(e);
    }
    auto entry_of = [&](const WeightVector& Q) {
        for (std::size_t i = 0; i < rd.entries.size(); ++i)
            if (rd.entries[i].stage == 1 && rd.entries[i].vector == Q) return static_cast<int>(i);
        fail(ErrorKind::Inconsistency, "missing ledger entry for " + to_string(Q));
    };
    std::vector<std::vector<DivisorEntry>> stage2;
    for (std::size_t fi = 0; fi < rd.newton.faces.size(); ++fi) {
        const NewtonFace& face = rd.newton.faces[fi];
        for (const auto& blk : face.irrational)
            if (blk.multiplicity >= 2)
                fail(ErrorKind::Unsupported, "repeated irrational face factor on face " + to_string(face.weight));
        for (const auto& root : face.roots) {
            ChartChange cc = find_translation(germ, rd.fan, rd.newton, fi, root, trunc);
            cc.entry_P = entry_of(face.weight);
            if (cc.singular) {
                Fan sub = canonical_subdivision({kE1, cc.S, kE2});
                auto list = stage2_multiplicities(rd.entries[cc.entry_P], sub, cc.germ);
                for (auto& e : list) {
                    e.parent = cc.entry_P;
                    e.point = static_cast<int>(rd.points.size());
                }
                stage2.push_back(std::move(list));
            }
            rd.points.push_back(std::move(cc));
        }
    }
    bool several = stage2.size() > 1;
    for (std::size_t s = 0; s < stage2.size(); ++s) {
        for (std::size_t i = 0; i < stage2[s].size(); ++i) {
            DivisorEntry e = stage2[s][i];
            e.label = several ? "T" + std::to_string(s + 1) + "." + std::to_string(i + 1) : "T" + std::to_string(i + 1);
            ChartChange& cc = rd.points[static_cast<std::size_t>(e.point)];
            if (e.vector == cc.S) cc.entry_S = static_cast<int>(rd.entries.size());
            rd.entries.push_back(e);
        }
    }
    return rd;
}

std::vector<BiPoly> chart_pullbacks(const std::vector<BiPoly>& phis, const ChartChange& cc, long limit) {
    const WeightVector S = cc.S;
    TermFilter keep = [S, limit](const Exp& e) { return S.p * e.a + S.q * e.b < limit; };
    BiPoly L = translated_coordinate(cc.gamma, cc.translation);
    std::vector<BiPoly> powers{BiPoly::constant(1)};
    std::vector<BiPoly> out;
    for (const auto& phi : phis) {
        BiPoly acc;
        for (const auto& [e, c] : phi.terms()) {
            long i = cc.P.p * e.a + cc.P.q * e.b;
            long j = cc.next.p * e.a + cc.next.q * e.b;
            if (S.p * i >= limit) continue;
            while (static_cast<long>(powers.size()) <= j) powers.push_back(multiply(powers.back(), L, keep));
            for (const auto& [pe, pc] : powers[j].terms()) {
                Exp t{pe.a + static_cast<int>(i), pe.b};
                if (keep(t)) acc.add_term(t.a, t.b, pc * c);
            }
        }
        out.push_back(std::move(acc));
    }
    return out;
}

long valuation_at(const BiPoly& phi, const ChartChange& cc) {
    require(cc.singular, ErrorKind::Precondition, "valuation_at needs a singular intersection point");
    require(!phi.is_zero(), ErrorKind::Precondition, "valuation of the zero polynomial");
    for (long limit = 64; limit <= (1L << 16); limit *= 2) {
        BiPoly p = chart_pullbacks({phi}, cc, limit).front();
        if (!p.is_zero()) return p.weighted_order(cc.S.p, cc.S.q);
    }
    fail(ErrorKind::Truncation, "valuation not determined");
}

}  // namespace adjalex
