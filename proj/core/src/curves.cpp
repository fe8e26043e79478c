#include "adjalex/curves.hpp"

#include <algorithm>

namespace adjalex {

namespace {

BiPoly mono(const Rational& c, int a, int b) { return BiPoly::monomial(c, a, b); }

// Defaults pick a point of the generic stratum. For B9sq_B52_B21 the point
// with all parameters 1 has c2 = 0, a more degenerate singularity.
Rational param(const std::string& family, const std::map<std::string, Rational>& p, const std::string& name) {
    auto it = p.find(name);
    if (it != p.end()) return it->second;
    if (family == "B9sq_B52_B21" && name == "a02") return 2;
    return 1;
}

const std::vector<std::string> kFamily53 = {"a20", "a11", "a02", "b04", "b05", "b12"};
const std::vector<std::string> kFamily54 = {"a20", "a11", "a02", "b05", "b12"};

BiPoly conic(const Rational& a20, const Rational& a11, const Rational& a02) {
    return mono(1, 0, 1) + mono(a20, 2, 0) + mono(a11, 1, 1) + mono(a02, 0, 2);
}

}  // namespace

BiPoly TorusCurveSpec::f() const { return torus_compose(f2, f5); }

BiPoly torus_compose(const BiPoly& f2, const BiPoly& f5, std::vector<std::string>* flags) {
    require(f2.total_degree() <= 2, ErrorKind::Precondition, "torus_compose: deg f2 > 2");
    require(f5.total_degree() <= 5, ErrorKind::Precondition, "torus_compose: deg f5 > 5");
    if (flags) {
        if (f2.is_zero()) flags->push_back("f2 = 0: f = f5^2 is not reduced");
        if (f5.is_zero()) flags->push_back("f5 = 0: f = f2^5 is not reduced");
    }
    return f2.pow(5) + f5.pow(2);
}

std::vector<std::string> family_names() { return {"B9sq_B52_B21", "B292_B21_B52"}; }

std::vector<std::string> family_parameters(const std::string& family) {
    if (family == "B9sq_B52_B21") return kFamily53;
    if (family == "B292_B21_B52") return kFamily54;
    fail(ErrorKind::Config, "unknown family '" + family + "'");
}

TorusCurveSpec family_instance(const std::string& family, const std::map<std::string, Rational>& params) {
    auto names = family_parameters(family);
    for (const auto& [k, v] : params)
        require(std::find(names.begin(), names.end(), k) != names.end(), ErrorKind::Config,
                "unknown parameter '" + k + "' for family " + family);
    TorusCurveSpec spec;
    spec.family = family;
    for (const auto& n : names) spec.params[n] = param(family, params, n);
    const Rational a20 = spec.params["a20"], a11 = spec.params["a11"], a02 = spec.params["a02"];
    const Rational b05 = spec.params["b05"], b12 = spec.params["b12"];
    spec.f2 = conic(a20, a11, a02);
    BiPoly& f5 = spec.f5;
    if (family == "B9sq_B52_B21") {
        const Rational b04 = spec.params["b04"];
        f5 += mono(b05, 0, 5);
        f5 += mono(a02 * a02 * b12 + a11 * b04, 1, 4) + mono(b04, 0, 4);
        f5 += mono(2 * b12 * a02 * a11 + a20 * b04, 2, 3) + mono(2 * a02 * b12, 1, 3);
        f5 += mono(2 * a20 * a02 * b12 + b12 * a11 * a11, 3, 2) + mono(2 * b12 * a11, 2, 2) + mono(b12, 1, 2);
        f5 += mono(2 * a11 * b12 * a20, 4, 1) + mono(2 * b12 * a20, 3, 1);
        f5 += mono(a20 * a20 * b12, 5, 0);
        spec.predicates.push_back({"b12 != 0", sgn(b12) != 0, true, ""});
        spec.predicates.push_back({"a20 != 0", sgn(a20) != 0, true, ""});
        spec.predicates.push_back(
            {"a20 + b12^2 != 0", sgn(a20 + b12 * b12) != 0, false, "C has the line component y=0"});
    } else {
        const Rational r27 = rat(1, 27);
        f5 += mono(b05, 0, 5);
        f5 += mono(a02 * a02 * b12, 1, 4);
        f5 += mono(2 * a02 * b12 * a11, 2, 3) + mono(2 * a02 * b12, 1, 3);
        f5 += mono(r27 * b12 * (4 * a02 * b12 * b12 + 54 * a02 * a20 + 27 * a11 * a11), 3, 2) +
              mono(2 * a11 * b12, 2, 2) + mono(b12, 1, 2);
        Rational c = 2 * r27 * b12 * (2 * b12 * b12 + 27 * a20);
        f5 += mono(c * a11, 4, 1) + mono(c, 3, 1);
        f5 += mono(r27 * b12 * a20 * (27 * a20 + 4 * b12 * b12), 5, 0);
        Rational d2 = rat(4, 9) * b12 * b12;
        spec.predicates.push_back({"b12 != 0", sgn(b12) != 0, true, ""});
        spec.predicates.push_back({"a20 != 0", sgn(a20) != 0, true, ""});
        spec.predicates.push_back({"d2 + a20 != 0 (d2 = 4/9 b12^2)", sgn(d2 + a20) != 0, true, "f is not reduced"});
        spec.predicates.push_back(
            {"b12^2 + 9 a20 != 0", sgn(b12 * b12 + 9 * a20) != 0, false, "C has the line component y=0"});
    }
    for (const auto& p : spec.predicates) {
        if (p.holds) continue;
        if (p.fatal)
            fail(ErrorKind::Config,
                 "family " + family + ": predicate violated: " + p.text + (p.consequence.empty() ? "" : " (" + p.consequence + ")"));
        spec.flags.push_back(p.consequence);
    }
    if (!spec.flags.empty())
        require(spec.f().coeff_of_second(0).is_zero(), ErrorKind::Inconsistency,
                "line-component stratum but f(x,0) is not identically zero");
    return spec;
}

namespace {

struct Search {
    UniPoly phi;
    int depth = 0;
};

Search dfs(const BiPoly& f, const UniPoly& phi, int last, int order) {
    TruncBiPoly F = substitute_shift(f, TruncSeries::exact(phi));
    NewtonData nd = newton_boundary(F.poly);
    Search best{phi, last};
    for (const auto& face : nd.faces) {
        if (face.weight.p != 1) continue;
        int e = static_cast<int>(face.weight.q);
        if (e <= last || e > order) continue;
        for (const auto& r : face.roots) {
            if (r.multiplicity < 2) continue;
            Search s = dfs(f, phi + UniPoly::monomial(r.gamma, e), e, order);
            if (s.depth > best.depth) best = std::move(s);
        }
    }
    return best;
}

LocalModel finish(const BiPoly& f, const UniPoly& phi, const BiPoly* f2) {
    LocalModel lm;
    lm.phi = TruncSeries::exact(phi);
    lm.germ = substitute_shift(f, lm.phi);
    lm.newton = newton_boundary(lm.germ);
    if (f2) {
        TruncBiPoly g = substitute_shift(*f2, lm.phi);
        lm.psi = TruncSeries::exact(g.poly.coeff_of_second(0));
        int o = lm.psi.valuation();
        if (!lm.psi.coeffs().empty()) {
            lm.constants["psi_order"] = Rational(o);
            lm.constants["psi_leading"] = lm.psi.coeff(o);
        }
    }
    for (std::size_t i = 0; i < lm.newton.faces.size(); ++i) {
        const auto& face = lm.newton.faces[i];
        for (std::size_t j = 0; j < face.roots.size(); ++j) {
            std::string key = "gamma[" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "]";
            lm.constants[key] = face.roots[j].gamma;
        }
    }
    return lm;
}

}  // namespace

UniPoly auto_phi(const BiPoly& f, int order) {
    require(!f.is_zero(), ErrorKind::Precondition, "auto_phi of the zero polynomial");
    return dfs(f, UniPoly{}, 0, order).phi;
}

LocalModel local_model(const BiPoly& f, const UniPoly& phi, const BiPoly* f2) { return finish(f, phi, f2); }

LocalModel local_model_auto(const BiPoly& f, int order, const BiPoly* f2) {
    return finish(f, auto_phi(f, order), f2);
}

}  // namespace adjalex
