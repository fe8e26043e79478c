#include "adjalex_cli/pipeline.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <regex>
#include <set>
#include <sstream>

#include "adjalex/alexander.hpp"
#include "adjalex/pluecker.hpp"

namespace adjalex::cli {

namespace {

Rational rational_of(const Json& v, const std::string& what) {
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_string()) {
        try {
            return parse_rational(v.get<std::string>());
        } catch (const Error&) {
        }
    }
    fail(ErrorKind::Config, what + ": expected an integer or a rational string");
}

long long_of(const Json& obj, const char* key, long fallback) {
    if (!obj.contains(key)) return fallback;
    const Json& v = obj[key];
    require(v.is_number_integer(), ErrorKind::Config, std::string("'") + key + "' must be an integer");
    return v.get<long>();
}

std::string string_of(const Json& obj, const char* key, const std::string& fallback) {
    if (!obj.contains(key)) return fallback;
    require(obj[key].is_string(), ErrorKind::Config, std::string("'") + key + "' must be a string");
    return obj[key].get<std::string>();
}

BiPoly poly_of(const std::string& text, const VarNames& names, const std::string& what) {
    try {
        return parse_poly(text, names);
    } catch (const Error& e) {
        fail(ErrorKind::Config, what + ": " + e.what());
    }
}

// accepts x,y and falls back to u,v
BiPoly plane_poly(const std::string& text, const std::string& what) {
    try {
        return parse_poly(text, kXY);
    } catch (const Error&) {
        return poly_of(text, kUV, what);
    }
}

UniPoly series_of(const std::string& text) {
    BiPoly p = poly_of(text, kUV, "phi");
    require(p.degree_second() <= 0, ErrorKind::Config, "phi must be a polynomial in u");
    return p.coeff_of_second(0);
}

Json number(const Rational& r) {
    if (r.get_den() == 1 && r.get_num().fits_slong_p()) return r.get_num().get_si();
    return to_string(r);
}

Json coefficients(const UniPoly& p) {
    Json out = Json::array();
    for (const auto& c : p.coeffs()) out.push_back(number(c));
    return out;
}

Json newton_json(const NewtonData& nd) {
    Json out;
    Json verts = Json::array();
    for (const auto& v : nd.vertices) verts.push_back(Json::array({v.a, v.b}));
    out["vertices"] = verts;
    Json faces = Json::array();
    for (const auto& f : nd.faces) {
        Json j;
        j["weight"] = to_string(f.weight);
        j["degree"] = f.degree;
        j["face_poly"] = f.face_poly.to_string(kUV);
        j["degenerate"] = f.degenerate;
        Json roots = Json::array();
        for (const auto& r : f.roots) roots.push_back({{"gamma", to_string(r.gamma)}, {"multiplicity", r.multiplicity}});
        j["rational_roots"] = roots;
        Json irr = Json::array();
        for (const auto& b : f.irrational)
            irr.push_back({{"factor", b.poly.to_string("z")}, {"multiplicity", b.multiplicity}});
        j["irrational_factors"] = irr;
        faces.push_back(j);
    }
    out["faces"] = faces;
    out["nondegenerate"] = nd.nondegenerate();
    return out;
}

Json resolution_json(const ResolutionData& rd) {
    Json out;
    out["pi_f"] = rd.display_f();
    out["pi_K"] = rd.display_k();
    Json entries = Json::array();
    for (const auto& e : rd.entries)
        entries.push_back({{"label", e.label}, {"vector", to_string(e.vector)}, {"stage", e.stage}, {"m", e.m}, {"k", e.k}});
    out["divisors"] = entries;
    Json pts = Json::array();
    for (const auto& cc : rd.points) {
        Json j;
        j["face_vector"] = to_string(cc.P);
        j["gamma"] = to_string(cc.gamma);
        j["multiplicity"] = cc.multiplicity;
        j["singular"] = cc.singular;
        if (cc.singular) j["S"] = to_string(cc.S);
        pts.push_back(j);
    }
    out["intersection_points"] = pts;
    return out;
}

Json ideal_json(const AdjunctionIdeal& J) {
    Json j;
    j["k"] = J.k;
    j["ideal"] = J.to_string();
    j["rho"] = J.rho;
    return j;
}

struct Curve {
    std::optional<BiPoly> f;
    std::optional<TorusCurveSpec> spec;
    std::optional<BiPoly> germ;
    long d = 0;
    Json info;
};

Curve build_curve(const JobConfig& cfg, bool need_degree = true) {
    const Json& in = cfg.input;
    Json c = in.contains("curve") ? in["curve"] : Json::object();
    require(c.is_object(), ErrorKind::Config, "'curve' must be an object");
    if (cfg.family) c["family"] = *cfg.family;
    if (!cfg.params.empty()) {
        Json p = c.contains("params") ? c["params"] : Json::object();
        for (const auto& [k, v] : cfg.params) p[k] = v;
        c["params"] = p;
    }
    Curve out;
    if (c.contains("family")) {
        std::map<std::string, Rational> params;
        if (c.contains("params")) {
            require(c["params"].is_object(), ErrorKind::Config, "'params' must be an object");
            for (const auto& [k, v] : c["params"].items()) params[k] = rational_of(v, "parameter " + k);
        }
        TorusCurveSpec spec = family_instance(string_of(c, "family", ""), params);
        out.f = spec.f();
        out.info["source"] = "family";
        out.info["family"] = spec.family;
        Json pj = Json::object();
        for (const auto& [k, v] : spec.params) pj[k] = to_string(v);
        out.info["params"] = pj;
        out.info["f2"] = spec.f2.to_string();
        out.info["f5"] = spec.f5.to_string();
        Json preds = Json::array();
        for (const auto& p : spec.predicates) preds.push_back({{"predicate", p.text}, {"holds", p.holds}});
        out.info["predicates"] = preds;
        out.info["flags"] = spec.flags;
        out.spec = std::move(spec);
    } else if (c.contains("f2") || c.contains("f5")) {
        BiPoly f2 = plane_poly(string_of(c, "f2", "0"), "f2");
        BiPoly f5 = plane_poly(string_of(c, "f5", "0"), "f5");
        std::vector<std::string> flags;
        out.f = torus_compose(f2, f5, &flags);
        out.info["source"] = "torus";
        out.info["f2"] = f2.to_string();
        out.info["f5"] = f5.to_string();
        out.info["flags"] = flags;
    } else if (c.contains("f")) {
        out.f = plane_poly(string_of(c, "f", ""), "f");
        out.info["source"] = "inline";
    } else if (c.contains("germ")) {
        out.germ = poly_of(string_of(c, "germ", ""), kUV, "germ");
        out.info["source"] = "germ";
        out.info["germ"] = out.germ->to_string(kUV);
    } else {
        fail(ErrorKind::Config, "no curve given: use curve.f, curve.f2/f5, curve.family or curve.germ");
    }
    if (out.f) {
        require(!out.f->is_zero(), ErrorKind::Config, "the curve polynomial is zero");
        out.d = out.f->total_degree();
        out.info["f"] = out.f->to_string();
    }
    out.d = long_of(c, "degree", long_of(in, "degree", out.d));
    require(out.d >= 1 || !need_degree, ErrorKind::Config, "curve degree must be given and positive");
    if (out.f) require(out.d == out.f->total_degree(), ErrorKind::Config, "'degree' differs from the degree of f");
    out.info["degree"] = out.d >= 1 ? Json(out.d) : Json();
    return out;
}

bool singular_at(const BiPoly& f, const Rational& x, const Rational& y) {
    return sgn(f.eval(x, y)) == 0 && sgn(f.derivative_first().eval(x, y)) == 0 &&
           sgn(f.derivative_second().eval(x, y)) == 0;
}

std::vector<SingularPoint> build_points(const JobConfig& cfg, const Curve& c, std::vector<std::string>& warnings) {
    std::vector<SingularPoint> pts;
    const Json& in = cfg.input;
    if (c.germ) {
        pts.push_back(germ_point(*c.germ, cfg.trunc, "O"));
        return pts;
    }
    const BiPoly& f = *c.f;
    if (in.contains("points")) {
        require(in["points"].is_array(), ErrorKind::Config, "'points' must be an array");
        int idx = 0;
        for (const auto& pj : in["points"]) {
            require(pj.is_object(), ErrorKind::Config, "each point must be an object");
            std::string label = string_of(pj, "label", "P" + std::to_string(++idx));
            Rational x = pj.contains("x") ? rational_of(pj["x"], "point x") : Rational(0);
            Rational y = pj.contains("y") ? rational_of(pj["y"], "point y") : Rational(0);
            require(singular_at(f, x, y), ErrorKind::Config, "point " + label + " is not a singular point of C");
            std::string phi = string_of(pj, "phi", "auto");
            if (phi == "auto")
                pts.push_back(make_point_auto(f, x, y, static_cast<int>(long_of(pj, "phi_order", 40)), cfg.trunc, label));
            else
                pts.push_back(make_point(f, x, y, series_of(phi), cfg.trunc, label));
        }
        return pts;
    }
    if (singular_at(f, 0, 0)) {
        pts.push_back(make_point_auto(f, 0, 0, 40, cfg.trunc, "O"));
        warnings.push_back("singular points taken from the origin only; list others under 'points'");
    } else {
        warnings.push_back("no singular points");
    }
    return pts;
}

PointData point_data_for(const SingularPoint& P, long d, bool parallel) {
    auto one = [&](long k) {
        AdjunctionIdeal J = adjunction_ideal(P.resolution, d, k);
        long i = iota(J, P.germ);
        return std::make_pair(std::move(J), i);
    };
    PointData out;
    if (parallel) {
        std::vector<std::future<std::pair<AdjunctionIdeal, long>>> jobs;
        for (long k = 1; k < d; ++k) jobs.push_back(std::async(std::launch::async, one, k));
        for (auto& j : jobs) {
            auto [J, i] = j.get();
            out.ideals.push_back(std::move(J));
            out.iota.push_back(i);
        }
    } else {
        for (long k = 1; k < d; ++k) {
            auto [J, i] = one(k);
            out.ideals.push_back(std::move(J));
            out.iota.push_back(i);
        }
    }
    return out;
}

SingularityRecord record_of(const Json& rj, int index) {
    require(rj.is_object(), ErrorKind::Config, "each record must be an object");
    std::string label = string_of(rj, "label", "P" + std::to_string(index));
    if (rj.contains("type")) {
        try {
            return record_from_profile(label, parse_profile(string_of(rj, "type", "")));
        } catch (const Error& e) {
            fail(ErrorKind::Config, "record " + label + ": " + e.what());
        }
    }
    if (rj.contains("branches")) {
        require(rj["branches"].is_array() && !rj["branches"].empty(), ErrorKind::Config,
                "record " + label + ": 'branches' must be a nonempty array");
        BranchProfile prof;
        for (const auto& bj : rj["branches"]) {
            require(bj.is_object(), ErrorKind::Config, "record " + label + ": each branch must be an object");
            LocalBranch b;
            b.type = string_of(bj, "type", "B1,1");
            b.mu = long_of(bj, "mu", 0);
            b.min_degree = long_of(bj, "min_degree", 1);
            require(b.mu >= 0 && b.min_degree >= 1, ErrorKind::Config, "record " + label + ": bad branch data");
            prof.branches.push_back(b);
        }
        std::size_t n = prof.branches.size();
        prof.intersection.assign(n, std::vector<long>(n, 0));
        if (n > 1) {
            require(rj.contains("intersection") && rj["intersection"].is_array() && rj["intersection"].size() == n,
                    ErrorKind::Config, "record " + label + ": 'intersection' must be an n x n matrix");
            for (std::size_t i = 0; i < n; ++i) {
                const Json& row = rj["intersection"][i];
                require(row.is_array() && row.size() == n, ErrorKind::Config,
                        "record " + label + ": 'intersection' must be an n x n matrix");
                for (std::size_t j = 0; j < n; ++j) {
                    require(row[j].is_number_integer() && row[j].get<long>() >= 0, ErrorKind::Config,
                            "record " + label + ": intersection numbers must be nonnegative integers");
                    prof.intersection[i][j] = i == j ? 0 : row[j].get<long>();
                }
            }
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    require(prof.intersection[i][j] == prof.intersection[j][i], ErrorKind::Config,
                            "record " + label + ": intersection matrix is not symmetric");
        }
        return record_from_profile(label, prof);
    }
    require(rj.contains("mu"), ErrorKind::Config, "record " + label + ": needs 'type', 'branches' or 'mu'");
    SingularityRecord rec;
    rec.label = label;
    rec.mu = long_of(rj, "mu", 0);
    rec.r_loc = long_of(rj, "r", 1);
    require(rec.mu >= 0 && rec.r_loc >= 1, ErrorKind::Config, "record " + label + ": needs mu >= 0 and r >= 1");
    return rec;
}

std::vector<SingularityRecord> records_of(const Json& arr) {
    require(arr.is_array(), ErrorKind::Config, "'records' must be an array");
    std::vector<SingularityRecord> out;
    int i = 0;
    for (const auto& rj : arr) out.push_back(record_of(rj, ++i));
    return out;
}

Json component_json(const ComponentCheck& c) {
    return {{"degree", c.degree}, {"branches", c.branches}, {"mu", c.mu}, {"r", c.r_loc},
            {"chi", c.chi},       {"feasible", c.feasible}, {"failure", c.failure}};
}

Json hypothesis_json(const SplitHypothesis& h) {
    Json comps = Json::array();
    for (const auto& c : h.components) comps.push_back(component_json(c));
    return {{"components", comps}, {"bezout_failures", h.bezout_failures}, {"feasible", h.feasible}};
}

Json splitting_json(long d, const std::vector<SingularityRecord>& records, std::set<long>* counts) {
    auto verdicts = enumerate_splittings(d, records);
    Json parts = Json::array();
    Json survivors = Json::array();
    for (const auto& pv : verdicts) {
        Json j;
        j["degrees"] = pv.degrees;
        j["partition"] = partition_string(pv.degrees);
        j["verdict"] = pv.feasible() ? "not refuted" : "refuted";
        j["assignments"] = pv.assignments;
        Json surv = Json::array();
        for (const auto& h : pv.survivors) surv.push_back(hypothesis_json(h));
        j["surviving_assignments"] = surv;
        if (pv.witness && !pv.feasible()) j["refutation"] = hypothesis_json(*pv.witness);
        parts.push_back(j);
        if (pv.feasible()) {
            survivors.push_back(partition_string(pv.degrees));
            if (counts) counts->insert(static_cast<long>(pv.degrees.size()));
        }
    }
    Json recs = Json::array();
    for (const auto& r : records) {
        Json rj{{"label", r.label}, {"mu", r.mu}, {"r", r.r_loc}};
        if (r.profile) {
            Json br = Json::array();
            for (const auto& b : r.profile->branches) br.push_back({{"type", b.type}, {"mu", b.mu}, {"min_degree", b.min_degree}});
            rj["branches"] = br;
            rj["intersection"] = r.profile->intersection;
        }
        recs.push_back(rj);
    }
    return {{"degree", d}, {"records", recs}, {"partitions", parts}, {"survivors", survivors}};
}

EllMode ell_mode_of(const std::string& s) {
    if (s == "auto") return EllMode::Auto;
    if (s == "shortcut") return EllMode::Shortcut;
    if (s == "matrix") return EllMode::Matrix;
    if (s == "asserted") return EllMode::AssertInjective;
    fail(ErrorKind::Config, "unknown ell mode '" + s + "' (auto, shortcut, matrix, asserted)");
}

std::vector<WeightVector> vectors_of(const Json& arr) {
    require(arr.is_array(), ErrorKind::Config, "'vectors' must be an array");
    static const std::regex pair(R"(\s*\(\s*(\d+)\s*,\s*(\d+)\s*\)\s*)");
    std::vector<WeightVector> out;
    for (const auto& v : arr) {
        require(v.is_string(), ErrorKind::Config, "vectors are strings like (1,2), E1, E2");
        std::string s = v.get<std::string>();
        std::smatch m;
        if (s == "E1") out.push_back(kE1);
        else if (s == "E2") out.push_back(kE2);
        else if (std::regex_match(s, m, pair)) out.push_back({std::stol(m[1]), std::stol(m[2])});
        else fail(ErrorKind::Config, "bad vector '" + s + "'");
    }
    return out;
}

}  // namespace

KRange parse_k_range(const std::string& text) {
    static const std::regex single(R"(\s*(\d+)\s*)");
    static const std::regex range(R"(\s*(\d*)\s*\.\.\s*(\d*)\s*)");
    std::smatch m;
    KRange r;
    if (std::regex_match(text, m, single)) {
        r.lo = r.hi = std::stol(m[1]);
    } else if (std::regex_match(text, m, range)) {
        if (m[1].length()) r.lo = std::stol(m[1]);
        if (m[2].length()) r.hi = std::stol(m[2]);
    } else {
        fail(ErrorKind::Config, "bad k range '" + text + "' (use 7, 3..9, 3.. or ..5)");
    }
    require(r.hi < 0 || r.lo <= r.hi, ErrorKind::Config, "empty k range '" + text + "'");
    return r;
}

int default_trunc() {
    const char* env = std::getenv("ADJALEX_TRUNC");
    if (!env || !*env) return kDefaultTrunc;
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    require(*end == '\0' && v > 0 && v < 100000, ErrorKind::Config, std::string("bad ADJALEX_TRUNC '") + env + "'");
    return static_cast<int>(v);
}

Json load_json_file(const std::string& path) {
    std::ifstream is(path);
    require(static_cast<bool>(is), ErrorKind::Config, "cannot read '" + path + "'");
    try {
        return Json::parse(is);
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, "'" + path + "': " + e.what());
    }
}

Json cmd_analyze(const JobConfig& cfg) {
    std::vector<std::string> warnings;
    Curve c = build_curve(cfg);
    const Json& in = cfg.input;

    GlobalCurve C;
    C.f = c.f;
    C.d = c.d;
    C.points = build_points(cfg, c, warnings);

    Json comp = in.contains("components") ? in["components"] : Json::object();
    if (comp.is_number_integer()) comp = Json{{"mode", "asserted"}, {"r", comp}};
    require(comp.is_object(), ErrorKind::Config, "'components' must be an object or an integer");
    std::string mode = string_of(comp, "mode", comp.contains("r") ? "asserted" : "unknown");
    Json comp_report{{"mode", mode}};
    if (mode == "asserted") {
        C.r = long_of(comp, "r", 1);
        require(C.r >= 1, ErrorKind::Config, "component count must be positive");
        C.irreducible_asserted = C.r == 1;
    } else if (mode == "pluecker") {
        require(comp.contains("records"), ErrorKind::Config, "pluecker mode needs 'records'");
        std::set<long> counts;
        Json split = splitting_json(C.d, records_of(comp["records"]), &counts);
        comp_report["survivors"] = split["survivors"];
        comp_report["possible_r"] = Json(std::vector<long>(counts.begin(), counts.end()));
        if (counts.size() == 1) {
            C.r = *counts.begin();
        } else {
            warnings.push_back("component count not determined by the splitting analysis");
        }
        C.irreducible_asserted = C.r == 1;
    } else {
        require(mode == "unknown", ErrorKind::Config, "components.mode must be asserted, pluecker or unknown");
    }
    comp_report["r"] = C.r == 0 ? Json() : Json(C.r);
    if (c.spec && !c.spec->flags.empty() && C.r == 1)
        fail(ErrorKind::Inconsistency, "component count 1 asserted for a reducible stratum: " + c.spec->flags.front());

    EllMode em = ell_mode_of(string_of(in, "ell_mode", "auto"));
    bool oracle = in.contains("oracle") && in["oracle"].is_boolean() && in["oracle"].get<bool>();

    std::vector<PointData> data;
    if (cfg.parallel && C.points.size() > 1) {
        std::vector<std::future<PointData>> jobs;
        for (const auto& P : C.points)
            jobs.push_back(std::async(std::launch::async, [&, d = C.d] { return point_data_for(P, d, false); }));
        for (auto& j : jobs) data.push_back(j.get());
    } else {
        for (const auto& P : C.points) data.push_back(point_data_for(P, C.d, cfg.parallel));
    }

    Json report;
    report["command"] = "analyze";
    report["curve"] = c.info;
    Json pts = Json::array();
    for (std::size_t i = 0; i < C.points.size(); ++i) {
        const auto& P = C.points[i];
        Json pj;
        pj["label"] = P.label;
        pj["x"] = to_string(P.x0);
        pj["y"] = to_string(P.y0);
        pj["phi"] = P.phi.to_string("u");
        pj["newton"] = newton_json(P.resolution.newton);
        pj["resolution"] = resolution_json(P.resolution);
        Json cands = Json::array();
        if (P.resolution.degenerate())
            for (const auto& cand : correction_family(P.resolution))
                cands.push_back({{"name", cand.name}, {"poly", cand.poly.to_string(kUV)}});
        pj["candidates"] = cands;
        Json table = Json::array();
        for (long k = 1; k < C.d; ++k) {
            if (!cfg.k.contains(k, C.d)) continue;
            const auto& J = data[i].ideals[static_cast<std::size_t>(k - 1)];
            Json row = ideal_json(J);
            row["iota"] = data[i].iota[static_cast<std::size_t>(k - 1)];
            if (oracle && P.germ.is_exact()) row["iota_oracle"] = iota_oracle(J, P.germ.poly, cfg.seed);
            table.push_back(row);
        }
        pj["table"] = table;
        pts.push_back(pj);
    }
    report["points"] = pts;
    report["components"] = comp_report;

    EllResult er = ell_values(C, data, em, cfg.parallel);
    Json rows = Json::array();
    Json vec = Json::array();
    for (const auto& r : er.rows) {
        vec.push_back(r.ell);
        if (!cfg.k.contains(r.k, C.d)) continue;
        Json j{{"k", r.k},         {"sum_rho", r.sum_rho}, {"sum_iota", r.sum_iota},
               {"columns", r.columns}, {"hypothesis", r.hypothesis}, {"path", r.path},
               {"rank", r.rank},   {"kernel_dim", r.kernel_dim}};
        Json ker = Json::array();
        for (const auto& g : r.kernel) ker.push_back(g.to_string());
        j["kernel"] = ker;
        j["ell"] = r.ell;
        rows.push_back(j);
    }
    report["ell"] = {{"rows", rows}, {"vector", vec}};

    AlexanderPolynomial A = assemble(er.ell(), C.d, C.r);
    Json aj;
    Json facs = Json::array();
    for (const auto& [n, e] : A.factors)
        if (e > 0) facs.push_back({{"n", n}, {"e", e}});
    aj["factors"] = facs;
    aj["reduced"] = A.reduced.to_string("t");
    aj["reduced_coefficients"] = coefficients(A.reduced);
    if (C.r > 0) {
        aj["factored"] = A.factored();
        aj["full"] = A.full.to_string("t");
        aj["full_coefficients"] = coefficients(A.full);
    } else {
        AlexanderPolynomial R = A;
        R.factors.erase(R.factors.begin(), std::find_if(R.factors.begin(), R.factors.end(),
                                                        [](const auto& f) { return f.first != 1; }));
        aj["factored"] = R.factored();
        aj["full"] = nullptr;
        warnings.push_back("component count unknown: only the reduced polynomial is reported");
    }
    report["alexander"] = aj;
    for (auto& w : er.warnings) warnings.push_back(w);
    report["warnings"] = warnings;
    return report;
}

Json cmd_tables(const JobConfig& cfg) {
    Json fixtures = cfg.fixtures_path ? load_json_file(*cfg.fixtures_path) : embedded_fixtures();
    Json report;
    report["command"] = "tables";
    Json mismatches = Json::array();
    auto cell = [&](const std::string& where, long k, const char* key, const Json& expected, const Json& got,
                    Json& row) {
        row[key] = got;
        if (expected.is_null()) return;
        if (expected != got) {
            row["match"] = false;
            mismatches.push_back({{"table", where}, {"k", k}, {"cell", key}, {"expected", expected}, {"got", got}});
        }
    };
    try {
        Json tables = Json::array();
        for (const auto& t : fixtures.at("tables")) {
            std::string name = t.at("name").get<std::string>();
            BiPoly germ = poly_of(t.at("germ").get<std::string>(), kUV, "fixture germ");
            long d = t.at("degree").get<long>();
            ResolutionData rd = resolve(TruncBiPoly{germ, kExact}, cfg.trunc);
            Json rows = Json::array();
            for (const auto& fr : t.at("rows")) {
                long k = fr.at("k").get<long>();
                if (!cfg.k.contains(k, d)) continue;
                AdjunctionIdeal J = adjunction_ideal(rd, d, k);
                Json row{{"k", k}, {"match", true}};
                cell(name, k, "ideal", fr.value("ideal", Json()), J.to_string(), row);
                cell(name, k, "rho", fr.value("rho", Json()), J.rho, row);
                cell(name, k, "iota", fr.value("iota", Json()), iota(J, TruncBiPoly{germ, kExact}), row);
                rows.push_back(row);
            }
            tables.push_back({{"name", name}, {"germ", germ.to_string(kUV)}, {"rows", rows}});
        }
        report["tables"] = tables;
        Json lists = Json::array();
        for (const auto& t : fixtures.at("ideal_lists")) {
            std::string name = t.at("name").get<std::string>();
            long d = t.at("degree").get<long>();
            TorusCurveSpec spec = family_instance(t.at("family").get<std::string>(), {});
            BiPoly f = spec.f();
            SingularPoint P = make_point_auto(f, 0, 0, 40, cfg.trunc, "O");
            Json rows = Json::array();
            for (const auto& fr : t.at("rows")) {
                long k = fr.at("k").get<long>();
                if (!cfg.k.contains(k, d)) continue;
                AdjunctionIdeal J = adjunction_ideal(P.resolution, d, k);
                Json row{{"k", k}, {"match", true}};
                cell(name, k, "ideal", fr.value("ideal", Json()), J.to_string(), row);
                cell(name, k, "rho", fr.value("rho", Json()), J.rho, row);
                rows.push_back(row);
            }
            Json cands = Json::array();
            for (const auto& cand : correction_family(P.resolution))
                cands.push_back({{"name", cand.name}, {"poly", cand.poly.to_string(kUV)}});
            lists.push_back({{"name", name}, {"phi", P.phi.to_string("u")}, {"candidates", cands}, {"rows", rows}});
        }
        report["ideal_lists"] = lists;
    } catch (const nlohmann::json::exception& e) {
        fail(ErrorKind::Config, std::string("malformed fixtures: ") + e.what());
    }
    report["mismatches"] = mismatches;
    report["status"] = mismatches.empty() ? "ok" : "mismatch";
    return report;
}

Json cmd_pluecker(const JobConfig& cfg) {
    const Json& in = cfg.input;
    require(in.contains("degree"), ErrorKind::Config, "pluecker needs 'degree'");
    long d = long_of(in, "degree", 0);
    require(d >= 1, ErrorKind::Config, "degree must be positive");
    auto records = records_of(in.contains("records") ? in["records"] : Json::array());
    Json report;
    report["command"] = "pluecker";
    Json euler = Json::array();
    for (const auto& r : records) {
        EulerVerdict v = euler_check(d, r.mu, r.r_loc);
        euler.push_back({{"record", r.label}, {"chi", v.chi}, {"feasible", v.feasible}});
    }
    report["euler_irreducible"] = euler;
    report["splittings"] = splitting_json(d, records, nullptr);
    return report;
}

Json cmd_subdivide(const JobConfig& cfg) {
    const Json& in = cfg.input;
    Json report;
    report["command"] = "subdivide";
    Fan fan;
    std::vector<WeightVector> raw;
    if (in.contains("vectors")) {
        raw = vectors_of(in["vectors"]);
        fan = canonical_subdivision(raw);
    } else {
        Curve c = build_curve(cfg, false);
        require(c.germ.has_value() || c.f.has_value(), ErrorKind::Config, "subdivide needs vectors or a germ");
        NewtonData nd = newton_boundary(c.germ ? *c.germ : *c.f);
        raw.push_back(kE1);
        for (const auto& w : nd.weights()) raw.push_back(w);
        raw.push_back(kE2);
        fan = face_fan(nd);
        report["newton"] = newton_json(nd);
    }
    Json input = Json::array(), vecs = Json::array(), inserted = Json::array();
    for (const auto& w : raw) input.push_back(to_string(w));
    for (const auto& w : fan.vectors) {
        vecs.push_back(to_string(w));
        if (std::find(raw.begin(), raw.end(), w) == raw.end()) inserted.push_back(to_string(w));
    }
    report["input"] = input;
    report["fan"] = vecs;
    report["inserted"] = inserted;
    report["dot"] = fan_to_dot(fan);
    return report;
}

Json cmd_ideal(const JobConfig& cfg) {
    std::vector<std::string> warnings;
    Curve c = build_curve(cfg);
    auto pts = build_points(cfg, c, warnings);
    require(!pts.empty(), ErrorKind::Config, "no singular point to compute an ideal at");
    const SingularPoint& P = pts.front();
    Json report;
    report["command"] = "ideal";
    report["point"] = P.label;
    report["degree"] = c.d;
    report["phi"] = P.phi.to_string("u");
    Json rows = Json::array();
    for (long k = 1; k < c.d; ++k) {
        if (!cfg.k.contains(k, c.d)) continue;
        AdjunctionIdeal J = adjunction_ideal(P.resolution, c.d, k);
        Json row = ideal_json(J);
        row["iota"] = iota(J, P.germ);
        row["staircase_rho"] = J.is_monomial() ? Json(rho_staircase(J)) : Json();
        Json conds = Json::array();
        for (const auto& vc : adjunction_conditions(P.resolution, c.d, k))
            conds.push_back({{"divisor", vc.label}, {"weight", to_string(vc.weight)}, {"threshold", vc.threshold}});
        row["conditions"] = conds;
        Json extra = Json::array();
        for (const auto& g : J.extra_generators) extra.push_back({{"name", g.label()}, {"poly", g.poly.to_string(kUV)}});
        row["extra_generators"] = extra;
        rows.push_back(row);
    }
    report["ideals"] = rows;
    report["warnings"] = warnings;
    return report;
}

Json run(const JobConfig& cfg) {
    if (cfg.command == "analyze") return cmd_analyze(cfg);
    if (cfg.command == "tables") return cmd_tables(cfg);
    if (cfg.command == "pluecker") return cmd_pluecker(cfg);
    if (cfg.command == "subdivide") return cmd_subdivide(cfg);
    if (cfg.command == "ideal") return cmd_ideal(cfg);
    fail(ErrorKind::Config, "unknown command '" + cfg.command + "'");
}

namespace {

bool scalar(const Json& j) { return !j.is_object() && !j.is_array(); }

std::string scalar_text(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_null()) return "-";
    return j.dump();
}

bool flat(const Json& j) { return j.is_array() && std::all_of(j.begin(), j.end(), scalar); }

std::string inline_list(const Json& j) {
    std::string out = "[";
    for (std::size_t i = 0; i < j.size(); ++i) out += (i ? ", " : "") + scalar_text(j[i]);
    return out + "]";
}

void emit(std::ostringstream& os, const Json& j, int indent) {
    std::string pad(static_cast<std::size_t>(indent), ' ');
    if (j.is_object()) {
        for (const auto& [k, v] : j.items()) {
            if (scalar(v)) {
                std::string s = scalar_text(v);
                if (s.find('\n') != std::string::npos) {
                    os << pad << k << ":\n";
                    std::istringstream ls(s);
                    for (std::string line; std::getline(ls, line);) os << pad << "  " << line << "\n";
                } else {
                    os << pad << k << ": " << s << "\n";
                }
            } else if (flat(v)) {
                os << pad << k << ": " << inline_list(v) << "\n";
            } else {
                os << pad << k << ":\n";
                emit(os, v, indent + 2);
            }
        }
    } else if (j.is_array()) {
        for (const auto& e : j) {
            if (scalar(e)) {
                os << pad << "- " << scalar_text(e) << "\n";
            } else if (flat(e)) {
                os << pad << "- " << inline_list(e) << "\n";
            } else if (e.is_array()) {
                os << pad << "-\n";
                emit(os, e, indent + 2);
            } else {
                std::ostringstream inner;
                emit(inner, e, indent + 2);
                std::string s = inner.str();
                if (s.size() >= static_cast<std::size_t>(indent) + 2) s.replace(static_cast<std::size_t>(indent), 2, "- ");
                os << s;
            }
        }
    } else {
        os << pad << scalar_text(j) << "\n";
    }
}

}  // namespace

std::string render_text(const Json& report) {
    std::ostringstream os;
    emit(os, report, 0);
    return os.str();
}

std::string render(const Json& report, const std::string& format) {
    if (format == "json") return report.dump(2) + "\n";
    if (format == "text") return render_text(report);
    fail(ErrorKind::Config, "unknown format '" + format + "' (text, json)");
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::Config:
        case ErrorKind::Syntax:
        case ErrorKind::Precondition: return 2;
        case ErrorKind::Truncation: return 3;
        case ErrorKind::Inconsistency: return 4;
        case ErrorKind::FixtureMismatch: return 5;
        case ErrorKind::Unsupported: return 6;
    }
    return 1;
}

int report_exit_code(const Json& report) {
    if (report.value("command", "") == "tables" && report.value("status", "") != "ok") return 5;
    return 0;
}

}  // namespace adjalex::cli
