#include <iostream>

#include "CLI11.hpp"
#include "adjalex_cli/pipeline.hpp"

using adjalex::cli::Json;
using adjalex::cli::JobConfig;

namespace {

struct Flags {
    std::string input;
    std::string family;
    std::vector<std::string> params;
    std::string k;
    int trunc = 0;
    long long seed = -1;
    std::string format = "text";
    bool parallel = false;
    std::string fixtures;
    long r = 0;
    std::string ell_mode;
    std::string germ;
    std::string f;
    long degree = 0;
    std::vector<std::string> types;
    std::vector<std::string> vectors;
};

void add_common(CLI::App* sub, Flags& fl) {
    sub->add_option("--input", fl.input, "JSON job file");
    sub->add_option("--k", fl.k, "k range: 7, 3..9, 3.. or ..5");
    sub->add_option("--trunc", fl.trunc, "truncation bound (default 40 or ADJALEX_TRUNC)")->check(CLI::PositiveNumber);
    sub->add_option("--seed", fl.seed, "seed for random generic combinations")->check(CLI::NonNegativeNumber);
    sub->add_option("--format", fl.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    sub->add_flag("--parallel", fl.parallel, "compute independent k concurrently");
}

void add_curve(CLI::App* sub, Flags& fl) {
    sub->add_option("--family", fl.family, "B9sq_B52_B21 or B292_B21_B52");
    sub->add_option("--param", fl.params, "family parameter key=value")->take_all();
    sub->add_option("--germ", fl.germ, "local germ in u, v");
    sub->add_option("--f", fl.f, "curve polynomial in x, y");
    sub->add_option("--degree", fl.degree, "curve degree (germ-only input)");
}

JobConfig build(const std::string& command, const Flags& fl) {
    JobConfig cfg;
    cfg.command = command;
    if (!fl.input.empty()) cfg.input = adjalex::cli::load_json_file(fl.input);
    adjalex::require(cfg.input.is_object(), adjalex::ErrorKind::Config, "the job file must hold a JSON object");
    Json& in = cfg.input;
    cfg.trunc = fl.trunc > 0 ? fl.trunc : static_cast<int>(in.value("trunc", adjalex::cli::default_trunc()));
    cfg.seed = fl.seed >= 0 ? static_cast<unsigned>(fl.seed) : in.value("seed", adjalex::cli::kDefaultSeed);
    cfg.format = fl.format;
    cfg.parallel = fl.parallel || in.value("parallel", false);
    std::string k = !fl.k.empty() ? fl.k : in.value("k", std::string());
    if (!k.empty()) cfg.k = adjalex::cli::parse_k_range(k);
    if (!fl.family.empty()) cfg.family = fl.family;
    for (const auto& p : fl.params) {
        auto eq = p.find('=');
        adjalex::require(eq != std::string::npos && eq > 0, adjalex::ErrorKind::Config,
                         "--param expects key=value, got '" + p + "'");
        cfg.params[p.substr(0, eq)] = p.substr(eq + 1);
    }
    if (!fl.germ.empty()) in["curve"] = Json{{"germ", fl.germ}};
    if (!fl.f.empty()) in["curve"] = Json{{"f", fl.f}};
    if (fl.degree > 0) in["degree"] = fl.degree;
    if (fl.r > 0) in["components"] = Json{{"mode", "asserted"}, {"r", fl.r}};
    if (!fl.ell_mode.empty()) in["ell_mode"] = fl.ell_mode;
    if (!fl.types.empty()) {
        Json recs = in.contains("records") ? in["records"] : Json::array();
        int i = 0;
        for (const auto& t : fl.types) recs.push_back({{"label", "P" + std::to_string(++i)}, {"type", t}});
        in["records"] = recs;
    }
    if (!fl.vectors.empty()) in["vectors"] = fl.vectors;
    if (!fl.fixtures.empty()) cfg.fixtures_path = fl.fixtures;
    return cfg;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"adjalex: Alexander polynomials of plane curves via adjunction ideals"};
    app.require_subcommand(1);
    Flags fl;

    auto* analyze = app.add_subcommand("analyze", "full pipeline: ideals, l-vector, Alexander polynomial");
    add_common(analyze, fl);
    add_curve(analyze, fl);
    analyze->add_option("--r", fl.r, "assert the number of irreducible components")->check(CLI::PositiveNumber);
    analyze->add_option("--ell-mode", fl.ell_mode, "auto, shortcut, matrix or asserted");

    auto* tables = app.add_subcommand("tables", "regenerate the local data tables and compare with the fixtures");
    add_common(tables, fl);
    tables->add_option("--fixtures", fl.fixtures, "fixture file replacing the embedded one")->group("");

    auto* pluecker = app.add_subcommand("pluecker", "genus feasibility of component splittings");
    add_common(pluecker, fl);
    pluecker->add_option("--degree", fl.degree, "curve degree");
    pluecker->add_option("--type", fl.types, "singularity type such as B29,2oB6,3 (repeatable)");

    auto* subdivide = app.add_subcommand("subdivide", "canonical regular subdivision of a fan");
    add_common(subdivide, fl);
    add_curve(subdivide, fl);
    subdivide->add_option("--vectors", fl.vectors, "fan vectors: E1 (1,2) (2,9) E2")->take_all();

    auto* ideal = app.add_subcommand("ideal", "adjunction ideals at one singular point");
    add_common(ideal, fl);
    add_curve(ideal, fl);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    std::string command = app.get_subcommands().front()->get_name();
    try {
        JobConfig cfg = build(command, fl);
        Json report = adjalex::cli::run(cfg);
        std::cout << adjalex::cli::render(report, cfg.format);
        return adjalex::cli::report_exit_code(report);
    } catch (const adjalex::Error& e) {
        std::cerr << "error (" << adjalex::to_string(e.kind()) << "): " << e.what() << "\n";
        return adjalex::cli::exit_code(e.kind());
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error (config): " << e.what() << "\n";
        return 2;
    }
}
