#include "doctest.h"

#include "adjalex_cli/pipeline.hpp"

using namespace adjalex;
using namespace adjalex::cli;

namespace {

JobConfig job(const std::string& cmd, Json input) {
    JobConfig cfg;
    cfg.command = cmd;
    cfg.input = std::move(input);
    return cfg;
}

}  // namespace

TEST_CASE("k ranges") {
    KRange a = parse_k_range("7");
    CHECK(a.contains(7, 10));
    CHECK_FALSE(a.contains(6, 10));
    KRange b = parse_k_range("3..9");
    CHECK(b.contains(3, 10));
    CHECK(b.contains(9, 10));
    CHECK_FALSE(b.contains(2, 10));
    KRange c = parse_k_range("3..");
    CHECK(c.contains(9, 10));
    CHECK_FALSE(c.contains(10, 10));
    KRange d = parse_k_range("..5");
    CHECK(d.contains(1, 10));
    CHECK_FALSE(d.contains(6, 10));
    CHECK_THROWS_AS(parse_k_range("x"), Error);
    CHECK_THROWS_AS(parse_k_range("5..3"), Error);
}

TEST_CASE("exit codes") {
    CHECK(exit_code(ErrorKind::Config) == 2);
    CHECK(exit_code(ErrorKind::Syntax) == 2);
    CHECK(exit_code(ErrorKind::Precondition) == 2);
    CHECK(exit_code(ErrorKind::Truncation) == 3);
    CHECK(exit_code(ErrorKind::Inconsistency) == 4);
    CHECK(exit_code(ErrorKind::FixtureMismatch) == 5);
    CHECK(exit_code(ErrorKind::Unsupported) == 6);
    CHECK(report_exit_code(Json{{"command", "tables"}, {"status", "mismatch"}}) == 5);
    CHECK(report_exit_code(Json{{"command", "tables"}, {"status", "ok"}}) == 0);
}

TEST_CASE("pluecker job") {
    Json r = run(job("pluecker", Json{{"degree", 10}, {"records", Json::array({Json{{"type", "B29,2oB6,3"}}})}}));
    CHECK(r["splittings"]["survivors"] == Json::array({"{10}", "{9,1}"}));
    CHECK(r["splittings"]["partitions"].size() == 42);
    CHECK(r["euler_irreducible"][0]["chi"] == -6);
    CHECK_THROWS_AS(run(job("pluecker", Json::object())), Error);
}

TEST_CASE("subdivide job") {
    Json r = run(job("subdivide", Json{{"vectors", Json::array({"E1", "(2,5)", "E2"})}}));
    CHECK(r["fan"] == Json::array({"(1,0)", "(1,1)", "(1,2)", "(2,5)", "(1,3)", "(0,1)"}));
    CHECK(r["inserted"] == Json::array({"(1,1)", "(1,2)", "(1,3)"}));
    Json g = run(job("subdivide", Json{{"curve", {{"germ", "u^20+v^5"}}}}));
    CHECK(g["fan"].size() == 6);
}

TEST_CASE("tables job with a k filter") {
    JobConfig cfg = job("tables", Json::object());
    cfg.k = parse_k_range("5");
    Json r = run(cfg);
    CHECK(r["status"] == "ok");
    CHECK(r["tables"][0]["rows"].size() == 1);
}

TEST_CASE("analyze report is deterministic under parallel evaluation") {
    Json in{{"curve", {{"family", "B9sq_B52_B21"}}}, {"components", 1}};
    JobConfig a = job("analyze", in);
    JobConfig b = a;
    b.parallel = true;
    Json ra = run(a), rb = run(b);
    CHECK(ra.dump() == rb.dump());
    CHECK(ra["alexander"]["factored"] == "(Φ10)");
    CHECK(render(ra, "json") == render(rb, "json"));
}

TEST_CASE("unknown component count reports only the reduced polynomial") {
    std::string f = "(y+x^2+y^2)*(y+x^2+2*y^2)*(y+x^2+3*y^2)*(y+x^2+4*y^2)*(y+x^2+5*y^2)";
    Json r = run(job("analyze", Json{{"curve", {{"f", f}}}}));
    CHECK(r["alexander"]["full"].is_null());
    CHECK(r["alexander"]["factored"] == "(t+1)^4 (Φ10)^4 (Φ5)^3");
    CHECK(r["alexander"]["reduced_coefficients"].size() == 33);
    CHECK(r["components"]["r"].is_null());
}

TEST_CASE("smooth curves have no singular points") {
    Json r = run(job("analyze", Json{{"curve", {{"f", "y"}}}}));
    CHECK(r["points"].empty());
    CHECK(r["alexander"]["reduced"] == "1");
}

TEST_CASE("ideal job on a degenerate germ") {
    JobConfig cfg = job("ideal", Json{{"curve", {{"family", "B9sq_B52_B21"}}}});
    cfg.k = parse_k_range("8..9");
    Json r = run(cfg);
    REQUIRE(r["ideals"].size() == 2);
    CHECK(r["ideals"][0]["rho"] == 21);
    CHECK(r["ideals"][1]["rho"] == 29);
    CHECK(r["ideals"][1]["staircase_rho"].is_null());
    CHECK(r["ideals"][1]["extra_generators"][0]["name"] == "r2^(4,0)");
}

TEST_CASE("text rendering") {
    std::string t = render_text(Json{{"command", "x"}, {"list", Json::array({1, 2})}, {"obj", {{"a", true}}}});
    CHECK(t.find("command: x") != std::string::npos);
    CHECK(t.find("a: true") != std::string::npos);
    CHECK_THROWS_AS(render(Json::object(), "xml"), Error);
}

TEST_CASE("configuration errors") {
    CHECK_THROWS_AS(run(job("nope", Json::object())), Error);
    CHECK_THROWS_AS(run(job("analyze", Json{{"curve", {{"family", "unknown"}}}})), Error);
    CHECK_THROWS_AS(run(job("analyze", Json{{"curve", {{"f", "y+"}}}})), Error);
}
