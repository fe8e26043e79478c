#pragma once

#include <map>
#include <optional>
#include <string>

#include "adjalex/error.hpp"
#include "json.hpp"

namespace adjalex::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kDefaultTrunc = 40;
inline constexpr unsigned kDefaultSeed = 20240229u;

struct KRange {
    long lo = 1;
    long hi = -1;  // -1: up to d - 1
    bool contains(long k, long d) const { return k >= lo && k <= (hi < 0 ? d - 1 : hi); }
};

KRange parse_k_range(const std::string& text);

struct JobConfig {
    std::string command;
    Json input = Json::object();  // the --input document, possibly amended by flags
    std::optional<std::string> family;
    std::map<std::string, std::string> params;
    KRange k;
    int trunc = kDefaultTrunc;
    unsigned seed = kDefaultSeed;
    std::string format = "text";
    bool parallel = false;
    std::optional<std::string> fixtures_path;
};

// ADJALEX_TRUNC when set, else the default
int default_trunc();

Json cmd_analyze(const JobConfig& cfg);
Json cmd_tables(const JobConfig& cfg);
Json cmd_pluecker(const JobConfig& cfg);
Json cmd_subdivide(const JobConfig& cfg);
Json cmd_ideal(const JobConfig& cfg);

Json run(const JobConfig& cfg);

const Json& embedded_fixtures();
Json load_json_file(const std::string& path);

std::string render(const Json& report, const std::string& format);
std::string render_text(const Json& report);

int exit_code(ErrorKind kind);
// 0, or the code implied by a report (fixture mismatch in tables mode)
int report_exit_code(const Json& report);

}  // namespace adjalex::cli
