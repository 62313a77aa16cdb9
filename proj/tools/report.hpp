#pragma once

#include "sphorb/orbit.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace sphorb::cli {

inline constexpr const char* kSchemaId = "sphorb-report/1";

/// Bad input from the command line; maps to exit status 2.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    int n_lo = 4;
    int n_hi = 10;
    std::optional<int> k;
    std::optional<int> eps;
    std::uint64_t seed = 1;
    int rmax = 12;
    int samples = 20;
    unsigned jobs = 1;
    bool timing = false;
};

/// "8" or "6..10"; throws UsageError.
std::pair<int, int> parse_range(const std::string& text);

/// Catalog entries in range, filtered by -k and --epsilon.
std::vector<OrbitDescriptor> selected_orbits(const Options& opt);

struct CaseResult {
    std::tuple<int, int, int, int, std::string> order;  // n, k, −eps, sub-index, label
    std::string key;
    bool pass = false;
    nlohmann::ordered_json detail;  // counterexample payload on failure, summary otherwise
};

struct VerificationReport {
    std::string suite;
    Options options;
    std::vector<CaseResult> cases;  // sorted by order
    double seconds = 0;
    bool pass() const;
    std::size_t failures() const;
};

std::vector<std::string> suite_names();
/// Throws UsageError on an unknown suite.
VerificationReport run_suite(const std::string& suite, const Options& opt);

nlohmann::ordered_json to_json(const VerificationReport& r);
std::string render_text(const VerificationReport& r);

std::vector<std::string> table_names();
/// Throws UsageError on an unknown table.
std::string render_table(const std::string& name, const Options& opt, bool json);

std::string render_orbits(const Options& opt, bool json);
std::string render_stab(const Options& opt, bool json);

}  // namespace sphorb::cli
