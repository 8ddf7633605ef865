#pragma once

// Command-line front end: `pmc-verify verify|gate|catalog`.
//
// Exit codes: 0 all applicable checks pass, 1 usage error, 2 verification
// failure, 3 internal numeric error.

#include "pmc/catalog.hpp"
#include "pmc/identities.hpp"
#include "pmc/theorem_gates.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace pmc {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitVerification = 2;
inline constexpr int kExitNumeric = 3;

enum class OutputFormat { Json, Csv, Text };

struct RunConfig {
    std::string command; // verify, gate, catalog
    CatalogSpec surface;
    GridSpec grid;
    int degree = Jet::kDefaultDegree;
    double tol = 1e-7;
    std::vector<IdentitySpec> identities;
    std::vector<Theorem> theorems;
    OutputFormat format = OutputFormat::Json;
    std::string output; // empty: standard output
    int threads = 0;    // 0: PMC_VERIFY_THREADS or hardware concurrency
    /// Set when --help was requested; holds the help text.
    std::string help;
};

/// Throws Error(UsageError) with a message naming the offending flag.
RunConfig parse_args(const std::vector<std::string>& args);

struct RunResult {
    int exit_code = kExitOk;
    std::string report;
};

RunResult execute(const RunConfig& config);

/// Parses, executes and writes the report. Returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

std::string tool_version();
/// Tool version plus a hash of the canonical config; stable across runs.
std::string config_fingerprint(const RunConfig& config);

} // namespace pmc
