#pragma once

// Serialization of suite and gate results. JSON keys keep insertion order and
// floats are printed with 17 significant digits, so identical runs produce
// identical bytes.

#include "pmc/cli.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pmc {

struct RunOutput {
    const RunConfig* config = nullptr;
    std::optional<SuiteResult> suite;
    std::vector<GateReport> gates;
    bool catalog = false;
    int exit_code = kExitOk;
};

std::string render_json(const RunOutput& out);
std::string render_csv(const RunOutput& out);
std::string render_text(const RunOutput& out);
std::string render(const RunOutput& out);

/// %.17g, with non-finite values as "null".
std::string format_double(double v);

/// Compact JSON of the config fields that affect results (no output path,
/// no thread count).
std::string canonical_config(const RunConfig& config);

std::string identity_summary_status(const IdentitySummary& s);

} // namespace pmc
