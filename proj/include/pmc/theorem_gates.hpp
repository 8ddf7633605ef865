#pragma once

// Hypothesis margins and conclusion matching for the classification theorems
// on a sampled surface. "sup over the surface" is a max over the sample grid.

#include "pmc/identities.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmc {

enum class Theorem {
    Sphere2, // pmc 2-spheres with a bound on |sigma|^2
    GapCneg, // c < 0 gap theorem
    GapCpos, // c > 0 gap theorem
    GapMain, // c > 0 gap theorem for |phi|^2 - c|T|^2
};

std::string_view to_string(Theorem t);
std::string_view cli_name(Theorem t);
std::optional<Theorem> theorem_from_cli_name(std::string_view name);
std::vector<Theorem> all_theorems();

enum class GateStatus { Pass, HypothesisViolated, NotApplicable, Fail, Error };
std::string_view to_string(GateStatus s);

/// Properties of the complete surface that sampling cannot establish.
struct GateAssumptions {
    std::string topology = "unknown";
    bool complete = true;
};

/// One way of reading the hypotheses (several only where the statement is ambiguous).
struct GateReading {
    std::string name;
    bool hypothesis_satisfied = false;
    std::string predicted_case;
};

struct GateReport {
    Theorem theorem = Theorem::GapMain;
    GridSpec grid;
    /// Named minimum-over-grid slacks; nonnegative means the inequality holds.
    std::vector<std::pair<std::string, double>> hypothesis_margins;
    bool hypothesis_satisfied = false;
    std::string predicted_case;
    std::vector<GateReading> readings;
    std::vector<std::pair<std::string, double>> observed;
    std::vector<std::pair<std::string, bool>> flags;
    GateAssumptions assumptions;
    GateStatus status = GateStatus::Pass;
    std::string reason;
};

struct GateOptions {
    /// pmc predicate tolerance, inequality slack and relative equality tolerance.
    double tol = 1e-7;
    int degree = Jet::kDefaultDegree;
    int threads = 0;
};

GateReport check_gate(Theorem theorem, const Immersion& im, const GridSpec& grid,
                      const GateAssumptions& assumptions = {}, const GateOptions& options = {});

} // namespace pmc
