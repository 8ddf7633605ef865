#pragma once

// Pointwise evaluation of the Gauss/Codazzi/Ricci equations and the
// Simons-type Laplacian formulas for surfaces in M^n(c) x R.
//
// Each evaluation produces the left side, the right side, a named breakdown
// of the right side and a scale-normalized residual
//     |lhs - rhs| / (1 + sum |terms|).
// Identities carry hypotheses (pmc, nonminimal, n = 3, a parallel normal
// field); when they fail the report is marked not applicable instead of
// producing a residual.

#include "pmc/surface.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmc {

enum class IdentityKind {
    GaussEq,
    Codazzi,
    RicciCommute,
    NormalCurvature,
    SimonsAV,
    SimonsPhiH,
    SimonsPhi4,
    SimonsPhi,
    LaplacianT,
    DeltaSum,
    PhiTNorm,
    SchwarzBound,
};

std::string_view to_string(IdentityKind kind);
/// CLI spelling, e.g. "simons-phi-h".
std::string_view cli_name(IdentityKind kind);
std::optional<IdentityKind> identity_from_cli_name(std::string_view name);
/// Whether the identity is specialized to a normal field V.
bool takes_normal_field(IdentityKind kind);

struct IdentitySpec {
    IdentityKind kind = IdentityKind::GaussEq;
    /// Only meaningful for Codazzi, RicciCommute and SimonsAV.
    NormalField field = NormalField::H;

    std::string label() const;
};

/// Every identity, in declaration order, with Codazzi and SimonsAV expanded
/// over V = H and V = E4.
std::vector<IdentitySpec> all_identities();

enum class ReportStatus { Pass, Fail, NotApplicable, Error };
std::string_view to_string(ReportStatus s);

struct IdentityReport {
    IdentitySpec spec;
    ChartPoint point;
    double lhs = 0.0;
    double rhs = 0.0;
    std::vector<std::pair<std::string, double>> terms;
    double residual = 0.0;
    bool applicable = true;
    std::string reason;
    /// Auxiliary quantities (e.g. the gap between two printed forms).
    std::vector<std::pair<std::string, double>> checks;
    ReportStatus status = ReportStatus::Pass;

    double terms_sum() const;
};

struct IdentityOptions {
    /// Pass threshold on the residual, and the tolerance of the pmc /
    /// parallel-field / constant-trace predicates.
    double tol = 1e-7;
};

IdentityReport evaluate_identity(const IdentitySpec& spec, const GeometricState& state,
                                 const IdentityOptions& options = {});
IdentityReport evaluate_identity(const IdentitySpec& spec, const Immersion& im, ChartPoint point,
                                 const IdentityOptions& options = {}, int degree = Jet::kDefaultDegree);

struct GridSpec {
    int nu = 8;
    int nv = 8;
};

/// Cell-centred sample points, row-major (u outer, v inner).
std::vector<ChartPoint> grid_points(const ChartDomain& domain, const GridSpec& grid);

struct IdentitySummary {
    IdentitySpec spec;
    double max_residual = 0.0;
    int evaluated = 0;
    int not_applicable = 0;
    int failed = 0;
    int errors = 0;
    std::string first_reason;
    bool pass() const { return failed == 0 && errors == 0; }
};

struct SuiteResult {
    std::vector<IdentityReport> reports;
    std::vector<IdentitySummary> summary;
    bool pass() const;
    bool has_errors() const;
};

SuiteResult run_suite(const Immersion& im, const GridSpec& grid, const std::vector<IdentitySpec>& specs,
                      const IdentityOptions& options = {}, int degree = Jet::kDefaultDegree,
                      int threads = 0);

} // namespace pmc
