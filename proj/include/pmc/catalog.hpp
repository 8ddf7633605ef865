#pragma once

// Closed-form model surfaces in M^n(c) x R with known geometry. All families
// except perturbed_graph are homogeneous, so their expected values are
// constant over the chart.

#include "pmc/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pmc {

enum class Family {
    Slice,
    RoundSphere,
    CliffordTorus,
    MinimalCliffordTorus,
    Horosphere,
    VerticalCylinder,
    PerturbedGraph,
};

std::string_view to_string(Family f);
std::optional<Family> family_from_string(std::string_view name);

struct CatalogSpec {
    Family family = Family::Slice;
    double c = 1.0;
    int n = 3;
    /// Family parameters by key ("rho", "r", "eps"); missing keys take defaults.
    std::map<std::string, double> params;
};

struct ExpectedValues {
    std::optional<double> h_norm;
    std::optional<double> t_norm2;
    std::optional<double> phi_norm2;
    std::optional<double> gaussian_curvature;
    bool pmc = false;
    bool minimal = false;
};

struct CatalogSurface {
    Immersion immersion;
    ExpectedValues expected;
    /// Topology of the complete surface the chart belongs to.
    std::string topology;
    /// Completeness is part of the construction, not something the sampler can check.
    bool complete = true;
};

struct ParamSchema {
    std::string key;
    double default_value;
    std::string constraint;
};

struct CatalogEntry {
    Family family;
    std::vector<ParamSchema> params;
    std::string curvature_sign; // "any", "c>0", "c<0"
    int min_n;
    bool pmc;
    std::vector<std::string> witnesses;
    std::string notes;
};

CatalogSurface make_surface(const CatalogSpec& spec);
const std::vector<CatalogEntry>& list_catalog();

} // namespace pmc
