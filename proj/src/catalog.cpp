#include "pmc/catalog.hpp"

#include <cmath>
#include <numbers>

namespace pmc {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPoleMargin = 0.1;

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyName, 7> kNames{{
    {Family::Slice, "slice"},
    {Family::RoundSphere, "round_sphere"},
    {Family::CliffordTorus, "clifford_torus"},
    {Family::MinimalCliffordTorus, "minimal_clifford_torus"},
    {Family::Horosphere, "horosphere"},
    {Family::VerticalCylinder, "vertical_cylinder"},
    {Family::PerturbedGraph, "perturbed_graph"},
}};

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorKind::BadParameters, what); }

const CatalogEntry& entry_for(Family f) {
    for (const CatalogEntry& e : list_catalog())
        if (e.family == f) return e;
    bad("unknown family");
}

double param(const CatalogSpec& spec, const std::string& key) {
    const CatalogEntry& entry = entry_for(spec.family);
    for (const ParamSchema& p : entry.params) {
        if (p.key != key) continue;
        auto it = spec.params.find(key);
        return it == spec.params.end() ? p.default_value : it->second;
    }
    bad("family " + std::string(to_string(spec.family)) + " has no parameter '" + key + "'");
}

// Point of the space form at geodesic distance rho from the base point along
// the unit direction (d1, d2, d3) given as jets, embedded in coordinates 0..3.
// For c = 0 the base point is the origin of R^n.
JetVec geodesic_sphere_point(double c, double rho, const Jet& d1, const Jet& d2, const Jet& d3,
                             std::size_t dim) {
    const int deg = d1.degree();
    JetVec x(dim, Jet(deg));
    if (c == 0.0) {
        x[0] = d1 * rho;
        x[1] = d2 * rho;
        x[2] = d3 * rho;
        return x;
    }
    const double a = std::sqrt(std::abs(c));
    const double R = 1.0 / a;
    const double radial = c > 0.0 ? std::cos(a * rho) : std::cosh(a * rho);
    const double lateral = c > 0.0 ? std::sin(a * rho) : std::sinh(a * rho);
    x[0] = Jet(deg, R * radial);
    x[1] = d1 * (R * lateral);
    x[2] = d2 * (R * lateral);
    x[3] = d3 * (R * lateral);
    return x;
}

// Curvature of a geodesic circle/sphere of radius rho in M(c): the cot-like function.
double geodesic_curvature(double c, double rho) {
    if (c == 0.0) return 1.0 / rho;
    const double a = std::sqrt(std::abs(c));
    return c > 0.0 ? a / std::tan(a * rho) : a / std::tanh(a * rho);
}

void check_rho(double c, double rho) {
    if (!(rho > 0.0)) bad("rho out of domain: need rho > 0");
    if (c > 0.0 && !(rho < kPi / std::sqrt(c))) bad("rho out of domain: need rho < pi/sqrt(c)");
}

// Totally geodesic M^2(c) in coordinates 0..2 (0..1 when c = 0).
JetVec slice_point(double c, const Jet& u, const Jet& v, std::size_t dim) {
    const int deg = u.degree();
    JetVec x(dim, Jet(deg));
    if (c == 0.0) {
        x[0] = u;
        x[1] = v;
        return x;
    }
    const double R = 1.0 / std::sqrt(std::abs(c));
    if (c > 0.0) {
        const Jet cu = cos(u);
        x[0] = cu * cos(v) * R;
        x[1] = cu * sin(v) * R;
        x[2] = sin(u) * R;
    } else {
        const Jet chu = cosh(u);
        x[0] = chu * cosh(v) * R;
        x[1] = sinh(u) * R;
        x[2] = chu * sinh(v) * R;
    }
    return x;
}

ChartDomain slice_domain(double c) {
    if (c > 0.0) return {-kPi / 2 + kPoleMargin, kPi / 2 - kPoleMargin, 0.0, 2 * kPi};
    return {-1.0, 1.0, -1.0, 1.0};
}

} // namespace

std::string_view to_string(Family f) {
    for (const auto& [fam, name] : kNames)
        if (fam == f) return name;
    return "?";
}

std::optional<Family> family_from_string(std::string_view name) {
    for (const auto& [fam, n] : kNames)
        if (n == name) return fam;
    return std::nullopt;
}

const std::vector<CatalogEntry>& list_catalog() {
    static const std::vector<CatalogEntry> entries{
        {Family::Slice, {}, "any", 2, true, {}, "totally geodesic M^2(c) x {0}; minimal, so every nonminimal identity and theorem is not applicable"},
        {Family::RoundSphere, {{"rho", kPi / 3, "0 < rho (< pi/sqrt(c) if c > 0)"}}, "any", 3, true,
         {"sphere2", "gap-cneg", "gap-cpos", "gap-main"},
         "geodesic sphere of radius rho in M^3(c) x {0}; conclusion case (1) of the gap theorems"},
        {Family::CliffordTorus, {{"r", 0.6, "0 < r < 1/sqrt(c); r^2 != 1/(2c) for nonminimal"}}, "c>0", 3, true,
         {"gap-cpos", "gap-main"},
         "S^1(r) x S^1(sqrt(1/c - r^2)) in M^3(c) x {0}; conclusion case (2), equality in the gap hypothesis"},
        {Family::MinimalCliffordTorus, {}, "c>0", 3, true, {"simons-av"},
         "r^2 = 1/(2c); minimal, E4 parallel with trace A_E4 = 0"},
        {Family::Horosphere, {}, "c<0", 3, true, {"gap-cneg"},
         "flat totally umbilical surface with |H|^2 = -c; excluded by the c < 0 gap hypothesis"},
        {Family::VerticalCylinder, {{"rho", kPi / 3, "0 < rho (< pi/sqrt(c) if c > 0); rho != pi/(2 sqrt(c)) for nonminimal"}},
         "any", 2, true, {"laplacian-t"},
         "geodesic circle of radius rho in M^2(c), times R; xi is tangent"},
        {Family::PerturbedGraph, {{"eps", 0.1, "amplitude of t = eps sin(2u) cos(v)"}}, "any", 2, false, {},
         "graph over the slice; not pmc for eps != 0 (negative control)"},
    };
    return entries;
}

CatalogSurface make_surface(const CatalogSpec& spec) {
    const CatalogEntry& entry = entry_for(spec.family);
    for (const auto& [key, value] : spec.params) {
        (void)param(spec, key); // rejects unknown keys
        if (!std::isfinite(value)) bad("parameter '" + key + "' must be finite");
    }
    const double c = spec.c;
    if (!std::isfinite(c)) bad("c must be finite");
    if (entry.curvature_sign == "c>0" && !(c > 0.0)) bad(std::string(to_string(spec.family)) + " needs c > 0");
    if (entry.curvature_sign == "c<0" && !(c < 0.0)) bad(std::string(to_string(spec.family)) + " needs c < 0");
    if (spec.n < entry.min_n) {
        bad(std::string(to_string(spec.family)) + " needs n >= " + std::to_string(entry.min_n));
    }

    const ProductSpace space(c, spec.n);
    const std::size_t dim = space.ambient_dim();
    const std::size_t t = space.line_index();
    CatalogSurface out{Immersion{space, {}, {}, std::string(to_string(spec.family)), {}}, {}, "sphere", true};
    Immersion& im = out.immersion;
    ExpectedValues& ev = out.expected;
    im.params["c"] = c;
    im.params["n"] = spec.n;

    switch (spec.family) {
    case Family::Slice: {
        im.domain = slice_domain(c);
        im.eval = [c, dim](const Jet& u, const Jet& v) { return slice_point(c, u, v, dim); };
        ev = {0.0, 0.0, 0.0, c, true, true};
        out.topology = c > 0.0 ? "sphere" : "plane";
        break;
    }
    case Family::RoundSphere: {
        const double rho = param(spec, "rho");
        check_rho(c, rho);
        im.params["rho"] = rho;
        im.domain = {-kPi / 2 + kPoleMargin, kPi / 2 - kPoleMargin, 0.0, 2 * kPi};
        im.eval = [c, rho, dim](const Jet& u, const Jet& v) {
            const Jet cu = cos(u);
            return geodesic_sphere_point(c, rho, cu * cos(v), cu * sin(v), sin(u), dim);
        };
        const double k = geodesic_curvature(c, rho);
        ev = {std::abs(k), 0.0, 0.0, c + k * k, true, std::abs(k) < 1e-10};
        out.topology = "sphere";
        break;
    }
    case Family::CliffordTorus:
    case Family::MinimalCliffordTorus: {
        const double r = spec.family == Family::CliffordTorus ? param(spec, "r") : std::sqrt(0.5 / c);
        if (!(r > 0.0 && r * r < 1.0 / c)) bad("r out of domain: need 0 < r < 1/sqrt(c)");
        const double s = std::sqrt(1.0 / c - r * r);
        im.params["r"] = r;
        im.domain = {0.0, 2 * kPi, 0.0, 2 * kPi};
        im.eval = [r, s, dim](const Jet& u, const Jet& v) {
            JetVec x(dim, Jet(u.degree()));
            x[0] = cos(u) * r;
            x[1] = sin(u) * r;
            x[2] = cos(v) * s;
            x[3] = sin(v) * s;
            return x;
        };
        const double a = std::sqrt(c);
        const double h = 0.5 * std::abs(a * s / r - a * r / s);
        const bool minimal = std::abs(r * r * 2.0 * c - 1.0) < 1e-12;
        ev = {minimal ? 0.0 : h, 0.0, 1.0 / (2.0 * c * r * r * s * s), 0.0, true, minimal};
        out.topology = "torus";
        break;
    }
    case Family::Horosphere: {
        const double R = 1.0 / std::sqrt(-c);
        im.domain = {-1.0, 1.0, -1.0, 1.0};
        im.eval = [R, dim](const Jet& u, const Jet& v) {
            JetVec x(dim, Jet(u.degree()));
            const Jet q = (u * u + v * v) * 0.5;
            x[0] = (q + 1.0) * R;
            x[1] = u * R;
            x[2] = v * R;
            x[3] = q * R;
            return x;
        };
        ev = {std::sqrt(-c), 0.0, 0.0, 0.0, true, false};
        out.topology = "plane";
        break;
    }
    case Family::VerticalCylinder: {
        const double rho = param(spec, "rho");
        check_rho(c, rho);
        im.params["rho"] = rho;
        im.domain = {0.0, 2 * kPi, -1.0, 1.0};
        im.eval = [c, rho, dim, t](const Jet& u, const Jet& v) {
            JetVec x(dim, Jet(u.degree()));
            if (c == 0.0) {
                x[0] = cos(u) * rho;
                x[1] = sin(u) * rho;
            } else {
                const double a = std::sqrt(std::abs(c));
                const double R = 1.0 / a;
                const double radial = c > 0.0 ? std::cos(a * rho) : std::cosh(a * rho);
                const double lateral = c > 0.0 ? std::sin(a * rho) : std::sinh(a * rho);
                x[0] = Jet(u.degree(), R * radial);
                x[1] = cos(u) * (R * lateral);
                x[2] = sin(u) * (R * lateral);
            }
            x[t] = v;
            return x;
        };
        const double k = geodesic_curvature(c, rho);
        ev = {0.5 * std::abs(k), 1.0, 0.5 * k * k, 0.0, true, std::abs(k) < 1e-10};
        out.topology = "cylinder";
        break;
    }
    case Family::PerturbedGraph: {
        const double eps = param(spec, "eps");
        im.params["eps"] = eps;
        im.domain = slice_domain(c);
        im.eval = [c, eps, dim, t](const Jet& u, const Jet& v) {
            JetVec x = slice_point(c, u, v, dim);
            x[t] = sin(u * 2.0) * cos(v) * eps;
            return x;
        };
        ev = {};
        ev.pmc = eps == 0.0;
        out.topology = c > 0.0 ? "sphere" : "plane";
        break;
    }
    }
    return out;
}

} // namespace pmc
