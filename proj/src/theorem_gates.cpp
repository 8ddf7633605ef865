#include "pmc/theorem_gates.hpp"

#include "pmc/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

namespace pmc {

namespace {

struct TheoremInfo {
    Theorem theorem;
    std::string_view name;
    std::string_view cli;
};

constexpr std::array<TheoremInfo, 4> kTheorems{{
    {Theorem::Sphere2, "Sphere2", "sphere2"},
    {Theorem::GapCneg, "GapCneg", "gap-cneg"},
    {Theorem::GapCpos, "GapCpos", "gap-cpos"},
    {Theorem::GapMain, "GapMain", "gap-main"},
}};

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Sample {
    double phi2 = 0.0, T2 = 0.0, H2 = 0.0, sigma2 = 0.0, phiTTH = 0.0;
    double pmc = 0.0;
    bool minimal = false;
};

Sample sample(const GeometricState& s) {
    Sample out;
    out.phi2 = s.phi_norm2().value();
    out.T2 = s.t_norm2().value();
    out.H2 = s.mean_curvature_norm2().value();
    out.sigma2 = s.sigma_norm2().value();
    out.minimal = s.minimal();
    out.pmc = normal_connection_residual(s);
    const double T[2] = {s.t_component(0).value(), s.t_component(1).value()};
    double sTTH = 0.0;
    for (std::size_t a = 0; a < s.normal_dim(); ++a) {
        const Mat2& A = s.shape(a);
        double tt = 0.0;
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) tt += A[i][j].value() * T[i] * T[j];
        sTTH += tt * 0.5 * trace(A).value();
    }
    out.phiTTH = sTTH - out.T2 * out.H2;
    return out;
}

bool near(double a, double b, double tol) {
    return std::abs(a - b) <= tol * std::max({1.0, std::abs(a), std::abs(b)});
}

template <class F>
double min_over(const std::vector<Sample>& v, F f) {
    double m = kInf;
    for (const Sample& s : v) m = std::min(m, f(s));
    return m;
}

template <class F>
double max_over(const std::vector<Sample>& v, F f) {
    double m = -kInf;
    for (const Sample& s : v) m = std::max(m, f(s));
    return m;
}

template <class F>
bool all_of(const std::vector<Sample>& v, F f) {
    return std::all_of(v.begin(), v.end(), f);
}

GateReport stop(GateReport r, GateStatus status, std::string reason) {
    r.status = status;
    r.reason = std::move(reason);
    if (status == GateStatus::NotApplicable) r.predicted_case = "not applicable";
    else if (status == GateStatus::Fail || status == GateStatus::Error) r.predicted_case = "not evaluated";
    return r;
}

void set_from_readings(GateReport& r) {
    r.hypothesis_satisfied = false;
    r.predicted_case = "hypothesis violated";
    for (const GateReading& g : r.readings) {
        if (g.hypothesis_satisfied) {
            r.hypothesis_satisfied = true;
            r.predicted_case = g.predicted_case;
            break;
        }
    }
}

void sphere2(GateReport& r, const std::vector<Sample>& S, double c, double tol) {
    const double bound = min_over(S, [c](const Sample& s) { return c * (2.0 - 3.0 * s.T2) - s.sigma2; });
    const bool t_zero = all_of(S, [tol](const Sample& s) { return s.T2 <= tol; });
    const bool all_minimal = all_of(S, [](const Sample& s) { return s.minimal; });
    const bool umbilic = all_of(S, [tol](const Sample& s) { return near(s.phi2, 0.0, tol); });
    r.flags = {{"|T|=0", t_zero}, {"minimal", all_minimal}, {"|phi|^2=0", umbilic}};

    // Conclusion: a minimal surface in a totally umbilical hypersurface of M^n(c)
    // (xi normal), or a standard sphere in M^3(c).
    std::string conclusion;
    if (t_zero && all_minimal) conclusion = "minimal surface in a totally umbilical hypersurface of M^n(c)";
    else if (t_zero && umbilic) conclusion = "standard sphere in M^3(c)";
    else if (t_zero) conclusion = "minimal surface in a totally umbilical hypersurface of M^n(c) (unverified)";

    if (c > 0.0) {
        const double tmargin = min_over(S, [](const Sample& s) { return 2.0 / 3.0 - s.T2; });
        r.hypothesis_margins = {{"2/3-|T|^2", tmargin}, {"c(2-3|T|^2)-|sigma|^2", bound}};
        r.readings = {{"statement", tmargin >= -tol && bound >= -tol, conclusion}};
    } else {
        const double tmargin = min_over(S, [](const Sample& s) { return s.T2 - 2.0 / 3.0; });
        r.hypothesis_margins = {{"|T|^2-2/3", tmargin}, {"c(2-3|T|^2)-|sigma|^2", bound}};
        const bool both = all_of(S, [&](const Sample& s) {
            return (s.T2 <= tol || s.T2 >= 2.0 / 3.0 - tol) && c * (2.0 - 3.0 * s.T2) - s.sigma2 >= -tol;
        });
        const bool second = all_of(S, [&](const Sample& s) {
            return s.T2 <= tol || (s.T2 >= 2.0 / 3.0 - tol && c * (2.0 - 3.0 * s.T2) - s.sigma2 >= -tol);
        });
        r.readings = {{"bound on both alternatives", both, conclusion},
                      {"bound on the second alternative only", second, conclusion}};
    }
    for (GateReading& g : r.readings)
        if (!g.hypothesis_satisfied) g.predicted_case = "hypothesis violated";
    set_from_readings(r);
    if (r.hypothesis_satisfied && conclusion.empty()) {
        r.status = GateStatus::Fail;
        r.reason = "conclusion mismatch: xi is not normal to the surface";
    }
}

void gap(GateReport& r, const std::vector<Sample>& S, Theorem th, double c, double tol) {
    const bool t_zero = all_of(S, [tol](const Sample& s) { return s.T2 <= tol; });
    const bool case1 = all_of(S, [tol](const Sample& s) { return near(s.phi2, 0.0, tol); });
    const bool case2 =
        all_of(S, [c, tol](const Sample& s) { return near(s.phi2, 2.0 * s.H2 + 2.0 * c, tol); });
    r.flags = {{"|T|=0", t_zero}, {"case1:|phi|^2=0", case1}, {"case2:|phi|^2=2|H|^2+2c", case2}};

    bool hyp = false;
    switch (th) {
    case Theorem::GapCneg: {
        const double bound = min_over(S, [c](const Sample& s) { return 2.0 * s.H2 + c * (4.0 - 5.0 * s.T2); });
        const double sup_phi = max_over(S, [](const Sample& s) { return s.phi2; });
        const double m1 = bound - sup_phi;
        const double m2 = min_over(S, [](const Sample& s) { return s.phiTTH; });
        r.hypothesis_margins = {{"inf(2|H|^2+c(4-5|T|^2))-sup|phi|^2", m1}, {"<phi(T,T),H>", m2}};
        hyp = m1 > tol && m2 >= -tol;
        break;
    }
    case Theorem::GapCpos: {
        const double m1 = min_over(S, [c](const Sample& s) { return 2.0 * s.H2 + c * (2.0 - 3.0 * s.T2) - s.phi2; });
        const double m2 = min_over(S, [](const Sample& s) { return -s.phiTTH; });
        r.hypothesis_margins = {{"2|H|^2+c(2-3|T|^2)-|phi|^2", m1}, {"-<phi(T,T),H>", m2}};
        hyp = m1 >= -tol && m2 >= -tol;
        break;
    }
    case Theorem::GapMain: {
        const double m1 =
            min_over(S, [c](const Sample& s) { return 2.0 * s.H2 + 2.0 * c - 2.5 * c * s.T2 - s.phi2; });
        const double mt = min_over(S, [](const Sample& s) { return s.T2 - 2.0 / 3.0; });
        const double mh = min_over(S, [c](const Sample& s) {
            return (3.0 * s.T2 - 2.0) * s.H2 - c * s.T2 * (1.0 - s.T2);
        });
        r.hypothesis_margins = {{"2|H|^2+2c-(5c/2)|T|^2-|phi|^2", m1},
                                {"|T|^2-2/3", mt},
                                {"(3|T|^2-2)|H|^2-c|T|^2(1-|T|^2)", mh}};
        const bool iib = mt > 0.0 && mh >= -tol;
        r.flags.emplace_back("ii-a", t_zero);
        r.flags.emplace_back("ii-b", iib);
        hyp = m1 >= -tol && (t_zero || iib);
        break;
    }
    case Theorem::Sphere2: break;
    }

    std::string predicted = "hypothesis violated";
    if (hyp) {
        if (case1) predicted = "case (1): round sphere in M^3(c)";
        else if (case2 && th != Theorem::GapCneg) predicted = "case (2): torus S^1(r) x S^1(sqrt(1/c - r^2)) in M^3(c)";
        else predicted.clear();
    }
    r.readings = {{"statement", hyp, predicted.empty() ? "conclusion mismatch" : predicted}};
    set_from_readings(r);
    if (hyp && predicted.empty()) {
        r.status = GateStatus::Fail;
        r.reason = "conclusion mismatch: no conclusion case matches the sampled |phi|^2";
    } else if (hyp && th != Theorem::GapCneg && !t_zero) {
        r.status = GateStatus::Fail;
        r.reason = "conclusion mismatch: xi is not normal to the surface";
    }
}

} // namespace

std::string_view to_string(Theorem t) {
    for (const auto& e : kTheorems)
        if (e.theorem == t) return e.name;
    return "?";
}

std::string_view cli_name(Theorem t) {
    for (const auto& e : kTheorems)
        if (e.theorem == t) return e.cli;
    return "?";
}

std::optional<Theorem> theorem_from_cli_name(std::string_view name) {
    for (const auto& e : kTheorems)
        if (e.cli == name || e.name == name) return e.theorem;
    return std::nullopt;
}

std::vector<Theorem> all_theorems() {
    return {Theorem::Sphere2, Theorem::GapCneg, Theorem::GapCpos, Theorem::GapMain};
}

std::string_view to_string(GateStatus s) {
    switch (s) {
    case GateStatus::Pass: return "pass";
    case GateStatus::HypothesisViolated: return "hypothesis_violated";
    case GateStatus::NotApplicable: return "not_applicable";
    case GateStatus::Fail: return "fail";
    case GateStatus::Error: return "error";
    }
    return "?";
}

GateReport check_gate(Theorem theorem, const Immersion& im, const GridSpec& grid,
                      const GateAssumptions& assumptions, const GateOptions& options) {
    GateReport r;
    r.theorem = theorem;
    r.grid = grid;
    r.assumptions = assumptions;
    const double c = im.space.c();
    const double tol = options.tol;

    switch (theorem) {
    case Theorem::Sphere2:
        if (c == 0.0) return stop(r, GateStatus::NotApplicable, "wrong sign of c: needs c != 0");
        if (assumptions.topology != "sphere") return stop(r, GateStatus::NotApplicable, "needs a 2-sphere");
        break;
    case Theorem::GapCneg:
        if (!(c < 0.0)) return stop(r, GateStatus::NotApplicable, "wrong sign of c: needs c < 0");
        break;
    case Theorem::GapCpos:
    case Theorem::GapMain:
        if (!(c > 0.0)) return stop(r, GateStatus::NotApplicable, "wrong sign of c: needs c > 0");
        break;
    }
    if (theorem != Theorem::Sphere2 && im.space.n() != 3) return stop(r, GateStatus::NotApplicable, "needs n = 3");
    if (!assumptions.complete) return stop(r, GateStatus::NotApplicable, "needs a complete surface");

    const std::vector<ChartPoint> points = grid_points(im.domain, grid);
    std::vector<Sample> S(points.size());
    try {
        parallel_for(points.size(), options.threads > 0 ? options.threads : default_thread_count(),
                     [&](std::size_t i) { S[i] = sample(evaluate_state(im, points[i], options.degree)); });
    } catch (const Error& e) {
        return stop(r, GateStatus::Error, std::string(to_string(e.kind())) + ": " + e.what());
    }

    const double pmc = max_over(S, [](const Sample& s) { return s.pmc; });
    r.observed = {
        {"max pmc residual", pmc},
        {"sup|phi|^2", max_over(S, [](const Sample& s) { return s.phi2; })},
        {"inf|phi|^2", min_over(S, [](const Sample& s) { return s.phi2; })},
        {"sup|T|^2", max_over(S, [](const Sample& s) { return s.T2; })},
        {"inf|T|^2", min_over(S, [](const Sample& s) { return s.T2; })},
        {"sup|H|^2", max_over(S, [](const Sample& s) { return s.H2; })},
        {"inf|H|^2", min_over(S, [](const Sample& s) { return s.H2; })},
        {"sup|sigma|^2", max_over(S, [](const Sample& s) { return s.sigma2; })},
        {"max|phi|^2-(2|H|^2+2c)", max_over(S, [c](const Sample& s) { return s.phi2 - 2.0 * s.H2 - 2.0 * c; })},
    };
    if (!(pmc <= tol)) return stop(r, GateStatus::Fail, "pmc residual exceeded");
    if (theorem != Theorem::Sphere2 && std::any_of(S.begin(), S.end(), [](const Sample& s) { return s.minimal; })) {
        return stop(r, GateStatus::NotApplicable, "minimal");
    }

    if (theorem == Theorem::Sphere2) sphere2(r, S, c, tol);
    else gap(r, S, theorem, c, tol);
    if (r.status == GateStatus::Pass && !r.hypothesis_satisfied) r.status = GateStatus::HypothesisViolated;
    return r;
}

} // namespace pmc
