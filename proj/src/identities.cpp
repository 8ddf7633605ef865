#include "pmc/identities.hpp"

#include "pmc/parallel.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace pmc {

namespace {

struct KindInfo {
    IdentityKind kind;
    std::string_view name;
    std::string_view cli;
};

constexpr std::array<KindInfo, 12> kKinds{{
    {IdentityKind::GaussEq, "GaussEq", "gauss"},
    {IdentityKind::Codazzi, "Codazzi", "codazzi"},
    {IdentityKind::RicciCommute, "RicciCommute", "ricci-commute"},
    {IdentityKind::NormalCurvature, "NormalCurvature", "normal-curvature"},
    {IdentityKind::SimonsAV, "SimonsAV", "simons-av"},
    {IdentityKind::SimonsPhiH, "SimonsPhiH", "simons-phi-h"},
    {IdentityKind::SimonsPhi4, "SimonsPhi4", "simons-phi-4"},
    {IdentityKind::SimonsPhi, "SimonsPhi", "simons-phi"},
    {IdentityKind::LaplacianT, "LaplacianT", "laplacian-t"},
    {IdentityKind::DeltaSum, "DeltaSum", "delta-sum"},
    {IdentityKind::PhiTNorm, "PhiTNorm", "phi-t-norm"},
    {IdentityKind::SchwarzBound, "SchwarzBound", "schwarz-bound"},
}};

using M2 = std::array<std::array<double, 2>, 2>;

M2 val(const Mat2& a) {
    M2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][j].value();
    return out;
}

M2 mul(const M2& a, const M2& b) {
    M2 out{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

double tr(const M2& a) { return a[0][0] + a[1][1]; }

double dot(const M2& a, const M2& b) {
    return a[0][0] * b[0][0] + a[0][1] * b[0][1] + a[1][0] * b[1][0] + a[1][1] * b[1][1];
}

M2 lin(double s, const M2& a, double t, const M2& b) {
    M2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = s * a[i][j] + t * b[i][j];
    return out;
}

M2 traceless(const M2& a) {
    M2 out = a;
    const double h = 0.5 * tr(a);
    out[0][0] -= h;
    out[1][1] -= h;
    return out;
}

// <B x, y>
double bilinear(const M2& b, const std::array<double, 2>& x, const std::array<double, 2>& y) {
    double s = 0.0;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) s += b[i][j] * x[i] * y[j];
    return s;
}

double apply_norm2(const M2& b, const std::array<double, 2>& x) {
    const double y0 = b[0][0] * x[0] + b[0][1] * x[1];
    const double y1 = b[1][0] * x[0] + b[1][1] * x[1];
    return y0 * y0 + y1 * y1;
}

AmbientVec vals(const JetVec& v) {
    AmbientVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].value();
    return out;
}

// Pointwise data shared by the scalar identities.
struct PointData {
    double c = 0.0;
    std::vector<M2> A;
    std::vector<double> nu;
    std::array<double, 2> T{};
    double T2 = 0.0;
    double H = 0.0, H2 = 0.0;
    double HN = 0.0; // <H, N>
    M2 AN{};
    double sigma2 = 0.0;
    double phi2 = 0.0;
    double phiTTH = 0.0; // <phi(T,T), H>

    explicit PointData(const GeometricState& s) {
        c = s.space().c();
        for (std::size_t a = 0; a < s.normal_dim(); ++a) {
            A.push_back(val(s.shape(a)));
            nu.push_back(s.nu(a).value());
        }
        T = {s.t_component(0).value(), s.t_component(1).value()};
        T2 = s.t_norm2().value();
        H2 = s.mean_curvature_norm2().value();
        H = s.mean_curvature_norm();
        double sigmaTTH = 0.0;
        for (std::size_t a = 0; a < A.size(); ++a) {
            HN += nu[a] * 0.5 * tr(A[a]);
            AN = lin(1.0, AN, nu[a], A[a]);
            sigmaTTH += bilinear(A[a], T, T) * 0.5 * tr(A[a]);
        }
        phiTTH = sigmaTTH - T2 * H2;
        sigma2 = s.sigma_norm2().value();
        phi2 = s.phi_norm2().value();
    }
};

struct Builder {
    IdentityReport& r;
    void term(std::string name, double v) { r.terms.emplace_back(std::move(name), v); }
    void check(std::string name, double v) { r.checks.emplace_back(std::move(name), v); }
};

void finish(IdentityReport& r, double tol) {
    r.rhs = 0.0;
    for (const auto& t : r.terms) r.rhs += t.second;
    r.residual = std::abs(r.lhs - r.rhs) / (1.0 + r.terms_sum());
    r.status = r.residual <= tol && std::isfinite(r.residual) ? ReportStatus::Pass : ReportStatus::Fail;
}

IdentityReport not_applicable(IdentityReport r, std::string reason) {
    r.applicable = false;
    r.reason = std::move(reason);
    r.status = ReportStatus::NotApplicable;
    return r;
}

bool needs_pmc(IdentityKind k) {
    switch (k) {
    case IdentityKind::SimonsPhiH:
    case IdentityKind::SimonsPhi4:
    case IdentityKind::SimonsPhi:
    case IdentityKind::LaplacianT:
    case IdentityKind::DeltaSum: return true;
    default: return false;
    }
}

bool needs_nonminimal(IdentityKind k) {
    switch (k) {
    case IdentityKind::SimonsPhiH:
    case IdentityKind::SimonsPhi4:
    case IdentityKind::SimonsPhi:
    case IdentityKind::DeltaSum:
    case IdentityKind::PhiTNorm: return true;
    default: return false;
    }
}

bool needs_n3(IdentityKind k) {
    return k == IdentityKind::SimonsPhi4 || k == IdentityKind::SimonsPhi || k == IdentityKind::DeltaSum;
}

// Normalized parallelism defect of a normal field.
double parallel_defect(const GeometricState& s, const JetVec& V) {
    const AmbientVec v = vals(V);
    const double n = std::sqrt(std::max(0.0, s.space().inner(v, v)));
    return normal_parallel_residual(s, V) / (1.0 + n);
}

// Returns a reason when V = field is not a parallel normal field at the point.
std::optional<std::string> parallel_reason(const GeometricState& s, NormalField field, double tol) {
    if (field == NormalField::E4 && s.normal_dim() < 2) return "E4 needs codimension >= 2 (n >= 3)";
    const double d = parallel_defect(s, normal_field(s, field));
    if (d <= tol) return std::nullopt;
    if (field == NormalField::H) return "pmc residual exceeded";
    return "normal field " + std::string(to_string(field)) + " not parallel";
}

// Frame component (1-based indices) packed as decimal digits, e.g. 1221.
double component_code(std::initializer_list<int> idx) {
    double code = 0.0;
    for (int i : idx) code = 10.0 * code + (i + 1);
    return code;
}

// --- tensor identities -----------------------------------------------------

void gauss(IdentityReport& r, const GeometricState& s, const PointData& d) {
    const auto R = intrinsic_riemann_frame(s);
    const AmbientVec p = vals(s.position());
    const std::array<AmbientVec, 2> E{vals(s.tangent(0)), vals(s.tangent(1))};
    double worst = -1.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int e = 0; e < 2; ++e) {
                    const double amb = s.space().inner(ambient_curvature(E[a], E[b], E[c], p, s.space()), E[e]);
                    double ext = 0.0;
                    for (const M2& A : d.A) ext += A[b][c] * A[a][e] - A[a][c] * A[b][e];
                    const double mism = std::abs(R[a][b][c][e] - amb - ext);
                    if (mism > worst) {
                        worst = mism;
                        r.lhs = R[a][b][c][e];
                        r.terms = {{"<Rbar(E_a,E_b)E_c,E_d>", amb}, {"sum_alpha(A_bc A_ad - A_ac A_bd)", ext}};
                        r.checks = {{"component", component_code({a, b, c, e})}};
                    }
                }
}

void codazzi(IdentityReport& r, const GeometricState& s, const PointData& d, const JetVec& V) {
    const auto D = covariant_derivative_frame(s, shape_coords(s, V));
    const double vn = V[s.space().line_index()].value();
    double worst = -1.0;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c) {
                const double lhs = D[a][b][c] - D[b][a][c];
                const double rhs = d.c * vn * (d.T[b] * (a == c) - d.T[a] * (b == c));
                if (std::abs(lhs - rhs) > worst) {
                    worst = std::abs(lhs - rhs);
                    r.lhs = lhs;
                    r.terms = {{"c<V,N>(T_b delta_ac - T_a delta_bc)", rhs}};
                    r.checks = {{"component", component_code({a, b, c})}};
                }
            }
}

void ricci_commute(IdentityReport& r, const GeometricState& s, const PointData& d, const JetVec& V) {
    const M2 AV = val(to_frame(s, shape_coords(s, V)));
    const AmbientVec p = vals(s.position());
    const AmbientVec v = vals(V);
    const AmbientVec E1 = vals(s.tangent(0)), E2 = vals(s.tangent(1));
    double worst = -1.0;
    for (std::size_t a = 0; a < d.A.size(); ++a) {
        const M2 comm = lin(1.0, mul(AV, d.A[a]), -1.0, mul(d.A[a], AV));
        const double amb = s.space().inner(ambient_curvature(E1, E2, v, p, s.space()), vals(s.normal(a)));
        // <R^perp V, E_a> = 0 for parallel V.
        const double lhs = comm[1][0];
        if (std::abs(lhs + amb) > worst) {
            worst = std::abs(lhs + amb);
            r.lhs = lhs;
            r.terms = {{"-<Rbar(E1,E2)V,E_alpha>", -amb}};
            r.checks = {{"alpha", static_cast<double>(a) + 3.0}};
        }
    }
    if (worst < 0.0) r.terms = {{"-<Rbar(E1,E2)V,E_alpha>", 0.0}};
}

void normal_curvature(IdentityReport& r, const GeometricState& s, const PointData& d) {
    const std::size_t m = s.normal_dim();
    const ProductSpace& sp = s.space();
    // omega[k][a][b] = <d_k E_a, E_b>, kept as jets for one more derivative.
    std::vector<std::vector<std::array<Jet, 2>>> omega(m, std::vector<std::array<Jet, 2>>(m));
    for (std::size_t a = 0; a < m; ++a) {
        for (int k = 0; k < 2; ++k) {
            JetVec dE;
            for (const Jet& e : s.normal(a)) dE.push_back(e.derivative(k));
            for (std::size_t b = 0; b < m; ++b) omega[a][b][static_cast<std::size_t>(k)] = sp.inner(dE, s.normal(b));
        }
    }
    const double area = s.frame_coeff(0, 0).value() * s.frame_coeff(1, 1).value() -
                        s.frame_coeff(0, 1).value() * s.frame_coeff(1, 0).value();
    const AmbientVec p = vals(s.position());
    const AmbientVec E1 = vals(s.tangent(0)), E2 = vals(s.tangent(1));
    double worst = -1.0;
    r.terms = {{"<[A_a,A_b]E1,E2>", 0.0}, {"<Rbar(E1,E2)E_a,E_b>", 0.0}};
    for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
            double perp = omega[a][b][1].derivative(0).value() - omega[a][b][0].derivative(1).value();
            for (std::size_t k = 0; k < m; ++k) {
                perp += omega[a][k][1].value() * omega[k][b][0].value() - omega[a][k][0].value() * omega[k][b][1].value();
            }
            perp *= area;
            const M2 comm = lin(1.0, mul(d.A[a], d.A[b]), -1.0, mul(d.A[b], d.A[a]));
            const double amb = sp.inner(ambient_curvature(E1, E2, vals(s.normal(a)), p, sp), vals(s.normal(b)));
            if (std::abs(perp - comm[1][0] - amb) > worst) {
                worst = std::abs(perp - comm[1][0] - amb);
                r.lhs = perp;
                r.terms = {{"<[A_a,A_b]E1,E2>", comm[1][0]}, {"<Rbar(E1,E2)E_a,E_b>", amb}};
                r.checks = {{"component", component_code({static_cast<int>(a) + 2, static_cast<int>(b) + 2})}};
            }
        }
    }
}

// --- Simons-type identities ------------------------------------------------

void simons_av(IdentityReport& r, const GeometricState& s, const PointData& d, const JetVec& V) {
    const Mat2 AVj = to_frame(s, shape_coords(s, V));
    const M2 AV = val(AVj);
    const double vn = V[s.space().line_index()].value();
    r.lhs = 0.5 * laplacian(s, frobenius(AVj, AVj));
    const double trV = tr(AV);
    const double AVTT = bilinear(AV, d.T, d.T);
    Builder b{r};
    b.term("|nabla A_V|^2", covariant_gradient_norm(s, V));
    b.term("c(2-|T|^2)|A_V|^2", d.c * (2.0 - d.T2) * dot(AV, AV));
    b.term("-4c|A_V T|^2", -4.0 * d.c * apply_norm2(AV, d.T));
    b.term("3c tr(A_V)<A_V T,T>", 3.0 * d.c * trV * AVTT);
    b.term("2c tr(A_N A_V)<V,N>", 2.0 * d.c * tr(mul(d.AN, AV)) * vn);
    b.term("-c tr(A_V)^2", -d.c * trV * trV);
    b.term("-2c tr(A_V)<H,N><V,N>", -2.0 * d.c * trV * d.HN * vn);
    double sum = 0.0;
    for (const M2& A : d.A) {
        const double x = tr(mul(AV, A));
        sum += tr(A) * tr(mul(mul(AV, AV), A)) - x * x;
    }
    b.term("sum_alpha(tr(A_alpha)tr(A_V^2 A_alpha) - tr(A_V A_alpha)^2)", sum);
}

double bracket_phi(const PointData& d) { return d.c * (2.0 - 3.0 * d.T2) + 4.0 * d.H2 - d.sigma2; }

void simons_phi_h(IdentityReport& r, const GeometricState& s, const PointData& d) {
    const M2 ph = val(s.phi_h());
    const double ph2 = dot(ph, ph);
    r.lhs = 0.5 * intrinsic_laplacian(s, ScalarField::PhiHNorm2);
    Builder b{r};
    b.term("|nabla phi_H|^2", covariant_gradient_norm(s, ShapeTarget::Phi3));
    b.term("{c(2-3|T|^2)+4|H|^2-|sigma|^2}|phi_H|^2", bracket_phi(d) * ph2);
    b.term("-2c|H|<phi_H T,T>", -2.0 * d.c * d.H * bilinear(ph, d.T, d.T));
    b.term("(2c/|H|)<H,N>tr(A_N phi_H)", 2.0 * d.c / d.H * d.HN * tr(mul(d.AN, ph)));
}

void simons_phi4(IdentityReport& r, const GeometricState& s, const PointData& d) {
    const M2 p4 = traceless(d.A[1]);
    r.lhs = 0.5 * intrinsic_laplacian(s, ScalarField::Phi4Norm2);
    Builder b{r};
    b.term("|nabla phi_4|^2", covariant_gradient_norm(s, ShapeTarget::Phi4));
    b.term("{c(2-3|T|^2)+4|H|^2-|sigma|^2}|phi_4|^2", bracket_phi(d) * dot(p4, p4));
    b.term("2c nu_4 tr(A_N phi_4)", 2.0 * d.c * d.nu[1] * tr(mul(d.AN, p4)));
}

void simons_phi(IdentityReport& r, const GeometricState& s, const PointData& d) {
    r.lhs = 0.5 * intrinsic_laplacian(s, ScalarField::PhiNorm2);
    const M2 mix = lin(d.nu[0], traceless(d.A[0]), d.nu[1], traceless(d.A[1]));
    const double form1 = 2.0 * d.c * dot(mix, mix);
    const double form2 = 2.0 * d.c * dot(d.AN, d.AN) - 4.0 * d.c * d.HN * d.HN;
    Builder b{r};
    b.term("|nabla phi_3|^2", covariant_gradient_norm(s, ShapeTarget::Phi3));
    b.term("|nabla phi_4|^2", covariant_gradient_norm(s, ShapeTarget::Phi4));
    b.term("-|phi|^4", -d.phi2 * d.phi2);
    b.term("{c(2-3|T|^2)+2|H|^2}|phi|^2", (d.c * (2.0 - 3.0 * d.T2) + 2.0 * d.H2) * d.phi2);
    b.term("-2c<phi(T,T),H>", -2.0 * d.c * d.phiTTH);
    b.term("2c|nu_3 phi_3+nu_4 phi_4|^2", form1);
    b.check("2c|A_N|^2-4c<H,N>^2", form2);
    b.check("form_gap", std::abs(form1 - form2));
}

void laplacian_t(IdentityReport& r, const GeometricState& s, const PointData& d) {
    r.lhs = 0.5 * intrinsic_laplacian(s, ScalarField::TNorm2);
    Builder b{r};
    b.term("|A_N|^2", dot(d.AN, d.AN));
    b.term("-1/2|T|^2|phi|^2", -0.5 * d.T2 * d.phi2);
    b.term("-2<phi(T,T),H>", -2.0 * d.phiTTH);
    b.term("c|T|^2(1-|T|^2)", d.c * d.T2 * (1.0 - d.T2));
    b.term("-|T|^2|H|^2", -d.T2 * d.H2);
}

void delta_sum(IdentityReport& r, const GeometricState& s, const PointData& d) {
    r.lhs = 0.5 * intrinsic_laplacian(s, ScalarField::PhiMinusCT);
    Builder b{r};
    b.term("|nabla phi_3|^2", covariant_gradient_norm(s, ShapeTarget::Phi3));
    b.term("|nabla phi_4|^2", covariant_gradient_norm(s, ShapeTarget::Phi4));
    b.term("{-|phi|^2+(c/2)(4-5|T|^2)+2|H|^2}|phi|^2",
           (-d.phi2 + 0.5 * d.c * (4.0 - 5.0 * d.T2) + 2.0 * d.H2) * d.phi2);
    b.term("c|A_N|^2", d.c * dot(d.AN, d.AN));
    b.term("-4c<H,N>^2", -4.0 * d.c * d.HN * d.HN);
    b.term("c|T|^2|H|^2", d.c * d.T2 * d.H2);
    b.term("-c^2|T|^2(1-|T|^2)", -d.c * d.c * d.T2 * (1.0 - d.T2));
}

void phi_t_norm(IdentityReport& r, const GeometricState& s, const PointData& d) {
    const M2 ph = val(s.phi_h());
    r.lhs = apply_norm2(ph, d.T);
    r.terms = {{"1/2|T|^2|phi_H|^2", 0.5 * d.T2 * dot(ph, ph)}};
}

} // namespace

std::string_view to_string(IdentityKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.name;
    return "?";
}

std::string_view cli_name(IdentityKind kind) {
    for (const auto& k : kKinds)
        if (k.kind == kind) return k.cli;
    return "?";
}

std::optional<IdentityKind> identity_from_cli_name(std::string_view name) {
    for (const auto& k : kKinds)
        if (k.cli == name || k.name == name) return k.kind;
    return std::nullopt;
}

bool takes_normal_field(IdentityKind kind) {
    return kind == IdentityKind::Codazzi || kind == IdentityKind::RicciCommute || kind == IdentityKind::SimonsAV;
}

std::string IdentitySpec::label() const {
    std::string s(to_string(kind));
    if (takes_normal_field(kind)) s += "(" + std::string(to_string(field)) + ")";
    return s;
}

std::vector<IdentitySpec> all_identities() {
    using K = IdentityKind;
    return {
        {K::GaussEq},
        {K::Codazzi, NormalField::H},
        {K::Codazzi, NormalField::E4},
        {K::RicciCommute, NormalField::H},
        {K::NormalCurvature},
        {K::SimonsAV, NormalField::H},
        {K::SimonsAV, NormalField::E4},
        {K::SimonsPhiH},
        {K::SimonsPhi4},
        {K::SimonsPhi},
        {K::LaplacianT},
        {K::DeltaSum},
        {K::PhiTNorm},
        {K::SchwarzBound},
    };
}

std::string_view to_string(ReportStatus s) {
    switch (s) {
    case ReportStatus::Pass: return "pass";
    case ReportStatus::Fail: return "fail";
    case ReportStatus::NotApplicable: return "not_applicable";
    case ReportStatus::Error: return "error";
    }
    return "?";
}

double IdentityReport::terms_sum() const {
    double s = 0.0;
    for (const auto& t : terms) s += std::abs(t.second);
    return s;
}

IdentityReport evaluate_identity(const IdentitySpec& spec, const GeometricState& state,
                                 const IdentityOptions& options) {
    IdentityReport r;
    r.spec = spec;
    r.point = state.point();
    const IdentityKind kind = spec.kind;
    const double tol = options.tol;

    if (needs_n3(kind) && state.space().n() != 3) return not_applicable(r, "needs n = 3");
    if (needs_pmc(kind) && normal_connection_residual(state) > tol) return not_applicable(r, "pmc residual exceeded");
    if (takes_normal_field(kind)) {
        if (auto why = parallel_reason(state, spec.field, tol)) return not_applicable(r, *why);
    }
    if (needs_nonminimal(kind) && state.minimal()) return not_applicable(r, "minimal");

    const PointData d(state);
    switch (kind) {
    case IdentityKind::GaussEq: gauss(r, state, d); break;
    case IdentityKind::Codazzi: codazzi(r, state, d, normal_field(state, spec.field)); break;
    case IdentityKind::RicciCommute: ricci_commute(r, state, d, normal_field(state, spec.field)); break;
    case IdentityKind::NormalCurvature: normal_curvature(r, state, d); break;
    case IdentityKind::SimonsAV: {
        const JetVec V = normal_field(state, spec.field);
        const std::array<Jet, 3> b = shape_coords(state, V);
        const Jet trV = state.g_inv(0, 0) * b[0] + state.g_inv(0, 1) * b[1] * 2.0 + state.g_inv(1, 1) * b[2];
        const double grad = std::hypot(trV.partial(1, 0), trV.partial(0, 1));
        if (grad > tol) return not_applicable(r, "trace A_V not constant");
        simons_av(r, state, d, V);
        break;
    }
    case IdentityKind::SimonsPhiH: simons_phi_h(r, state, d); break;
    case IdentityKind::SimonsPhi4: simons_phi4(r, state, d); break;
    case IdentityKind::SimonsPhi: simons_phi(r, state, d); break;
    case IdentityKind::LaplacianT: laplacian_t(r, state, d); break;
    case IdentityKind::DeltaSum: delta_sum(r, state, d); break;
    case IdentityKind::PhiTNorm: phi_t_norm(r, state, d); break;
    case IdentityKind::SchwarzBound: {
        r.lhs = d.HN * d.HN;
        r.rhs = (1.0 - d.T2) * d.H2;
        r.terms = {{"(1-|T|^2)|H|^2", r.rhs}};
        r.checks = {{"slack", r.rhs - r.lhs}};
        r.residual = std::max(0.0, r.lhs - r.rhs) / (1.0 + std::abs(r.rhs));
        r.status = r.residual <= tol ? ReportStatus::Pass : ReportStatus::Fail;
        return r;
    }
    }
    finish(r, tol);
    return r;
}

IdentityReport evaluate_identity(const IdentitySpec& spec, const Immersion& im, ChartPoint point,
                                 const IdentityOptions& options, int degree) {
    return evaluate_identity(spec, evaluate_state(im, point, degree), options);
}

std::vector<ChartPoint> grid_points(const ChartDomain& domain, const GridSpec& grid) {
    if (grid.nu < 1 || grid.nv < 1) throw Error(ErrorKind::BadParameters, "grid must be at least 1x1");
    std::vector<ChartPoint> out;
    out.reserve(static_cast<std::size_t>(grid.nu) * static_cast<std::size_t>(grid.nv));
    const double du = (domain.u1 - domain.u0) / grid.nu;
    const double dv = (domain.v1 - domain.v0) / grid.nv;
    for (int i = 0; i < grid.nu; ++i)
        for (int j = 0; j < grid.nv; ++j) out.push_back({domain.u0 + (i + 0.5) * du, domain.v0 + (j + 0.5) * dv});
    return out;
}

bool SuiteResult::pass() const {
    return std::all_of(summary.begin(), summary.end(), [](const IdentitySummary& s) { return s.pass(); });
}

bool SuiteResult::has_errors() const {
    return std::any_of(summary.begin(), summary.end(), [](const IdentitySummary& s) { return s.errors > 0; });
}

SuiteResult run_suite(const Immersion& im, const GridSpec& grid, const std::vector<IdentitySpec>& specs,
                      const IdentityOptions& options, int degree, int threads) {
    const std::vector<ChartPoint> points = grid_points(im.domain, grid);
    const std::size_t k = specs.size();
    SuiteResult out;
    out.reports.resize(points.size() * k);

    parallel_for(points.size(), threads > 0 ? threads : default_thread_count(), [&](std::size_t i) {
        auto fail_all = [&](const std::string& why) {
            for (std::size_t j = 0; j < k; ++j) {
                IdentityReport& r = out.reports[i * k + j];
                r.spec = specs[j];
                r.point = points[i];
                r.applicable = false;
                r.reason = why;
                r.status = ReportStatus::Error;
            }
        };
        std::optional<GeometricState> state;
        try {
            state.emplace(evaluate_state(im, points[i], degree));
        } catch (const Error& e) {
            fail_all(std::string(to_string(e.kind())) + ": " + e.what());
            return;
        }
        for (std::size_t j = 0; j < k; ++j) {
            IdentityReport& r = out.reports[i * k + j];
            try {
                r = evaluate_identity(specs[j], *state, options);
            } catch (const Error& e) {
                r = IdentityReport{};
                r.spec = specs[j];
                r.point = points[i];
                r.applicable = false;
                if (e.kind() == ErrorKind::NotApplicable || e.kind() == ErrorKind::MinimalPoint) {
                    r.status = ReportStatus::NotApplicable;
                    r.reason = e.kind() == ErrorKind::MinimalPoint ? "minimal" : e.what();
                } else {
                    r.status = ReportStatus::Error;
                    r.reason = std::string(to_string(e.kind())) + ": " + e.what();
                }
            }
        }
    });

    out.summary.resize(k);
    for (std::size_t j = 0; j < k; ++j) out.summary[j].spec = specs[j];
    for (std::size_t idx = 0; idx < out.reports.size(); ++idx) {
        const IdentityReport& r = out.reports[idx];
        IdentitySummary& s = out.summary[idx % k];
        switch (r.status) {
        case ReportStatus::Pass:
        case ReportStatus::Fail:
            ++s.evaluated;
            s.max_residual = std::max(s.max_residual, r.residual);
            if (r.status == ReportStatus::Fail) ++s.failed;
            break;
        case ReportStatus::NotApplicable: ++s.not_applicable; break;
        case ReportStatus::Error: ++s.errors; break;
        }
        if (!r.reason.empty() && s.first_reason.empty()) s.first_reason = r.reason;
    }
    return out;
}

} // namespace pmc
