#pragma once

// Pointwise geometry of a parametrized surface in M^n(c) x R.
//
// The immersion is evaluated in jet arithmetic about the chart point, so every
// derived quantity below is itself a jet in the chart variables and can be
// differentiated again (Laplacians, covariant derivatives, curvature). With an
// immersion jet of degree D, first derivatives carry degree D-1 and the
// second fundamental form and everything built from it carry degree D-2.
//
// Conventions:
//   * Weingarten: dbar_X V = -A_V X + nabla^perp_X V.
//   * H = 1/2 trace_g sigma.
//   * The Laplacian is the analyst's sign: Delta s = g^ij (d_ij s - Gamma^k_ij d_k s).

#include "pmc/ambient.hpp"
#include "pmc/jet.hpp"

#include <array>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace pmc {

using JetVec = std::vector<Jet>;
using Mat2 = std::array<std::array<Jet, 2>, 2>;
using Mat2d = std::array<std::array<double, 2>, 2>;

struct ChartPoint {
    double u = 0.0;
    double v = 0.0;
};

struct ChartDomain {
    double u0 = 0.0, u1 = 1.0, v0 = 0.0, v1 = 1.0;

    bool contains(ChartPoint p) const noexcept {
        return p.u >= u0 && p.u <= u1 && p.v >= v0 && p.v <= v1;
    }
};

/// Maps chart jets (u, v) to the ambient coordinate jets of the surface.
using ChartMap = std::function<JetVec(const Jet& u, const Jet& v)>;

struct Immersion {
    ProductSpace space;
    ChartDomain domain;
    ChartMap eval;
    std::string name;
    std::map<std::string, double> params;
};

struct SurfaceOptions {
    /// Quadric membership tolerance for the evaluated point.
    double manifold_tol = kTangencyTolerance;
    /// Lower bound on det(g) / (g11 g22) (squared sine of the coordinate angle).
    double rank_threshold = 1e-10;
    /// |H| below this is treated as a minimal point.
    double minimal_threshold = 1e-10;
};

/// Named scalar fields whose Laplacians appear in the Simons-type identities.
enum class ScalarField { PhiNorm2, PhiHNorm2, Phi4Norm2, TNorm2, PhiMinusCT };

/// Which shape-operator-like tensor a covariant derivative is taken of.
enum class ShapeTarget { Phi3, Phi4, AH, AE3, AE4 };

/// Normal fields that identities can be specialized to.
enum class NormalField { H, E3, E4 };

std::string_view to_string(ScalarField f);
std::string_view to_string(ShapeTarget t);
std::string_view to_string(NormalField v);

class GeometricState {
public:
    const ProductSpace& space() const noexcept { return space_; }
    ChartPoint point() const noexcept { return point_; }
    /// Degree of the immersion jet.
    int degree() const noexcept { return degree_; }
    /// Degree carried by sigma, H, the frames and shape operators.
    int working_degree() const noexcept { return degree_ - 2; }
    std::size_t normal_dim() const noexcept { return normal_.size(); }

    // Coordinate data.
    const JetVec& position() const noexcept { return x_; }
    const JetVec& dx(int i) const { return dx_[static_cast<std::size_t>(i)]; }
    /// Second coordinate derivative x_ij.
    const JetVec& ddx(int i, int j) const { return ddx_[sym_index(i, j)]; }
    const Jet& g(int i, int j) const { return g_[sym_index(i, j)]; }
    const Jet& g_inv(int i, int j) const { return ginv_[sym_index(i, j)]; }
    /// Gamma^k_ij.
    const Jet& christoffel(int k, int i, int j) const {
        return gamma_[static_cast<std::size_t>(k)][sym_index(i, j)];
    }
    /// Orthonormal tangent frame E_a = frame_coeff(a, i) x_i.
    const Jet& frame_coeff(int a, int i) const {
        return e_[static_cast<std::size_t>(a)][static_cast<std::size_t>(i)];
    }

    // Frames (ambient coordinates).
    const JetVec& tangent(int a) const { return tangent_[static_cast<std::size_t>(a)]; }
    /// Normal frame vector; alpha = 0 is E_3 in the usual numbering.
    const JetVec& normal(std::size_t alpha) const { return normal_.at(alpha); }
    bool e3_is_mean_curvature_direction() const noexcept { return e3_from_h_; }

    // Second fundamental form.
    /// sigma(x_i, x_j) as an ambient normal vector.
    const JetVec& sigma_vec(int i, int j) const { return sigma_[sym_index(i, j)]; }
    /// A_alpha in the orthonormal tangent frame.
    const Mat2& shape(std::size_t alpha) const { return shape_.at(alpha); }
    const JetVec& mean_curvature() const noexcept { return H_; }
    const Jet& mean_curvature_norm2() const noexcept { return H2_; }
    double mean_curvature_norm() const;
    bool minimal() const noexcept { return minimal_; }
    double minimal_threshold() const noexcept { return minimal_threshold_; }

    // Vertical field.
    const Jet& t_component(int a) const { return T_[static_cast<std::size_t>(a)]; }
    const Jet& t_norm2() const noexcept { return T2_; }
    const Jet& nu(std::size_t alpha) const { return nu_.at(alpha); }

    // Norms.
    const Jet& sigma_norm2() const noexcept { return sigma2_; }
    /// |phi|^2 as the sum of |phi_alpha|^2 over the normal frame.
    const Jet& phi_norm2() const noexcept { return phi2_; }
    /// phi_alpha = A_alpha - 1/2 trace(A_alpha) id.
    Mat2 phi(std::size_t alpha) const;
    /// phi_H = A_H / |H| - |H| id. Throws MinimalPoint.
    Mat2 phi_h() const;

    double gaussian_curvature() const;

private:
    friend GeometricState evaluate_state(const Immersion&, ChartPoint, int, const SurfaceOptions&);

    static std::size_t sym_index(int i, int j) noexcept {
        return static_cast<std::size_t>(i + j);
    }

    ProductSpace space_{1.0, 3};
    ChartPoint point_{};
    int degree_ = 0;
    JetVec x_;
    std::array<JetVec, 2> dx_;
    std::array<JetVec, 3> ddx_;
    std::array<Jet, 3> g_, ginv_;
    std::array<std::array<Jet, 3>, 2> gamma_;
    std::array<std::array<Jet, 2>, 2> e_;
    std::array<JetVec, 2> tangent_;
    std::vector<JetVec> normal_;
    bool e3_from_h_ = false;
    std::array<JetVec, 3> sigma_;
    std::vector<Mat2> shape_;
    JetVec H_;
    Jet H2_;
    bool minimal_ = true;
    double minimal_threshold_ = 1e-10;
    std::array<Jet, 2> T_;
    Jet T2_;
    std::vector<Jet> nu_;
    Jet sigma2_, phi2_;
};

GeometricState evaluate_state(const Immersion& im, ChartPoint point, int degree = Jet::kDefaultDegree,
                              const SurfaceOptions& options = {});

struct XiSplit {
    AmbientVec T;
    double t_norm2 = 0.0;
    AmbientVec N;
    std::vector<double> nu;
};

XiSplit split_xi(const GeometricState& state);

/// (intrinsic from the Christoffel symbols, extrinsic from the Gauss equation).
std::pair<double, double> gaussian_curvature_two_ways(const GeometricState& state);

/// <R(E_a, E_b) E_c, E_d> of the induced metric, from Christoffel jets.
std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>
intrinsic_riemann_frame(const GeometricState& state);

/// Laplace-Beltrami of an arbitrary scalar jet at the state's point.
double laplacian(const GeometricState& state, const Jet& field);

Jet scalar_field(const GeometricState& state, ScalarField field);
double intrinsic_laplacian(const GeometricState& state, ScalarField field);
double intrinsic_laplacian(const Immersion& im, ChartPoint point, ScalarField field);

/// Returns the ambient jet vector of the requested normal field.
JetVec normal_field(const GeometricState& state, NormalField which);

/// max_a |nabla^perp_{E_a} V| for an arbitrary normal field V.
double normal_parallel_residual(const GeometricState& state, const JetVec& V);
/// max_a |nabla^perp_{E_a} H| / (1 + |H|): the pmc predicate.
double normal_connection_residual(const GeometricState& state);
double normal_connection_residual(const Immersion& im, ChartPoint point);

/// b_ij = <A x_i, x_j> of the requested tensor in chart coordinates.
std::array<Jet, 3> shape_coords(const GeometricState& state, ShapeTarget which);
std::array<Jet, 3> shape_coords(const GeometricState& state, const JetVec& V);

/// (nabla_{E_c} B)(E_a, E_b) indexed [c][a][b], for b given in coordinates.
std::array<Mat2d, 2> covariant_derivative_frame(const GeometricState& state,
                                                const std::array<Jet, 3>& b);
/// Converts coordinate components b_ij to the orthonormal frame.
Mat2 to_frame(const GeometricState& state, const std::array<Jet, 3>& b);

double covariant_gradient_norm(const GeometricState& state, ShapeTarget which);
double covariant_gradient_norm(const GeometricState& state, const JetVec& V);
double covariant_gradient_norm(const Immersion& im, ChartPoint point, ShapeTarget which);

/// Q(E_i, E_j) = 2<sigma(E_i, E_j), H> - c <E_i, xi><E_j, xi>.
double q_form(const GeometricState& state, int i, int j);

// 2x2 helpers shared with the identity evaluators.
Jet trace(const Mat2& a);
Mat2 matmul(const Mat2& a, const Mat2& b);
Mat2 add(const Mat2& a, const Mat2& b);
Mat2 scaled(const Mat2& a, const Jet& s);
Jet frobenius(const Mat2& a, const Mat2& b);
double value_norm2(const Mat2& a);

} // namespace pmc
