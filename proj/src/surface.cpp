#include "pmc/surface.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>

namespace pmc {

namespace {

constexpr std::array<std::pair<int, int>, 3> kSymPairs{{{0, 0}, {0, 1}, {1, 1}}};

AmbientVec values(const JetVec& v) {
    AmbientVec out(v.size());
    for (std::size_t k = 0; k < v.size(); ++k) out[k] = v[k].value();
    return out;
}

JetVec constant_axis(std::size_t dim, std::size_t axis, int degree) {
    JetVec out(dim, Jet(degree));
    out[axis] = Jet(degree, 1.0);
    return out;
}

void axpy(JetVec& y, const Jet& a, const JetVec& x) {
    for (std::size_t k = 0; k < y.size(); ++k) y[k] -= a * x[k];
}

JetVec scale(const JetVec& x, const Jet& a) {
    JetVec out = x;
    for (auto& e : out) e = e * a;
    return out;
}

Jet sym_get(const std::array<Jet, 3>& b, int i, int j) { return b[static_cast<std::size_t>(i + j)]; }

double norm_of(const ProductSpace& space, const AmbientVec& w) {
    return std::sqrt(std::max(0.0, space.inner(w, w)));
}

} // namespace

std::string_view to_string(ScalarField f) {
    switch (f) {
    case ScalarField::PhiNorm2: return "|phi|^2";
    case ScalarField::PhiHNorm2: return "|phi_H|^2";
    case ScalarField::Phi4Norm2: return "|phi_4|^2";
    case ScalarField::TNorm2: return "|T|^2";
    case ScalarField::PhiMinusCT: return "|phi|^2-c|T|^2";
    }
    return "?";
}

std::string_view to_string(ShapeTarget t) {
    switch (t) {
    case ShapeTarget::Phi3: return "phi_3";
    case ShapeTarget::Phi4: return "phi_4";
    case ShapeTarget::AH: return "A_H";
    case ShapeTarget::AE3: return "A_3";
    case ShapeTarget::AE4: return "A_4";
    }
    return "?";
}

std::string_view to_string(NormalField v) {
    switch (v) {
    case NormalField::H: return "H";
    case NormalField::E3: return "E3";
    case NormalField::E4: return "E4";
    }
    return "?";
}

Jet trace(const Mat2& a) { return a[0][0] + a[1][1]; }

Mat2 matmul(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
    return out;
}

Mat2 add(const Mat2& a, const Mat2& b) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][j] + b[i][j];
    return out;
}

Mat2 scaled(const Mat2& a, const Jet& s) {
    Mat2 out;
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j) out[i][j] = a[i][j] * s;
    return out;
}

Jet frobenius(const Mat2& a, const Mat2& b) {
    return a[0][0] * b[0][0] + a[0][1] * b[0][1] + a[1][0] * b[1][0] + a[1][1] * b[1][1];
}

double value_norm2(const Mat2& a) {
    double s = 0.0;
    for (const auto& row : a)
        for (const auto& e : row) s += e.value() * e.value();
    return s;
}

double GeometricState::mean_curvature_norm() const { return std::sqrt(std::max(0.0, H2_.value())); }

Mat2 GeometricState::phi(std::size_t alpha) const {
    Mat2 out = shape(alpha);
    const Jet half_trace = trace(out) * 0.5;
    out[0][0] -= half_trace;
    out[1][1] -= half_trace;
    return out;
}

Mat2 GeometricState::phi_h() const {
    if (minimal_ || !e3_from_h_) {
        throw Error(ErrorKind::MinimalPoint, "phi_H is undefined at a minimal point");
    }
    Mat2 out = shape(0);
    const Jet h = sqrt(H2_);
    out[0][0] -= h;
    out[1][1] -= h;
    return out;
}

double GeometricState::gaussian_curvature() const { return gaussian_curvature_two_ways(*this).first; }

GeometricState evaluate_state(const Immersion& im, ChartPoint point, int degree,
                              const SurfaceOptions& options) {
    if (degree < 2) {
        throw Error(ErrorKind::InsufficientJetDegree,
                    "the second fundamental form needs an immersion jet of degree >= 2");
    }
    if (!im.domain.contains(point)) {
        throw Error(ErrorKind::BadParameters, "chart point outside the chart domain");
    }
    const ProductSpace& space = im.space;
    const std::size_t dim = space.ambient_dim();

    GeometricState s;
    s.space_ = space;
    s.point_ = point;
    s.degree_ = degree;
    s.minimal_threshold_ = options.minimal_threshold;

    s.x_ = im.eval(Jet::variable(0, point.u, degree), Jet::variable(1, point.v, degree));
    if (s.x_.size() != dim) {
        throw Error(ErrorKind::DimensionMismatch,
                    "immersion returned " + std::to_string(s.x_.size()) + " coordinates, expected " +
                        std::to_string(dim));
    }
    const AmbientVec x0 = values(s.x_);
    const double qres = space.quadric_residual(x0);
    if (!(qres <= options.manifold_tol) || (space.base().lorentzian() && x0[0] <= 0.0)) {
        throw Error(ErrorKind::OffManifold,
                    "immersion point is off the product manifold (residual " + std::to_string(qres) + ")");
    }

    for (int i = 0; i < 2; ++i) {
        s.dx_[static_cast<std::size_t>(i)].reserve(dim);
        for (const Jet& xk : s.x_) s.dx_[static_cast<std::size_t>(i)].push_back(xk.derivative(i));
    }
    for (const auto& [i, j] : kSymPairs) {
        JetVec& dd = s.ddx_[static_cast<std::size_t>(i + j)];
        for (const Jet& xk : s.dx_[static_cast<std::size_t>(i)]) dd.push_back(xk.derivative(j));
    }

    // First fundamental form and its inverse.
    for (const auto& [i, j] : kSymPairs) s.g_[static_cast<std::size_t>(i + j)] = space.inner(s.dx(i), s.dx(j));
    const Jet det = s.g(0, 0) * s.g(1, 1) - s.g(0, 1) * s.g(0, 1);
    const double g11 = s.g(0, 0).value(), g22 = s.g(1, 1).value();
    if (!(g11 > 0.0 && g22 > 0.0 && det.value() / (g11 * g22) >= options.rank_threshold)) {
        throw Error(ErrorKind::DegenerateMetric,
                    "coordinate tangent vectors are (nearly) dependent at (" + std::to_string(point.u) +
                        ", " + std::to_string(point.v) + ")");
    }
    const Jet inv_det = reciprocal(det);
    s.ginv_[0] = s.g(1, 1) * inv_det;
    s.ginv_[1] = -s.g(0, 1) * inv_det;
    s.ginv_[2] = s.g(0, 0) * inv_det;

    // Gamma^k_ij = 1/2 g^kl (d_i g_jl + d_j g_il - d_l g_ij)
    std::array<std::array<Jet, 3>, 2> dg;
    for (int l = 0; l < 2; ++l)
        for (std::size_t m = 0; m < 3; ++m) dg[static_cast<std::size_t>(l)][m] = s.g_[m].derivative(l);
    auto dgl = [&](int l, int i, int j) { return dg[static_cast<std::size_t>(l)][static_cast<std::size_t>(i + j)]; };
    for (int k = 0; k < 2; ++k) {
        for (const auto& [i, j] : kSymPairs) {
            Jet acc(degree - 2);
            for (int l = 0; l < 2; ++l) acc += s.g_inv(k, l) * (dgl(i, j, l) + dgl(j, i, l) - dgl(l, i, j));
            s.gamma_[static_cast<std::size_t>(k)][static_cast<std::size_t>(i + j)] = acc * 0.5;
        }
    }

    // Orthonormal tangent frame by Gram-Schmidt on (x_u, x_v).
    const Jet sqrt_g11 = sqrt(s.g(0, 0));
    const Jet sqrt_det = sqrt(det);
    s.e_[0][0] = reciprocal(sqrt_g11);
    s.e_[0][1] = Jet(degree - 1);
    s.e_[1][0] = -s.g(0, 1) * reciprocal(sqrt_g11 * sqrt_det);
    s.e_[1][1] = sqrt_g11 * reciprocal(sqrt_det);
    for (int a = 0; a < 2; ++a) {
        JetVec& E = s.tangent_[static_cast<std::size_t>(a)];
        E.assign(dim, Jet(degree - 1));
        for (std::size_t k = 0; k < dim; ++k) E[k] = s.frame_coeff(a, 0) * s.dx(0)[k] + s.frame_coeff(a, 1) * s.dx(1)[k];
    }

    auto normal_part = [&](const JetVec& w) {
        JetVec out = space.project_to_product(s.x_, w);
        for (int a = 0; a < 2; ++a) axpy(out, space.inner(w, s.tangent(a)), s.tangent(a));
        return out;
    };

    for (const auto& [i, j] : kSymPairs) s.sigma_[static_cast<std::size_t>(i + j)] = normal_part(s.ddx(i, j));
    const int w = degree - 2;
    s.H_.assign(dim, Jet(w));
    for (std::size_t k = 0; k < dim; ++k) {
        s.H_[k] = (s.g_inv(0, 0) * s.sigma_vec(0, 0)[k] + 2.0 * s.g_inv(0, 1) * s.sigma_vec(0, 1)[k] +
                   s.g_inv(1, 1) * s.sigma_vec(1, 1)[k]) * 0.5;
    }
    s.H2_ = space.inner(s.H_, s.H_);
    s.minimal_ = !(s.mean_curvature_norm() >= options.minimal_threshold);

    // Normal frame: E3 = H/|H| when nonminimal, then greedy Gram-Schmidt on the
    // coordinate axes projected to the normal space (largest residual first,
    // ties to the lower axis index).
    const std::size_t ndim = static_cast<std::size_t>(space.n() - 1);
    if (!s.minimal_) {
        s.normal_.push_back(scale(s.H_, reciprocal(sqrt(s.H2_))));
        s.e3_from_h_ = true;
    }
    std::vector<JetVec> candidates;
    for (std::size_t axis = 0; axis < dim; ++axis) candidates.push_back(normal_part(constant_axis(dim, axis, w)));
    std::vector<bool> used(dim, false);
    while (s.normal_.size() < ndim) {
        std::size_t best = dim;
        double best_norm2 = 0.0;
        std::vector<JetVec> reduced(dim);
        for (std::size_t axis = 0; axis < dim; ++axis) {
            if (used[axis]) continue;
            JetVec r = candidates[axis];
            for (const JetVec& E : s.normal_) axpy(r, space.inner(r, E), E);
            const double n2 = space.inner(r, r).value();
            if (n2 > best_norm2) {
                best_norm2 = n2;
                best = axis;
            }
            reduced[axis] = std::move(r);
        }
        if (best == dim || best_norm2 < 1e-12) {
            throw Error(ErrorKind::DegenerateMetric, "could not complete the normal frame");
        }
        used[best] = true;
        JetVec& r = reduced[best];
        s.normal_.push_back(scale(r, reciprocal(sqrt(space.inner(r, r)))));
    }

    // Orientation of the last free normal vector: det(E1, E2, E3, ..., p_M) > 0.
    if (ndim >= 2 || !s.e3_from_h_) {
        Eigen::MatrixXd frame(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
        std::vector<AmbientVec> cols{values(s.tangent(0)), values(s.tangent(1))};
        for (const JetVec& E : s.normal_) cols.push_back(values(E));
        if (space.c() != 0.0) {
            AmbientVec pm = x0;
            pm[space.line_index()] = 0.0;
            cols.push_back(pm);
        }
        for (std::size_t col = 0; col < dim; ++col)
            for (std::size_t row = 0; row < dim; ++row)
                frame(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = cols[col][row];
        if (frame.determinant() < 0.0) {
            for (Jet& e : s.normal_.back()) e = -e;
        }
    }

    // Shape operators in the tangent frame.
    for (const JetVec& E : s.normal_) {
        std::array<Jet, 3> b;
        for (std::size_t m = 0; m < 3; ++m) b[m] = space.inner(s.sigma_[m], E);
        s.shape_.push_back(to_frame(s, b));
        s.nu_.push_back(E[space.line_index()]);
    }
    for (int a = 0; a < 2; ++a) s.T_[static_cast<std::size_t>(a)] = s.tangent(a)[space.line_index()].truncated(w);
    s.T2_ = s.T_[0] * s.T_[0] + s.T_[1] * s.T_[1];

    s.sigma2_ = Jet(w);
    s.phi2_ = Jet(w);
    for (std::size_t alpha = 0; alpha < s.normal_.size(); ++alpha) {
        s.sigma2_ += frobenius(s.shape(alpha), s.shape(alpha));
        const Mat2 p = s.phi(alpha);
        s.phi2_ += frobenius(p, p);
    }
    return s;
}

Mat2 to_frame(const GeometricState& state, const std::array<Jet, 3>& b) {
    Mat2 out;
    for (int a = 0; a < 2; ++a) {
        for (int c = 0; c < 2; ++c) {
            Jet acc(std::min(b[0].degree(), state.frame_coeff(0, 0).degree()));
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j)
                    acc += state.frame_coeff(a, i) * state.frame_coeff(c, j) * sym_get(b, i, j);
            out[static_cast<std::size_t>(a)][static_cast<std::size_t>(c)] = acc;
        }
    }
    return out;
}

XiSplit split_xi(const GeometricState& state) {
    const ProductSpace& space = state.space();
    const std::size_t t = space.line_index();
    XiSplit out;
    out.T.assign(space.ambient_dim(), 0.0);
    for (int a = 0; a < 2; ++a) {
        const double ta = state.tangent(a)[t].value();
        for (std::size_t k = 0; k < out.T.size(); ++k) out.T[k] += ta * state.tangent(a)[k].value();
    }
    out.t_norm2 = state.t_norm2().value();
    out.N = space.xi();
    for (std::size_t k = 0; k < out.N.size(); ++k) out.N[k] -= out.T[k];
    for (std::size_t alpha = 0; alpha < state.normal_dim(); ++alpha) out.nu.push_back(state.nu(alpha).value());
    return out;
}

std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2>
intrinsic_riemann_frame(const GeometricState& state) {
    // R^l_ijk = d_i Gamma^l_jk - d_j Gamma^l_ik + Gamma^m_jk Gamma^l_im - Gamma^m_ik Gamma^l_jm
    double gam[2][2][2];
    double dgam[2][2][2][2]; // [d][l][i][j]
    for (int l = 0; l < 2; ++l)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                const Jet& G = state.christoffel(l, i, j);
                gam[l][i][j] = G.value();
                for (int d = 0; d < 2; ++d) dgam[d][l][i][j] = G.derivative(d).value();
            }
    double R[2][2][2][2]; // lowered: <R(d_i, d_j) d_k, d_l>
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k) {
                double up[2];
                for (int l = 0; l < 2; ++l) {
                    double v = dgam[i][l][j][k] - dgam[j][l][i][k];
                    for (int m = 0; m < 2; ++m) v += gam[m][j][k] * gam[l][i][m] - gam[m][i][k] * gam[l][j][m];
                    up[l] = v;
                }
                for (int l = 0; l < 2; ++l) R[i][j][k][l] = up[0] * state.g(0, l).value() + up[1] * state.g(1, l).value();
            }
    double e[2][2];
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i) e[a][i] = state.frame_coeff(a, i).value();
    std::array<std::array<std::array<std::array<double, 2>, 2>, 2>, 2> out{};
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
            for (int c = 0; c < 2; ++c)
                for (int d = 0; d < 2; ++d) {
                    double v = 0.0;
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j)
                            for (int k = 0; k < 2; ++k)
                                for (int l = 0; l < 2; ++l) v += e[a][i] * e[b][j] * e[c][k] * e[d][l] * R[i][j][k][l];
                    out[a][b][c][d] = v;
                }
    return out;
}

std::pair<double, double> gaussian_curvature_two_ways(const GeometricState& state) {
    const auto R = intrinsic_riemann_frame(state);
    const double c = state.space().c();
    const double extrinsic = c * (1.0 - state.t_norm2().value()) + 2.0 * state.mean_curvature_norm2().value() -
                             0.5 * state.sigma_norm2().value();
    return {R[0][1][1][0], extrinsic};
}

double laplacian(const GeometricState& state, const Jet& field) {
    if (field.degree() < 2) {
        throw Error(ErrorKind::InsufficientJetDegree,
                    "Laplacian needs a field jet of degree >= 2 (got " + std::to_string(field.degree()) + ")");
    }
    const double d[2] = {field.partial(1, 0), field.partial(0, 1)};
    double out = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            double hess = field.partial((i == 0) + (j == 0), (i == 1) + (j == 1));
            for (int k = 0; k < 2; ++k) hess -= state.christoffel(k, i, j).value() * d[k];
            out += state.g_inv(i, j).value() * hess;
        }
    }
    return out;
}

Jet scalar_field(const GeometricState& state, ScalarField field) {
    switch (field) {
    case ScalarField::PhiNorm2: return state.phi_norm2();
    case ScalarField::PhiHNorm2: {
        const Mat2 p = state.phi_h();
        return frobenius(p, p);
    }
    case ScalarField::Phi4Norm2: {
        if (state.minimal()) throw Error(ErrorKind::MinimalPoint, "phi_4 needs E3 = H/|H|");
        if (state.normal_dim() < 2) throw Error(ErrorKind::NotApplicable, "phi_4 needs codimension >= 2");
        return frobenius(state.shape(1), state.shape(1));
    }
    case ScalarField::TNorm2: return state.t_norm2();
    case ScalarField::PhiMinusCT: return state.phi_norm2() - state.t_norm2() * state.space().c();
    }
    return Jet();
}

double intrinsic_laplacian(const GeometricState& state, ScalarField field) {
    return laplacian(state, scalar_field(state, field));
}

double intrinsic_laplacian(const Immersion& im, ChartPoint point, ScalarField field) {
    return intrinsic_laplacian(evaluate_state(im, point), field);
}

JetVec normal_field(const GeometricState& state, NormalField which) {
    switch (which) {
    case NormalField::H: return state.mean_curvature();
    case NormalField::E3: return state.normal(0);
    case NormalField::E4:
        if (state.normal_dim() < 2) throw Error(ErrorKind::NotApplicable, "E4 needs codimension >= 2");
        return state.normal(1);
    }
    return {};
}

double normal_parallel_residual(const GeometricState& state, const JetVec& V) {
    const ProductSpace& space = state.space();
    const AmbientVec x0 = values(state.position());
    std::array<AmbientVec, 2> tangents{values(state.tangent(0)), values(state.tangent(1))};
    std::array<AmbientVec, 2> dperp;
    for (int k = 0; k < 2; ++k) {
        AmbientVec d(V.size());
        for (std::size_t m = 0; m < V.size(); ++m) d[m] = V[m].derivative(k).value();
        d = space.project_to_product(x0, d);
        for (const AmbientVec& E : tangents) {
            const double p = space.inner(d, E);
            for (std::size_t m = 0; m < d.size(); ++m) d[m] -= p * E[m];
        }
        dperp[static_cast<std::size_t>(k)] = std::move(d);
    }
    double worst = 0.0;
    for (int a = 0; a < 2; ++a) {
        AmbientVec w(V.size(), 0.0);
        for (int k = 0; k < 2; ++k) {
            const double ek = state.frame_coeff(a, k).value();
            for (std::size_t m = 0; m < w.size(); ++m) w[m] += ek * dperp[static_cast<std::size_t>(k)][m];
        }
        worst = std::max(worst, norm_of(space, w));
    }
    return worst;
}

double normal_connection_residual(const GeometricState& state) {
    return normal_parallel_residual(state, state.mean_curvature()) / (1.0 + state.mean_curvature_norm());
}

double normal_connection_residual(const Immersion& im, ChartPoint point) {
    return normal_connection_residual(evaluate_state(im, point));
}

std::array<Jet, 3> shape_coords(const GeometricState& state, const JetVec& V) {
    std::array<Jet, 3> b;
    for (const auto& [i, j] : kSymPairs) b[static_cast<std::size_t>(i + j)] = state.space().inner(state.sigma_vec(i, j), V);
    return b;
}

std::array<Jet, 3> shape_coords(const GeometricState& state, ShapeTarget which) {
    switch (which) {
    case ShapeTarget::Phi3: {
        if (state.minimal()) throw Error(ErrorKind::MinimalPoint, "phi_3 needs E3 = H/|H|");
        std::array<Jet, 3> b = shape_coords(state, state.normal(0));
        const Jet h = sqrt(state.mean_curvature_norm2());
        for (std::size_t m = 0; m < 3; ++m) b[m] -= h * state.g(static_cast<int>(m) / 2, (static_cast<int>(m) + 1) / 2);
        return b;
    }
    case ShapeTarget::Phi4:
        if (state.minimal()) throw Error(ErrorKind::MinimalPoint, "phi_4 needs E3 = H/|H|");
        return shape_coords(state, normal_field(state, NormalField::E4));
    case ShapeTarget::AH: return shape_coords(state, normal_field(state, NormalField::H));
    case ShapeTarget::AE3: return shape_coords(state, normal_field(state, NormalField::E3));
    case ShapeTarget::AE4: return shape_coords(state, normal_field(state, NormalField::E4));
    }
    return {};
}

std::array<Mat2d, 2> covariant_derivative_frame(const GeometricState& state, const std::array<Jet, 3>& b) {
    // nabla_k b_ij = d_k b_ij - Gamma^l_ki b_lj - Gamma^l_kj b_il
    double nab[2][2][2];
    for (int k = 0; k < 2; ++k)
        for (int i = 0; i < 2; ++i)
            for (int j = 0; j < 2; ++j) {
                double v = sym_get(b, i, j).derivative(k).value();
                for (int l = 0; l < 2; ++l) {
                    v -= state.christoffel(l, k, i).value() * sym_get(b, l, j).value();
                    v -= state.christoffel(l, k, j).value() * sym_get(b, i, l).value();
                }
                nab[k][i][j] = v;
            }
    double e[2][2];
    for (int a = 0; a < 2; ++a)
        for (int i = 0; i < 2; ++i) e[a][i] = state.frame_coeff(a, i).value();
    std::array<Mat2d, 2> out{};
    for (int c = 0; c < 2; ++c)
        for (int a = 0; a < 2; ++a)
            for (int bb = 0; bb < 2; ++bb) {
                double v = 0.0;
                for (int k = 0; k < 2; ++k)
                    for (int i = 0; i < 2; ++i)
                        for (int j = 0; j < 2; ++j) v += e[c][k] * e[a][i] * e[bb][j] * nab[k][i][j];
                out[static_cast<std::size_t>(c)][static_cast<std::size_t>(a)][static_cast<std::size_t>(bb)] = v;
            }
    return out;
}

namespace {

double gradient_norm2(const std::array<Mat2d, 2>& d) {
    double s = 0.0;
    for (const auto& m : d)
        for (const auto& row : m)
            for (double x : row) s += x * x;
    return s;
}

} // namespace

double covariant_gradient_norm(const GeometricState& state, ShapeTarget which) {
    return gradient_norm2(covariant_derivative_frame(state, shape_coords(state, which)));
}

double covariant_gradient_norm(const GeometricState& state, const JetVec& V) {
    return gradient_norm2(covariant_derivative_frame(state, shape_coords(state, V)));
}

double covariant_gradient_norm(const Immersion& im, ChartPoint point, ShapeTarget which) {
    return covariant_gradient_norm(evaluate_state(im, point), which);
}

double q_form(const GeometricState& state, int i, int j) {
    double sigma_h = 0.0;
    for (std::size_t alpha = 0; alpha < state.normal_dim(); ++alpha) {
        const Mat2& A = state.shape(alpha);
        sigma_h += A[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].value() * 0.5 * trace(A).value();
    }
    return 2.0 * sigma_h - state.space().c() * state.t_component(i).value() * state.t_component(j).value();
}

} // namespace pmc
