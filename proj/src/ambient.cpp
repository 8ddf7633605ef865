#include "pmc/ambient.hpp"

#include <algorithm>
#include <cmath>

namespace pmc {

namespace {

void check_dim(std::size_t got, const ProductSpace& space, const char* what) {
    if (got != space.ambient_dim()) {
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(what) + " has " + std::to_string(got) + " coordinates, expected " +
                        std::to_string(space.ambient_dim()));
    }
}

void check_on_manifold(const AmbientVec& p, const ProductSpace& space, double tol) {
    check_dim(p.size(), space, "point");
    const double res = space.quadric_residual(p);
    if (!(res <= tol)) {
        throw Error(ErrorKind::OffManifold,
                    "point is off the quadric (residual " + std::to_string(res) + ")");
    }
    if (space.base().lorentzian() && p[0] <= 0.0) {
        throw Error(ErrorKind::OffManifold, "point lies on the lower sheet of the hyperboloid");
    }
}

} // namespace

SpaceForm::SpaceForm(double c, int n) : c_(c), n_(n) {
    if (n < 2) throw Error(ErrorKind::BadParameters, "space form dimension must be >= 2");
    if (!std::isfinite(c)) throw Error(ErrorKind::BadParameters, "curvature must be finite");
}

AmbientVec ProductSpace::xi() const {
    AmbientVec out(ambient_dim(), 0.0);
    out[line_index()] = 1.0;
    return out;
}

double ProductSpace::quadric_residual(std::span<const double> p) const {
    if (c() == 0.0) return 0.0;
    const std::span<const double> m = p.first(base_.coordinates());
    return std::abs(inner(m, m) * c() - 1.0);
}

double ProductSpace::tangency_residual(std::span<const double> p, std::span<const double> w) const {
    if (c() == 0.0) return 0.0;
    const std::size_t m = base_.coordinates();
    const double pw = inner(p.first(m), w.first(m));
    double scale = 0.0;
    for (double x : w) scale += x * x;
    // <w_M, p_M> sqrt|c| is the component along the unit quadric normal
    return std::abs(pw) * std::sqrt(std::abs(c())) / std::max(1.0, std::sqrt(scale));
}

double ambient_inner(const AmbientVec& u, const AmbientVec& v, const ProductSpace& space) {
    check_dim(u.size(), space, "first vector");
    check_dim(v.size(), space, "second vector");
    return space.inner(u, v);
}

AmbientVec tangential_project(const AmbientVec& p, const AmbientVec& w, const ProductSpace& space,
                              double tol) {
    check_on_manifold(p, space, tol);
    check_dim(w.size(), space, "vector");
    return space.project_to_product(p, w);
}

AmbientVec ambient_curvature(const AmbientVec& X, const AmbientVec& Y, const AmbientVec& Z,
                             const AmbientVec& p, const ProductSpace& space, double tol) {
    check_on_manifold(p, space, tol);
    for (const AmbientVec* v : {&X, &Y, &Z}) {
        check_dim(v->size(), space, "vector");
        const double res = space.tangency_residual(p, *v);
        if (!(res <= tol)) {
            throw Error(ErrorKind::NotTangent,
                        "vector not tangent to the product (residual " + std::to_string(res) + ")");
        }
    }
    const double c = space.c();
    const std::size_t t = space.line_index();
    const double yz = space.inner(Y, Z), xz = space.inner(X, Z);
    const double xt = X[t], yt = Y[t], zt = Z[t];

    const double cx = c * (yz - yt * zt);
    const double cy = c * (-xz + xt * zt);
    const double cxi = c * (xz * yt - yz * xt);
    AmbientVec out(X.size(), 0.0);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = cx * X[k] + cy * Y[k];
    out[t] += cxi;
    return out;
}

} // namespace pmc
