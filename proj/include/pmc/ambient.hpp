#pragma once

// The product M^n(c) x R realized inside a flat space. M^n(c) is the quadric
// <x, x> = 1/c in R^{n+1} (Euclidean for c > 0, Lorentzian with signature
// (-, +, ..., +) for c < 0) or flat R^n for c = 0. The line factor is the last
// coordinate, so xi = d/dt is a constant coordinate vector.

#include "pmc/errors.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pmc {

using AmbientVec = std::vector<double>;

class SpaceForm {
public:
    SpaceForm(double c, int n);

    double c() const noexcept { return c_; }
    int n() const noexcept { return n_; }
    bool lorentzian() const noexcept { return c_ < 0.0; }
    /// Number of flat coordinates carrying the space form.
    std::size_t coordinates() const noexcept {
        return static_cast<std::size_t>(c_ == 0.0 ? n_ : n_ + 1);
    }

private:
    double c_;
    int n_;
};

class ProductSpace {
public:
    ProductSpace(double c, int n) : base_(c, n) {}

    const SpaceForm& base() const noexcept { return base_; }
    double c() const noexcept { return base_.c(); }
    int n() const noexcept { return base_.n(); }
    std::size_t ambient_dim() const noexcept { return base_.coordinates() + 1; }
    std::size_t line_index() const noexcept { return base_.coordinates(); }
    AmbientVec xi() const;

    /// Signature-aware inner product; works for plain doubles and jets.
    template <class S>
    S inner(std::span<const S> a, std::span<const S> b) const {
        S acc = a[0] * b[0];
        if (base_.lorentzian()) acc = -acc;
        for (std::size_t k = 1; k < a.size(); ++k) acc += a[k] * b[k];
        return acc;
    }
    template <class S>
    S inner(const std::vector<S>& a, const std::vector<S>& b) const {
        return inner(std::span<const S>(a), std::span<const S>(b));
    }

    /// Removes the quadric-normal component of the M-factor of `w` at `p`
    /// (w - c<w_M, p_M> p_M). For c = 0 this is the identity.
    template <class S>
    std::vector<S> project_to_product(const std::vector<S>& p, const std::vector<S>& w) const {
        std::vector<S> out = w;
        if (base_.c() == 0.0) return out;
        const std::size_t m = base_.coordinates();
        S pw = p[0] * w[0];
        if (base_.lorentzian()) pw = -pw;
        for (std::size_t k = 1; k < m; ++k) pw += p[k] * w[k];
        pw *= base_.c();
        for (std::size_t k = 0; k < m; ++k) out[k] -= pw * p[k];
        return out;
    }

    /// |<p_M, p_M> - 1/c| scaled by |c|, i.e. relative to the quadric radius squared.
    double quadric_residual(std::span<const double> p) const;
    /// Size of the quadric-normal component of w at p, relative to |w|.
    double tangency_residual(std::span<const double> p, std::span<const double> w) const;

private:
    SpaceForm base_;
};

inline constexpr double kTangencyTolerance = 1e-9;

double ambient_inner(const AmbientVec& u, const AmbientVec& v, const ProductSpace& space);

/// Orthogonal projection of w onto T_p(M^n(c) x R).
AmbientVec tangential_project(const AmbientVec& p, const AmbientVec& w, const ProductSpace& space,
                              double tol = kTangencyTolerance);

/// Curvature of the product, R(X,Y)Z, for X, Y, Z tangent at p.
AmbientVec ambient_curvature(const AmbientVec& X, const AmbientVec& Y, const AmbientVec& Z,
                             const AmbientVec& p, const ProductSpace& space,
                             double tol = kTangencyTolerance);

} // namespace pmc
