#pragma once

// Independent reference computations for the tests: central finite
// differences and closed-form curvature data of the model surfaces.

#include <algorithm>
#include <cmath>
#include <functional>

namespace oracle {

using Scalar2 = std::function<double(double, double)>;

/// Central difference of f at (u, v) of order (i, j), i + j <= 2.
inline double central(const Scalar2& f, double u, double v, int i, int j, double h) {
    if (i == 0 && j == 0) return f(u, v);
    if (i + j == 1) {
        const double du = i * h, dv = j * h;
        return (f(u + du, v + dv) - f(u - du, v - dv)) / (2 * h);
    }
    if (i == 2) return (f(u + h, v) - 2 * f(u, v) + f(u - h, v)) / (h * h);
    if (j == 2) return (f(u, v + h) - 2 * f(u, v) + f(u, v - h)) / (h * h);
    return (f(u + h, v + h) - f(u + h, v - h) - f(u - h, v + h) + f(u - h, v - h)) / (4 * h * h);
}

inline double rel_diff(double a, double b) {
    return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)});
}

/// Principal curvatures of S^1(r) x S^1(s) in the 3-sphere of curvature c.
struct TorusCurvatures {
    double k1, k2;
};
inline TorusCurvatures torus_principal(double c, double r) {
    const double s = std::sqrt(1.0 / c - r * r);
    const double a = std::sqrt(c);
    return {a * s / r, -a * r / s};
}

/// Geodesic curvature of a geodesic circle (and principal curvature of a
/// geodesic sphere) of radius rho in M(c).
inline double geodesic_circle_curvature(double c, double rho) {
    if (c > 0) return std::sqrt(c) * std::cos(std::sqrt(c) * rho) / std::sin(std::sqrt(c) * rho);
    if (c < 0) return std::sqrt(-c) * std::cosh(std::sqrt(-c) * rho) / std::sinh(std::sqrt(-c) * rho);
    return 1.0 / rho;
}

} // namespace oracle
