#pragma once

// Truncated bivariate Taylor polynomials ("jets") in the chart variables (u, v).
//
// A jet of degree d stores the coefficients c_ij of u^i v^j, i + j <= d, of the
// Taylor expansion of a scalar function about the evaluation point. Storage is
// dense and graded-lexicographic: total order k first, then the power of v.

#include <array>
#include <cstddef>
#include <span>

namespace pmc {

namespace detail {
constexpr std::size_t jet_size(int degree) noexcept {
    return static_cast<std::size_t>((degree + 1) * (degree + 2) / 2);
}
} // namespace detail

class Jet {
public:
    static constexpr int kMaxDegree = 6;
    static constexpr int kDefaultDegree = 4;
    static constexpr double kDivisionEpsilon = 1e-14;

    /// Zero jet of degree 0.
    Jet() = default;
    explicit Jet(int degree, double value = 0.0);

    static Jet constant(double value, int degree) { return Jet(degree, value); }
    /// The coordinate function `axis` (0 = u, 1 = v) expanded about `at`.
    static Jet variable(int axis, double at, int degree);

    static constexpr std::size_t size_for(int degree) noexcept { return detail::jet_size(degree); }
    static constexpr std::size_t index(int i, int j) noexcept {
        const int k = i + j;
        return static_cast<std::size_t>(k * (k + 1) / 2 + j);
    }

    int degree() const noexcept { return degree_; }
    std::size_t size() const noexcept { return size_for(degree_); }
    double value() const noexcept { return c_[0]; }

    double coeff(int i, int j) const;
    void set_coeff(int i, int j, double value);
    std::span<const double> coeffs() const noexcept { return {c_.data(), size()}; }

    /// d^{i+j} f / du^i dv^j at the expansion point.
    double partial(int i, int j) const;

    /// Exact partial derivative as a jet of one degree less.
    Jet derivative(int axis) const;
    Jet truncated(int degree) const;

    Jet operator-() const;
    Jet& operator+=(const Jet& rhs);
    Jet& operator-=(const Jet& rhs);
    Jet& operator*=(const Jet& rhs);
    Jet& operator/=(const Jet& rhs);
    Jet& operator+=(double rhs) { c_[0] += rhs; return *this; }
    Jet& operator-=(double rhs) { c_[0] -= rhs; return *this; }
    Jet& operator*=(double rhs);
    Jet& operator/=(double rhs);

    friend Jet operator*(const Jet& lhs, const Jet& rhs);

private:
    static constexpr std::size_t kCapacity = detail::jet_size(kMaxDegree);

    int degree_ = 0;
    std::array<double, kCapacity> c_{};
};

Jet operator+(Jet lhs, const Jet& rhs);
Jet operator-(Jet lhs, const Jet& rhs);
Jet operator*(const Jet& lhs, const Jet& rhs);
Jet operator/(const Jet& lhs, const Jet& rhs);
Jet operator+(Jet lhs, double rhs);
Jet operator+(double lhs, Jet rhs);
Jet operator-(Jet lhs, double rhs);
Jet operator-(double lhs, const Jet& rhs);
Jet operator*(Jet lhs, double rhs);
Jet operator*(double lhs, Jet rhs);
Jet operator/(Jet lhs, double rhs);
Jet operator/(double lhs, const Jet& rhs);

/// Division with an explicit singularity threshold on the divisor's constant term.
Jet divide(const Jet& num, const Jet& den, double epsilon = Jet::kDivisionEpsilon);
Jet reciprocal(const Jet& a, double epsilon = Jet::kDivisionEpsilon);

Jet sqrt(const Jet& a);
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet sinh(const Jet& a);
Jet cosh(const Jet& a);
Jet exp(const Jet& a);
Jet log(const Jet& a);
Jet pow(const Jet& a, double exponent);

} // namespace pmc
