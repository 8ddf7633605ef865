#include "pmc/jet.hpp"

#include "pmc/errors.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace pmc {

namespace {

void check_degree(int degree) {
    if (degree < 0 || degree > Jet::kMaxDegree) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "jet degree " + std::to_string(degree) + " outside [0, " +
                        std::to_string(Jet::kMaxDegree) + "]");
    }
}

double factorial(int n) {
    double f = 1.0;
    for (int k = 2; k <= n; ++k) f *= k;
    return f;
}

// f(a0 + h) = sum_k series[k] h^k with h the nonconstant part of `a`. Powers of
// h beyond the jet degree vanish, so the sum is exact for the truncation.
Jet compose(const Jet& a, std::span<const double> series) {
    const int d = a.degree();
    Jet h = a;
    h.set_coeff(0, 0, 0.0);
    Jet result(d, series[0]);
    Jet power(d, 1.0);
    for (int k = 1; k <= d; ++k) {
        power *= h;
        result += power * series[static_cast<std::size_t>(k)];
    }
    return result;
}

} // namespace

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::DivisionBySingularJet: return "DivisionBySingularJet";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::OrderOutOfRange: return "OrderOutOfRange";
    case ErrorKind::InsufficientJetDegree: return "InsufficientJetDegree";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotTangent: return "NotTangent";
    case ErrorKind::OffManifold: return "OffManifold";
    case ErrorKind::DegenerateMetric: return "DegenerateMetric";
    case ErrorKind::MinimalPoint: return "MinimalPoint";
    case ErrorKind::NotApplicable: return "NotApplicable";
    case ErrorKind::BadParameters: return "BadParameters";
    case ErrorKind::UsageError: return "UsageError";
    }
    return "Unknown";
}

Jet::Jet(int degree, double value) : degree_(degree) {
    check_degree(degree);
    c_[0] = value;
}

Jet Jet::variable(int axis, double at, int degree) {
    Jet j(degree, at);
    if (degree >= 1) {
        if (axis == 0)
            j.c_[index(1, 0)] = 1.0;
        else
            j.c_[index(0, 1)] = 1.0;
    }
    return j;
}

double Jet::coeff(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) return 0.0;
    return c_[index(i, j)];
}

void Jet::set_coeff(int i, int j, double value) {
    if (i < 0 || j < 0 || i + j > degree_) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "monomial u^" + std::to_string(i) + " v^" + std::to_string(j) +
                        " exceeds jet degree " + std::to_string(degree_));
    }
    c_[index(i, j)] = value;
}

double Jet::partial(int i, int j) const {
    if (i < 0 || j < 0 || i + j > degree_) {
        throw Error(ErrorKind::OrderOutOfRange,
                    "partial of order (" + std::to_string(i) + "," + std::to_string(j) +
                        ") exceeds jet degree " + std::to_string(degree_));
    }
    return c_[index(i, j)] * factorial(i) * factorial(j);
}

Jet Jet::derivative(int axis) const {
    if (degree_ == 0) {
        throw Error(ErrorKind::InsufficientJetDegree,
                    "cannot differentiate a degree-0 jet");
    }
    Jet out(degree_ - 1);
    for (int k = 0; k < degree_; ++k) {
        for (int j = 0; j <= k; ++j) {
            const int i = k - j;
            out.c_[index(i, j)] = axis == 0 ? (i + 1) * c_[index(i + 1, j)]
                                            : (j + 1) * c_[index(i, j + 1)];
        }
    }
    return out;
}

Jet Jet::truncated(int degree) const {
    check_degree(degree);
    Jet out(std::min(degree, degree_));
    std::copy_n(c_.begin(), out.size(), out.c_.begin());
    return out;
}

Jet Jet::operator-() const {
    Jet out = *this;
    for (std::size_t k = 0; k < size(); ++k) out.c_[k] = -c_[k];
    return out;
}

Jet& Jet::operator+=(const Jet& rhs) {
    degree_ = std::min(degree_, rhs.degree_);
    for (std::size_t k = 0; k < size(); ++k) c_[k] += rhs.c_[k];
    for (std::size_t k = size(); k < kCapacity; ++k) c_[k] = 0.0;
    return *this;
}

Jet& Jet::operator-=(const Jet& rhs) {
    degree_ = std::min(degree_, rhs.degree_);
    for (std::size_t k = 0; k < size(); ++k) c_[k] -= rhs.c_[k];
    for (std::size_t k = size(); k < kCapacity; ++k) c_[k] = 0.0;
    return *this;
}

Jet& Jet::operator*=(const Jet& rhs) {
    *this = *this * rhs;
    return *this;
}

Jet& Jet::operator/=(const Jet& rhs) {
    *this = divide(*this, rhs);
    return *this;
}

Jet& Jet::operator*=(double rhs) {
    for (std::size_t k = 0; k < size(); ++k) c_[k] *= rhs;
    return *this;
}

Jet& Jet::operator/=(double rhs) {
    if (std::abs(rhs) < kDivisionEpsilon) {
        throw Error(ErrorKind::DivisionBySingularJet, "division of jet by near-zero scalar");
    }
    for (std::size_t k = 0; k < size(); ++k) c_[k] /= rhs;
    return *this;
}

Jet operator*(const Jet& lhs, const Jet& rhs) {
    const int d = std::min(lhs.degree_, rhs.degree_);
    Jet out(d);
    for (int ka = 0; ka <= d; ++ka) {
        for (int ja = 0; ja <= ka; ++ja) {
            const double a = lhs.c_[Jet::index(ka - ja, ja)];
            if (a == 0.0) continue;
            for (int kb = 0; kb <= d - ka; ++kb) {
                const std::size_t base = Jet::index(ka - ja + kb, ja);
                const std::size_t rb = Jet::index(kb, 0);
                for (int jb = 0; jb <= kb; ++jb) {
                    // index(i, j) for fixed total order is contiguous in j
                    out.c_[base + static_cast<std::size_t>(jb)] += a * rhs.c_[rb + static_cast<std::size_t>(jb)];
                }
            }
        }
    }
    return out;
}

Jet operator+(Jet lhs, const Jet& rhs) { return lhs += rhs; }
Jet operator-(Jet lhs, const Jet& rhs) { return lhs -= rhs; }
Jet operator/(const Jet& lhs, const Jet& rhs) { return divide(lhs, rhs); }
Jet operator+(Jet lhs, double rhs) { return lhs += rhs; }
Jet operator+(double lhs, Jet rhs) { return rhs += lhs; }
Jet operator-(Jet lhs, double rhs) { return lhs -= rhs; }
Jet operator-(double lhs, const Jet& rhs) { return (-rhs) += lhs; }
Jet operator*(Jet lhs, double rhs) { return lhs *= rhs; }
Jet operator*(double lhs, Jet rhs) { return rhs *= lhs; }
Jet operator/(Jet lhs, double rhs) { return lhs /= rhs; }
Jet operator/(double lhs, const Jet& rhs) { return reciprocal(rhs) * lhs; }

Jet reciprocal(const Jet& a, double epsilon) {
    const double a0 = a.value();
    if (!(std::abs(a0) >= epsilon)) {
        throw Error(ErrorKind::DivisionBySingularJet,
                    "divisor constant term " + std::to_string(a0) + " below epsilon");
    }
    std::array<double, Jet::kMaxDegree + 1> s{};
    double term = 1.0 / a0;
    for (int k = 0; k <= a.degree(); ++k) {
        s[static_cast<std::size_t>(k)] = term;
        term *= -1.0 / a0;
    }
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.degree()) + 1));
}

Jet divide(const Jet& num, const Jet& den, double epsilon) {
    return num * reciprocal(den, epsilon);
}

Jet pow(const Jet& a, double exponent) {
    const double a0 = a.value();
    const bool natural = exponent >= 0.0 && std::floor(exponent) == exponent;
    if (natural && exponent <= 16.0) {
        Jet out(a.degree(), 1.0);
        for (int k = 0; k < static_cast<int>(exponent); ++k) out *= a;
        return out;
    }
    if (!(a0 > 0.0)) {
        throw Error(ErrorKind::DomainError,
                    "pow with non-integer exponent needs a positive constant term, got " +
                        std::to_string(a0));
    }
    std::array<double, Jet::kMaxDegree + 1> s{};
    // binomial series: a0^p * C(p, k) * a0^-k
    double coef = std::pow(a0, exponent);
    for (int k = 0; k <= a.degree(); ++k) {
        s[static_cast<std::size_t>(k)] = coef;
        coef *= (exponent - k) / ((k + 1) * a0);
    }
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.degree()) + 1));
}

Jet sqrt(const Jet& a) {
    if (a.degree() == 0) {
        if (a.value() < 0.0) {
            throw Error(ErrorKind::DomainError,
                        "sqrt of negative constant term " + std::to_string(a.value()));
        }
        return Jet(0, std::sqrt(a.value()));
    }
    if (!(a.value() > 0.0)) {
        throw Error(ErrorKind::DomainError,
                    "sqrt needs a positive constant term, got " + std::to_string(a.value()));
    }
    return pow(a, 0.5);
}

Jet log(const Jet& a) {
    const double a0 = a.value();
    if (!(a0 > 0.0)) {
        throw Error(ErrorKind::DomainError,
                    "log needs a positive constant term, got " + std::to_string(a0));
    }
    std::array<double, Jet::kMaxDegree + 1> s{};
    s[0] = std::log(a0);
    double inv = 1.0;
    for (int k = 1; k <= a.degree(); ++k) {
        inv /= a0;
        s[static_cast<std::size_t>(k)] = (k % 2 == 1 ? 1.0 : -1.0) * inv / k;
    }
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.degree()) + 1));
}

Jet exp(const Jet& a) {
    std::array<double, Jet::kMaxDegree + 1> s{};
    const double e = std::exp(a.value());
    for (int k = 0; k <= a.degree(); ++k) s[static_cast<std::size_t>(k)] = e / factorial(k);
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.degree()) + 1));
}

namespace {

// Series for functions whose derivatives cycle with period 2 or 4 (up to sign).
Jet cyclic(const Jet& a, std::array<double, 4> derivs) {
    std::array<double, Jet::kMaxDegree + 1> s{};
    for (int k = 0; k <= a.degree(); ++k) {
        s[static_cast<std::size_t>(k)] = derivs[static_cast<std::size_t>(k % 4)] / factorial(k);
    }
    return compose(a, std::span<const double>(s.data(), static_cast<std::size_t>(a.degree()) + 1));
}

} // namespace

Jet sin(const Jet& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return cyclic(a, {s, c, -s, -c});
}

Jet cos(const Jet& a) {
    const double s = std::sin(a.value()), c = std::cos(a.value());
    return cyclic(a, {c, -s, -c, s});
}

Jet sinh(const Jet& a) {
    const double s = std::sinh(a.value()), c = std::cosh(a.value());
    return cyclic(a, {s, c, s, c});
}

Jet cosh(const Jet& a) {
    const double s = std::sinh(a.value()), c = std::cosh(a.value());
    return cyclic(a, {c, s, c, s});
}

} // namespace pmc
