#include "pmc/errors.hpp"
#include "pmc/jet.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using pmc::Error;
using pmc::ErrorKind;
using pmc::Jet;

namespace {

Jet U(int d = 4) { return Jet::variable(0, 0.0, d); }
Jet V(int d = 4) { return Jet::variable(1, 0.0, d); }

// Random polynomial of total degree <= deg as a coefficient table.
struct Poly {
    double c[7][7] = {};
};

Poly random_poly(std::mt19937& rng, int deg) {
    std::uniform_real_distribution<double> d(-2.0, 2.0);
    Poly p;
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) p.c[i][j] = d(rng);
    return p;
}

Jet to_jet(const Poly& p, int deg) {
    Jet out(deg);
    for (int i = 0; i <= deg; ++i)
        for (int j = 0; i + j <= deg; ++j) out.set_coeff(i, j, p.c[i][j]);
    return out;
}

void expect_error(ErrorKind kind, const std::function<void()>& f) {
    try {
        f();
        ADD_FAILURE() << "expected " << pmc::to_string(kind);
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

} // namespace

TEST(Jet, StorageLayout) {
    EXPECT_EQ(Jet::size_for(4), 15u);
    EXPECT_EQ(Jet(4).size(), 15u);
    EXPECT_EQ(Jet::index(0, 0), 0u);
    EXPECT_EQ(Jet::index(1, 0), 1u);
    EXPECT_EQ(Jet::index(0, 1), 2u);
    EXPECT_EQ(Jet::index(0, 4), 14u);
}

TEST(Jet, ProductOfLinearFactors) {
    const Jet p = (1.0 + U()) * (1.0 + V());
    EXPECT_DOUBLE_EQ(p.coeff(0, 0), 1.0);
    EXPECT_DOUBLE_EQ(p.coeff(1, 0), 1.0);
    EXPECT_DOUBLE_EQ(p.coeff(0, 1), 1.0);
    EXPECT_DOUBLE_EQ(p.coeff(1, 1), 1.0);
    EXPECT_DOUBLE_EQ(p.coeff(2, 0), 0.0);
    EXPECT_DOUBLE_EQ(p.coeff(0, 2), 0.0);
}

TEST(Jet, SinTimesCosIsHalfSinDouble) {
    const Jet p = sin(U()) * cos(U());
    EXPECT_NEAR(p.coeff(1, 0), 1.0, 1e-15);
    EXPECT_NEAR(p.coeff(2, 0), 0.0, 1e-15);
    EXPECT_NEAR(p.coeff(3, 0), -2.0 / 3.0, 1e-15);
    EXPECT_NEAR(p.coeff(4, 0), 0.0, 1e-15);
}

TEST(Jet, DivisionInverts) {
    const Jet x = 2.0 + U() - 0.5 * V() * V();
    const Jet one = x * (1.0 / x);
    EXPECT_NEAR(one.value(), 1.0, 1e-15);
    for (std::size_t k = 1; k < one.size(); ++k) EXPECT_NEAR(one.coeffs()[k], 0.0, 1e-14);
}

TEST(Jet, DivisionBySingular) {
    expect_error(ErrorKind::DivisionBySingularJet, [] { (void)(U() / U()); });
    expect_error(ErrorKind::DivisionBySingularJet, [] { (void)reciprocal(Jet(4, 1e-20)); });
}

TEST(Jet, SqrtOfSquare) {
    const Jet a = 1.0 + U();
    const Jet r = sqrt(a * a);
    EXPECT_NEAR(r.coeff(0, 0), 1.0, 1e-15);
    EXPECT_NEAR(r.coeff(1, 0), 1.0, 1e-15);
    for (int k = 2; k <= 4; ++k) EXPECT_NEAR(r.coeff(k, 0), 0.0, 1e-14);
}

TEST(Jet, SqrtBinomialSeries) {
    const Jet r = sqrt(4.0 + U());
    EXPECT_NEAR(r.coeff(0, 0), 2.0, 1e-15);
    EXPECT_NEAR(r.coeff(1, 0), 1.0 / 4.0, 1e-15);
    EXPECT_NEAR(r.coeff(2, 0), -1.0 / 64.0, 1e-15);
    EXPECT_NEAR(r.coeff(3, 0), 1.0 / 512.0, 1e-15);
}

TEST(Jet, DomainErrors) {
    expect_error(ErrorKind::DomainError, [] { (void)log(U()); });
    expect_error(ErrorKind::DomainError, [] { (void)sqrt(U() - 1.0); });
    expect_error(ErrorKind::DomainError, [] { (void)pow(U() - 1.0, 0.5); });
}

TEST(Jet, PartialDerivatives) {
    const Jet m = U() * U() * V();
    EXPECT_DOUBLE_EQ(m.partial(2, 1), 2.0);
    EXPECT_DOUBLE_EQ(m.partial(1, 1), 0.0);
    EXPECT_DOUBLE_EQ(sin(U() + V()).partial(1, 0), 1.0);
    expect_error(ErrorKind::OrderOutOfRange, [&] { (void)m.partial(3, 2); });
}

TEST(Jet, DerivativeOfDegreeZeroThrows) {
    expect_error(ErrorKind::InsufficientJetDegree, [] { (void)Jet(0, 1.0).derivative(0); });
}

TEST(Jet, ExpLogRoundTrip) {
    const Jet a = 1.5 + 0.3 * U() - 0.7 * V() + U() * V();
    const Jet b = exp(log(a));
    for (std::size_t k = 0; k < a.size(); ++k) EXPECT_NEAR(a.coeffs()[k], b.coeffs()[k], 1e-13);
}

TEST(Jet, HyperbolicIdentity) {
    const Jet a = 0.4 + U() - 2.0 * V();
    const Jet one = cosh(a) * cosh(a) - sinh(a) * sinh(a);
    EXPECT_NEAR(one.value(), 1.0, 1e-14);
    for (std::size_t k = 1; k < one.size(); ++k) EXPECT_NEAR(one.coeffs()[k], 0.0, 1e-12);
}

TEST(Jet, PowMatchesRepeatedProduct) {
    const Jet a = 1.2 + U() + 0.5 * V();
    const Jet p = pow(a, 2.5);
    const Jet q = a * a * sqrt(a);
    for (std::size_t k = 0; k < p.size(); ++k) EXPECT_NEAR(p.coeffs()[k], q.coeffs()[k], 1e-13);
}

TEST(JetProperty, RandomPolynomialArithmeticIsExact) {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 50; ++trial) {
        const Poly p = random_poly(rng, 2), q = random_poly(rng, 2);
        const Jet a = to_jet(p, 4), b = to_jet(q, 4);
        const Jet sum = a + b, diff = a - b, prod = a * b;
        double expect[7][7] = {};
        for (int i = 0; i <= 2; ++i)
            for (int j = 0; i + j <= 2; ++j)
                for (int k = 0; k <= 2; ++k)
                    for (int l = 0; k + l <= 2; ++l) expect[i + k][j + l] += p.c[i][j] * q.c[k][l];
        for (int i = 0; i <= 4; ++i)
            for (int j = 0; i + j <= 4; ++j) {
                EXPECT_NEAR(sum.coeff(i, j), p.c[i][j] + q.c[i][j], 1e-14);
                EXPECT_NEAR(diff.coeff(i, j), p.c[i][j] - q.c[i][j], 1e-14);
                EXPECT_NEAR(prod.coeff(i, j), expect[i][j], 1e-13);
            }
    }
}

TEST(JetProperty, ProductRule) {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Jet a = to_jet(random_poly(rng, 4), 4), b = to_jet(random_poly(rng, 4), 4);
        const Jet ab = a * b;
        EXPECT_NEAR(ab.partial(1, 0), a.partial(1, 0) * b.value() + a.value() * b.partial(1, 0), 1e-12);
        EXPECT_NEAR(ab.partial(0, 1), a.partial(0, 1) * b.value() + a.value() * b.partial(0, 1), 1e-12);
        EXPECT_DOUBLE_EQ(ab.value(), a.value() * b.value());
    }
}

TEST(JetProperty, AgreesWithFiniteDifferences) {
    const double u0 = 0.3, v0 = -0.7;
    auto f = [](auto u, auto v) { return sin(u * v) * exp(u) + sqrt(2.0 + cos(v)) / (1.5 + u * u); };
    const Jet j = f(Jet::variable(0, u0, 4), Jet::variable(1, v0, 4));
    const oracle::Scalar2 plain = [&](double u, double v) {
        return std::sin(u * v) * std::exp(u) + std::sqrt(2.0 + std::cos(v)) / (1.5 + u * u);
    };
    for (int i = 0; i <= 2; ++i)
        for (int k = 0; i + k <= 2; ++k) {
            const double fd = oracle::central(plain, u0, v0, i, k, 1e-4);
            EXPECT_LT(oracle::rel_diff(j.partial(i, k), fd), 1e-6) << i << "," << k;
        }
}

TEST(Jet, MixedDegreeTruncatesToMinimum) {
    const Jet a = U(4), b = V(2);
    EXPECT_EQ((a * b).degree(), 2);
    EXPECT_EQ((a + b).degree(), 2);
}

TEST(Jet, ExactOnPolynomialsUpToDegree) {
    // (u + v)^4 / 24 has all fourth derivatives equal to 1
    const Jet s = U() + V();
    const Jet q = s * s * s * s / 24.0;
    EXPECT_NEAR(q.partial(4, 0), 1.0, 1e-14);
    EXPECT_NEAR(q.partial(2, 2), 1.0, 1e-14);
    EXPECT_NEAR(q.partial(0, 4), 1.0, 1e-14);
}
