#include "pmc/catalog.hpp"
#include "pmc/identities.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

using namespace pmc;

namespace {

constexpr double kPi = std::numbers::pi;

struct Golden {
    Family family;
    double c;
    std::map<std::string, double> params;
    // Reference values computed here from principal curvatures, not taken
    // from the catalog.
    double h_norm, t_norm2, phi_norm2, K;
};

std::vector<Golden> golden_cases() {
    std::vector<Golden> out;
    for (double r : {0.55, 0.6, 0.65}) {
        const auto k = oracle::torus_principal(1.0, r);
        // A_E3 = diag(k1, k2), A_E4 = +-id (the torus lies in the unit sphere)
        const double H = std::abs(k.k1 + k.k2) / 2;
        const double phi2 = (k.k1 - k.k2) * (k.k1 - k.k2) / 2;
        out.push_back({Family::CliffordTorus, 1.0, {{"r", r}}, H, 0.0, phi2, 0.0});
    }
    for (double rho : {kPi / 4, kPi / 3}) {
        const double k = oracle::geodesic_circle_curvature(1.0, rho);
        out.push_back({Family::RoundSphere, 1.0, {{"rho", rho}}, k, 0.0, 0.0, 1.0 + k * k});
    }
    out.push_back({Family::Horosphere, -1.0, {}, 1.0, 0.0, 0.0, 0.0});
    {
        const double k = oracle::geodesic_circle_curvature(1.0, kPi / 3);
        // A = diag(k, 0) in the (circle, line) frame
        out.push_back({Family::VerticalCylinder, 1.0, {}, k / 2, 1.0, k * k / 2, 0.0});
    }
    out.push_back({Family::Slice, 1.0, {}, 0.0, 0.0, 0.0, 1.0});
    out.push_back({Family::Slice, -1.0, {}, 0.0, 0.0, 0.0, -1.0});
    out.push_back({Family::MinimalCliffordTorus, 1.0, {}, 0.0, 0.0, 2.0, 0.0});
    return out;
}

} // namespace

TEST(Catalog, SpecificTorusNumbers) {
    const CatalogSurface cs = make_surface({Family::CliffordTorus, 1.0, 3, {{"r", 0.6}}});
    EXPECT_NEAR(*cs.expected.h_norm, 7.0 / 24.0, 1e-15);
    EXPECT_NEAR(*cs.expected.phi_norm2, 625.0 / 288.0, 1e-13);
    EXPECT_NEAR(*cs.expected.phi_norm2, 2 * (7.0 / 24.0) * (7.0 / 24.0) + 2.0, 1e-13);
    EXPECT_EQ(*cs.expected.gaussian_curvature, 0.0);
}

TEST(Catalog, GoldenValuesOnGrid) {
    for (const Golden& g : golden_cases()) {
        const CatalogSurface cs = make_surface({g.family, g.c, 3, g.params});
        SCOPED_TRACE(cs.immersion.name);
        EXPECT_NEAR(*cs.expected.h_norm, g.h_norm, 1e-12);
        EXPECT_NEAR(*cs.expected.t_norm2, g.t_norm2, 1e-12);
        EXPECT_NEAR(*cs.expected.phi_norm2, g.phi_norm2, 1e-12);
        EXPECT_NEAR(*cs.expected.gaussian_curvature, g.K, 1e-12);
        for (ChartPoint p : grid_points(cs.immersion.domain, {8, 8})) {
            const GeometricState s = evaluate_state(cs.immersion, p);
            EXPECT_NEAR(s.mean_curvature_norm(), g.h_norm, 1e-9);
            EXPECT_NEAR(s.t_norm2().value(), g.t_norm2, 1e-9);
            EXPECT_NEAR(s.phi_norm2().value(), g.phi_norm2, 1e-9);
            EXPECT_NEAR(s.gaussian_curvature(), g.K, 1e-9);
        }
    }
}

TEST(Catalog, OtherCurvaturesAndDimensions) {
    for (const CatalogSpec& spec : std::vector<CatalogSpec>{
             {Family::RoundSphere, -1.0, 3, {{"rho", 0.8}}},
             {Family::RoundSphere, 0.0, 3, {{"rho", 2.0}}},
             {Family::CliffordTorus, 2.0, 5, {{"r", 0.3}}},
             {Family::Horosphere, -0.5, 4, {}},
             {Family::VerticalCylinder, -1.0, 2, {{"rho", 1.0}}},
             {Family::VerticalCylinder, 0.0, 3, {{"rho", 1.5}}},
         }) {
        const CatalogSurface cs = make_surface(spec);
        SCOPED_TRACE(cs.immersion.name + " c=" + std::to_string(spec.c));
        const GeometricState s = evaluate_state(cs.immersion, {0.2, 0.3});
        EXPECT_NEAR(s.mean_curvature_norm(), *cs.expected.h_norm, 1e-9);
        EXPECT_NEAR(s.phi_norm2().value(), *cs.expected.phi_norm2, 1e-9);
        EXPECT_NEAR(s.gaussian_curvature(), *cs.expected.gaussian_curvature, 1e-9);
    }
}

TEST(Catalog, Listing) {
    const auto& list = list_catalog();
    auto find = [&](Family f) { return std::find_if(list.begin(), list.end(), [&](auto& e) { return e.family == f; }); };
    const auto torus = find(Family::CliffordTorus);
    ASSERT_NE(torus, list.end());
    EXPECT_NE(torus->params.at(0).constraint.find("r^2 != 1/(2c) for nonminimal"), std::string::npos);
    EXPECT_EQ(find(Family::Horosphere)->curvature_sign, "c<0");
    EXPECT_FALSE(find(Family::PerturbedGraph)->pmc);
    EXPECT_EQ(list.size(), 7u);
}

TEST(Catalog, Names) {
    EXPECT_EQ(family_from_string("clifford_torus"), Family::CliffordTorus);
    EXPECT_FALSE(family_from_string("nosuch").has_value());
    for (const CatalogEntry& e : list_catalog()) EXPECT_EQ(family_from_string(to_string(e.family)), e.family);
}

TEST(Catalog, BadParameters) {
    auto expect_bad = [](const CatalogSpec& spec) {
        try {
            (void)make_surface(spec);
            ADD_FAILURE() << to_string(spec.family);
        } catch (const Error& e) {
            EXPECT_EQ(e.kind(), ErrorKind::BadParameters);
        }
    };
    expect_bad({Family::CliffordTorus, 1.0, 3, {{"r", 1.0}}});
    expect_bad({Family::CliffordTorus, -1.0, 3, {}});
    expect_bad({Family::Horosphere, 1.0, 3, {}});
    expect_bad({Family::RoundSphere, 1.0, 3, {{"rho", 4.0}}});
    expect_bad({Family::RoundSphere, 1.0, 2, {}});
    expect_bad({Family::Slice, 1.0, 3, {{"rho", 1.0}}});
}

TEST(Catalog, PerturbedGraphReducesToSlice) {
    const CatalogSurface flat = make_surface({Family::PerturbedGraph, 1.0, 3, {{"eps", 0.0}}});
    EXPECT_TRUE(flat.expected.pmc);
    EXPECT_NEAR(evaluate_state(flat.immersion, {0.1, 0.2}).sigma_norm2().value(), 0.0, 1e-12);
}
