#include "pmc/catalog.hpp"
#include "pmc/theorem_gates.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

using namespace pmc;

namespace {

constexpr double kPi = std::numbers::pi;

GateReport gate(Theorem t, const CatalogSpec& spec, GridSpec grid = {8, 8}) {
    const CatalogSurface cs = make_surface(spec);
    return check_gate(t, cs.immersion, grid, {cs.topology, cs.complete});
}

double margin(const GateReport& r, const std::string& name) {
    for (const auto& [k, v] : r.hypothesis_margins)
        if (k == name) return v;
    ADD_FAILURE() << "no margin " << name;
    return std::nan("");
}

double observed(const GateReport& r, const std::string& name) {
    for (const auto& [k, v] : r.observed)
        if (k == name) return v;
    ADD_FAILURE() << "no observation " << name;
    return std::nan("");
}

bool flag(const GateReport& r, const std::string& name) {
    for (const auto& [k, v] : r.flags)
        if (k == name) return v;
    ADD_FAILURE() << "no flag " << name;
    return false;
}

} // namespace

TEST(Gates, Names) {
    for (Theorem t : all_theorems()) EXPECT_EQ(theorem_from_cli_name(cli_name(t)), t);
    EXPECT_EQ(cli_name(Theorem::GapMain), "gap-main");
    EXPECT_EQ(to_string(GateStatus::HypothesisViolated), "hypothesis_violated");
}

TEST(Gates, TorusIsTheEqualityCase) {
    const GateReport r = gate(Theorem::GapMain, {Family::CliffordTorus, 1.0, 3, {{"r", 0.6}}});
    EXPECT_EQ(r.status, GateStatus::Pass) << r.reason;
    EXPECT_NEAR(margin(r, "2|H|^2+2c-(5c/2)|T|^2-|phi|^2"), 0.0, 1e-9);
    EXPECT_TRUE(r.hypothesis_satisfied);
    EXPECT_TRUE(flag(r, "ii-a"));
    EXPECT_TRUE(flag(r, "case2:|phi|^2=2|H|^2+2c"));
    EXPECT_NEAR(observed(r, "max|phi|^2-(2|H|^2+2c)"), 0.0, 1e-9);
    EXPECT_EQ(r.predicted_case, "case (2): torus S^1(r) x S^1(sqrt(1/c - r^2)) in M^3(c)");

    const GateReport pos = gate(Theorem::GapCpos, {Family::CliffordTorus, 1.0, 3, {{"r", 0.6}}});
    EXPECT_EQ(pos.status, GateStatus::Pass);
    EXPECT_NEAR(margin(pos, "2|H|^2+c(2-3|T|^2)-|phi|^2"), 0.0, 1e-9);
}

TEST(Gates, EveryNonminimalTorusIsOnTheBoundary) {
    // |phi|^2 - 2|H|^2 - 2c = 0 for every r, so the torus always sits on the boundary
    for (double r : {0.55, 0.65}) {
        const GateReport g = gate(Theorem::GapMain, {Family::CliffordTorus, 1.0, 3, {{"r", r}}});
        EXPECT_EQ(g.status, GateStatus::Pass) << r << " " << g.reason;
        EXPECT_NEAR(margin(g, "2|H|^2+2c-(5c/2)|T|^2-|phi|^2"), 0.0, 1e-9);
    }
}

TEST(Gates, RoundSphereIsCaseOne) {
    for (Theorem t : {Theorem::GapCpos, Theorem::GapMain}) {
        const GateReport r = gate(t, {Family::RoundSphere, 1.0, 3, {{"rho", kPi / 3}}});
        EXPECT_EQ(r.status, GateStatus::Pass) << r.reason;
        EXPECT_EQ(r.predicted_case, "case (1): round sphere in M^3(c)");
    }
    // needs |H|^2 > -2c, i.e. coth^2(rho) > 2
    const GateReport neg = gate(Theorem::GapCneg, {Family::RoundSphere, -1.0, 3, {{"rho", 0.5}}});
    EXPECT_EQ(neg.status, GateStatus::Pass) << neg.reason;
    EXPECT_EQ(neg.predicted_case, "case (1): round sphere in M^3(c)");
}

TEST(Gates, HorosphereExcluded) {
    const GateReport r = gate(Theorem::GapCneg, {Family::Horosphere, -1.0, 3, {}});
    EXPECT_EQ(r.status, GateStatus::HypothesisViolated);
    EXPECT_EQ(r.predicted_case, "hypothesis violated");
    EXPECT_NEAR(margin(r, "inf(2|H|^2+c(4-5|T|^2))-sup|phi|^2"), -2.0, 1e-9);
    EXPECT_NEAR(observed(r, "sup|phi|^2"), 0.0, 1e-9);
}

TEST(Gates, Sphere2OnGeodesicSphere) {
    const GateReport r = gate(Theorem::Sphere2, {Family::RoundSphere, 1.0, 3, {{"rho", kPi / 3}}});
    EXPECT_EQ(r.status, GateStatus::Pass) << r.reason;
    EXPECT_TRUE(r.hypothesis_satisfied);
    EXPECT_NEAR(observed(r, "sup|sigma|^2"), 2.0 / 3.0, 1e-9);
    EXPECT_NEAR(margin(r, "2/3-|T|^2"), 2.0 / 3.0, 1e-9);
    EXPECT_EQ(r.predicted_case, "standard sphere in M^3(c)");
}

TEST(Gates, Sphere2NegativeCurvatureHasTwoReadings) {
    const GateReport r = gate(Theorem::Sphere2, {Family::RoundSphere, -1.0, 3, {{"rho", 1.0}}});
    ASSERT_EQ(r.readings.size(), 2u);
    EXPECT_EQ(r.readings[0].name, "bound on both alternatives");
    EXPECT_FALSE(r.readings[0].hypothesis_satisfied);
    EXPECT_EQ(r.readings[1].name, "bound on the second alternative only");
    EXPECT_TRUE(r.readings[1].hypothesis_satisfied);
}

TEST(Gates, Sphere2NeedsSphereTopology) {
    const GateReport r = gate(Theorem::Sphere2, {Family::CliffordTorus, 1.0, 3, {{"r", 0.6}}});
    EXPECT_EQ(r.status, GateStatus::NotApplicable);
    EXPECT_EQ(r.reason, "needs a 2-sphere");
}

TEST(Gates, WrongSignAndMinimal) {
    EXPECT_EQ(gate(Theorem::GapCneg, {Family::CliffordTorus, 1.0, 3, {}}).status, GateStatus::NotApplicable);
    const GateReport m = gate(Theorem::GapMain, {Family::MinimalCliffordTorus, 1.0, 3, {}});
    EXPECT_EQ(m.status, GateStatus::NotApplicable);
    EXPECT_EQ(m.reason, "minimal");
    const GateReport n5 = gate(Theorem::GapMain, {Family::CliffordTorus, 1.0, 5, {}});
    EXPECT_EQ(n5.reason, "needs n = 3");
}

TEST(Gates, NegativeControlFails) {
    const GateReport r = gate(Theorem::GapMain, {Family::PerturbedGraph, 1.0, 3, {{"eps", 0.1}}});
    EXPECT_EQ(r.status, GateStatus::Fail);
    EXPECT_EQ(r.reason, "pmc residual exceeded");
    EXPECT_GT(observed(r, "max pmc residual"), 1e-3);
}

TEST(Gates, CylinderViolatesNormalXi) {
    // vertical cylinder: xi tangent, so the gap conclusion cannot hold
    const GateReport r = gate(Theorem::GapMain, {Family::VerticalCylinder, 1.0, 3, {}});
    EXPECT_NE(r.status, GateStatus::Pass);
}
