#include "spares/errors.hpp"
#include "spares/orbital.hpp"

#include <gtest/gtest.h>

#include <cmath>

namespace spares {
namespace {

constexpr double kDeg = kPi / 180.0;
const EarthConstants kEarth{};

double baseline_relative_drift() {
    return std::abs(raan_drift_rate(kEarth.r_earth + 1200.0, 50 * kDeg) -
                    raan_drift_rate(kEarth.r_earth + 735.0, 50 * kDeg));
}

TEST(RaanDrift, PolarOrbitDoesNotPrecess) {
    EXPECT_NEAR(raan_drift_rate(kEarth.r_earth + 1200.0, 90 * kDeg), 0.0, 1e-17);
}

TEST(RaanDrift, BaselineValueLockedToScalarReference) {
    // Independent scalar evaluation: -1.5 J2 (R/a)^2 sqrt(mu/a^3) cos i, in rad/day.
    EXPECT_NEAR(raan_drift_rate(kEarth.r_earth + 1200.0, 50 * kDeg), -0.06114194014060828, 1e-15);
}

TEST(RaanDrift, RetrogradeMirrorsPrograde) {
    const double a = kEarth.r_earth + 1200.0;
    EXPECT_NEAR(raan_drift_rate(a, 130 * kDeg), -raan_drift_rate(a, 50 * kDeg), 1e-15);
    EXPECT_GT(raan_drift_rate(a, 130 * kDeg), 0.0);
}

TEST(RaanDrift, RejectsRadiusInsideEarth) {
    try {
        raan_drift_rate(kEarth.r_earth, 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidGeometry);
    }
}

ConstellationGeometry baseline_geometry() {
    return {1200.0, 735.0, 50 * kDeg, 40, 1, 40};
}

TEST(AlignmentPeriods, BaselineMatchesRelativeDrift) {
    const AlignmentPeriods p = alignment_periods(baseline_geometry());
    EXPECT_NEAR(p.tau_c, 2 * kPi / baseline_relative_drift(), 1e-9);
    EXPECT_NEAR(p.tau_p, p.tau_c / 40.0, 1e-12);
    EXPECT_NEAR(p.tau_c, 414.1791829293279, 1e-9);
    EXPECT_NEAR(p.tau_p, 10.354479573233197, 1e-11);
}

TEST(AlignmentPeriods, EqualPlaneCountsGiveEqualPeriods) {
    ConstellationGeometry g = baseline_geometry();
    g.n_orbit_p = g.n_orbit_c;
    const AlignmentPeriods p = alignment_periods(g);
    EXPECT_DOUBLE_EQ(p.tau_c, p.tau_p);
}

TEST(AlignmentPeriods, DoublingParkingOrbitsHalvesPlanePeriod) {
    ConstellationGeometry g = baseline_geometry();
    const AlignmentPeriods one = alignment_periods(g);
    g.n_orbit_p = 2;
    const AlignmentPeriods two = alignment_periods(g);
    EXPECT_NEAR(two.tau_c, one.tau_c / 2.0, 1e-12);
    EXPECT_DOUBLE_EQ(two.tau_p, one.tau_p);
}

TEST(AlignmentPeriods, EqualAltitudesNeverRealign) {
    ConstellationGeometry g = baseline_geometry();
    g.h_p = g.h_c;
    try {
        alignment_periods(g);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::DegenerateAlignment);
    }
}

TEST(QuantizePeriods, ExactMultiple) {
    EXPECT_EQ(quantize_period(10.0, 0.5), 20);
}

TEST(QuantizePeriods, HalfRoundsAwayFromZero) {
    EXPECT_EQ(quantize_period(10.25, 0.5), 21);
    EXPECT_EQ(quantize_period(0.75, 0.5), 2);
}

TEST(QuantizePeriods, BaselineSteps) {
    const AlignmentPeriods p = alignment_periods(baseline_geometry());
    const QuantizedPeriods k = quantize_periods(p.tau_c, p.tau_p, 0.5);
    EXPECT_EQ(k.k_c, 828);
    EXPECT_EQ(k.k_p, 21);
}

TEST(QuantizePeriods, TooCoarseStepRejected) {
    try {
        quantize_period(0.2, 0.5);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::TimeStepTooCoarse);
    }
}

TEST(Hohmann, SameOrbitNeedsNoDeltaV) {
    EXPECT_NEAR(hohmann_delta_v(7000.0, 7000.0), 0.0, 1e-15);
}

TEST(Hohmann, BaselineLockedToScalarReference) {
    EXPECT_NEAR(hohmann_delta_v(kEarth.r_earth + 735.0, kEarth.r_earth + 1200.0), 0.23324421886545368, 1e-14);
}

TEST(Hohmann, LoweringRejected) {
    try {
        hohmann_delta_v(kEarth.r_earth + 1200.0, kEarth.r_earth + 735.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidTransfer);
    }
}

TEST(FuelMass, RocketEquation) {
    EXPECT_DOUBLE_EQ(fuel_mass(700.0, 0.0, 2.16), 0.0);
    EXPECT_NEAR(fuel_mass(100.0, 2.16 * std::log(2.0), 2.16), 100.0, 1e-12);
    EXPECT_NEAR(fuel_mass(700.0, 0.23324421886545368, 2.16), 79.82050367169616, 1e-10);
}

TEST(FuelMass, NonPositiveExhaustVelocityRejected) {
    try {
        fuel_mass(100.0, 0.1, 0.0);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::InvalidPropulsion);
    }
}

TEST(TransferCosting, BatchMassIsDryPlusFuel) {
    const TransferCosting t = transfer_costing(kEarth.r_earth + 735.0, kEarth.r_earth + 1200.0, 700.0, 2.16);
    EXPECT_DOUBLE_EQ(t.m_batch, t.m_dry + t.m_fuel);
    EXPECT_NEAR(t.m_fuel, t.m_dry * std::expm1(t.delta_v / 2.16), 1e-12);
}

}  // namespace
}  // namespace spares
