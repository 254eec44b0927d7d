#include "spares/errors.hpp"
#include "spares/stochastic.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

namespace spares {
namespace {

TEST(FailurePmf, NoFailuresInTheSmallRateLimit) {
    const FailureModel m{1e-12, 40};
    EXPECT_NEAR(failure_pmf(0, 40, m), 1.0, 1e-10);
}

TEST(FailurePmf, PoissonBranchScalarReference) {
    const FailureModel m{0.1, 2};
    EXPECT_NEAR(failure_pmf(1, 2, m), 0.2 * std::exp(-0.2), 1e-15);
    EXPECT_NEAR(failure_pmf(1, 2, m), 0.163746, 1e-6);
}

TEST(FailurePmf, SparesDoNotFail) {
    const FailureModel m{0.1, 3};
    EXPECT_EQ(failure_pmf(4, 10, m), 0.0);
    // rate saturates at the nominal count
    EXPECT_DOUBLE_EQ(failure_pmf(1, 10, m), failure_pmf(1, 3, m));
}

TEST(FailureModel, YearlyRateConversionAndZeroRejected) {
    const FailureModel m = FailureModel::from_yearly(0.05, 0.5, 40);
    EXPECT_DOUBLE_EQ(m.lambda_step, 0.05 * 0.5 / 365.25);
    EXPECT_THROW(FailureModel::from_yearly(0.0, 0.5, 40), Error);
}

TEST(FailureMatrix, ColumnsAreDistributionsForRandomDraws) {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> n(1, 60);
    std::uniform_real_distribution<double> lam(1e-5, 2.0);
    for (int i = 0; i < 100; ++i) {
        const int n_max = n(rng);
        const TransitionMatrix p = failure_matrix(n_max, {lam(rng), std::max(1, n_max - 3)});
        EXPECT_TRUE(p.is_column_stochastic(1e-12));
        EXPECT_TRUE(p.never_increases());
        EXPECT_GE(p.matrix().minCoeff(), 0.0);
    }
}

TEST(FailureMatrix, SmallInstanceScalarReference) {
    const TransitionMatrix p = failure_matrix(2, {0.1, 2});
    const double e = std::exp(-0.2);
    EXPECT_NEAR(p(2, 2), e, 1e-15);
    EXPECT_NEAR(p(1, 2), 0.2 * e, 1e-15);
    EXPECT_NEAR(p(0, 2), 1.0 - 1.2 * e, 1e-15);
    EXPECT_NEAR(p(0, 0), 1.0, 1e-15);
}

LeadTimeModel lead(double mu, double tau_lv, double tau_mc = 0.5) { return LeadTimeModel::make(mu, tau_lv, tau_mc); }

TEST(LeadTime, FixedDelayHasNoMass) {
    const LeadTimeModel m = lead(20, 20);
    for (int k = 0; k < m.k_lv; ++k) EXPECT_EQ(lead_time_pmf(k, m), 0.0);
    EXPECT_NEAR(lead_time_pmf(m.k_lv, m), 1.0 - m.alpha, 1e-15);
}

TEST(LeadTime, NoFixedDelayFirstStep) {
    const LeadTimeModel m = lead(20, 0);
    EXPECT_NEAR(lead_time_pmf(0, m), 1.0 - std::exp(-0.5 / 20), 1e-15);
}

TEST(LeadTime, PmfNormalizes) {
    const LeadTimeModel m = lead(3, 2);
    double sum = 0.0;
    for (int k = 0; k < 2000; ++k) sum += lead_time_pmf(k, m);
    EXPECT_NEAR(sum, 1.0, 1e-12);
}

TEST(LeadTime, SurvivalValues) {
    const LeadTimeModel m = lead(20, 20);
    EXPECT_EQ(lead_time_survival(0, m), 1.0);
    EXPECT_EQ(lead_time_survival(m.k_lv, m), 1.0);
    EXPECT_NEAR(lead_time_survival(m.k_lv + 1, m), m.alpha, 1e-15);
}

TEST(LeadTime, TelescopingIdentity) {
    for (double tau_lv : {0.0, 3.0, 20.0}) {
        const LeadTimeModel m = lead(7, tau_lv);
        for (int l = 0; l <= 200; ++l) {
            EXPECT_NEAR(lead_time_survival(l, m) - lead_time_survival(l + 1, m), lead_time_pmf(l, m), 1e-15);
        }
    }
}

TEST(LeadTime, AlphaInsideUnitInterval) {
    for (double mu : {1e-3, 0.5, 20.0, 1e6}) {
        const LeadTimeModel m = lead(mu, 0);
        EXPECT_GT(m.alpha, 0.0);
        EXPECT_LT(m.alpha, 1.0);
    }
}

TEST(LeadTime, DelayRoundedToGrid) {
    const LeadTimeModel m = lead(20, 20.3);
    EXPECT_EQ(m.k_lv, 41);
    EXPECT_DOUBLE_EQ(m.tau_lv, 20.5);
}

TEST(LeadTimeGrid, WorkedExample) {
    const LeadTimeGrid g = lead_time_grid(lead(20, 20), 16);
    EXPECT_EQ(g.m_lv, 2);
    EXPECT_EQ(g.k_left, 8);
    EXPECT_EQ(g.k_right, 8);
}

TEST(LeadTimeGrid, NoFixedDelay) {
    const LeadTimeGrid g = lead_time_grid(lead(20, 0), 13);
    EXPECT_EQ(g.m_lv, 0);
    EXPECT_EQ(g.k_left, 0);
    EXPECT_EQ(g.k_right, 13);
}

TEST(LeadTimeGrid, ContinuousReview) {
    const LeadTimeGrid g = lead_time_grid(lead(10, 10), 1);
    EXPECT_EQ(g.m_lv, 20);
    EXPECT_EQ(g.k_left, 0);
    EXPECT_EQ(g.k_right, 1);
}

}  // namespace
}  // namespace spares
