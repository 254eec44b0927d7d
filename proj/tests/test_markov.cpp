#include "spares/errors.hpp"
#include "spares/markov.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <random>

namespace spares {
namespace {

Matrix random_stochastic(std::mt19937_64& rng, int n) {
    Matrix m(n, n);
    for (int j = 0; j < n; ++j) m.col(j) = oracle::random_pmf(rng, n);
    return m;
}

TEST(StateDistribution, NormalizesAndClampsNoise) {
    Vector v(3);
    v << 2.0, -1e-17, 2.0;
    const StateDistribution d = StateDistribution::normalized(v);
    EXPECT_DOUBLE_EQ(d[0], 0.5);
    EXPECT_EQ(d[1], 0.0);
    EXPECT_NEAR(d.total(), 1.0, 1e-15);
}

TEST(StateDistribution, RejectsGenuinelyNegativeMass) {
    Vector v(2);
    v << 1.0, -0.1;
    EXPECT_THROW(StateDistribution::normalized(v), Error);
}

TEST(StateDistribution, MeansAndOrdering) {
    EXPECT_DOUBLE_EQ(StateDistribution::point_mass(5, 3).mean(), 3.0);
    EXPECT_DOUBLE_EQ(StateDistribution::uniform(4).mean(), 2.0);
    const auto desc = StateDistribution::point_mass(2, 2).descending();
    EXPECT_EQ(desc.front(), 1.0);
    EXPECT_EQ(desc.back(), 0.0);
}

TEST(TransitionMatrix, RejectsNonSquare) {
    EXPECT_THROW(TransitionMatrix(Matrix::Zero(2, 3)), Error);
}

TEST(Stationary, MatchesDenseEigensolve) {
    std::mt19937_64 rng(11);
    for (int n : {2, 5, 10}) {
        const Matrix m = random_stochastic(rng, n);
        const StationaryResult s = stationary_distribution(m);
        EXPECT_LT((s.pi - oracle::dense_stationary(m)).cwiseAbs().maxCoeff(), 1e-10);
        EXPECT_LT(s.residual, 1e-12);
    }
}

TEST(Stationary, IndependentOfInitialization) {
    std::mt19937_64 rng(5);
    const Matrix m = random_stochastic(rng, 8);
    const Vector a = stationary_distribution(m, oracle::random_pmf(rng, 8)).pi;
    const Vector b = stationary_distribution(m, oracle::random_pmf(rng, 8)).pi;
    EXPECT_LT((a - b).cwiseAbs().maxCoeff(), 1e-10);
}

TEST(Stationary, SlowMixingChainConverges) {
    // Two nearly decoupled states: plain power iteration needs ~1e7 steps.
    Matrix m(2, 2);
    m << 1 - 1e-7, 2e-7, 1e-7, 1 - 2e-7;
    const StationaryResult s = stationary_distribution(m);
    EXPECT_NEAR(s.pi[0], 2.0 / 3.0, 1e-9);
    EXPECT_LT(s.residual, 1e-12);
}

TEST(MatrixPower, AgreesWithRepeatedProduct) {
    std::mt19937_64 rng(3);
    const Matrix m = random_stochastic(rng, 4);
    Matrix ref = Matrix::Identity(4, 4);
    for (int i = 0; i < 13; ++i) ref = ref * m;
    EXPECT_LT((matrix_power(m, 13) - ref).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((matrix_power(m, 0) - Matrix::Identity(4, 4)).cwiseAbs().maxCoeff(), 0.0 + 1e-300);
}

TEST(PowerSum, GeometricSeries) {
    Matrix m = 0.5 * Matrix::Identity(2, 2);
    EXPECT_NEAR(power_sum(m, 3)(0, 0), 1.75, 1e-15);
    EXPECT_EQ(power_sum(m, 0).cwiseAbs().maxCoeff(), 0.0);
}

}  // namespace
}  // namespace spares
