#pragma once

// Dense Markov-chain building blocks shared by both echelons.
//
// Distributions are stored in natural ordering: entry x is P(X = x).
// Transition matrices act on column vectors, pi' = P * pi, so every
// column of a TransitionMatrix is a probability vector.

#include <Eigen/Dense>

#include <cstddef>
#include <optional>
#include <vector>

namespace spares {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

class StateDistribution {
public:
    StateDistribution() = default;

    /// Clamps noise below zero (down to -1e-15) and renormalizes. Throws
    /// InvalidArgument for genuinely negative entries or zero total mass.
    static StateDistribution normalized(const Vector& mass);

    /// Point mass at `state` over {0..max_state}.
    static StateDistribution point_mass(int max_state, int state);
    static StateDistribution uniform(int max_state);

    int max_state() const { return static_cast<int>(probs_.size()) - 1; }
    std::size_t size() const { return static_cast<std::size_t>(probs_.size()); }
    double operator[](int state) const { return probs_[state]; }
    const Vector& vector() const { return probs_; }

    double mean() const;
    double total() const { return probs_.sum(); }

    /// Entries ordered from the highest state down to zero.
    std::vector<double> descending() const;

private:
    explicit StateDistribution(Vector v) : probs_(std::move(v)) {}
    Vector probs_;
};

class TransitionMatrix {
public:
    TransitionMatrix() = default;
    explicit TransitionMatrix(Matrix m);

    const Matrix& matrix() const { return m_; }
    int max_state() const { return static_cast<int>(m_.rows()) - 1; }
    double operator()(int to, int from) const { return m_(to, from); }

    Vector apply(const Vector& v) const { return m_ * v; }

    double column_sum_error() const;
    bool is_column_stochastic(double tol = 1e-12) const { return column_sum_error() <= tol; }
    /// True when no column moves mass to a higher state.
    bool never_increases(double tol = 0.0) const;
    /// True when no column moves mass to a lower state.
    bool never_decreases(double tol = 0.0) const;

private:
    Matrix m_;
};

struct StationaryOptions {
    double tolerance = 1e-13;
    int max_iterations = 100000;
    /// Plain power steps before the operator starts being squared.
    int squaring_after = 2048;
};

struct StationaryResult {
    Vector pi;
    int iterations = 0;
    double residual = 0.0;  ///< ||pi - M pi||_inf for the original operator
};

/// Stationary vector of a column-stochastic cycle operator by power
/// iteration with renormalization. Slowly mixing operators are squared
/// periodically, which keeps the same fixed point.
StationaryResult stationary_distribution(const Matrix& op,
                                         const std::optional<Vector>& init = std::nullopt,
                                         const StationaryOptions& opts = {});

/// M^k by repeated squaring.
Matrix matrix_power(const Matrix& m, int k);

/// (I + M + ... + M^{n-1}); zero matrix for n = 0.
Matrix power_sum(const Matrix& m, int n);

/// Sets tiny negative entries to zero; throws if an entry is below -tol.
Vector clamp_noise(const Vector& v, double tol = 1e-15);

}  // namespace spares
