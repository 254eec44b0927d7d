#include "spares/markov.hpp"

#include "spares/errors.hpp"

#include <algorithm>
#include <cmath>

namespace spares {

const char* to_string(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidGeometry: return "invalid geometry";
        case ErrorCode::DegenerateAlignment: return "degenerate alignment";
        case ErrorCode::TimeStepTooCoarse: return "time step too coarse";
        case ErrorCode::InvalidTransfer: return "invalid transfer";
        case ErrorCode::InvalidPropulsion: return "invalid propulsion";
        case ErrorCode::InvalidAvailability: return "invalid availability";
        case ErrorCode::NoDemand: return "no demand";
        case ErrorCode::NonConvergence: return "non-convergence";
        case ErrorCode::InvalidArgument: return "invalid argument";
        case ErrorCode::Config: return "config error";
        case ErrorCode::Internal: return "internal error";
    }
    return "error";
}

Vector clamp_noise(const Vector& v, double tol) {
    Vector out = v;
    for (Eigen::Index i = 0; i < out.size(); ++i) {
        if (!std::isfinite(out[i])) {
            throw Error(ErrorCode::InvalidArgument, "non-finite probability mass");
        }
        if (out[i] < 0.0) {
            if (out[i] < -tol) {
                throw Error(ErrorCode::InvalidArgument,
                            "negative probability mass " + std::to_string(out[i]));
            }
            out[i] = 0.0;
        }
    }
    return out;
}

StateDistribution StateDistribution::normalized(const Vector& mass) {
    if (mass.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty distribution");
    // Relative clamp: closed forms scale mass by normalization constants.
    const double scale = std::max(1.0, mass.cwiseAbs().maxCoeff());
    Vector v = clamp_noise(mass, 1e-15 * scale);
    const double total = v.sum();
    if (!(total > 0.0)) throw Error(ErrorCode::InvalidArgument, "distribution has no mass");
    return StateDistribution(v / total);
}

StateDistribution StateDistribution::point_mass(int max_state, int state) {
    if (max_state < 0 || state < 0 || state > max_state) {
        throw Error(ErrorCode::InvalidArgument, "point mass outside state range");
    }
    Vector v = Vector::Zero(max_state + 1);
    v[state] = 1.0;
    return StateDistribution(v);
}

StateDistribution StateDistribution::uniform(int max_state) {
    if (max_state < 0) throw Error(ErrorCode::InvalidArgument, "negative max state");
    return StateDistribution(Vector::Constant(max_state + 1, 1.0 / (max_state + 1)));
}

double StateDistribution::mean() const {
    double m = 0.0;
    for (Eigen::Index i = 0; i < probs_.size(); ++i) m += static_cast<double>(i) * probs_[i];
    return m;
}

std::vector<double> StateDistribution::descending() const {
    std::vector<double> out(probs_.data(), probs_.data() + probs_.size());
    std::reverse(out.begin(), out.end());
    return out;
}

TransitionMatrix::TransitionMatrix(Matrix m) : m_(std::move(m)) {
    if (m_.rows() != m_.cols() || m_.rows() == 0) {
        throw Error(ErrorCode::InvalidArgument, "transition matrix must be square and non-empty");
    }
}

double TransitionMatrix::column_sum_error() const {
    return (m_.colwise().sum().array() - 1.0).abs().maxCoeff();
}

bool TransitionMatrix::never_increases(double tol) const {
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
        for (Eigen::Index i = j + 1; i < m_.rows(); ++i)
            if (std::abs(m_(i, j)) > tol) return false;
    return true;
}

bool TransitionMatrix::never_decreases(double tol) const {
    for (Eigen::Index j = 0; j < m_.cols(); ++j)
        for (Eigen::Index i = 0; i < j; ++i)
            if (std::abs(m_(i, j)) > tol) return false;
    return true;
}

Matrix matrix_power(const Matrix& m, int k) {
    if (k < 0) throw Error(ErrorCode::InvalidArgument, "negative matrix power");
    Matrix result = Matrix::Identity(m.rows(), m.cols());
    Matrix base = m;
    while (k > 0) {
        if (k & 1) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

Matrix power_sum(const Matrix& m, int n) {
    Matrix sum = Matrix::Zero(m.rows(), m.cols());
    Matrix term = Matrix::Identity(m.rows(), m.cols());
    for (int j = 0; j < n; ++j) {
        sum += term;
        if (j + 1 < n) term = m * term;
    }
    return sum;
}

namespace {

Vector renormalize(const Vector& v) {
    Vector out = v.cwiseMax(0.0);
    const double s = out.sum();
    if (!(s > 0.0)) throw Error(ErrorCode::Internal, "power iteration lost all mass");
    return out / s;
}

}  // namespace

StationaryResult stationary_distribution(const Matrix& op, const std::optional<Vector>& init,
                                         const StationaryOptions& opts) {
    const Eigen::Index n = op.rows();
    if (n == 0 || op.cols() != n) throw Error(ErrorCode::InvalidArgument, "operator must be square");

    Vector x = (init && init->size() == n) ? renormalize(*init)
                                           : Vector::Constant(n, 1.0 / static_cast<double>(n));
    Matrix accel = op;
    int since_square = 0;
    for (int it = 1; it <= opts.max_iterations; ++it) {
        Vector y = renormalize(accel * x);
        const double diff = (y - x).cwiseAbs().maxCoeff();
        x = std::move(y);
        if (diff < opts.tolerance) {
            const double residual = (x - op * x).cwiseAbs().maxCoeff();
            if (residual < opts.tolerance * 10.0) return {x, it, residual};
            // Converged for a squared operator but not yet for the original.
            accel = op;
            since_square = 0;
            continue;
        }
        if (++since_square >= opts.squaring_after) {
            accel = accel * accel;
            since_square = 0;
        }
    }
    throw Error(ErrorCode::NonConvergence, "power iteration did not converge in " +
                                               std::to_string(opts.max_iterations) + " steps");
}

}  // namespace spares
