#include "spares/inplane_chain.hpp"

#include "spares/errors.hpp"

#include <string>

namespace spares {

void InplanePolicy::validate() const {
    if (q < 1) throw Error(ErrorCode::InvalidArgument, "in-plane batch size q_c must be >= 1");
    if (r < 0) throw Error(ErrorCode::InvalidArgument, "in-plane reorder point r_c must be >= 0");
}

AvailabilityVector::AvailabilityVector(Vector kappa) : kappa_(std::move(kappa)) {
    constexpr double tol = 1e-12;
    if (kappa_.size() == 0) throw Error(ErrorCode::InvalidAvailability, "empty availability vector");
    if (std::abs(kappa_[0] - 1.0) > tol) {
        throw Error(ErrorCode::InvalidAvailability, "kappa_0 must equal 1");
    }
    for (Eigen::Index j = 0; j < kappa_.size(); ++j) {
        if (kappa_[j] < -tol || kappa_[j] > 1.0 + tol) {
            throw Error(ErrorCode::InvalidAvailability, "kappa entries must lie in [0, 1]");
        }
        if (j > 0 && kappa_[j] > kappa_[j - 1] + tol) {
            throw Error(ErrorCode::InvalidAvailability,
                        "kappa must be non-increasing (index " + std::to_string(j) + ")");
        }
    }
    kappa_ = kappa_.cwiseMax(0.0).cwiseMin(1.0);
    kappa_[0] = 1.0;
}

AvailabilityVector AvailabilityVector::full(int max_demand) {
    return AvailabilityVector(Vector::Ones(max_demand + 1));
}

int demand_of_state(int x, const InplanePolicy& p) {
    if (x < 0 || x > p.max_state()) {
        throw Error(ErrorCode::InvalidArgument, "stock level outside [0, q_c + r_c]");
    }
    if (x > p.r) return 0;
    return (p.r + 1 - x + p.q - 1) / p.q;
}

TransitionMatrix replenishment_matrix_inplane(const AvailabilityVector& kappa, const InplanePolicy& p) {
    p.validate();
    if (kappa.max_demand() < p.max_demand()) {
        throw Error(ErrorCode::InvalidAvailability, "availability vector shorter than max demand");
    }
    const int n = p.max_state();
    Matrix m = Matrix::Zero(n + 1, n + 1);
    for (int x = 0; x <= n; ++x) {
        const int d = demand_of_state(x, p);
        // The parking orbit holds exactly j < d batches: partial fill.
        for (int j = 0; j < d; ++j) m(x + j * p.q, x) += kappa[j] - kappa[j + 1];
        m(x + d * p.q, x) += kappa[d];
    }
    return TransitionMatrix(std::move(m));
}

Matrix cycle_failure_matrix(const TransitionMatrix& failure, int k_c) {
    if (k_c < 1) throw Error(ErrorCode::InvalidArgument, "k_c must be >= 1");
    return matrix_power(failure.matrix(), k_c);
}

InplaneCycle solve_inplane_cycle(const Matrix& cycle_failure, const TransitionMatrix& replenish,
                                 const std::optional<Vector>& init) {
    if (cycle_failure.rows() != replenish.matrix().rows()) {
        throw Error(ErrorCode::InvalidArgument, "failure and replenishment matrices differ in size");
    }
    const Matrix cycle = replenish.matrix() * cycle_failure;
    StationaryResult s = stationary_distribution(cycle, init);
    InplaneCycle out;
    out.pi_q = StateDistribution::normalized(s.pi).vector();
    out.pi_r = StateDistribution::normalized(cycle_failure * out.pi_q).vector();
    out.iterations = s.iterations;
    out.residual = (out.pi_q - cycle * out.pi_q).cwiseAbs().maxCoeff();
    return out;
}

InplaneCycle solve_inplane_cycle(const TransitionMatrix& failure, const TransitionMatrix& replenish,
                                 int k_c) {
    return solve_inplane_cycle(cycle_failure_matrix(failure, k_c), replenish);
}

Vector cycle_average_inplane(const Vector& pi_q, const TransitionMatrix& failure, int k_c) {
    if (k_c < 1) throw Error(ErrorCode::InvalidArgument, "k_c must be >= 1");
    Vector acc = Vector::Zero(pi_q.size());
    Vector step = pi_q;
    for (int j = 0; j < k_c; ++j) {
        acc += step;
        if (j + 1 < k_c) step = failure.apply(step);
    }
    return StateDistribution::normalized(acc / static_cast<double>(k_c)).vector();
}

DemandPmf demand_pmf(const Vector& pi_r, const InplanePolicy& p) {
    if (pi_r.size() != p.max_state() + 1) {
        throw Error(ErrorCode::InvalidArgument, "distribution size does not match in-plane policy");
    }
    // Demand j covers states N - (j+1) q_c + 1 .. N - j q_c (clipped at 0).
    const int n = p.max_state();
    DemandPmf out{Vector::Zero(p.max_demand() + 1)};
    for (int j = 0; j <= p.max_demand(); ++j) {
        const int hi = n - j * p.q;
        const int lo = std::max(0, n - (j + 1) * p.q + 1);
        for (int x = lo; x <= hi; ++x) out.chi[j] += pi_r[x];
    }
    return out;
}

}  // namespace spares
