#pragma once

// Constellation-plane echelon: stock X_c in satellites, reviewed at every
// RAAN contact with a parking orbit, topped up in batches of q_c.

#include "spares/markov.hpp"

#include <optional>

namespace spares {

struct InplanePolicy {
    int q = 1;  ///< batch size, satellites
    int r = 0;  ///< reorder point

    int max_state() const { return q + r; }
    /// Largest batch demand any state can raise.
    int max_demand() const { return (r + 1 + q - 1) / q; }
    void validate() const;
};

/// kappa_j = P(parking holds at least j batches | contact), j = 0..max_demand.
class AvailabilityVector {
public:
    AvailabilityVector() = default;
    explicit AvailabilityVector(Vector kappa);

    static AvailabilityVector full(int max_demand);

    const Vector& values() const { return kappa_; }
    int max_demand() const { return static_cast<int>(kappa_.size()) - 1; }
    double operator[](int j) const { return kappa_[j]; }

private:
    Vector kappa_;
};

/// chi_j = P(plane demands exactly j batches | contact).
struct DemandPmf {
    Vector chi;

    int max_demand() const { return static_cast<int>(chi.size()) - 1; }
    double operator[](int j) const { return chi[j]; }
};

struct InplaneCycle {
    Vector pi_q;  ///< right after a contact
    Vector pi_r;  ///< right before a contact
    int iterations = 0;
    double residual = 0.0;
};

int demand_of_state(int x, const InplanePolicy& policy);

TransitionMatrix replenishment_matrix_inplane(const AvailabilityVector& kappa,
                                              const InplanePolicy& policy);

/// Failure matrix compounded over one review period, (P_f)^k_c.
Matrix cycle_failure_matrix(const TransitionMatrix& failure, int k_c);

/// Stationary post-contact and pre-contact distributions given the
/// compounded failure matrix.
InplaneCycle solve_inplane_cycle(const Matrix& cycle_failure, const TransitionMatrix& replenish,
                                 const std::optional<Vector>& init = std::nullopt);

InplaneCycle solve_inplane_cycle(const TransitionMatrix& failure, const TransitionMatrix& replenish,
                                 int k_c);

/// Time average over one review period of the stepwise-decaying stock.
Vector cycle_average_inplane(const Vector& pi_q, const TransitionMatrix& failure, int k_c);

DemandPmf demand_pmf(const Vector& pi_r, const InplanePolicy& policy);

}  // namespace spares
