#pragma once

// Parking-orbit echelon: stock X_p in batches, depleted by plane demand at
// each contact and resupplied from the ground by a shifted-exponential
// launch lead time. All cycle quantities use the closed forms obtained by
// summing the geometric lead-time tail analytically.

#include "spares/inplane_chain.hpp"
#include "spares/markov.hpp"
#include "spares/stochastic.hpp"

#include <optional>
#include <vector>

namespace spares {

struct ParkingPolicy {
    int q = 1;  ///< order size, batches
    int r = 0;  ///< reorder point, batches

    int max_state() const { return q + r; }
    void validate() const;
};

struct ThresholdProjectors {
    Matrix plus;   ///< keeps X > r
    Matrix minus;  ///< keeps X <= r
};

/// Everything the cycle solve needs, built once per demand PMF.
struct ParkingOperators {
    ParkingPolicy policy;
    TransitionMatrix demand;     ///< P_fp, one review's worth of depletion
    TransitionMatrix replenish;  ///< P_qp
    ThresholdProjectors projectors;
    LeadTimeGrid grid;
    double alpha = 0.0;
};

struct DeliveryResult {
    Vector pi_q;
    /// eta_i * pi^q_i for delivery on step i = 1..k_p (index i-1).
    std::vector<Vector> components;
};

struct WeightedDistribution {
    Vector pi;
    double weight = 0.0;  ///< normalization mass; expected steps or contacts
};

struct ParkingCycle {
    Vector pi_q;
    Vector pi_r;
    DeliveryResult delivery;
    int iterations = 0;
    double residual = 0.0;
};

struct ContactConditional {
    WeightedDistribution io;
    WeightedDistribution lt;
    Vector pi_rc;
    /// P(X_p >= j | contact) for j = 0..max_state.
    Vector tail;
};

struct ParkingCycleSolution {
    Vector pi_q, pi_r, pi_io, pi_lt, pi_rc;
    double k_io = 0.0, k_lt = 0.0;
    Vector pi_io_E, pi_lt_E, pi_rc_E;
    double k_io_E = 0.0, k_lt_E = 0.0;
    Vector availability_tail;
    double tau_rc = 0.0;  ///< days
    int iterations = 0;
    double residual = 0.0;
};

TransitionMatrix demand_failure_matrix(const DemandPmf& chi, const ParkingPolicy& policy);
TransitionMatrix replenishment_matrix_parking(const ParkingPolicy& policy);
ThresholdProjectors threshold_projectors(const ParkingPolicy& policy);

ParkingOperators make_parking_operators(const TransitionMatrix& demand, const ParkingPolicy& policy,
                                        const LeadTimeGrid& grid, double alpha);

/// Post-delivery -> next reorder: C- P (I - C+ P)^-1 pi_q.
Vector delivery_to_reorder(const Vector& pi_q, const TransitionMatrix& demand,
                           const ThresholdProjectors& projectors);

/// Reorder -> post-delivery average, plus the per-step delivery components.
DeliveryResult reorder_to_delivery(const Vector& pi_r, const TransitionMatrix& demand,
                                   const TransitionMatrix& replenish, const LeadTimeGrid& grid,
                                   double alpha);

ParkingCycle solve_parking_cycle(const ParkingOperators& ops,
                                 const std::optional<Vector>& init = std::nullopt);

WeightedDistribution io_distribution(const DeliveryResult& delivery, const Vector& pi_q,
                                     const TransitionMatrix& demand,
                                     const ThresholdProjectors& projectors, int k_p);

WeightedDistribution lt_distribution(const Vector& pi_r, const TransitionMatrix& demand,
                                     const LeadTimeGrid& grid, double alpha);

/// Time-weighted mixture of the IO and LT averages; tau_rc in days.
std::pair<Vector, double> cycle_average_parking(const WeightedDistribution& io,
                                                const WeightedDistribution& lt, double tau_mc);

ContactConditional contact_conditional(const Vector& pi_q, const Vector& pi_r,
                                       const TransitionMatrix& demand,
                                       const ThresholdProjectors& projectors,
                                       const LeadTimeGrid& grid, double alpha);

/// Truncates/pads the contact tail to kappa_0..kappa_max_demand.
AvailabilityVector availability_from_tail(const Vector& tail, int max_demand);

/// Full stationary parking solution for fixed operators.
ParkingCycleSolution solve_parking(const ParkingOperators& ops, double tau_mc,
                                   const std::optional<Vector>& init = std::nullopt);

}  // namespace spares
