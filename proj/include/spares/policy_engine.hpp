#pragma once

#include "spares/inplane_chain.hpp"
#include "spares/orbital.hpp"
#include "spares/parking_chain.hpp"
#include "spares/scenario.hpp"
#include "spares/stochastic.hpp"

#include <vector>

namespace spares {

/// Quantities derived once from a scenario before any chain is solved.
struct ScenarioModel {
    AlignmentPeriods periods;
    QuantizedPeriods steps;
    FailureModel failure;
    LeadTimeModel lead_time;
    LeadTimeGrid grid;
    InplanePolicy inplane;
    ParkingPolicy parking;
    TransferCosting transfer;  ///< one batch: q_c satellites plus bus
    double tau_mc = 0.0;
};

ScenarioModel assemble(const ScenarioConfig& config);

struct EchelonSolution {
    Vector pi_q;
    Vector pi_r;
    Vector pi_rc;
    double tau_rc = 0.0;  ///< days
};

struct SolveOptions {
    double epsilon = 1e-10;  ///< on ||kappa_{k+1} - kappa_k||_inf
    int max_iterations = 200;
};

struct CoupledSolution {
    ScenarioModel model;
    EchelonSolution inplane;
    ParkingCycleSolution parking;
    AvailabilityVector kappa;
    DemandPmf chi;
    int iterations = 0;
    double residual = 0.0;
    bool converged = false;
    /// P(X_p = 0) below 1/(N_sat_p + 1); outside it the i.i.d. parking
    /// assumption is known to degrade.
    bool valid = false;
    double inplane_residual = 0.0;
    double parking_residual = 0.0;
    std::vector<double> residual_history;
};

/// Coupled fixed point between the plane and parking chains, starting from
/// full parking availability. Non-convergence is reported through
/// `converged`, not thrown.
CoupledSolution solve_indirect(const ScenarioConfig& config, const SolveOptions& options = {});

struct DirectSolution {
    EchelonSolution echelon;
    ParkingCycleSolution detail;  ///< same machinery, k_p = 1
    LeadTimeModel lead_time;
    FailureModel failure;
};

/// Direct small-launcher resupply of each plane, solved as the parking
/// cycle with a one-step review period and the satellite failure matrix.
DirectSolution solve_direct(const ScenarioConfig& config);

}  // namespace spares
