#pragma once

#include "spares/markov.hpp"
#include "spares/policy_engine.hpp"
#include "spares/scenario.hpp"

namespace spares {

/// All components in M$/day.
struct CostBreakdown {
    double c_build = 0.0;
    double c_hold = 0.0;
    double c_trans = 0.0;
    double c_launch = 0.0;
    double c_total = 0.0;
};

struct ResilienceMetrics {
    double shortage_c = 0.0;   ///< expected satellites below nominal
    double stockout_p = 0.0;   ///< P(X_p = 0); 0 for the direct strategy
    double mean_c = 0.0;       ///< satellites
    double mean_p = 0.0;       ///< batches
};

/// Launch mass of one parking resupply, q_p batches with fuel.
double launch_mass(const ScenarioModel& model, const PolicyParams& policy);

CostBreakdown cost_breakdown(const CoupledSolution& solution, const ScenarioConfig& config);
CostBreakdown cost_breakdown_direct(const DirectSolution& solution, const ScenarioConfig& config);

double expected_shortage(const Vector& pi_rc_c, int n_nominal);
double stockout_probability(const Vector& pi_rc_p);
double mean_stock(const Vector& pi);

ResilienceMetrics resilience(const CoupledSolution& solution, const ScenarioConfig& config);
ResilienceMetrics resilience_direct(const DirectSolution& solution, const ScenarioConfig& config);

}  // namespace spares
