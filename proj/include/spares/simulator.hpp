#pragma once

// Discrete-time Monte Carlo model of the whole constellation: every plane
// and parking orbit is tracked individually, contacts come from the actual
// RAAN geometry, and launch lead times are sampled. Serves as the
// independent check on the stationary analysis.
//
// Random numbers: std::mt19937_64 (output fully specified by the C++
// standard), replication i seeded with master_seed ^ i. Uniforms take the
// top 53 bits; Poisson and exponential draws use inversion, so results do
// not depend on the standard library's distribution implementations.

#include "spares/metrics.hpp"
#include "spares/scenario.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace spares {

struct SimConfig {
    double horizon_years = 20.0;
    int n_replications = 20;
    std::uint64_t seed = 12345;
    double warmup_years = 2.0;
    ScenarioConfig scenario;

    static SimConfig from_scenario(const ScenarioConfig& scenario);
    void validate() const;
};

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
};

struct SimStats {
    Estimate mean_c, mean_p, shortage_c, stockout_p;
    /// Pooled time-average occupancy, index = stock level.
    std::vector<double> histogram_c, histogram_p;
    /// Steps from a plane first dropping to r_c or below until its next contact.
    std::vector<double> lead_time_histogram;
    /// Batch demand raised at contacts.
    std::vector<double> demand_histogram;
    int n_replications = 0;
    std::int64_t steps_per_replication = 0;
    std::int64_t recorded_steps = 0;
    std::int64_t orders_placed = 0;
    std::int64_t bound_violations = 0;  ///< stock outside [0, max]; must stay 0
};

SimStats run_monte_carlo(const SimConfig& config);

/// One replication; exposed for invariant checks over short horizons.
SimStats run_replication(const SimConfig& config, int replication_index);

struct ErrorReport {
    double rel_mean_c = 0.0;
    double rel_mean_p = 0.0;
    double rel_shortage_c = 0.0;
    double abs_stockout_pp = 0.0;  ///< percentage points
    bool valid = true;             ///< analysis inside the P(X_p=0) heuristic
};

/// Relative errors are taken against the simulated value.
ErrorReport compare(const ResilienceMetrics& analysis, const ResilienceMetrics& simulated,
                    bool valid = true);
ErrorReport compare(const CoupledSolution& analysis, const ScenarioConfig& config, const SimStats& sim);

ResilienceMetrics as_metrics(const SimStats& sim);

}  // namespace spares
