#pragma once

// Constrained design search. The indirect design is the six-gene integer
// vector (q_c, r_c, q_p, r_p, N_orbit_p, h_p); the direct design is (q, r).
// Constraints g_i <= 0 are handled with a static penalty.

#include "spares/metrics.hpp"
#include "spares/scenario.hpp"

#include <array>
#include <functional>
#include <iosfwd>
#include <vector>

namespace spares {

struct DesignVector {
    int q_c = 1;
    int r_c = 0;
    int q_p = 1;
    int r_p = 0;
    int n_orbit_p = 1;
    int h_p = 0;  ///< km

    std::array<int, 6> genes() const { return {q_c, r_c, q_p, r_p, n_orbit_p, h_p}; }
    static DesignVector from_genes(const std::array<int, 6>& g);
    bool operator==(const DesignVector&) const = default;
};

struct DirectDesign {
    int q = 1;
    int r = 0;
    bool operator==(const DirectDesign&) const = default;
};

struct EvaluatedDesign {
    DesignVector design;
    CostBreakdown cost;
    ResilienceMetrics metrics;
    double g1 = 0.0;  ///< S_c - epsilon1
    double g2 = 0.0;  ///< P(X_p = 0) - epsilon2
    double g3 = 0.0;  ///< launch mass - payload capacity, kg
    double m_total = 0.0;
    bool feasible = false;
    bool converged = false;
    double fitness = 0.0;
};

struct EvaluatedDirect {
    DirectDesign design;
    CostBreakdown cost;
    ResilienceMetrics metrics;
    double g1 = 0.0;  ///< S_c - epsilon1
    double g3 = 0.0;  ///< q * m_sat - small-launcher payload, kg
    bool feasible = false;
    bool converged = false;
    double fitness = 0.0;
};

/// Scenario with the design's genes substituted in.
ScenarioConfig with_design(const ScenarioConfig& scenario, const DesignVector& x);
ScenarioConfig with_direct(const ScenarioConfig& scenario, const DirectDesign& x);
DesignVector design_of(const ScenarioConfig& scenario);

/// 1 / (N_sat_p + 1) unless the scenario fixes epsilon2.
double epsilon2_for(const ScenarioConfig& scenario, const DesignVector& x);

EvaluatedDesign evaluate_design(const DesignVector& x, const ScenarioConfig& scenario);
EvaluatedDirect evaluate_direct(const DirectDesign& x, const ScenarioConfig& scenario);

struct GenerationRecord {
    int generation = 0;
    double best_fitness = 0.0;
    double best_cost = 0.0;  ///< c_total of the best individual so far
    int feasible_count = 0;  ///< feasible individuals in this generation
};

struct OptimizationResult {
    EvaluatedDesign best;
    std::vector<GenerationRecord> history;
    int evaluations = 0;  ///< distinct designs solved
};

struct DirectOptimizationResult {
    EvaluatedDirect best;
    std::vector<GenerationRecord> history;  ///< empty for exhaustive enumeration
    int evaluations = 0;
    bool exhaustive = false;
};

/// Integer GA with tournament selection, uniform crossover, per-gene reset
/// mutation and one elite. h_p is additionally capped below h_c.
OptimizationResult optimize(const ScenarioConfig& scenario, const GaParams& ga, const DesignBounds& bounds);
OptimizationResult optimize(const ScenarioConfig& scenario);

/// Exhaustive when the (q, r) box has at most 10^4 points, GA otherwise.
DirectOptimizationResult optimize_direct(const ScenarioConfig& scenario, const GaParams& ga,
                                         const DirectBounds& bounds);
DirectOptimizationResult optimize_direct(const ScenarioConfig& scenario);

struct SweepRow {
    double lambda_per_year = 0.0;
    EvaluatedDesign indirect;
    EvaluatedDirect direct;
    double savings = 0.0;  ///< (direct - indirect) / direct
};

std::vector<SweepRow> sweep_failure_rate(const ScenarioConfig& scenario, const std::vector<double>& rates);

void write_history_csv(std::ostream& out, const std::vector<GenerationRecord>& history);

}  // namespace spares
