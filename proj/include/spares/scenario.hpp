#pragma once

// Scenario parameters: the single input artifact shared by analysis,
// simulation, and optimization. Units are spelled out per field.

#include "spares/orbital.hpp"

#include <cstdint>
#include <optional>

namespace spares {

struct StochasticParams {
    double lambda_sat_per_year = 0.05;  ///< failures / satellite / year
    double mu_lv_days = 20.0;
    double tau_lv_days = 20.0;
    double tau_mc_days = 0.5;
};

struct PolicyParams {
    int q_c = 1;  ///< satellites per batch
    int r_c = 0;  ///< satellites
    int q_p = 1;  ///< batches per launch
    int r_p = 0;  ///< batches
};

struct CostParams {
    double c_build = 0.5;     ///< M$/satellite
    double c_hold_c = 0.5;    ///< M$/satellite/year
    double c_hold_p = 0.5;    ///< M$/satellite/year
    double c_fuel = 0.001;    ///< M$/kg
    double c_trans = 0.5;     ///< M$ per transfer
    double c_lv_unit = 6500;  ///< $/kg (not M$)
    double c_lv_full = 67;    ///< M$
    double m_payload = 18500; ///< kg
    double m_sat = 150;       ///< kg
    double m_bus = 100;       ///< kg
    double v_ex = 2.16;       ///< km/s
    bool rideshare = false;

    void validate() const;
};

/// Small-launcher parameters for the direct strategy.
struct DirectParams {
    int q = 2;
    int r = 39;
    double mu_lv_days = 10.0;
    double tau_lv_days = 10.0;
    double c_lv_full = 7.5;    ///< M$
    double m_payload = 300.0;  ///< kg
};

struct IntRange {
    int lo = 0;
    int hi = 0;
};

struct DesignBounds {
    IntRange q_c{1, 20};
    IntRange r_c{35, 45};
    IntRange q_p{1, 40};
    IntRange r_p{0, 10};
    IntRange n_orbit_p{1, 20};
    IntRange h_p{500, 1100};  ///< km, 1 km grid
};

struct DirectBounds {
    IntRange q{1, 20};
    IntRange r{35, 45};
};

struct GaParams {
    int population = 100;
    int generations = 200;
    double crossover_rate = 0.9;
    double mutation_rate = 0.2;  ///< per gene
    int tournament_size = 2;
    std::uint64_t seed = 20240811;
    double penalty_weight = 100.0;
    double nonconverged_penalty = 1e3;

    void validate() const;
};

struct OptimizerSettings {
    double epsilon1 = 0.25;
    /// Empty means 1 / (N_sat_p + 1), recomputed per design.
    std::optional<double> epsilon2;
    DesignBounds bounds;
    DirectBounds direct_bounds;
    GaParams ga;
};

struct SimSettings {
    double horizon_years = 20.0;
    int n_replications = 20;
    std::uint64_t seed = 12345;
    double warmup_years = 2.0;

    void validate() const;
};

struct ScenarioConfig {
    EarthConstants constants;
    ConstellationGeometry geometry;
    StochasticParams stochastic;
    PolicyParams policy;
    CostParams costs;
    DirectParams direct;
    OptimizerSettings optimizer;
    SimSettings sim;

    /// Checks every module-level precondition that can be checked up front.
    void validate() const;
};

/// Baseline case study: 40 planes x 40 satellites at 1200 km / 50 deg,
/// design (4, 40, 23, 2, 1, 735) against a heavy launcher.
ScenarioConfig baseline_scenario();

}  // namespace spares
