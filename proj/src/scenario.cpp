#include "spares/scenario.hpp"

#include "spares/errors.hpp"

#include <cmath>

namespace spares {

void CostParams::validate() const {
    for (double v : {c_build, c_hold_c, c_hold_p, c_fuel, c_trans, c_lv_unit, c_lv_full, m_sat, m_bus}) {
        if (!(v >= 0.0) || !std::isfinite(v)) {
            throw Error(ErrorCode::Config, "cost and mass parameters must be finite and non-negative");
        }
    }
    if (!(m_payload > 0.0)) throw Error(ErrorCode::Config, "m_payload must be positive");
    if (!(v_ex > 0.0)) throw Error(ErrorCode::InvalidPropulsion, "v_ex must be positive");
}

void GaParams::validate() const {
    if (population < 4) throw Error(ErrorCode::Config, "GA population must be at least 4");
    if (generations < 0) throw Error(ErrorCode::Config, "GA generations must be non-negative");
    if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0) ||
        !(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
        throw Error(ErrorCode::Config, "GA rates must lie in [0, 1]");
    }
    if (tournament_size < 1) throw Error(ErrorCode::Config, "tournament size must be >= 1");
    if (!(penalty_weight >= 0.0)) throw Error(ErrorCode::Config, "penalty weight must be >= 0");
}

void SimSettings::validate() const {
    if (!(horizon_years > warmup_years) || warmup_years < 0.0) {
        throw Error(ErrorCode::Config, "simulation horizon must exceed a non-negative warm-up");
    }
    if (n_replications < 1) throw Error(ErrorCode::Config, "need at least one replication");
}

namespace {

void check_range(const IntRange& r, const char* name, int floor) {
    if (r.lo > r.hi || r.lo < floor) {
        throw Error(ErrorCode::Config, std::string("invalid bounds for ") + name);
    }
}

}  // namespace

void ScenarioConfig::validate() const {
    constants.validate();
    geometry.validate();
    if (!(stochastic.lambda_sat_per_year > 0.0)) {
        throw Error(ErrorCode::Config, "lambda_sat must be strictly positive");
    }
    if (!(stochastic.tau_mc_days > 0.0)) throw Error(ErrorCode::Config, "tau_mc must be positive");
    if (!(stochastic.mu_lv_days > 0.0) || !(direct.mu_lv_days > 0.0)) {
        throw Error(ErrorCode::Config, "mu_lv must be positive");
    }
    if (stochastic.tau_lv_days < 0.0 || direct.tau_lv_days < 0.0) {
        throw Error(ErrorCode::Config, "tau_lv must be non-negative");
    }
    if (policy.q_c < 1 || policy.r_c < 0 || policy.q_p < 1 || policy.r_p < 0) {
        throw Error(ErrorCode::Config, "policy needs q_c, q_p >= 1 and r_c, r_p >= 0");
    }
    if (direct.q < 1 || direct.r < 0) throw Error(ErrorCode::Config, "direct policy needs q >= 1, r >= 0");
    if (!(direct.c_lv_full >= 0.0) || !(direct.m_payload > 0.0)) {
        throw Error(ErrorCode::Config, "direct launcher cost/payload invalid");
    }
    costs.validate();
    if (!(optimizer.epsilon1 >= 0.0)) throw Error(ErrorCode::Config, "epsilon1 must be >= 0");
    if (optimizer.epsilon2 && !(*optimizer.epsilon2 >= 0.0)) {
        throw Error(ErrorCode::Config, "epsilon2 must be >= 0");
    }
    const auto& b = optimizer.bounds;
    check_range(b.q_c, "q_c", 1);
    check_range(b.r_c, "r_c", 0);
    check_range(b.q_p, "q_p", 1);
    check_range(b.r_p, "r_p", 0);
    check_range(b.n_orbit_p, "n_orbit_p", 1);
    check_range(b.h_p, "h_p", 1);
    if (b.h_p.hi >= geometry.h_c) throw Error(ErrorCode::Config, "h_p upper bound must stay below h_c");
    check_range(optimizer.direct_bounds.q, "direct q", 1);
    check_range(optimizer.direct_bounds.r, "direct r", 0);
    optimizer.ga.validate();
    sim.validate();
}

ScenarioConfig baseline_scenario() {
    ScenarioConfig c;
    c.geometry.h_c = 1200.0;
    c.geometry.h_p = 735.0;
    c.geometry.inclination = 50.0 * kPi / 180.0;
    c.geometry.n_orbit_c = 40;
    c.geometry.n_orbit_p = 1;
    c.geometry.n_sat_nominal = 40;
    c.policy = {4, 40, 23, 2};
    return c;
}

}  // namespace spares
