#include "spares/policy_engine.hpp"

#include "spares/errors.hpp"

#include <cmath>

namespace spares {

ScenarioModel assemble(const ScenarioConfig& cfg) {
    cfg.geometry.validate();
    ScenarioModel m;
    m.tau_mc = cfg.stochastic.tau_mc_days;
    m.periods = alignment_periods(cfg.geometry, cfg.constants);
    m.steps = quantize_periods(m.periods.tau_c, m.periods.tau_p, m.tau_mc);
    m.failure = FailureModel::from_yearly(cfg.stochastic.lambda_sat_per_year, m.tau_mc,
                                          cfg.geometry.n_sat_nominal);
    m.lead_time = LeadTimeModel::make(cfg.stochastic.mu_lv_days, cfg.stochastic.tau_lv_days, m.tau_mc);
    m.grid = lead_time_grid(m.lead_time, m.steps.k_p);
    m.inplane = {cfg.policy.q_c, cfg.policy.r_c};
    m.parking = {cfg.policy.q_p, cfg.policy.r_p};
    m.inplane.validate();
    m.parking.validate();
    const double m_dry = cfg.policy.q_c * cfg.costs.m_sat + cfg.costs.m_bus;
    m.transfer = transfer_costing(cfg.geometry.a_p(cfg.constants), cfg.geometry.a_c(cfg.constants), m_dry,
                                  cfg.costs.v_ex, cfg.constants);
    return m;
}

CoupledSolution solve_indirect(const ScenarioConfig& cfg, const SolveOptions& opts) {
    CoupledSolution sol;
    sol.model = assemble(cfg);
    const ScenarioModel& m = sol.model;

    const TransitionMatrix failure = failure_matrix(m.inplane.max_state(), m.failure);
    const Matrix cycle_failure = cycle_failure_matrix(failure, m.steps.k_c);
    const int max_demand = m.inplane.max_demand();

    AvailabilityVector kappa = AvailabilityVector::full(max_demand);
    std::optional<Vector> inplane_init, parking_init;
    InplaneCycle inplane;
    ParkingCycleSolution parking;
    DemandPmf chi;

    for (int k = 0; k < opts.max_iterations; ++k) {
        const TransitionMatrix replenish = replenishment_matrix_inplane(kappa, m.inplane);
        inplane = solve_inplane_cycle(cycle_failure, replenish, inplane_init);
        inplane_init = inplane.pi_q;

        chi = demand_pmf(inplane.pi_r, m.inplane);
        const ParkingOperators ops =
            make_parking_operators(demand_failure_matrix(chi, m.parking), m.parking, m.grid,
                                   m.lead_time.alpha);
        parking = solve_parking(ops, m.tau_mc, parking_init);
        parking_init = parking.pi_q;

        AvailabilityVector next = availability_from_tail(parking.availability_tail, max_demand);
        sol.residual = (next.values() - kappa.values()).cwiseAbs().maxCoeff();
        sol.residual_history.push_back(sol.residual);
        kappa = std::move(next);
        sol.iterations = k + 1;
        if (sol.residual <= opts.epsilon) {
            sol.converged = true;
            break;
        }
    }

    sol.inplane.pi_q = inplane.pi_q;
    sol.inplane.pi_r = inplane.pi_r;
    sol.inplane.pi_rc = cycle_average_inplane(inplane.pi_q, failure, m.steps.k_c);
    sol.inplane.tau_rc = m.steps.k_c * m.tau_mc;
    sol.inplane_residual = inplane.residual;
    sol.parking_residual = parking.residual;
    sol.parking = std::move(parking);
    sol.kappa = std::move(kappa);
    sol.chi = std::move(chi);
    sol.valid = sol.parking.pi_rc[0] < 1.0 / (m.parking.max_state() + 1.0);
    return sol;
}

DirectSolution solve_direct(const ScenarioConfig& cfg) {
    DirectSolution sol;
    const ParkingPolicy policy{cfg.direct.q, cfg.direct.r};
    policy.validate();
    sol.failure = FailureModel::from_yearly(cfg.stochastic.lambda_sat_per_year, cfg.stochastic.tau_mc_days,
                                            cfg.geometry.n_sat_nominal);
    sol.lead_time = LeadTimeModel::make(cfg.direct.mu_lv_days, cfg.direct.tau_lv_days,
                                        cfg.stochastic.tau_mc_days);
    const TransitionMatrix failure = failure_matrix(policy.max_state(), sol.failure);
    const ParkingOperators ops =
        make_parking_operators(failure, policy, lead_time_grid(sol.lead_time, 1), sol.lead_time.alpha);
    sol.detail = solve_parking(ops, cfg.stochastic.tau_mc_days);
    sol.echelon = {sol.detail.pi_q, sol.detail.pi_r, sol.detail.pi_rc, sol.detail.tau_rc};
    return sol;
}

}  // namespace spares
