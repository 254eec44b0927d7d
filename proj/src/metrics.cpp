#include "spares/metrics.hpp"

#include "spares/errors.hpp"

#include <algorithm>

namespace spares {

double expected_shortage(const Vector& pi, int n_nominal) {
    double s = 0.0;
    const int top = std::min<int>(n_nominal, static_cast<int>(pi.size()) - 1);
    for (int i = 0; i <= top; ++i) s += (n_nominal - i) * pi[i];
    return s;
}

double stockout_probability(const Vector& pi) {
    if (pi.size() == 0) throw Error(ErrorCode::InvalidArgument, "empty distribution");
    return pi[0];
}

double mean_stock(const Vector& pi) {
    double m = 0.0;
    for (Eigen::Index i = 0; i < pi.size(); ++i) m += static_cast<double>(i) * pi[i];
    return m;
}

namespace {

double excess_above(const Vector& pi, int level) {
    double s = 0.0;
    for (Eigen::Index i = level + 1; i < pi.size(); ++i) s += static_cast<double>(i - level) * pi[i];
    return s;
}

}  // namespace

double launch_mass(const ScenarioModel& model, const PolicyParams& policy) {
    return model.transfer.m_batch * policy.q_p;
}

CostBreakdown cost_breakdown(const CoupledSolution& sol, const ScenarioConfig& cfg) {
    const auto& c = cfg.costs;
    const auto& g = cfg.geometry;
    const auto& p = cfg.policy;
    const double tau_rc_p = sol.parking.tau_rc;
    const double tau_rc_c = sol.inplane.tau_rc;

    CostBreakdown out;
    out.c_build = c.c_build * g.n_orbit_p * p.q_c * p.q_p / tau_rc_p;

    const double plane_excess = excess_above(sol.inplane.pi_rc, g.n_sat_nominal);
    const double parking_sats = p.q_c * mean_stock(sol.parking.pi_rc);
    out.c_hold = (c.c_hold_c * g.n_orbit_c * plane_excess + c.c_hold_p * g.n_orbit_p * parking_sats) /
                 kDaysPerYear;

    const double transferred = mean_stock(sol.inplane.pi_q) - mean_stock(sol.inplane.pi_r);
    out.c_trans = g.n_orbit_c / (tau_rc_c * p.q_c) * (c.c_fuel * sol.model.transfer.m_fuel + c.c_trans) *
                  transferred;

    const double per_launch =
        c.rideshare ? std::min(c.c_lv_unit * 1e-6 * launch_mass(sol.model, p), c.c_lv_full) : c.c_lv_full;
    out.c_launch = g.n_orbit_p / tau_rc_p * per_launch;

    out.c_total = out.c_build + out.c_hold + out.c_trans + out.c_launch;
    return out;
}

CostBreakdown cost_breakdown_direct(const DirectSolution& sol, const ScenarioConfig& cfg) {
    const auto& g = cfg.geometry;
    const double tau_rc = sol.echelon.tau_rc;
    CostBreakdown out;
    out.c_build = cfg.costs.c_build * g.n_orbit_c * cfg.direct.q / tau_rc;
    out.c_hold = cfg.costs.c_hold_c * g.n_orbit_c * excess_above(sol.echelon.pi_rc, g.n_sat_nominal) /
                 kDaysPerYear;
    out.c_trans = 0.0;
    out.c_launch = g.n_orbit_c / tau_rc * cfg.direct.c_lv_full;
    out.c_total = out.c_build + out.c_hold + out.c_launch;
    return out;
}

ResilienceMetrics resilience(const CoupledSolution& sol, const ScenarioConfig& cfg) {
    return {expected_shortage(sol.inplane.pi_rc, cfg.geometry.n_sat_nominal),
            stockout_probability(sol.parking.pi_rc), mean_stock(sol.inplane.pi_rc),
            mean_stock(sol.parking.pi_rc)};
}

ResilienceMetrics resilience_direct(const DirectSolution& sol, const ScenarioConfig& cfg) {
    return {expected_shortage(sol.echelon.pi_rc, cfg.geometry.n_sat_nominal), 0.0,
            mean_stock(sol.echelon.pi_rc), 0.0};
}

}  // namespace spares
