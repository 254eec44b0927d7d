#include "spares/report.hpp"

#include "spares/errors.hpp"

#include <ostream>

namespace spares {

using nlohmann::json;

namespace {

json descending(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = v.size() - 1; i >= 0; --i) a.push_back(v[i]);
    return a;
}

json descending(const std::vector<double>& v) {
    json a = json::array();
    for (auto it = v.rbegin(); it != v.rend(); ++it) a.push_back(*it);
    return a;
}

std::vector<double> from_descending(const json& a) {
    std::vector<double> v;
    for (auto it = a.rbegin(); it != a.rend(); ++it) v.push_back(it->get<double>());
    return v;
}

json costs_json(const CostBreakdown& c) {
    return {{"c_build", c.c_build},
            {"c_hold", c.c_hold},
            {"c_trans", c.c_trans},
            {"c_launch", c.c_launch},
            {"c_total", c.c_total}};
}

json metrics_json(const ResilienceMetrics& m) {
    return {{"shortage_c", m.shortage_c}, {"stockout_p", m.stockout_p}, {"mean_c", m.mean_c}, {"mean_p", m.mean_p}};
}

json ascending_array(const Vector& v) {
    json a = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(v[i]);
    return a;
}

}  // namespace

json analysis_report(const CoupledSolution& s, const ScenarioConfig& cfg) {
    const auto& m = s.model;
    json r;
    r["strategy"] = "indirect";
    r["state_order"] = "descending";
    r["units"] = {{"costs", "M$/day"},
                  {"durations", "days"},
                  {"steps", "time steps of tau_mc"},
                  {"in_plane_states", "satellites"},
                  {"parking_states", "batches"},
                  {"launch_mass", "kg"}};
    r["policy"] = {{"q_c", cfg.policy.q_c}, {"r_c", cfg.policy.r_c}, {"q_p", cfg.policy.q_p}, {"r_p", cfg.policy.r_p},
                   {"n_orbit_p", cfg.geometry.n_orbit_p}, {"h_p", cfg.geometry.h_p}};
    r["distributions"] = {
        {"in_plane", {{"pi_q", descending(s.inplane.pi_q)}, {"pi_r", descending(s.inplane.pi_r)},
                      {"pi_rc", descending(s.inplane.pi_rc)}}},
        {"parking",
         {{"pi_q", descending(s.parking.pi_q)}, {"pi_r", descending(s.parking.pi_r)},
          {"pi_io", descending(s.parking.pi_io)}, {"pi_lt", descending(s.parking.pi_lt)},
          {"pi_rc", descending(s.parking.pi_rc)}, {"pi_io_E", descending(s.parking.pi_io_E)},
          {"pi_lt_E", descending(s.parking.pi_lt_E)}, {"pi_rc_E", descending(s.parking.pi_rc_E)}}}};
    // Coupling vectors are indexed by batch demand j = 0, 1, ...
    r["kappa"] = ascending_array(s.kappa.values());
    r["chi"] = ascending_array(s.chi.chi);
    r["durations"] = {{"tau_c", m.periods.tau_c},
                      {"tau_p", m.periods.tau_p},
                      {"tau_mc", m.tau_mc},
                      {"k_c", m.steps.k_c},
                      {"k_p", m.steps.k_p},
                      {"k_lv", m.lead_time.k_lv},
                      {"tau_rc_c", s.inplane.tau_rc},
                      {"tau_rc_p", s.parking.tau_rc},
                      {"k_io", s.parking.k_io},
                      {"k_lt", s.parking.k_lt},
                      {"k_io_E", s.parking.k_io_E},
                      {"k_lt_E", s.parking.k_lt_E}};
    r["transfer"] = {{"delta_v_km_s", m.transfer.delta_v},
                     {"m_dry_kg", m.transfer.m_dry},
                     {"m_fuel_kg", m.transfer.m_fuel},
                     {"m_total_kg", launch_mass(m, cfg.policy)}};
    r["costs"] = costs_json(cost_breakdown(s, cfg));
    r["metrics"] = metrics_json(resilience(s, cfg));
    json hist = json::array();
    for (double h : s.residual_history) hist.push_back(h);
    r["convergence"] = {{"converged", s.converged},
                        {"iterations", s.iterations},
                        {"residual", s.residual},
                        {"residual_history", hist},
                        {"inplane_residual", s.inplane_residual},
                        {"parking_residual", s.parking_residual},
                        {"valid", s.valid},
                        {"validity_threshold", 1.0 / (m.parking.max_state() + 1.0)}};
    return r;
}

json direct_report(const DirectSolution& s, const ScenarioConfig& cfg) {
    json r;
    r["strategy"] = "direct";
    r["state_order"] = "descending";
    r["units"] = {{"costs", "M$/day"}, {"durations", "days"}, {"steps", "time steps of tau_mc"},
                  {"states", "satellites"}};
    r["policy"] = {{"q", cfg.direct.q}, {"r", cfg.direct.r}};
    r["distributions"] = {{"pi_q", descending(s.echelon.pi_q)},
                          {"pi_r", descending(s.echelon.pi_r)},
                          {"pi_io", descending(s.detail.pi_io)},
                          {"pi_lt", descending(s.detail.pi_lt)},
                          {"pi_rc", descending(s.echelon.pi_rc)}};
    r["durations"] = {{"tau_mc", s.lead_time.tau_mc},
                      {"k_lv", s.lead_time.k_lv},
                      {"tau_rc", s.echelon.tau_rc},
                      {"k_io", s.detail.k_io},
                      {"k_lt", s.detail.k_lt}};
    r["costs"] = costs_json(cost_breakdown_direct(s, cfg));
    r["metrics"] = metrics_json(resilience_direct(s, cfg));
    r["convergence"] = {{"converged", true}, {"iterations", s.detail.iterations}, {"residual", s.detail.residual}};
    return r;
}

json sim_stats_json(const SimStats& s) {
    auto est = [](const Estimate& e) { return json{{"mean", e.mean}, {"std_error", e.std_error}}; };
    return {{"units", {{"mean_c", "satellites"}, {"mean_p", "batches"}, {"shortage_c", "satellites"},
                       {"stockout_p", "probability"}, {"lead_time_histogram", "time steps of tau_mc"},
                       {"demand_histogram", "batches"}}},
            {"state_order", "descending"},
            {"mean_c", est(s.mean_c)},
            {"mean_p", est(s.mean_p)},
            {"shortage_c", est(s.shortage_c)},
            {"stockout_p", est(s.stockout_p)},
            {"histogram_c", descending(s.histogram_c)},
            {"histogram_p", descending(s.histogram_p)},
            {"lead_time_histogram", descending(s.lead_time_histogram)},
            {"demand_histogram", descending(s.demand_histogram)},
            {"n_replications", s.n_replications},
            {"steps_per_replication", s.steps_per_replication},
            {"recorded_steps", s.recorded_steps},
            {"orders_placed", s.orders_placed},
            {"bound_violations", s.bound_violations}};
}

SimStats sim_stats_from_json(const json& d) {
    try {
        auto est = [](const json& e) { return Estimate{e.at("mean").get<double>(), e.at("std_error").get<double>()}; };
        SimStats s;
        s.mean_c = est(d.at("mean_c"));
        s.mean_p = est(d.at("mean_p"));
        s.shortage_c = est(d.at("shortage_c"));
        s.stockout_p = est(d.at("stockout_p"));
        s.histogram_c = from_descending(d.at("histogram_c"));
        s.histogram_p = from_descending(d.at("histogram_p"));
        s.lead_time_histogram = from_descending(d.at("lead_time_histogram"));
        s.demand_histogram = from_descending(d.at("demand_histogram"));
        s.n_replications = d.at("n_replications").get<int>();
        s.steps_per_replication = d.at("steps_per_replication").get<std::int64_t>();
        s.recorded_steps = d.at("recorded_steps").get<std::int64_t>();
        s.orders_placed = d.at("orders_placed").get<std::int64_t>();
        s.bound_violations = d.at("bound_violations").get<std::int64_t>();
        return s;
    } catch (const json::exception& e) {
        throw Error(ErrorCode::Config, std::string("malformed simulation stats: ") + e.what());
    }
}

json error_report_json(const ErrorReport& e) {
    return {{"units", {{"relative", "fraction"}, {"stockout", "percentage points"}}},
            {"rel_mean_c", e.rel_mean_c},
            {"rel_mean_p", e.rel_mean_p},
            {"rel_shortage_c", e.rel_shortage_c},
            {"abs_stockout_pp", e.abs_stockout_pp},
            {"valid", e.valid}};
}

json evaluated_design_json(const EvaluatedDesign& e) {
    const auto& x = e.design;
    return {{"design", {{"q_c", x.q_c}, {"r_c", x.r_c}, {"q_p", x.q_p}, {"r_p", x.r_p},
                        {"n_orbit_p", x.n_orbit_p}, {"h_p_km", x.h_p}}},
            {"costs", costs_json(e.cost)},
            {"metrics", metrics_json(e.metrics)},
            {"g1", e.g1},
            {"g2", e.g2},
            {"g3", e.g3},
            {"m_total_kg", e.m_total},
            {"feasible", e.feasible},
            {"converged", e.converged},
            {"fitness", e.fitness}};
}

json evaluated_direct_json(const EvaluatedDirect& e) {
    return {{"design", {{"q", e.design.q}, {"r", e.design.r}}},
            {"costs", costs_json(e.cost)},
            {"metrics", metrics_json(e.metrics)},
            {"g1", e.g1},
            {"g3", e.g3},
            {"feasible", e.feasible},
            {"converged", e.converged},
            {"fitness", e.fitness}};
}

json optimization_json(const OptimizationResult& r) {
    return {{"strategy", "indirect"},
            {"units", {{"costs", "M$/day"}, {"g3", "kg"}}},
            {"best", evaluated_design_json(r.best)},
            {"evaluations", r.evaluations},
            {"generations", static_cast<int>(r.history.size())}};
}

json direct_optimization_json(const DirectOptimizationResult& r) {
    return {{"strategy", "direct"},
            {"units", {{"costs", "M$/day"}, {"g3", "kg"}}},
            {"best", evaluated_direct_json(r.best)},
            {"evaluations", r.evaluations},
            {"exhaustive", r.exhaustive}};
}

json sweep_json(const std::vector<SweepRow>& rows) {
    json a = json::array();
    for (const auto& r : rows) {
        a.push_back({{"lambda_per_year", r.lambda_per_year},
                     {"indirect", evaluated_design_json(r.indirect)},
                     {"direct", evaluated_direct_json(r.direct)},
                     {"savings", r.savings}});
    }
    return {{"units", {{"costs", "M$/day"}, {"lambda", "1/satellite/year"}, {"savings", "fraction"}}},
            {"rows", a}};
}

void write_histogram_csv(std::ostream& out, const std::vector<double>& pmf) {
    out << "state,probability\n";
    out.precision(17);
    for (std::size_t i = pmf.size(); i-- > 0;) out << i << ',' << pmf[i] << '\n';
}

std::string dump_report(const json& report) { return report.dump(2) + "\n"; }

}  // namespace spares
