#include "spares/config.hpp"

#include "spares/errors.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

namespace spares {

using nlohmann::json;

namespace {

// Reads fields from one JSON object and remembers which keys were used, so
// leftovers can be reported as unknown.
class Section {
public:
    Section(const json& doc, std::string path) : doc_(doc), path_(std::move(path)) {
        if (!doc_.is_object()) fail("must be an object");
    }

    template <class T>
    void read(const char* key, T& field) {
        seen_.insert(key);
        const auto it = doc_.find(key);
        if (it == doc_.end()) return;
        try {
            if constexpr (std::is_same_v<T, int>) {
                if (!it->is_number_integer()) fail(std::string(key) + " must be an integer");
                field = it->template get<int>();
            } else if constexpr (std::is_same_v<T, std::uint64_t>) {
                if (!it->is_number_unsigned()) fail(std::string(key) + " must be a non-negative integer");
                field = it->template get<std::uint64_t>();
            } else if constexpr (std::is_same_v<T, bool>) {
                if (!it->is_boolean()) fail(std::string(key) + " must be a boolean");
                field = it->template get<bool>();
            } else {
                if (!it->is_number()) fail(std::string(key) + " must be a number");
                field = it->template get<T>();
            }
        } catch (const json::exception& e) {
            fail(std::string(key) + ": " + e.what());
        }
    }

    void read_range(const char* key, IntRange& range) {
        seen_.insert(key);
        const auto it = doc_.find(key);
        if (it == doc_.end()) return;
        if (!it->is_array() || it->size() != 2 || !(*it)[0].is_number_integer() || !(*it)[1].is_number_integer()) {
            fail(std::string(key) + " must be [lo, hi] integers");
        }
        range = {(*it)[0].get<int>(), (*it)[1].get<int>()};
    }

    bool has(const char* key) const { return doc_.contains(key); }

    const json* child(const char* key) {
        seen_.insert(key);
        const auto it = doc_.find(key);
        return it == doc_.end() ? nullptr : &*it;
    }

    std::string path(const char* key) const { return path_.empty() ? key : path_ + "." + key; }

    void finish() const {
        for (const auto& [k, v] : doc_.items()) {
            if (!seen_.count(k)) fail("unknown key '" + k + "'");
        }
    }

    [[noreturn]] void fail(const std::string& msg) const {
        throw Error(ErrorCode::Config, (path_.empty() ? std::string("config") : path_) + ": " + msg);
    }

private:
    const json& doc_;
    std::string path_;
    std::set<std::string> seen_;
};

double to_deg(double rad) { return rad * 180.0 / kPi; }
double to_rad(double deg) { return deg * kPi / 180.0; }

}  // namespace

ScenarioConfig parse_config(const json& doc) {
    ScenarioConfig c = baseline_scenario();
    Section top(doc, "");
    {
        const json* schema = top.child("schema");
        if (!schema) top.fail("missing \"schema\"");
        if (!schema->is_number_integer() || schema->get<int>() != kConfigSchema) {
            top.fail("unsupported schema (expected 1)");
        }
    }
    if (const json* j = top.child("constants")) {
        Section s(*j, "constants");
        s.read("mu_km3_s2", c.constants.mu);
        s.read("r_earth_km", c.constants.r_earth);
        s.read("j2", c.constants.j2);
        s.finish();
    }
    if (const json* j = top.child("geometry")) {
        Section s(*j, "geometry");
        s.read("h_c_km", c.geometry.h_c);
        s.read("h_p_km", c.geometry.h_p);
        double inc_deg = to_deg(c.geometry.inclination);
        s.read("inclination_deg", inc_deg);
        if (s.has("inclination_deg")) c.geometry.inclination = to_rad(inc_deg);
        s.read("n_orbit_c", c.geometry.n_orbit_c);
        s.read("n_orbit_p", c.geometry.n_orbit_p);
        s.read("n_sat_nominal", c.geometry.n_sat_nominal);
        s.finish();
    }
    if (const json* j = top.child("stochastic")) {
        Section s(*j, "stochastic");
        s.read("lambda_sat_per_year", c.stochastic.lambda_sat_per_year);
        s.read("mu_lv_days", c.stochastic.mu_lv_days);
        s.read("tau_lv_days", c.stochastic.tau_lv_days);
        s.read("tau_mc_days", c.stochastic.tau_mc_days);
        s.finish();
    }
    if (const json* j = top.child("policy")) {
        Section s(*j, "policy");
        s.read("q_c", c.policy.q_c);
        s.read("r_c", c.policy.r_c);
        s.read("q_p", c.policy.q_p);
        s.read("r_p", c.policy.r_p);
        s.finish();
    }
    if (const json* j = top.child("costs")) {
        Section s(*j, "costs");
        s.read("c_build_musd_per_sat", c.costs.c_build);
        s.read("c_hold_c_musd_per_sat_year", c.costs.c_hold_c);
        s.read("c_hold_p_musd_per_sat_year", c.costs.c_hold_p);
        s.read("c_fuel_musd_per_kg", c.costs.c_fuel);
        s.read("c_trans_musd", c.costs.c_trans);
        s.read("c_lv_unit_usd_per_kg", c.costs.c_lv_unit);
        s.read("c_lv_full_musd", c.costs.c_lv_full);
        s.read("m_payload_kg", c.costs.m_payload);
        s.read("m_sat_kg", c.costs.m_sat);
        s.read("m_bus_kg", c.costs.m_bus);
        s.read("v_ex_km_s", c.costs.v_ex);
        s.read("rideshare", c.costs.rideshare);
        s.finish();
    }
    if (const json* j = top.child("direct")) {
        Section s(*j, "direct");
        s.read("q", c.direct.q);
        s.read("r", c.direct.r);
        s.read("mu_lv_days", c.direct.mu_lv_days);
        s.read("tau_lv_days", c.direct.tau_lv_days);
        s.read("c_lv_full_musd", c.direct.c_lv_full);
        s.read("m_payload_kg", c.direct.m_payload);
        s.finish();
    }
    // Reorder-point bounds follow the nominal plane size unless given.
    const int n_bar = c.geometry.n_sat_nominal;
    c.optimizer.bounds.r_c = {std::max(0, n_bar - 5), n_bar + 5};
    c.optimizer.direct_bounds.r = {std::max(0, n_bar - 5), n_bar + 5};
    if (const json* j = top.child("optimizer")) {
        Section s(*j, "optimizer");
        s.read("epsilon1", c.optimizer.epsilon1);
        if (const json* e2 = s.child("epsilon2")) {
            if (e2->is_string() && e2->get<std::string>() == "auto") {
                c.optimizer.epsilon2.reset();
            } else if (e2->is_number()) {
                c.optimizer.epsilon2 = e2->get<double>();
            } else {
                s.fail("epsilon2 must be \"auto\" or a number");
            }
        }
        if (const json* b = s.child("bounds")) {
            Section bs(*b, "optimizer.bounds");
            bs.read_range("q_c", c.optimizer.bounds.q_c);
            bs.read_range("r_c", c.optimizer.bounds.r_c);
            bs.read_range("q_p", c.optimizer.bounds.q_p);
            bs.read_range("r_p", c.optimizer.bounds.r_p);
            bs.read_range("n_orbit_p", c.optimizer.bounds.n_orbit_p);
            bs.read_range("h_p_km", c.optimizer.bounds.h_p);
            bs.finish();
        }
        if (const json* b = s.child("direct_bounds")) {
            Section bs(*b, "optimizer.direct_bounds");
            bs.read_range("q", c.optimizer.direct_bounds.q);
            bs.read_range("r", c.optimizer.direct_bounds.r);
            bs.finish();
        }
        if (const json* g = s.child("ga")) {
            Section gs(*g, "optimizer.ga");
            gs.read("population", c.optimizer.ga.population);
            gs.read("generations", c.optimizer.ga.generations);
            gs.read("crossover_rate", c.optimizer.ga.crossover_rate);
            gs.read("mutation_rate", c.optimizer.ga.mutation_rate);
            gs.read("tournament_size", c.optimizer.ga.tournament_size);
            gs.read("seed", c.optimizer.ga.seed);
            gs.read("penalty_weight", c.optimizer.ga.penalty_weight);
            gs.read("nonconverged_penalty", c.optimizer.ga.nonconverged_penalty);
            gs.finish();
        }
        s.finish();
    }
    if (const json* j = top.child("simulation")) {
        Section s(*j, "simulation");
        s.read("horizon_years", c.sim.horizon_years);
        s.read("n_replications", c.sim.n_replications);
        s.read("seed", c.sim.seed);
        s.read("warmup_years", c.sim.warmup_years);
        s.finish();
    }
    top.finish();
    try {
        c.validate();
    } catch (const Error& e) {
        if (e.code() == ErrorCode::Config) throw;
        throw Error(ErrorCode::Config, e.what());
    }
    return c;
}

ScenarioConfig parse_config_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw Error(ErrorCode::Config, std::string("malformed JSON: ") + e.what());
    }
    return parse_config(doc);
}

ScenarioConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorCode::Config, "cannot read " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

json config_to_json(const ScenarioConfig& c) {
    auto range = [](const IntRange& r) { return json::array({r.lo, r.hi}); };
    json doc;
    doc["schema"] = kConfigSchema;
    doc["constants"] = {{"mu_km3_s2", c.constants.mu}, {"r_earth_km", c.constants.r_earth}, {"j2", c.constants.j2}};
    doc["geometry"] = {{"h_c_km", c.geometry.h_c},
                       {"h_p_km", c.geometry.h_p},
                       {"inclination_deg", to_deg(c.geometry.inclination)},
                       {"n_orbit_c", c.geometry.n_orbit_c},
                       {"n_orbit_p", c.geometry.n_orbit_p},
                       {"n_sat_nominal", c.geometry.n_sat_nominal}};
    doc["stochastic"] = {{"lambda_sat_per_year", c.stochastic.lambda_sat_per_year},
                         {"mu_lv_days", c.stochastic.mu_lv_days},
                         {"tau_lv_days", c.stochastic.tau_lv_days},
                         {"tau_mc_days", c.stochastic.tau_mc_days}};
    doc["policy"] = {{"q_c", c.policy.q_c}, {"r_c", c.policy.r_c}, {"q_p", c.policy.q_p}, {"r_p", c.policy.r_p}};
    doc["costs"] = {{"c_build_musd_per_sat", c.costs.c_build},
                    {"c_hold_c_musd_per_sat_year", c.costs.c_hold_c},
                    {"c_hold_p_musd_per_sat_year", c.costs.c_hold_p},
                    {"c_fuel_musd_per_kg", c.costs.c_fuel},
                    {"c_trans_musd", c.costs.c_trans},
                    {"c_lv_unit_usd_per_kg", c.costs.c_lv_unit},
                    {"c_lv_full_musd", c.costs.c_lv_full},
                    {"m_payload_kg", c.costs.m_payload},
                    {"m_sat_kg", c.costs.m_sat},
                    {"m_bus_kg", c.costs.m_bus},
                    {"v_ex_km_s", c.costs.v_ex},
                    {"rideshare", c.costs.rideshare}};
    doc["direct"] = {{"q", c.direct.q},
                     {"r", c.direct.r},
                     {"mu_lv_days", c.direct.mu_lv_days},
                     {"tau_lv_days", c.direct.tau_lv_days},
                     {"c_lv_full_musd", c.direct.c_lv_full},
                     {"m_payload_kg", c.direct.m_payload}};
    const auto& o = c.optimizer;
    doc["optimizer"] = {
        {"epsilon1", o.epsilon1},
        {"epsilon2", o.epsilon2 ? json(*o.epsilon2) : json("auto")},
        {"bounds",
         {{"q_c", range(o.bounds.q_c)},
          {"r_c", range(o.bounds.r_c)},
          {"q_p", range(o.bounds.q_p)},
          {"r_p", range(o.bounds.r_p)},
          {"n_orbit_p", range(o.bounds.n_orbit_p)},
          {"h_p_km", range(o.bounds.h_p)}}},
        {"direct_bounds", {{"q", range(o.direct_bounds.q)}, {"r", range(o.direct_bounds.r)}}},
        {"ga",
         {{"population", o.ga.population},
          {"generations", o.ga.generations},
          {"crossover_rate", o.ga.crossover_rate},
          {"mutation_rate", o.ga.mutation_rate},
          {"tournament_size", o.ga.tournament_size},
          {"seed", o.ga.seed},
          {"penalty_weight", o.ga.penalty_weight},
          {"nonconverged_penalty", o.ga.nonconverged_penalty}}}};
    doc["simulation"] = {{"horizon_years", c.sim.horizon_years},
                         {"n_replications", c.sim.n_replications},
                         {"seed", c.sim.seed},
                         {"warmup_years", c.sim.warmup_years}};
    return doc;
}

}  // namespace spares
