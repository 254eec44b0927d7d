#include "spares/simulator.hpp"

#include "spares/errors.hpp"
#include "spares/orbital.hpp"
#include "spares/stochastic.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <thread>

namespace spares {

SimConfig SimConfig::from_scenario(const ScenarioConfig& s) {
    SimConfig c;
    c.horizon_years = s.sim.horizon_years;
    c.n_replications = s.sim.n_replications;
    c.seed = s.sim.seed;
    c.warmup_years = s.sim.warmup_years;
    c.scenario = s;
    return c;
}

void SimConfig::validate() const {
    SimSettings{horizon_years, n_replications, seed, warmup_years}.validate();
    scenario.geometry.validate();
}

namespace {

struct Contact {
    std::int64_t step;
    int plane;
    int parking;
};

std::vector<Contact> contact_schedule(const ScenarioConfig& s, std::int64_t total_steps) {
    const auto& g = s.geometry;
    const double tau_mc = s.stochastic.tau_mc_days;
    const double rate = raan_drift_rate(g.a_c(s.constants), g.inclination, s.constants) -
                        raan_drift_rate(g.a_p(s.constants), g.inclination, s.constants);
    if (!(std::abs(rate) > 0.0)) {
        throw Error(ErrorCode::DegenerateAlignment, "zero relative RAAN drift");
    }
    const double two_pi = 2.0 * kPi;
    const double lap = two_pi / std::abs(rate);
    const double horizon_days = static_cast<double>(total_steps) * tau_mc;
    const double sign = rate > 0.0 ? 1.0 : -1.0;

    std::vector<Contact> out;
    for (int c = 0; c < g.n_orbit_c; ++c) {
        for (int p = 0; p < g.n_orbit_p; ++p) {
            // relative node angle: theta0 + rate * t, contact when it wraps to 0
            const double theta0 = two_pi * c / g.n_orbit_c - two_pi * p / g.n_orbit_p;
            double first = std::fmod(-sign * theta0, two_pi);
            if (first < 0.0) first += two_pi;
            if (first > two_pi - 1e-9) first = 0.0;
            for (double t = first / std::abs(rate); t < horizon_days + tau_mc; t += lap) {
                const auto step = static_cast<std::int64_t>(std::llround(t / tau_mc));
                if (step < total_steps) out.push_back({step, c, p});
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Contact& a, const Contact& b) {
        if (a.step != b.step) return a.step < b.step;
        if (a.plane != b.plane) return a.plane < b.plane;
        return a.parking < b.parking;
    });
    return out;
}

class Sampler {
public:
    explicit Sampler(std::uint64_t seed) : engine_(seed) {}

    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    int poisson(double rate) {
        if (rate <= 0.0) return 0;
        const double u = uniform();
        double p = std::exp(-rate);
        double cdf = p;
        int k = 0;
        while (u >= cdf && p > 0.0) {
            ++k;
            p *= rate / k;
            cdf += p;
        }
        return k;
    }

    double exponential(double mean) { return -mean * std::log1p(-uniform()); }

private:
    std::mt19937_64 engine_;
};

void add_count(std::vector<double>& h, std::size_t idx) {
    if (h.size() <= idx) h.resize(idx + 1, 0.0);
    h[idx] += 1.0;
}

std::vector<double> to_pmf(const std::vector<double>& counts) {
    double total = 0.0;
    for (double c : counts) total += c;
    std::vector<double> out(counts.size(), 0.0);
    if (total > 0.0)
        for (std::size_t i = 0; i < counts.size(); ++i) out[i] = counts[i] / total;
    return out;
}

// Neumaier compensated sum.
class CompensatedSum {
public:
    void add(double x) {
        const double t = sum_ + x;
        if (std::abs(sum_) >= std::abs(x)) comp_ += (sum_ - t) + x;
        else comp_ += (x - t) + sum_;
        sum_ = t;
    }
    double value() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

Estimate estimate(const std::vector<double>& xs) {
    CompensatedSum s;
    for (double x : xs) s.add(x);
    const double n = static_cast<double>(xs.size());
    const double mean = s.value() / n;
    if (xs.size() < 2) return {mean, 0.0};
    CompensatedSum ss;
    for (double x : xs) ss.add((x - mean) * (x - mean));
    return {mean, std::sqrt(ss.value() / (n - 1.0) / n)};
}

std::int64_t steps_for(double years, double tau_mc) {
    return static_cast<std::int64_t>(std::llround(years * kDaysPerYear / tau_mc));
}

}  // namespace

SimStats run_replication(const SimConfig& cfg, int rep) {
    const ScenarioConfig& s = cfg.scenario;
    const auto& g = s.geometry;
    const auto& pol = s.policy;
    const double tau_mc = s.stochastic.tau_mc_days;
    const FailureModel failure =
        FailureModel::from_yearly(s.stochastic.lambda_sat_per_year, tau_mc, g.n_sat_nominal);
    const LeadTimeModel lead = LeadTimeModel::make(s.stochastic.mu_lv_days, s.stochastic.tau_lv_days, tau_mc);
    const InplanePolicy plane_policy{pol.q_c, pol.r_c};
    const int max_c = pol.q_c + pol.r_c;
    const int max_p = pol.q_p + pol.r_p;

    const std::int64_t total = steps_for(cfg.horizon_years, tau_mc);
    const std::int64_t warmup = steps_for(cfg.warmup_years, tau_mc);
    const std::vector<Contact> contacts = contact_schedule(s, total);

    Sampler rng(cfg.seed ^ static_cast<std::uint64_t>(rep));
    std::vector<int> plane(g.n_orbit_c, max_c);
    std::vector<int> park(g.n_orbit_p, max_p);
    std::vector<std::optional<std::int64_t>> arrival(g.n_orbit_p);
    std::vector<std::optional<std::int64_t>> crossed(g.n_orbit_c);

    SimStats st;
    std::vector<double> hist_c(max_c + 1, 0.0), hist_p(max_p + 1, 0.0);
    std::size_t next = 0;

    for (std::int64_t t = 0; t < total; ++t) {
        for (int c = 0; c < g.n_orbit_c; ++c) {
            const int n = plane[c];
            const int k = rng.poisson(std::min(n, g.n_sat_nominal) * failure.lambda_step);
            plane[c] = (k >= n || k > g.n_sat_nominal) ? 0 : n - k;
            if (plane[c] <= pol.r_c && !crossed[c]) crossed[c] = t;
        }
        for (int p = 0; p < g.n_orbit_p; ++p) {
            if (arrival[p] && *arrival[p] == t) {
                park[p] += pol.q_p;
                arrival[p].reset();
            }
        }
        for (; next < contacts.size() && contacts[next].step == t; ++next) {
            const int c = contacts[next].plane;
            const int p = contacts[next].parking;
            const int demand = demand_of_state(plane[c], plane_policy);
            if (t >= warmup) {
                add_count(st.demand_histogram, static_cast<std::size_t>(demand));
                if (demand > 0 && crossed[c]) add_count(st.lead_time_histogram, static_cast<std::size_t>(t - *crossed[c]));
            }
            const int served = std::min(demand, park[p]);
            plane[c] += served * pol.q_c;
            park[p] -= served;
            if (plane[c] > pol.r_c) crossed[c].reset();
            // review
            if (park[p] <= pol.r_p && !arrival[p]) {
                const auto extra = static_cast<std::int64_t>(std::floor(rng.exponential(lead.mu_lv) / tau_mc));
                arrival[p] = t + lead.k_lv + extra + 1;
                ++st.orders_placed;
            }
        }
        for (int x : plane) if (x < 0 || x > max_c) ++st.bound_violations;
        for (int x : park) if (x < 0 || x > max_p) ++st.bound_violations;
        if (t >= warmup) {
            for (int x : plane) hist_c[static_cast<std::size_t>(std::clamp(x, 0, max_c))] += 1.0;
            for (int x : park) hist_p[static_cast<std::size_t>(std::clamp(x, 0, max_p))] += 1.0;
            ++st.recorded_steps;
        }
    }

    st.histogram_c = to_pmf(hist_c);
    st.histogram_p = to_pmf(hist_p);
    st.lead_time_histogram = to_pmf(st.lead_time_histogram);
    st.demand_histogram = to_pmf(st.demand_histogram);
    Vector hc = Eigen::Map<const Vector>(st.histogram_c.data(), static_cast<Eigen::Index>(st.histogram_c.size()));
    Vector hp = Eigen::Map<const Vector>(st.histogram_p.data(), static_cast<Eigen::Index>(st.histogram_p.size()));
    st.mean_c = {mean_stock(hc), 0.0};
    st.mean_p = {mean_stock(hp), 0.0};
    st.shortage_c = {expected_shortage(hc, g.n_sat_nominal), 0.0};
    st.stockout_p = {hp[0], 0.0};
    st.n_replications = 1;
    st.steps_per_replication = total;
    return st;
}

namespace {

// Counts are recovered from each replication's pmf times its recorded
// steps, then pooled in replication order.
void pool(std::vector<double>& into, const std::vector<double>& pmf, double weight) {
    if (into.size() < pmf.size()) into.resize(pmf.size(), 0.0);
    for (std::size_t i = 0; i < pmf.size(); ++i) into[i] += pmf[i] * weight;
}

}  // namespace

SimStats run_monte_carlo(const SimConfig& cfg) {
    cfg.validate();
    const int n = cfg.n_replications;
    std::vector<SimStats> reps(static_cast<std::size_t>(n));
    const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(),
                                                            static_cast<unsigned>(n)));
    {
        std::vector<std::jthread> pool_threads;
        for (unsigned w = 0; w < workers; ++w) {
            pool_threads.emplace_back([&, w] {
                for (int i = static_cast<int>(w); i < n; i += static_cast<int>(workers)) {
                    reps[static_cast<std::size_t>(i)] = run_replication(cfg, i);
                }
            });
        }
    }

    SimStats out;
    out.n_replications = n;
    std::vector<double> mc, mp, sc, so;
    for (const auto& r : reps) {
        mc.push_back(r.mean_c.mean);
        mp.push_back(r.mean_p.mean);
        sc.push_back(r.shortage_c.mean);
        so.push_back(r.stockout_p.mean);
        const double w = static_cast<double>(r.recorded_steps);
        pool(out.histogram_c, r.histogram_c, w);
        pool(out.histogram_p, r.histogram_p, w);
        pool(out.lead_time_histogram, r.lead_time_histogram, 1.0);
        pool(out.demand_histogram, r.demand_histogram, 1.0);
        out.steps_per_replication = r.steps_per_replication;
        out.recorded_steps += r.recorded_steps;
        out.orders_placed += r.orders_placed;
        out.bound_violations += r.bound_violations;
    }
    out.mean_c = estimate(mc);
    out.mean_p = estimate(mp);
    out.shortage_c = estimate(sc);
    out.stockout_p = estimate(so);
    out.histogram_c = to_pmf(out.histogram_c);
    out.histogram_p = to_pmf(out.histogram_p);
    out.lead_time_histogram = to_pmf(out.lead_time_histogram);
    out.demand_histogram = to_pmf(out.demand_histogram);
    return out;
}

namespace {

double relative(double analysis, double simulated) {
    const double diff = std::abs(analysis - simulated);
    if (diff == 0.0) return 0.0;
    return simulated != 0.0 ? diff / std::abs(simulated) : diff;
}

}  // namespace

ErrorReport compare(const ResilienceMetrics& a, const ResilienceMetrics& s, bool valid) {
    return {relative(a.mean_c, s.mean_c), relative(a.mean_p, s.mean_p),
            relative(a.shortage_c, s.shortage_c), 100.0 * std::abs(a.stockout_p - s.stockout_p), valid};
}

ResilienceMetrics as_metrics(const SimStats& sim) {
    return {sim.shortage_c.mean, sim.stockout_p.mean, sim.mean_c.mean, sim.mean_p.mean};
}

ErrorReport compare(const CoupledSolution& analysis, const ScenarioConfig& config, const SimStats& sim) {
    return compare(resilience(analysis, config), as_metrics(sim), analysis.valid);
}

}  // namespace spares
