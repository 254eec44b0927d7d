#include "spares/errors.hpp"
#include "spares/report.hpp"
#include "spares/simulator.hpp"

#include <gtest/gtest.h>

#include <numeric>

namespace spares {
namespace {

SimConfig short_run(double years, int reps) {
    SimConfig c = SimConfig::from_scenario(baseline_scenario());
    c.horizon_years = years;
    c.warmup_years = 0.0;
    c.n_replications = reps;
    return c;
}

double total(const std::vector<double>& v) { return std::accumulate(v.begin(), v.end(), 0.0); }

TEST(Simulator, StockBoundsOverThousandSteps) {
    SimConfig c = short_run(1000 * 0.5 / 365.25, 3);
    c.scenario.stochastic.lambda_sat_per_year = 2.0;  // stress the bounds
    const SimStats s = run_monte_carlo(c);
    EXPECT_EQ(s.steps_per_replication, 1000);
    EXPECT_EQ(s.bound_violations, 0);
    EXPECT_GT(s.orders_placed, 0);
}

TEST(Simulator, BitDeterministicUnderFixedSeed) {
    const SimConfig c = short_run(3.0, 4);
    const std::string a = dump_report(sim_stats_json(run_monte_carlo(c)));
    const std::string b = dump_report(sim_stats_json(run_monte_carlo(c)));
    EXPECT_EQ(a, b);
    SimConfig other = c;
    other.seed += 1;
    EXPECT_NE(a, dump_report(sim_stats_json(run_monte_carlo(other))));
}

TEST(Simulator, NearZeroFailureRateKeepsPlanesFull) {
    SimConfig c = short_run(2.0, 2);
    c.scenario.stochastic.lambda_sat_per_year = 1e-9;
    const SimStats s = run_monte_carlo(c);
    EXPECT_NEAR(s.mean_c.mean, 44.0, 1e-6);
    EXPECT_NEAR(s.shortage_c.mean, 0.0, 1e-9);
    EXPECT_EQ(s.orders_placed, 0);
}

TEST(Simulator, HistogramsArePmfs) {
    const SimStats s = run_monte_carlo(short_run(4.0, 3));
    for (const auto* h : {&s.histogram_c, &s.histogram_p, &s.lead_time_histogram, &s.demand_histogram}) {
        ASSERT_FALSE(h->empty());
        EXPECT_NEAR(total(*h), 1.0, 1e-12);
        for (double p : *h) EXPECT_GE(p, 0.0);
    }
    EXPECT_EQ(s.histogram_c.size(), 45u);
    EXPECT_EQ(s.histogram_p.size(), 26u);
}

TEST(Simulator, ReplicationsPoolIntoAggregate) {
    const SimConfig c = short_run(2.0, 3);
    const SimStats all = run_monte_carlo(c);
    double mean = 0.0;
    for (int i = 0; i < 3; ++i) mean += run_replication(c, i).mean_c.mean;
    EXPECT_NEAR(all.mean_c.mean, mean / 3.0, 1e-12);
    EXPECT_GT(all.mean_c.std_error, 0.0);
}

TEST(Simulator, InvalidHorizonRejected) {
    SimConfig c = short_run(1.0, 1);
    c.warmup_years = 2.0;
    EXPECT_THROW(run_monte_carlo(c), Error);
}

TEST(Compare, SelfComparisonIsZero) {
    const ResilienceMetrics m{0.2, 0.03, 41.0, 12.0};
    const ErrorReport e = compare(m, m);
    EXPECT_EQ(e.rel_mean_c, 0.0);
    EXPECT_EQ(e.rel_mean_p, 0.0);
    EXPECT_EQ(e.rel_shortage_c, 0.0);
    EXPECT_EQ(e.abs_stockout_pp, 0.0);
}

TEST(Compare, ErrorDefinitions) {
    const ErrorReport e = compare({0.2, 0.03, 41.0, 12.0}, {0.25, 0.02, 40.0, 10.0}, false);
    EXPECT_NEAR(e.rel_shortage_c, 0.2, 1e-15);
    EXPECT_NEAR(e.rel_mean_c, 1.0 / 40.0, 1e-15);
    EXPECT_NEAR(e.rel_mean_p, 0.2, 1e-15);
    EXPECT_NEAR(e.abs_stockout_pp, 1.0, 1e-12);
    EXPECT_FALSE(e.valid);
}

}  // namespace
}  // namespace spares
