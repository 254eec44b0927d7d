// spares: analyze, simulate, compare and optimize spare-satellite policies.
//
// Exit codes: 0 success, 1 configuration or input error, 2 the analysis did
// not converge or fell outside its validity heuristic.

#include "spares/config.hpp"
#include "spares/errors.hpp"
#include "spares/optimizer.hpp"
#include "spares/policy_engine.hpp"
#include "spares/report.hpp"
#include "spares/simulator.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace fs = std::filesystem;
using namespace spares;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 1;
constexpr int kExitAnalysis = 2;

void write_text(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    if (const fs::path parent = fs::path(path).parent_path(); !parent.empty()) fs::create_directories(parent);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error(ErrorCode::Config, "cannot write " + path);
    out << text;
}

int analysis_status(const CoupledSolution& s) {
    if (!s.converged) {
        std::cerr << "spares: fixed-point iteration did not converge after " << s.iterations
                  << " iterations (residual " << s.residual << ")\n";
        return kExitAnalysis;
    }
    if (!s.valid) {
        std::cerr << "spares: validity flag unset: P(X_p = 0) = " << s.parking.pi_rc[0]
                  << " is not below 1/(N_sat_p + 1) = " << 1.0 / (s.model.parking.max_state() + 1.0)
                  << "; results may be inaccurate\n";
        return kExitAnalysis;
    }
    return kExitOk;
}

SimConfig sim_config(const ScenarioConfig& cfg, const std::optional<double>& years,
                     const std::optional<double>& warmup, const std::optional<int>& reps,
                     const std::optional<std::uint64_t>& seed) {
    SimConfig sc = SimConfig::from_scenario(cfg);
    if (years) sc.horizon_years = *years;
    if (warmup) sc.warmup_years = *warmup;
    if (reps) sc.n_replications = *reps;
    if (seed) sc.seed = *seed;
    try {
        sc.validate();
    } catch (const Error& e) {
        throw Error(ErrorCode::Config, e.what());
    }
    return sc;
}

void write_sim_outputs(const SimStats& stats, const std::string& dir) {
    fs::create_directories(dir);
    write_text((fs::path(dir) / "sim_stats.json").string(), dump_report(sim_stats_json(stats)));
    const std::pair<const char*, const std::vector<double>*> hists[] = {
        {"histogram_c.csv", &stats.histogram_c},
        {"histogram_p.csv", &stats.histogram_p},
        {"lead_time_histogram.csv", &stats.lead_time_histogram},
        {"demand_histogram.csv", &stats.demand_histogram}};
    for (const auto& [name, h] : hists) {
        std::ostringstream os;
        write_histogram_csv(os, *h);
        write_text((fs::path(dir) / name).string(), os.str());
    }
}

std::vector<double> parse_rates(const std::string& text) {
    std::vector<double> rates;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t used = 0;
            rates.push_back(std::stod(item, &used));
            if (used != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw Error(ErrorCode::Config, "bad rate '" + item + "'");
        }
    }
    if (rates.empty()) throw Error(ErrorCode::Config, "no rates given");
    return rates;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spare-satellite policy analysis, simulation and optimization"};
    app.require_subcommand(1);

    std::string config_path, out_path, strategy = "indirect", stats_path, rates_text;
    std::optional<double> years, warmup;
    std::optional<int> reps;
    std::optional<std::uint64_t> seed;

    auto* analyze = app.add_subcommand("analyze", "Stationary analysis of the configured policy");
    analyze->add_option("config", config_path, "Scenario JSON")->required();
    analyze->add_option("--strategy", strategy)->check(CLI::IsMember({"indirect", "direct"}));
    analyze->add_option("--out", out_path, "Report path (default stdout)");

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo simulation of the configured policy");
    simulate->add_option("config", config_path, "Scenario JSON")->required();
    simulate->add_option("--years", years, "Horizon in years");
    simulate->add_option("--warmup", warmup, "Discarded warm-up in years");
    simulate->add_option("--reps", reps, "Replications");
    simulate->add_option("--seed", seed, "Master seed");
    simulate->add_option("--out", out_path, "Output directory")->required();

    auto* cmp = app.add_subcommand("compare", "Analysis against simulation error report");
    cmp->add_option("config", config_path, "Scenario JSON")->required();
    cmp->add_option("--stats", stats_path, "Reuse sim_stats.json instead of simulating");
    cmp->add_option("--years", years, "Horizon in years");
    cmp->add_option("--warmup", warmup, "Discarded warm-up in years");
    cmp->add_option("--reps", reps, "Replications");
    cmp->add_option("--seed", seed, "Master seed");
    cmp->add_option("--out", out_path, "Report path (default stdout)");

    auto* opt = app.add_subcommand("optimize", "Design optimization");
    opt->add_option("config", config_path, "Scenario JSON")->required();
    opt->add_option("--strategy", strategy)->check(CLI::IsMember({"indirect", "direct"}));
    opt->add_option("--out", out_path, "Output directory")->required();

    auto* sweep = app.add_subcommand("sweep", "Failure-rate sweep of optimized IS and DS costs");
    sweep->add_option("config", config_path, "Scenario JSON")->required();
    sweep->add_option("--rates", rates_text, "Comma-separated failures/satellite/year")->required();
    sweep->add_option("--out", out_path, "Report path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitConfig;
    }

    try {
        const ScenarioConfig cfg = load_config(config_path);

        if (*analyze) {
            if (strategy == "direct") {
                write_text(out_path, dump_report(direct_report(solve_direct(cfg), cfg)));
                return kExitOk;
            }
            const CoupledSolution sol = solve_indirect(cfg);
            write_text(out_path, dump_report(analysis_report(sol, cfg)));
            return analysis_status(sol);
        }
        if (*simulate) {
            write_sim_outputs(run_monte_carlo(sim_config(cfg, years, warmup, reps, seed)), out_path);
            return kExitOk;
        }
        if (*cmp) {
            const CoupledSolution sol = solve_indirect(cfg);
            SimStats stats;
            if (!stats_path.empty()) {
                std::ifstream in(stats_path);
                if (!in) throw Error(ErrorCode::Config, "cannot read " + stats_path);
                try {
                    stats = sim_stats_from_json(nlohmann::json::parse(in));
                } catch (const nlohmann::json::exception& e) {
                    throw Error(ErrorCode::Config, std::string("malformed stats file: ") + e.what());
                }
            } else {
                stats = run_monte_carlo(sim_config(cfg, years, warmup, reps, seed));
            }
            nlohmann::json report = error_report_json(compare(sol, cfg, stats));
            report["analysis"] = {{"mean_c", resilience(sol, cfg).mean_c},
                                  {"mean_p", resilience(sol, cfg).mean_p},
                                  {"shortage_c", resilience(sol, cfg).shortage_c},
                                  {"stockout_p", resilience(sol, cfg).stockout_p}};
            report["simulation"] = {{"mean_c", stats.mean_c.mean},
                                    {"mean_p", stats.mean_p.mean},
                                    {"shortage_c", stats.shortage_c.mean},
                                    {"stockout_p", stats.stockout_p.mean}};
            write_text(out_path, dump_report(report));
            return analysis_status(sol);
        }
        if (*opt) {
            fs::create_directories(out_path);
            std::ostringstream hist;
            if (strategy == "direct") {
                const DirectOptimizationResult r = optimize_direct(cfg);
                write_text((fs::path(out_path) / "best.json").string(), dump_report(direct_optimization_json(r)));
                write_history_csv(hist, r.history);
            } else {
                const OptimizationResult r = optimize(cfg);
                write_text((fs::path(out_path) / "best.json").string(), dump_report(optimization_json(r)));
                write_history_csv(hist, r.history);
                if (!r.best.feasible) std::cerr << "spares: no feasible design found; best infeasible reported\n";
            }
            write_text((fs::path(out_path) / "history.csv").string(), hist.str());
            return kExitOk;
        }
        if (*sweep) {
            write_text(out_path, dump_report(sweep_json(sweep_failure_rate(cfg, parse_rates(rates_text)))));
            return kExitOk;
        }
    } catch (const Error& e) {
        std::cerr << "spares: " << e.what() << '\n';
        return e.code() == ErrorCode::Config ? kExitConfig : kExitAnalysis;
    } catch (const std::exception& e) {
        std::cerr << "spares: " << e.what() << '\n';
        return kExitConfig;
    }
    return kExitOk;
}
