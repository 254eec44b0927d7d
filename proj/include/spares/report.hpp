#pragma once

// JSON / CSV emitters. Every report carries a "units" block; distributions
// are written with states in descending order ("state_order").

#include "spares/metrics.hpp"
#include "spares/optimizer.hpp"
#include "spares/policy_engine.hpp"
#include "spares/simulator.hpp"

#include <nlohmann/json.hpp>

#include <iosfwd>
#include <string>
#include <vector>

namespace spares {

nlohmann::json analysis_report(const CoupledSolution& solution, const ScenarioConfig& config);
nlohmann::json direct_report(const DirectSolution& solution, const ScenarioConfig& config);

nlohmann::json sim_stats_json(const SimStats& stats);
SimStats sim_stats_from_json(const nlohmann::json& doc);

nlohmann::json error_report_json(const ErrorReport& report);
nlohmann::json evaluated_design_json(const EvaluatedDesign& e);
nlohmann::json evaluated_direct_json(const EvaluatedDirect& e);
nlohmann::json optimization_json(const OptimizationResult& r);
nlohmann::json direct_optimization_json(const DirectOptimizationResult& r);
nlohmann::json sweep_json(const std::vector<SweepRow>& rows);

/// `state,probability`, highest state first; input indexed by stock level.
void write_histogram_csv(std::ostream& out, const std::vector<double>& pmf);

/// Canonical text form; parsing and re-dumping it reproduces it exactly.
std::string dump_report(const nlohmann::json& report);

}  // namespace spares
