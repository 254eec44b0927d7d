#include "spares/optimizer.hpp"

#include "spares/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <ostream>
#include <random>
#include <thread>

namespace spares {

DesignVector DesignVector::from_genes(const std::array<int, 6>& g) {
    return {g[0], g[1], g[2], g[3], g[4], g[5]};
}

ScenarioConfig with_design(const ScenarioConfig& s, const DesignVector& x) {
    ScenarioConfig out = s;
    out.policy = {x.q_c, x.r_c, x.q_p, x.r_p};
    out.geometry.n_orbit_p = x.n_orbit_p;
    out.geometry.h_p = x.h_p;
    return out;
}

ScenarioConfig with_direct(const ScenarioConfig& s, const DirectDesign& x) {
    ScenarioConfig out = s;
    out.direct.q = x.q;
    out.direct.r = x.r;
    return out;
}

DesignVector design_of(const ScenarioConfig& s) {
    return {s.policy.q_c, s.policy.r_c, s.policy.q_p, s.policy.r_p, s.geometry.n_orbit_p,
            static_cast<int>(std::lround(s.geometry.h_p))};
}

double epsilon2_for(const ScenarioConfig& s, const DesignVector& x) {
    if (s.optimizer.epsilon2) return *s.optimizer.epsilon2;
    return 1.0 / (x.q_p + x.r_p + 1.0);
}

namespace {

double violation(double g) { return std::max(0.0, g); }

}  // namespace

EvaluatedDesign evaluate_design(const DesignVector& x, const ScenarioConfig& scenario) {
    EvaluatedDesign e;
    e.design = x;
    const double w = scenario.optimizer.ga.penalty_weight;
    try {
        const ScenarioConfig cfg = with_design(scenario, x);
        const CoupledSolution sol = solve_indirect(cfg);
        e.converged = sol.converged;
        e.cost = cost_breakdown(sol, cfg);
        e.metrics = resilience(sol, cfg);
        e.m_total = launch_mass(sol.model, cfg.policy);
        e.g1 = e.metrics.shortage_c - scenario.optimizer.epsilon1;
        e.g2 = e.metrics.stockout_p - epsilon2_for(scenario, x);
        e.g3 = e.m_total - cfg.costs.m_payload;
    } catch (const Error&) {
        e.converged = false;
    }
    e.feasible = e.converged && e.g1 <= 0.0 && e.g2 <= 0.0 && e.g3 <= 0.0;
    if (!e.converged) {
        e.fitness = scenario.optimizer.ga.nonconverged_penalty;
    } else {
        const double penalty = violation(e.g1) + violation(e.g2) + violation(e.g3);
        e.fitness = penalty > 0.0 ? e.cost.c_total + w * penalty : e.cost.c_total;
    }
    return e;
}

EvaluatedDirect evaluate_direct(const DirectDesign& x, const ScenarioConfig& scenario) {
    EvaluatedDirect e;
    e.design = x;
    const double w = scenario.optimizer.ga.penalty_weight;
    try {
        const ScenarioConfig cfg = with_direct(scenario, x);
        const DirectSolution sol = solve_direct(cfg);
        e.converged = true;
        e.cost = cost_breakdown_direct(sol, cfg);
        e.metrics = resilience_direct(sol, cfg);
        e.g1 = e.metrics.shortage_c - scenario.optimizer.epsilon1;
        e.g3 = x.q * cfg.costs.m_sat - cfg.direct.m_payload;
    } catch (const Error&) {
        e.converged = false;
    }
    e.feasible = e.converged && e.g1 <= 0.0 && e.g3 <= 0.0;
    if (!e.converged) {
        e.fitness = scenario.optimizer.ga.nonconverged_penalty;
    } else {
        const double penalty = violation(e.g1) + violation(e.g3);
        e.fitness = penalty > 0.0 ? e.cost.c_total + w * penalty : e.cost.c_total;
    }
    return e;
}

namespace {

template <std::size_t N>
using Genome = std::array<int, N>;

template <std::size_t N>
struct GaOutcome {
    Genome<N> best{};
    double best_fitness = 0.0;
    std::vector<GenerationRecord> history;
    int evaluations = 0;
};

// Generic integer GA over a box. `eval` returns (fitness, feasible, c_total)
// and must be pure; results are memoized and evaluated in parallel batches.
template <std::size_t N, class Result, class Eval>
GaOutcome<N> run_ga(const std::array<IntRange, N>& box, const GaParams& ga, Eval eval,
                    std::map<Genome<N>, Result>& cache) {
    ga.validate();
    for (const auto& r : box) {
        if (r.lo > r.hi) throw Error(ErrorCode::InvalidArgument, "empty design bound");
    }
    std::mt19937_64 rng(ga.seed);
    auto uniform01 = [&] { return static_cast<double>(rng() >> 11) * 0x1.0p-53; };
    auto draw = [&](const IntRange& r) {
        const auto span = static_cast<std::uint64_t>(r.hi - r.lo) + 1;
        return r.lo + static_cast<int>(rng() % span);
    };

    auto evaluate_all = [&](const std::vector<Genome<N>>& pop) {
        std::vector<Genome<N>> todo;
        for (const auto& g : pop) {
            if (!cache.count(g) && std::find(todo.begin(), todo.end(), g) == todo.end()) todo.push_back(g);
        }
        std::vector<Result> results(todo.size());
        const unsigned workers =
            std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), static_cast<unsigned>(todo.size())));
        {
            std::vector<std::jthread> threads;
            for (unsigned w = 0; w < workers; ++w) {
                threads.emplace_back([&, w] {
                    for (std::size_t i = w; i < todo.size(); i += workers) results[i] = eval(todo[i]);
                });
            }
        }
        for (std::size_t i = 0; i < todo.size(); ++i) cache.emplace(todo[i], results[i]);
    };

    GaOutcome<N> out;
    const auto n = static_cast<std::size_t>(ga.population);
    std::vector<Genome<N>> pop(n);
    for (auto& g : pop)
        for (std::size_t j = 0; j < N; ++j) g[j] = draw(box[j]);

    // Lower fitness wins; ties broken lexicographically for determinism.
    auto better = [&](const Genome<N>& a, const Genome<N>& b) {
        const double fa = cache.at(a).fitness, fb = cache.at(b).fitness;
        if (fa != fb) return fa < fb;
        return a < b;
    };

    bool have_best = false;
    for (int gen = 0; gen <= ga.generations; ++gen) {
        evaluate_all(pop);
        int feasible = 0;
        for (const auto& g : pop) {
            if (cache.at(g).feasible) ++feasible;
            if (!have_best || better(g, out.best)) {
                out.best = g;
                have_best = true;
            }
        }
        out.history.push_back({gen, cache.at(out.best).fitness, cache.at(out.best).cost.c_total, feasible});
        if (gen == ga.generations) break;

        auto tournament = [&]() -> const Genome<N>& {
            const Genome<N>* winner = &pop[rng() % n];
            for (int t = 1; t < ga.tournament_size; ++t) {
                const Genome<N>& c = pop[rng() % n];
                if (better(c, *winner)) winner = &c;
            }
            return *winner;
        };

        std::vector<Genome<N>> next;
        next.reserve(n);
        next.push_back(out.best);
        while (next.size() < n) {
            Genome<N> a = tournament();
            Genome<N> b = tournament();
            if (uniform01() < ga.crossover_rate) {
                for (std::size_t j = 0; j < N; ++j)
                    if (uniform01() < 0.5) std::swap(a[j], b[j]);
            }
            for (auto* child : {&a, &b}) {
                for (std::size_t j = 0; j < N; ++j)
                    if (uniform01() < ga.mutation_rate) (*child)[j] = draw(box[j]);
                if (next.size() < n) next.push_back(*child);
            }
        }
        pop = std::move(next);
    }
    out.best_fitness = cache.at(out.best).fitness;
    out.evaluations = static_cast<int>(cache.size());
    return out;
}

}  // namespace

OptimizationResult optimize(const ScenarioConfig& scenario, const GaParams& ga, const DesignBounds& b) {
    IntRange h = b.h_p;
    const int h_cap = static_cast<int>(std::ceil(scenario.geometry.h_c)) - 1;
    h.hi = std::min(h.hi, h_cap);
    const std::array<IntRange, 6> box{b.q_c, b.r_c, b.q_p, b.r_p, b.n_orbit_p, h};
    ScenarioConfig sc = scenario;
    sc.optimizer.ga = ga;
    std::map<Genome<6>, EvaluatedDesign> cache;
    const auto ga_out = run_ga<6, EvaluatedDesign>(
        box, ga, [&](const Genome<6>& g) { return evaluate_design(DesignVector::from_genes(g), sc); }, cache);
    OptimizationResult r;
    r.best = cache.at(ga_out.best);
    r.history = ga_out.history;
    r.evaluations = ga_out.evaluations;
    return r;
}

OptimizationResult optimize(const ScenarioConfig& scenario) {
    return optimize(scenario, scenario.optimizer.ga, scenario.optimizer.bounds);
}

DirectOptimizationResult optimize_direct(const ScenarioConfig& scenario, const GaParams& ga,
                                         const DirectBounds& b) {
    if (b.q.lo > b.q.hi || b.r.lo > b.r.hi) throw Error(ErrorCode::InvalidArgument, "empty design bound");
    ScenarioConfig sc = scenario;
    sc.optimizer.ga = ga;
    DirectOptimizationResult r;
    const long long size = static_cast<long long>(b.q.hi - b.q.lo + 1) * (b.r.hi - b.r.lo + 1);
    if (size <= 10000) {
        r.exhaustive = true;
        bool have = false;
        for (int q = b.q.lo; q <= b.q.hi; ++q) {
            for (int rr = b.r.lo; rr <= b.r.hi; ++rr) {
                EvaluatedDirect e = evaluate_direct({q, rr}, sc);
                ++r.evaluations;
                // Strictly better only, so the first (smallest q, r) wins ties.
                if (!have || e.fitness < r.best.fitness) {
                    r.best = e;
                    have = true;
                }
            }
        }
        return r;
    }
    std::map<Genome<2>, EvaluatedDirect> cache;
    const auto ga_out = run_ga<2, EvaluatedDirect>(
        {b.q, b.r}, ga, [&](const Genome<2>& g) { return evaluate_direct({g[0], g[1]}, sc); }, cache);
    r.best = cache.at(ga_out.best);
    r.history = ga_out.history;
    r.evaluations = ga_out.evaluations;
    return r;
}

DirectOptimizationResult optimize_direct(const ScenarioConfig& scenario) {
    return optimize_direct(scenario, scenario.optimizer.ga, scenario.optimizer.direct_bounds);
}

std::vector<SweepRow> sweep_failure_rate(const ScenarioConfig& scenario, const std::vector<double>& rates) {
    std::vector<SweepRow> rows;
    for (double rate : rates) {
        if (!(rate >= 0.01 && rate <= 0.5)) {
            throw Error(ErrorCode::InvalidArgument, "failure rate outside [0.01, 0.5] per year");
        }
        ScenarioConfig sc = scenario;
        sc.stochastic.lambda_sat_per_year = rate;
        SweepRow row;
        row.lambda_per_year = rate;
        row.indirect = optimize(sc).best;
        row.direct = optimize_direct(sc).best;
        const double ds = row.direct.cost.c_total;
        row.savings = ds != 0.0 ? (ds - row.indirect.cost.c_total) / ds : 0.0;
        rows.push_back(row);
    }
    return rows;
}

void write_history_csv(std::ostream& out, const std::vector<GenerationRecord>& history) {
    out << "generation,best_cost,feasible_count\n";
    out.precision(17);
    for (const auto& h : history) out << h.generation << ',' << h.best_cost << ',' << h.feasible_count << '\n';
}

}  // namespace spares
