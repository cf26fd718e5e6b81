#ifndef MCOA_BENCH_HPP
#define MCOA_BENCH_HPP

#include "mcoa/core.hpp"
#include "mcoa/grid.hpp"
#include "mcoa/optimizer.hpp"
#include "mcoa/uav.hpp"

#include <string>
#include <vector>

#include <json.hpp>

namespace mcoa::bench {

enum class Algorithm { coa, mcoa };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

/// A scenario binds the objective and search box to a trajectory exporter
/// for the best candidate.
struct Scenario {
    std::string name;
    SearchSpace space;
    ScenarioObjective objective;
    std::function<nlohmann::json(const std::vector<double>&)> describe_candidate;
};

Scenario make_sphere_scenario(int dim, double lo, double hi);
Scenario make_uav_scenario(const uav::UavScenario& scenario);
Scenario make_grid_scenario(const grid::GridMap& map, int n_interior,
                            const std::string& name);

struct ExperimentSpec {
    std::string name;
    Algorithm algorithm = Algorithm::mcoa;
    McoaConfig config;        // toggles are ignored for Algorithm::coa
    int replicates = 30;
    std::uint64_t base_seed = 1;
    int jobs = 1;             // <= 0 means hardware concurrency
};

struct ReplicateRow {
    int replicate;            // 0-based; seed = base_seed + replicate
    std::uint64_t seed;
    double best_fitness;
    double wall_seconds;
    std::vector<double> best_position;
};

struct AggregateStats {
    std::string algorithm;
    std::string scenario;
    int replicates = 0;
    double mean = 0.0;
    double optimal = 0.0;     // min best fitness
    double worst = 0.0;       // max best fitness
    double mean_time_s = 0.0;
    std::vector<ReplicateRow> rows;
    ReplicateResult best_result; // result of the replicate achieving `optimal`
};

/// Runs one replicate of the spec'd algorithm with seed base_seed + index.
ReplicateResult run_replicate(const ExperimentSpec& spec, const Scenario& scenario,
                              int replicate_index);

/// Runs every replicate (concurrently when jobs > 1) and aggregates by
/// replicate index, so worker scheduling never affects the output.
AggregateStats run_experiment(const ExperimentSpec& spec, const Scenario& scenario);

/// Writes summary.csv (one row) and replicates.csv (one row per replicate)
/// into the destination directory. Numbers use 6 significant digits.
void export_csv(const AggregateStats& stats, const std::string& directory);

/// Writes the decoded best trajectory plus the convergence trace as JSON.
void export_trajectory(const ReplicateResult& result, const Scenario& scenario,
                       const std::string& path);

std::string format_number(double v);

} // namespace mcoa::bench

#endif // MCOA_BENCH_HPP
