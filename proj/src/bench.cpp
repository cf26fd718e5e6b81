#include "mcoa/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <thread>

namespace mcoa::bench {

std::string to_string(Algorithm a)
{
    return a == Algorithm::coa ? "coa" : "mcoa";
}

Algorithm algorithm_from_string(const std::string& s)
{
    if (s == "coa")
        return Algorithm::coa;
    if (s == "mcoa")
        return Algorithm::mcoa;
    throw std::invalid_argument("unknown algorithm: " + s);
}

Scenario make_sphere_scenario(int dim, double lo, double hi)
{
    Scenario s;
    s.name = "sphere" + std::to_string(dim);
    s.space = SearchSpace::uniform_box(dim, lo, hi);
    s.objective = [](const std::vector<double>& x) {
        double sum = 0.0;
        for (double v : x)
            sum += v * v;
        return sum;
    };
    s.describe_candidate = [](const std::vector<double>& x) {
        double sum = 0.0;
        for (double v : x)
            sum += v * v;
        return nlohmann::json{{"candidate", x}, {"fitness", sum}};
    };
    return s;
}

Scenario make_uav_scenario(const uav::UavScenario& scenario)
{
    Scenario s;
    s.name = "uav";
    s.space = scenario.search_space();
    s.objective = scenario.objective();
    s.describe_candidate = [scenario](const std::vector<double>& x) {
        const auto path = scenario.decode(x);
        const auto cb = scenario.cost_breakdown(x);
        nlohmann::json j;
        for (const auto& w : path.waypoints)
            j["waypoints"].push_back(w);
        j["costs"] = {{"length", cb.length},
                      {"threat", cb.threat},
                      {"altitude", cb.altitude},
                      {"angle", cb.angle}};
        j["total"] = cb.total;
        j["feasible"] = cb.feasible;
        return j;
    };
    return s;
}

Scenario make_grid_scenario(const grid::GridMap& map, int n_interior,
                            const std::string& name)
{
    Scenario s;
    s.name = name;
    s.space = grid::grid_search_space(map, n_interior);
    s.objective = grid::grid_objective(map, n_interior);
    s.describe_candidate = [map, n_interior](const std::vector<double>& x) {
        const auto path = grid::decode_grid_candidate(x, map, n_interior);
        nlohmann::json j;
        for (const auto& p : path.points)
            j["points"].push_back(p);
        j["length"] = grid::grid_path_length(path);
        j["feasible"] = path.feasible;
        j["turning_points"] = grid::count_turning_points(path);
        return j;
    };
    return s;
}

ReplicateResult run_replicate(const ExperimentSpec& spec, const Scenario& scenario,
                              int replicate_index)
{
    McoaConfig cfg = spec.config;
    cfg.seed = spec.base_seed + static_cast<std::uint64_t>(replicate_index);
    if (spec.algorithm == Algorithm::coa)
        return run_coa(scenario.objective, scenario.space, cfg);
    return run_mcoa(scenario.objective, scenario.space, cfg);
}

AggregateStats run_experiment(const ExperimentSpec& spec, const Scenario& scenario)
{
    if (spec.replicates < 1)
        throw std::invalid_argument("run_experiment: replicates must be >= 1");

    std::vector<ReplicateResult> results(spec.replicates);
    int jobs = spec.jobs > 0 ? spec.jobs
                             : static_cast<int>(std::thread::hardware_concurrency());
    jobs = std::max(1, std::min(jobs, spec.replicates));

    if (jobs == 1) {
        for (int i = 0; i < spec.replicates; ++i)
            results[i] = run_replicate(spec, scenario, i);
    } else {
        std::atomic<int> next{0};
        std::vector<std::thread> workers;
        workers.reserve(jobs);
        for (int w = 0; w < jobs; ++w)
            workers.emplace_back([&] {
                for (int i = next.fetch_add(1); i < spec.replicates;
                     i = next.fetch_add(1))
                    results[i] = run_replicate(spec, scenario, i);
            });
        for (auto& t : workers)
            t.join();
    }

    AggregateStats stats;
    stats.algorithm = to_string(spec.algorithm);
    stats.scenario = scenario.name;
    stats.replicates = spec.replicates;

    double sum = 0.0;
    double time_sum = 0.0;
    int best_index = 0;
    for (int i = 0; i < spec.replicates; ++i) {
        const double f = results[i].best.fitness;
        sum += f;
        time_sum += results[i].wall_seconds;
        stats.rows.push_back({i, spec.base_seed + static_cast<std::uint64_t>(i), f,
                              results[i].wall_seconds, results[i].best.position});
        if (f < results[best_index].best.fitness)
            best_index = i;
    }
    stats.mean = sum / spec.replicates;
    stats.mean_time_s = time_sum / spec.replicates;
    stats.optimal = results[best_index].best.fitness;
    stats.worst = std::max_element(stats.rows.begin(), stats.rows.end(),
                                   [](const ReplicateRow& a, const ReplicateRow& b) {
                                       return a.best_fitness < b.best_fitness;
                                   })
                      ->best_fitness;
    stats.best_result = results[best_index];
    return stats;
}

std::string format_number(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

void export_csv(const AggregateStats& stats, const std::string& directory)
{
    std::filesystem::create_directories(directory);

    {
        std::ofstream out(directory + "/summary.csv");
        if (!out)
            throw std::runtime_error("export_csv: cannot write to " + directory);
        out << "algorithm,scenario,replicates,mean,optimal,worst,mean_time_s\n";
        out << stats.algorithm << ',' << stats.scenario << ',' << stats.replicates
            << ',' << format_number(stats.mean) << ',' << format_number(stats.optimal)
            << ',' << format_number(stats.worst) << ','
            << format_number(stats.mean_time_s) << '\n';
    }
    {
        std::ofstream out(directory + "/replicates.csv");
        if (!out)
            throw std::runtime_error("export_csv: cannot write to " + directory);
        out << "replicate,seed,best_fitness,time_s\n";
        for (const auto& row : stats.rows)
            out << row.replicate << ',' << row.seed << ','
                << format_number(row.best_fitness) << ','
                << format_number(row.wall_seconds) << '\n';
    }
}

void export_trajectory(const ReplicateResult& result, const Scenario& scenario,
                       const std::string& path)
{
    nlohmann::json j = scenario.describe_candidate(result.best.position);
    j["best_fitness"] = result.best.fitness;
    j["wall_seconds"] = result.wall_seconds;
    for (const auto& tp : result.trace)
        j["trace"].push_back({{"iteration", tp.iteration},
                              {"best_fitness", tp.best_fitness}});
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("export_trajectory: cannot write " + path);
    out << j.dump(2) << '\n';
}

} // namespace mcoa::bench
