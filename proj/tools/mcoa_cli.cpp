#include "mcoa/bench.hpp"

#include <cstdlib>
#include <iostream>
#include <string>

#include <CLI11.hpp>

namespace {

using namespace mcoa;

struct CommonOptions {
    std::string algorithm = "mcoa";
    std::uint64_t seed = 1;
    int replicates = 30;
    int population = 50;
    int iterations = 1000;
    int jobs = 0; // 0 = available parallelism
    std::string output_dir;
    bool no_opposition = false;
    bool no_centroid = false;
    bool no_adaptive_competition = false;
    bool emit_trajectory = false;
};

void add_common_flags(CLI::App* cmd, CommonOptions& opt)
{
    cmd->add_option("--algorithm", opt.algorithm, "Optimizer: coa or mcoa")
        ->check(CLI::IsMember({"coa", "mcoa"}));
    cmd->add_option("--seed", opt.seed, "Base seed; replicate i uses seed + i");
    cmd->add_option("--replicates", opt.replicates, "Number of independent runs")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--population", opt.population, "Population size")
        ->check(CLI::Range(2, 100000));
    cmd->add_option("--iterations", opt.iterations, "Iterations per run")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", opt.jobs, "Concurrent replicates (0 = all cores)");
    cmd->add_option("--output-dir", opt.output_dir,
                    "Report directory (default results/<name>; MCOA_OUTPUT_DIR "
                    "overrides the default root)");
    cmd->add_flag("--no-opposition", opt.no_opposition,
                  "Disable refractive opposition selection");
    cmd->add_flag("--no-centroid", opt.no_centroid,
                  "Disable centroid-guided exploration");
    cmd->add_flag("--no-adaptive-competition", opt.no_adaptive_competition,
                  "Disable the adaptive competition coefficient");
    cmd->add_flag("--emit-trajectory", opt.emit_trajectory,
                  "Write best_trajectory.json for the best replicate");
}

bench::ExperimentSpec build_spec(const CommonOptions& opt, const std::string& scenario)
{
    bench::ExperimentSpec spec;
    spec.algorithm = bench::algorithm_from_string(opt.algorithm);
    spec.name = scenario + "_" + opt.algorithm;
    spec.config.population_size = opt.population;
    spec.config.max_iterations = opt.iterations;
    spec.config.seed = opt.seed;
    spec.config.enable_opposition = !opt.no_opposition;
    spec.config.enable_centroid = !opt.no_centroid;
    spec.config.enable_adaptive_competition = !opt.no_adaptive_competition;
    spec.replicates = opt.replicates;
    spec.base_seed = opt.seed;
    spec.jobs = opt.jobs;
    return spec;
}

std::string resolve_output_dir(const CommonOptions& opt, const std::string& name)
{
    if (!opt.output_dir.empty())
        return opt.output_dir;
    std::string root = "results";
    if (const char* env = std::getenv("MCOA_OUTPUT_DIR"); env && *env)
        root = env;
    return root + "/" + name;
}

void print_effective_config(const bench::ExperimentSpec& spec,
                            const CommonOptions& opt, const std::string& out_dir)
{
    std::cout << "experiment: " << spec.name << '\n'
              << "  algorithm: " << opt.algorithm << '\n'
              << "  population: " << spec.config.population_size << '\n'
              << "  iterations: " << spec.config.max_iterations << '\n'
              << "  replicates: " << spec.replicates << '\n'
              << "  base_seed: " << spec.base_seed << '\n'
              << "  jobs: " << (spec.jobs > 0 ? std::to_string(spec.jobs) : "auto")
              << '\n'
              << "  opposition: " << (spec.config.enable_opposition ? "on" : "off")
              << ", centroid: " << (spec.config.enable_centroid ? "on" : "off")
              << ", adaptive_competition: "
              << (spec.config.enable_adaptive_competition ? "on" : "off") << '\n'
              << "  output: " << out_dir << '\n';
}

int run_and_report(const bench::ExperimentSpec& spec, const bench::Scenario& scenario,
                   const CommonOptions& opt)
{
    const std::string out_dir = resolve_output_dir(opt, spec.name);
    print_effective_config(spec, opt, out_dir);

    const auto stats = bench::run_experiment(spec, scenario);
    bench::export_csv(stats, out_dir);
    if (opt.emit_trajectory)
        bench::export_trajectory(stats.best_result, scenario,
                                 out_dir + "/best_trajectory.json");

    std::cout << "mean=" << bench::format_number(stats.mean)
              << " optimal=" << bench::format_number(stats.optimal)
              << " worst=" << bench::format_number(stats.worst)
              << " mean_time_s=" << bench::format_number(stats.mean_time_s) << '\n'
              << "wrote " << out_dir << "/summary.csv\n";
    return 0;
}

bench::Scenario scenario_by_name(const std::string& name)
{
    if (name == "sphere")
        return bench::make_sphere_scenario(30, -100.0, 100.0);
    if (name == "uav")
        return bench::make_uav_scenario(uav::UavScenario::benchmark_default());
    if (name == "grid20" || name == "grid40" || name == "grid60") {
        const int n = std::stoi(name.substr(4));
        return bench::make_grid_scenario(grid::benchmark_map(n), 10, name);
    }
    throw std::invalid_argument("unknown scenario: " + name);
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Crayfish optimization (COA/MCOA) benchmark runner"};
    app.require_subcommand(1);

    CommonOptions sphere_opt, uav_opt, grid_opt, bench_opt;

    auto* sphere_cmd = app.add_subcommand("sphere", "Sphere-function self check");
    int sphere_dim = 30;
    double sphere_bound = 100.0;
    sphere_cmd->add_option("--dim", sphere_dim, "Dimension")->check(CLI::PositiveNumber);
    sphere_cmd->add_option("--bound", sphere_bound, "Symmetric box half-width");
    add_common_flags(sphere_cmd, sphere_opt);

    auto* uav_cmd = app.add_subcommand("uav", "3D UAV flight-cost scenario");
    std::string scenario_file;
    uav_cmd->add_option("--scenario-file", scenario_file,
                        "Scenario JSON (default: built-in ten-peak environment)");
    add_common_flags(uav_cmd, uav_opt);

    auto* grid_cmd = app.add_subcommand("grid", "2D grid-map path planning");
    std::string map_file;
    std::string map_name = "grid20";
    grid_cmd->add_option("--map-file", map_file, "Plain-text 0/1 map file");
    grid_cmd->add_option("--map", map_name, "Built-in map: grid20, grid40, grid60")
        ->check(CLI::IsMember({"grid20", "grid40", "grid60"}));
    int grid_interior = 10;
    grid_cmd->add_option("--interior-points", grid_interior,
                         "Interior waypoints per path")
        ->check(CLI::PositiveNumber);
    add_common_flags(grid_cmd, grid_opt);

    auto* bench_cmd = app.add_subcommand("bench", "Named benchmark scenarios");
    std::string bench_scenario;
    bench_cmd
        ->add_option("--scenario", bench_scenario,
                     "sphere, uav, grid20, grid40 or grid60")
        ->required()
        ->check(CLI::IsMember({"sphere", "uav", "grid20", "grid40", "grid60"}));
    add_common_flags(bench_cmd, bench_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e); // --help
        app.exit(e);
        return 2;
    }

    try {
        if (sphere_cmd->parsed()) {
            auto scenario =
                bench::make_sphere_scenario(sphere_dim, -sphere_bound, sphere_bound);
            return run_and_report(build_spec(sphere_opt, scenario.name), scenario,
                                  sphere_opt);
        }
        if (uav_cmd->parsed()) {
            auto env = scenario_file.empty()
                           ? uav::UavScenario::benchmark_default()
                           : uav::UavScenario::load_file(scenario_file);
            auto scenario = bench::make_uav_scenario(env);
            return run_and_report(build_spec(uav_opt, scenario.name), scenario,
                                  uav_opt);
        }
        if (grid_cmd->parsed()) {
            grid::GridMap map;
            std::string name = map_name;
            if (!map_file.empty()) {
                map = grid::load_grid_map_file(map_file);
                name = "grid" + std::to_string(map.n);
            } else {
                map = grid::benchmark_map(std::stoi(map_name.substr(4)));
            }
            auto scenario = bench::make_grid_scenario(map, grid_interior, name);
            return run_and_report(build_spec(grid_opt, name), scenario, grid_opt);
        }
        if (bench_cmd->parsed()) {
            auto scenario = scenario_by_name(bench_scenario);
            return run_and_report(build_spec(bench_opt, scenario.name), scenario,
                                  bench_opt);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
