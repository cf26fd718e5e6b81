#include "mcoa/core.hpp"

#include <cmath>
#include <stdexcept>

namespace mcoa {

SearchSpace SearchSpace::uniform_box(std::size_t dim, double lo, double hi)
{
    SearchSpace s;
    s.lower.assign(dim, lo);
    s.upper.assign(dim, hi);
    s.validate();
    return s;
}

void SearchSpace::validate() const
{
    if (lower.empty() || lower.size() != upper.size())
        throw std::invalid_argument("SearchSpace: dim must be >= 1 with matching bound vectors");
    for (std::size_t j = 0; j < lower.size(); ++j)
        if (!(lower[j] < upper[j]))
            throw std::invalid_argument("SearchSpace: lower[j] must be < upper[j]");
}

void RunConfig::validate() const
{
    if (population_size < 2)
        throw std::invalid_argument("RunConfig: population_size must be >= 2");
    if (max_iterations < 1)
        throw std::invalid_argument("RunConfig: max_iterations must be >= 1");
    if (!(food_factor > 1.0))
        throw std::invalid_argument("RunConfig: food_factor must be > 1");
    if (!(temp_min < temp_max))
        throw std::invalid_argument("RunConfig: temp_min must be < temp_max");
    if (!(intake_sigma > 0.0))
        throw std::invalid_argument("RunConfig: intake_sigma must be > 0");
}

std::vector<double> clamp_to_bounds(const std::vector<double>& position,
                                    const SearchSpace& space)
{
    if (position.size() != space.dim())
        throw std::invalid_argument("clamp_to_bounds: dimension mismatch");
    std::vector<double> out(position.size());
    for (std::size_t j = 0; j < position.size(); ++j)
        out[j] = std::min(space.upper[j], std::max(space.lower[j], position[j]));
    return out;
}

Population init_population_uniform(const SearchSpace& space,
                                   const RunConfig& config, RngStream& rng)
{
    space.validate();
    config.validate();
    Population pop;
    pop.members.resize(config.population_size);
    for (auto& m : pop.members) {
        m.position.resize(space.dim());
        for (std::size_t j = 0; j < space.dim(); ++j)
            m.position[j] = rng.uniform(space.lower[j], space.upper[j]);
        m.fitness_valid = false;
    }
    return pop;
}

double c2_schedule(int t, int max_iterations)
{
    if (max_iterations < 1)
        throw std::invalid_argument("c2_schedule: max_iterations must be >= 1");
    if (t < 0 || t > max_iterations)
        throw std::invalid_argument("c2_schedule: t out of range");
    return 2.0 - static_cast<double>(t) / max_iterations;
}

double cc_schedule(int t, int max_iterations)
{
    if (max_iterations < 1)
        throw std::invalid_argument("cc_schedule: max_iterations must be >= 1");
    if (t < 0 || t > max_iterations)
        throw std::invalid_argument("cc_schedule: t out of range");
    const double u = static_cast<double>(t) / max_iterations;
    return std::pow(1.0 - u, 2.0 * u);
}

double sample_temperature(RngStream& rng, const RunConfig& config)
{
    return rng.uniform(config.temp_min, config.temp_max);
}

double food_intake(double temp, const RunConfig& config)
{
    if (!(config.intake_sigma > 0.0))
        throw std::invalid_argument("food_intake: intake_sigma must be > 0");
    const double s = config.intake_sigma;
    const double d = (temp - config.intake_mu) / s;
    return config.intake_c1 / (s * std::sqrt(2.0 * M_PI)) * std::exp(-0.5 * d * d);
}

void evaluate_and_track(Population& pop, const ScenarioObjective& objective)
{
    for (auto& m : pop.members) {
        if (!m.fitness_valid) {
            double f = objective(m.position);
            if (!std::isfinite(f))
                f = std::numeric_limits<double>::infinity();
            m.fitness = f;
            m.fitness_valid = true;
        }
    }

    const Individual* best = &pop.members.front();
    for (const auto& m : pop.members)
        if (m.fitness < best->fitness)
            best = &m;
    pop.local_best = *best;

    if (!pop.global_best.fitness_valid || best->fitness < pop.global_best.fitness)
        pop.global_best = *best;
}

} // namespace mcoa
