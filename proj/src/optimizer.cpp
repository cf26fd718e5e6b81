#include "mcoa/optimizer.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mcoa {

McoaConfig McoaConfig::baseline(const RunConfig& rc)
{
    McoaConfig cfg;
    static_cast<RunConfig&>(cfg) = rc;
    cfg.enable_opposition = false;
    cfg.enable_centroid = false;
    cfg.enable_adaptive_competition = false;
    return cfg;
}

McoaConfig McoaConfig::with_all_strategies(bool on) const
{
    McoaConfig cfg = *this;
    cfg.enable_opposition = on;
    cfg.enable_centroid = on;
    cfg.enable_adaptive_competition = on;
    return cfg;
}

std::vector<double> shade_position(const Population& pop)
{
    const auto& g = pop.global_best.position;
    const auto& l = pop.local_best.position;
    if (g.empty() || l.empty())
        throw std::logic_error("shade_position: population bests not tracked yet");
    std::vector<double> shade(g.size());
    for (std::size_t j = 0; j < g.size(); ++j)
        shade[j] = 0.5 * (g[j] + l[j]);
    return shade;
}

namespace {

void clamp_inplace(std::vector<double>& x, const SearchSpace& space)
{
    for (std::size_t j = 0; j < x.size(); ++j)
        x[j] = std::min(space.upper[j], std::max(space.lower[j], x[j]));
}

// Per-member update kernels with the iteration-invariant inputs (shade, the
// schedules) hoisted by the caller. The public functions below recompute
// them so they stay usable in isolation.

std::vector<double> anchor_step(const std::vector<double>& x,
                                const std::vector<double>& anchor, double c2,
                                RngStream& rng, const SearchSpace& space)
{
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = x[j] + c2 * rng.uniform() * (anchor[j] - x[j]);
    clamp_inplace(out, space);
    return out;
}

std::vector<double> competition_step(const std::vector<double>& x,
                                     const std::vector<double>& xz,
                                     const std::vector<double>& shade,
                                     const SearchSpace& space)
{
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = x[j] - xz[j] + shade[j];
    clamp_inplace(out, space);
    return out;
}

std::vector<double> adaptive_competition_step(const std::vector<double>& x,
                                              const std::vector<double>& xz,
                                              const std::vector<double>& shade,
                                              double cc, RngStream& rng,
                                              const SearchSpace& space)
{
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = shade[j] + cc * (x[j] - xz[j]) * rng.normal();
    clamp_inplace(out, space);
    return out;
}

} // namespace

std::vector<double> summer_resort_update(std::size_t i, CoaState& state)
{
    const auto shade = shade_position(state.pop);
    const double c2 = c2_schedule(state.t, state.config.max_iterations);
    return anchor_step(state.pop.members[i].position, shade, c2, state.rng,
                       state.space);
}

std::size_t draw_competitor_index(RngStream& rng, std::size_t n)
{
    const long z = std::lround(rng.uniform() * static_cast<double>(n - 1)) + 1;
    return static_cast<std::size_t>(z - 1);
}

std::vector<double> competition_update(std::size_t i, CoaState& state)
{
    const auto shade = shade_position(state.pop);
    const std::size_t z = draw_competitor_index(state.rng, state.pop.size());
    return competition_step(state.pop.members[i].position,
                            state.pop.members[z].position, shade, state.space);
}

double food_size(double fitness_i, double fitness_food, RngStream& rng, double c3)
{
    const double denom = fitness_food == 0.0 ? 1e-12 : fitness_food;
    return c3 * rng.uniform() * (fitness_i / denom);
}

std::vector<double> forage_update(std::size_t i, CoaState& state, double temp)
{
    const auto& member = state.pop.members[i];
    const auto& x = member.position;
    const double c3 = state.config.food_factor;
    const double p = food_intake(temp, state.config);

    std::vector<double> food = state.pop.global_best.position;
    const double q = food_size(member.fitness, state.pop.global_best.fitness,
                               state.rng, c3);

    std::vector<double> out(x.size());
    if (q > (c3 + 1.0) / 2.0) {
        const double shrink = std::exp(-1.0 / q);
        for (auto& f : food)
            f *= shrink;
        // One shared draw inside cos and an independent one inside sin.
        const double rc = state.rng.uniform();
        const double rs = state.rng.uniform();
        const double cosine = std::cos(2.0 * M_PI * rc);
        const double sine = std::sin(2.0 * M_PI * rs);
        for (std::size_t j = 0; j < x.size(); ++j)
            out[j] = x[j] + food[j] * p * cosine - food[j] * p * sine;
    } else {
        for (std::size_t j = 0; j < x.size(); ++j)
            out[j] = (x[j] - food[j]) * p + p * state.rng.uniform() * x[j];
    }
    return clamp_to_bounds(out, state.space);
}

std::vector<double> refractive_opposition(const std::vector<double>& x,
                                          const SearchSpace& space,
                                          const std::vector<double>& k)
{
    if (x.size() != space.dim() || k.size() != space.dim())
        throw std::invalid_argument("refractive_opposition: dimension mismatch");
    std::vector<double> out(x.size());
    for (std::size_t j = 0; j < x.size(); ++j)
        out[j] = k[j] * (space.upper[j] + space.lower[j]) - x[j];
    return clamp_to_bounds(out, space);
}

std::vector<double> refractive_opposition(const std::vector<double>& x,
                                          const SearchSpace& space, RngStream& rng)
{
    std::vector<double> k(x.size());
    for (auto& v : k)
        v = rng.uniform();
    return refractive_opposition(x, space, k);
}

void opposition_select(Population& pop, const ScenarioObjective& objective,
                       const SearchSpace& space, RngStream& rng)
{
    evaluate_and_track(pop, objective);
    for (auto& m : pop.members) {
        auto reverse = refractive_opposition(m.position, space, rng);
        double f = objective(reverse);
        if (!std::isfinite(f))
            f = std::numeric_limits<double>::infinity();
        if (f < m.fitness) {
            m.position = std::move(reverse);
            m.fitness = f;
        }
    }
    evaluate_and_track(pop, objective);
}

namespace {

std::vector<double> mean_position(const Population& pop,
                                  const std::vector<std::size_t>& indices)
{
    const std::size_t dim = pop.members.front().position.size();
    std::vector<double> mean(dim, 0.0);
    for (std::size_t idx : indices)
        for (std::size_t j = 0; j < dim; ++j)
            mean[j] += pop.members[idx].position[j];
    for (auto& v : mean)
        v /= static_cast<double>(indices.size());
    return mean;
}

// Uniform subset of the given size, without replacement (partial Fisher-Yates).
std::vector<std::size_t> sample_subset(RngStream& rng, std::size_t n, std::size_t size)
{
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    for (std::size_t i = 0; i < size; ++i) {
        const std::size_t pick =
            i + static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(n - 1 - i)));
        std::swap(idx[i], idx[pick]);
    }
    idx.resize(size);
    return idx;
}

} // namespace

CentroidSet build_centroid_set(CoaState& state, const McoaConfig& cfg)
{
    const std::size_t n = state.pop.size();
    CentroidSet cs;
    cs.candidates[0] = state.pop.global_best.position;
    cs.candidates[1] = state.pop.local_best.position;
    cs.candidates[2] = shade_position(state.pop);

    const std::size_t dim = state.pop.members.front().position.size();
    cs.candidates[3].assign(dim, 0.0);
    for (const auto& m : state.pop.members)
        for (std::size_t j = 0; j < dim; ++j)
            cs.candidates[3][j] += m.position[j];
    for (auto& v : cs.candidates[3])
        v /= static_cast<double>(n);

    const int p_hi = std::min<int>(cfg.p_subset_max, static_cast<int>(n));
    const int p_lo = std::min<int>(cfg.p_subset_min, p_hi);
    const int p_size = state.rng.uniform_int(p_lo, p_hi);
    cs.candidates[4] = mean_position(state.pop, sample_subset(state.rng, n, p_size));

    const int q_lo = std::min<int>(cfg.q_subset_min, static_cast<int>(n));
    const int q_size = state.rng.uniform_int(q_lo, static_cast<int>(n));
    cs.candidates[5] = mean_position(state.pop, sample_subset(state.rng, n, q_size));

    return cs;
}

std::vector<double> centroid_exploration_update(std::size_t i, CoaState& state,
                                                const CentroidSet& centroids)
{
    const int k1 = state.rng.uniform_int(1, 6);
    const double c2 = c2_schedule(state.t, state.config.max_iterations);
    return anchor_step(state.pop.members[i].position, centroids.candidates[k1 - 1],
                       c2, state.rng, state.space);
}

std::vector<double> adaptive_competition_update(std::size_t i, CoaState& state)
{
    const auto shade = shade_position(state.pop);
    const std::size_t z = draw_competitor_index(state.rng, state.pop.size());
    const double cc = cc_schedule(state.t, state.config.max_iterations);
    return adaptive_competition_step(state.pop.members[i].position,
                                     state.pop.members[z].position, shade, cc,
                                     state.rng, state.space);
}

void mcoa_iteration(CoaState& state, const ScenarioObjective& objective,
                    const McoaConfig& cfg)
{
    const bool per_individual = state.config.temp_per_individual;
    const double shared_temp =
        per_individual ? 0.0 : sample_temperature(state.rng, state.config);

    // Bests only refresh at the batch evaluation below, so the shade and the
    // schedule values are invariant across this member loop.
    const double c2 = c2_schedule(state.t, state.config.max_iterations);
    const double cc = cc_schedule(state.t, state.config.max_iterations);
    std::vector<double> shade;
    auto shade_ref = [&]() -> const std::vector<double>& {
        if (shade.empty())
            shade = shade_position(state.pop);
        return shade;
    };

    CentroidSet centroids;
    bool centroids_built = false;

    for (std::size_t i = 0; i < state.pop.size(); ++i) {
        const double temp =
            per_individual ? sample_temperature(state.rng, state.config) : shared_temp;
        const double r = state.rng.uniform();

        std::vector<double> next;
        if (temp > 30.0) {
            if (r < 0.5) {
                if (cfg.enable_centroid) {
                    if (!centroids_built) {
                        centroids = build_centroid_set(state, cfg);
                        centroids_built = true;
                    }
                    const int k1 = state.rng.uniform_int(1, 6);
                    next = anchor_step(state.pop.members[i].position,
                                       centroids.candidates[k1 - 1], c2, state.rng,
                                       state.space);
                } else {
                    next = anchor_step(state.pop.members[i].position, shade_ref(),
                                       c2, state.rng, state.space);
                }
            } else {
                const auto& sh = shade_ref();
                const std::size_t z =
                    draw_competitor_index(state.rng, state.pop.size());
                next = cfg.enable_adaptive_competition
                           ? adaptive_competition_step(
                                 state.pop.members[i].position,
                                 state.pop.members[z].position, sh, cc, state.rng,
                                 state.space)
                           : competition_step(state.pop.members[i].position,
                                              state.pop.members[z].position, sh,
                                              state.space);
            }
        } else {
            next = forage_update(i, state, temp);
        }

        state.pop.members[i].position = std::move(next);
        state.pop.members[i].fitness_valid = false;
    }

    evaluate_and_track(state.pop, objective);
    ++state.t;
}

void coa_iteration(CoaState& state, const ScenarioObjective& objective)
{
    mcoa_iteration(state, objective, McoaConfig::baseline(state.config));
}

namespace {

ReplicateResult run_impl(const ScenarioObjective& objective, const SearchSpace& space,
                         const McoaConfig& cfg)
{
    space.validate();
    cfg.validate();

    const auto start = std::chrono::steady_clock::now();

    CoaState state{Population{}, space, cfg, RngStream(cfg.seed), 1};
    state.pop = init_population_uniform(space, cfg, state.rng);
    evaluate_and_track(state.pop, objective);
    if (cfg.enable_opposition)
        opposition_select(state.pop, objective, space, state.rng);

    ReplicateResult result;
    result.trace.reserve(cfg.max_iterations);
    for (int t = 1; t <= cfg.max_iterations; ++t) {
        mcoa_iteration(state, objective, cfg);
        if (cfg.enable_opposition && cfg.opposition_every_iteration)
            opposition_select(state.pop, objective, space, state.rng);
        result.trace.push_back({t, state.pop.global_best.fitness});
    }

    result.best = state.pop.global_best;
    result.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return result;
}

} // namespace

ReplicateResult run_coa(const ScenarioObjective& objective,
                        const SearchSpace& space, const RunConfig& config)
{
    return run_impl(objective, space, McoaConfig::baseline(config));
}

ReplicateResult run_mcoa(const ScenarioObjective& objective,
                         const SearchSpace& space, const McoaConfig& cfg)
{
    return run_impl(objective, space, cfg);
}

} // namespace mcoa
