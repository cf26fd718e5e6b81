#ifndef MCOA_OPTIMIZER_HPP
#define MCOA_OPTIMIZER_HPP

#include "mcoa/core.hpp"

#include <array>

namespace mcoa {

/// Mutable state of one optimizer run.
struct CoaState {
    Population pop;
    SearchSpace space;
    RunConfig config;
    RngStream rng;
    int t = 1; // current iteration, 1..max_iterations
};

/// Strategy toggles layered on the baseline; all off reproduces baseline
/// COA exactly under the shared draw discipline.
struct McoaConfig : RunConfig {
    bool enable_opposition = true;
    bool enable_centroid = true;
    bool enable_adaptive_competition = true;

    /// Re-apply opposition selection after every iteration (off by default;
    /// the standard placement is once after initialization).
    bool opposition_every_iteration = false;

    // Subset-size ranges for the p/q centroids.
    int p_subset_min = 2;
    int p_subset_max = 5;
    int q_subset_min = 10;

    static McoaConfig baseline(const RunConfig& rc);
    McoaConfig with_all_strategies(bool on) const;
};

/// The six exploration anchors: global best, local best, shade, full mean,
/// small-subset mean, large-subset mean. Order is fixed; k1 in {1..6}
/// indexes them.
struct CentroidSet {
    std::array<std::vector<double>, 6> candidates;
};

/// Midpoint of the global and current-iteration best positions.
std::vector<double> shade_position(const Population& pop);

/// z = round(rand * (N - 1)) + 1, returned as a 0-based member index.
std::size_t draw_competitor_index(RngStream& rng, std::size_t n);

/// Exploration step toward the shade: X + C2 * rand_j * (shade - X), clamped.
std::vector<double> summer_resort_update(std::size_t i, CoaState& state);

/// Burrow competition: X_i - X_z + shade with z = round(rand*(N-1)) + 1, clamped.
std::vector<double> competition_update(std::size_t i, CoaState& state);

/// Food size Q = C3 * rand * fitness_i / fitness_food, with a 1e-12 guard
/// when fitness_food is exactly zero.
double food_size(double fitness_i, double fitness_food, RngStream& rng, double c3);

/// Dual-mode foraging: tearing (Q above (C3+1)/2) or direct feeding.
std::vector<double> forage_update(std::size_t i, CoaState& state, double temp);

/// Refracted opposite of x: K_j * (upper[j] + lower[j]) - x[j], clamped.
/// The overload taking K is the deterministic kernel used by tests.
std::vector<double> refractive_opposition(const std::vector<double>& x,
                                          const SearchSpace& space,
                                          const std::vector<double>& k);
std::vector<double> refractive_opposition(const std::vector<double>& x,
                                          const SearchSpace& space, RngStream& rng);

/// Pairwise selection between each member and its refracted opposite;
/// replaces only on strict fitness improvement.
void opposition_select(Population& pop, const ScenarioObjective& objective,
                       const SearchSpace& space, RngStream& rng);

/// Builds the six anchors; the p/q subsets are sampled without replacement
/// with sizes drawn fresh from the configured ranges.
CentroidSet build_centroid_set(CoaState& state, const McoaConfig& cfg);

/// Exploration step toward a uniformly chosen anchor from the centroid set.
std::vector<double> centroid_exploration_update(std::size_t i, CoaState& state,
                                                const CentroidSet& centroids);

/// Competition with the time-decaying coefficient:
/// shade + CC * (X_i - X_z) .* randn, clamped. Collapses to shade at t = T.
std::vector<double> adaptive_competition_update(std::size_t i, CoaState& state);

/// One full iteration: temperature dispatch over the three update rules
/// (with MCOA substitutions per the toggles), batch evaluation, t increment.
void mcoa_iteration(CoaState& state, const ScenarioObjective& objective,
                    const McoaConfig& cfg);

/// Baseline iteration; identical to mcoa_iteration with all toggles off.
void coa_iteration(CoaState& state, const ScenarioObjective& objective);

ReplicateResult run_coa(const ScenarioObjective& objective,
                        const SearchSpace& space, const RunConfig& config);

ReplicateResult run_mcoa(const ScenarioObjective& objective,
                         const SearchSpace& space, const McoaConfig& cfg);

} // namespace mcoa

#endif // MCOA_OPTIMIZER_HPP
