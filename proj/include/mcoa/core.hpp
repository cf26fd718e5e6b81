#ifndef MCOA_CORE_HPP
#define MCOA_CORE_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcoa {

/// Axis-aligned box of feasible decision vectors.
struct SearchSpace {
    std::vector<double> lower;
    std::vector<double> upper;

    std::size_t dim() const { return lower.size(); }

    /// Same [lo, hi] interval on every coordinate.
    static SearchSpace uniform_box(std::size_t dim, double lo, double hi);

    /// Throws std::invalid_argument when dim == 0 or lower[j] >= upper[j].
    void validate() const;
};

struct Individual {
    std::vector<double> position;
    double fitness = std::numeric_limits<double>::infinity();
    bool fitness_valid = false;
};

/// Population with global-best (best ever evaluated) and local-best
/// (best of the current members) tracking.
struct Population {
    std::vector<Individual> members;
    Individual global_best;
    Individual local_best;

    std::size_t size() const { return members.size(); }
};

struct RunConfig {
    int population_size = 50;
    int max_iterations = 1000;
    double food_factor = 3.0; // C3; tearing threshold is (C3+1)/2
    std::uint64_t seed = 1;

    // Temperature model: per-iteration uniform draw on [temp_min, temp_max].
    double temp_min = 20.0;
    double temp_max = 35.0;
    bool temp_per_individual = false;

    // Food intake model p = c1 / (sigma*sqrt(2*pi)) * exp(-(temp-mu)^2 / (2*sigma^2)).
    double intake_c1 = 0.2;
    double intake_mu = 25.0;
    double intake_sigma = 3.0;

    void validate() const;
};

/// Deterministic random stream. Identical seed and call sequence give an
/// identical draw sequence; all distributions are implemented on top of
/// the raw engine so results do not depend on the standard library's
/// distribution internals.
class RngStream {
public:
    /// The seed is expanded into the xoshiro256++ state with splitmix64, so
    /// nearby seeds (1, 2, 3, ...) still give uncorrelated streams.
    explicit RngStream(std::uint64_t seed)
    {
        std::uint64_t x = seed;
        for (auto& s : state_) {
            x += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = x;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            s = z ^ (z >> 31);
        }
    }

    /// Uniform draw in [0, 1): 53 random bits mapped into the unit interval.
    double uniform()
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Uniform draw in [lo, hi).
    double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

    /// Uniform integer draw in [lo, hi], inclusive.
    int uniform_int(int lo, int hi)
    {
        if (hi < lo)
            throw std::invalid_argument("RngStream::uniform_int: empty range");
        const double span = static_cast<double>(hi) - static_cast<double>(lo) + 1.0;
        const int v = lo + static_cast<int>(uniform() * span);
        return v > hi ? hi : v;
    }

    /// Standard normal draw via the 128-layer ziggurat (Marsaglia-Tsang as
    /// formulated by Doornik). One engine draw covers both the layer index
    /// and the within-layer coordinate on the common path.
    double normal()
    {
        const ZigTables& t = zig();
        for (;;) {
            const std::uint64_t bits = next();
            const int i = static_cast<int>(bits & 127);
            const double u =
                2.0 * (static_cast<double>(bits >> 11) * 0x1.0p-53) - 1.0;
            if (std::fabs(u) < t.ratio[i])
                return u * t.x[i];
            if (i == 0) {
                // Tail beyond R, sampled with the exponential wedge method.
                double xx, yy;
                do {
                    xx = std::log(1.0 - uniform()) / kZigR;
                    yy = std::log(1.0 - uniform());
                } while (-2.0 * yy < xx * xx);
                return u < 0.0 ? xx - kZigR : kZigR - xx;
            }
            const double x = u * t.x[i];
            const double f0 = std::exp(-0.5 * (t.x[i] * t.x[i] - x * x));
            const double f1 = std::exp(-0.5 * (t.x[i + 1] * t.x[i + 1] - x * x));
            if (f1 + uniform() * (f0 - f1) < 1.0)
                return x;
        }
    }

private:
    static constexpr double kZigR = 3.442619855899;

    struct ZigTables {
        double x[129];
        double ratio[128];
    };

    static const ZigTables& zig()
    {
        static const ZigTables tables = [] {
            // Layer edges for 128 strips of equal area V under the unnormalized
            // standard normal density exp(-x^2/2).
            constexpr double v = 9.91256303526217e-3;
            ZigTables t;
            double f = std::exp(-0.5 * kZigR * kZigR);
            t.x[0] = v / f; // pseudo-extent of the base strip incl. the tail
            t.x[1] = kZigR;
            t.x[128] = 0.0;
            for (int i = 2; i < 128; ++i) {
                t.x[i] = std::sqrt(-2.0 * std::log(v / t.x[i - 1] + f));
                f = std::exp(-0.5 * t.x[i] * t.x[i]);
            }
            for (int i = 0; i < 128; ++i)
                t.ratio[i] = t.x[i + 1] / t.x[i];
            return t;
        }();
        return tables;
    }

    static std::uint64_t rotl(std::uint64_t v, int k)
    {
        return (v << k) | (v >> (64 - k));
    }

    /// xoshiro256++ step.
    std::uint64_t next()
    {
        const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    std::array<std::uint64_t, 4> state_;
};

struct TracePoint {
    int iteration;
    double best_fitness;
};

/// Per-iteration record of the global best; non-increasing in fitness.
using ConvergenceTrace = std::vector<TracePoint>;

/// Scalar cost of a candidate vector; lower is better.
using ScenarioObjective = std::function<double(const std::vector<double>&)>;

struct ReplicateResult {
    Individual best;
    ConvergenceTrace trace;
    double wall_seconds = 0.0;
};

/// Component-wise saturation to the box. Throws on dimension mismatch.
std::vector<double> clamp_to_bounds(const std::vector<double>& position,
                                    const SearchSpace& space);

/// N individuals with coordinates uniform in [lower[j], upper[j]); fitness
/// is left unevaluated.
Population init_population_uniform(const SearchSpace& space,
                                   const RunConfig& config, RngStream& rng);

/// C2 = 2 - t/T.
double c2_schedule(int t, int max_iterations);

/// CC = (1 - t/T)^(2t/T); equals 1 at t=0 and 0 at t=T.
double cc_schedule(int t, int max_iterations);

/// Per-iteration ambient temperature, uniform on [temp_min, temp_max].
double sample_temperature(RngStream& rng, const RunConfig& config);

/// Food intake p, a Gaussian bump in temperature peaking at intake_mu.
double food_intake(double temp, const RunConfig& config);

/// Evaluates every member whose cached fitness is stale, sanitizes
/// non-finite values to +inf, and refreshes local/global best. The global
/// best never worsens.
void evaluate_and_track(Population& pop, const ScenarioObjective& objective);

} // namespace mcoa

#endif // MCOA_CORE_HPP
