#ifndef MCOA_GRID_HPP
#define MCOA_GRID_HPP

#include "mcoa/core.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace mcoa::grid {

/// Square occupancy map. Cells are addressed 1-based as (x, y) with
/// (1, 1) the start corner and (n, n) the goal corner; cell (x, y) covers
/// the square [x - 0.5, x + 0.5] x [y - 0.5, y + 0.5].
struct GridMap {
    int n = 0;
    std::vector<std::uint8_t> cells; // row-major, row y first

    bool blocked(int x, int y) const { return cells[(y - 1) * n + (x - 1)] != 0; }
    void set(int x, int y, bool obstacle) { cells[(y - 1) * n + (x - 1)] = obstacle; }

    double obstacle_density() const;
    std::string to_text() const;
};

/// Parses a plain-text map: one line of '0'/'1' per row, '#' comment lines
/// allowed. Line r, column c maps to cell (c, r). Throws std::runtime_error
/// with line/column on ragged rows, illegal characters, or a blocked
/// start/goal cell.
GridMap load_grid_map(std::istream& in);
GridMap load_grid_map_file(const std::string& path);

/// The shipped benchmark maps, built deterministically from a fixed seed:
/// random obstacle blocks at roughly 25% density with a protected corridor
/// around the main diagonal. Supported sizes: 20, 40, 60.
GridMap benchmark_map(int n);

struct GridPath {
    std::vector<std::array<double, 2>> points;
    bool feasible = false;
};

/// Every cell the closed segment [a, b] touches, including cells met only
/// at a corner crossing. Cells are clamped to the map box.
std::vector<std::pair<int, int>> supercover_cells(const std::array<double, 2>& a,
                                                  const std::array<double, 2>& b,
                                                  int n);

/// True iff every cell touched by every segment of the path is passable.
bool rasterize_and_check(const GridPath& path, const GridMap& map);

/// Fixed endpoints (1,1) and (n,n) around the interior coordinate pairs;
/// feasibility is computed on construction.
GridPath decode_grid_candidate(const std::vector<double>& candidate,
                               const GridMap& map, int n_interior);

/// Sum of Euclidean segment lengths, in cell units.
double grid_path_length(const GridPath& path);

/// Waypoints where the heading changes by more than 1e-6 rad (descriptive
/// statistic only).
int count_turning_points(const GridPath& path);

/// Path length when feasible, n^2 otherwise.
double grid_fitness(const std::vector<double>& candidate, const GridMap& map,
                    int n_interior);

/// Decision box [1, n] per coordinate, dim = 2 * n_interior.
SearchSpace grid_search_space(const GridMap& map, int n_interior);

ScenarioObjective grid_objective(const GridMap& map, int n_interior);

} // namespace mcoa::grid

#endif // MCOA_GRID_HPP
