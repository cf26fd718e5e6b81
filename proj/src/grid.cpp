#include "mcoa/grid.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace mcoa::grid {

double GridMap::obstacle_density() const
{
    double count = 0.0;
    for (auto c : cells)
        count += c != 0;
    return count / static_cast<double>(cells.size());
}

std::string GridMap::to_text() const
{
    std::string out;
    out.reserve(static_cast<std::size_t>(n) * (n + 1));
    for (int y = 1; y <= n; ++y) {
        for (int x = 1; x <= n; ++x)
            out.push_back(blocked(x, y) ? '1' : '0');
        out.push_back('\n');
    }
    return out;
}

GridMap load_grid_map(std::istream& in)
{
    std::vector<std::string> rows;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (line.empty() || line[0] == '#')
            continue;
        for (std::size_t c = 0; c < line.size(); ++c)
            if (line[c] != '0' && line[c] != '1')
                throw std::runtime_error("grid map: illegal character at line " +
                                         std::to_string(line_no) + ", column " +
                                         std::to_string(c + 1));
        rows.push_back(line);
        if (line.size() != rows.front().size())
            throw std::runtime_error("grid map: ragged row at line " +
                                     std::to_string(line_no));
    }
    if (rows.empty())
        throw std::runtime_error("grid map: no data rows");
    const int n = static_cast<int>(rows.size());
    if (rows.front().size() != static_cast<std::size_t>(n))
        throw std::runtime_error("grid map: expected " + std::to_string(n) +
                                 " columns to match " + std::to_string(n) + " rows");

    GridMap map;
    map.n = n;
    map.cells.assign(static_cast<std::size_t>(n) * n, 0);
    for (int y = 1; y <= n; ++y)
        for (int x = 1; x <= n; ++x)
            map.set(x, y, rows[y - 1][x - 1] == '1');

    if (map.blocked(1, 1))
        throw std::runtime_error("grid map: start cell (1,1) is blocked");
    if (map.blocked(n, n))
        throw std::runtime_error("grid map: goal cell (n,n) is blocked");
    return map;
}

GridMap load_grid_map_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("grid map: cannot open " + path);
    return load_grid_map(in);
}

GridMap benchmark_map(int n)
{
    if (n < 5)
        throw std::invalid_argument("benchmark_map: n must be >= 5");

    // Fixed generation seed; changing it changes the shipped benchmarks.
    RngStream rng(20240000ULL + static_cast<std::uint64_t>(n));

    GridMap map;
    map.n = n;
    map.cells.assign(static_cast<std::size_t>(n) * n, 0);

    // Keep a corridor around the main diagonal clear so every map admits
    // near-diagonal feasible paths.
    auto protected_cell = [n](int x, int y) { return std::abs(x - y) <= 1; };

    const int target = n * n / 4;
    const int max_block = std::max(2, n / 10);
    int placed = 0;
    int attempts = 0;
    while (placed < target && attempts < 100000) {
        ++attempts;
        const int w = rng.uniform_int(1, max_block);
        const int h = rng.uniform_int(1, max_block);
        const int x0 = rng.uniform_int(1, n);
        const int y0 = rng.uniform_int(1, n);
        for (int y = y0; y < y0 + h && y <= n; ++y)
            for (int x = x0; x < x0 + w && x <= n; ++x) {
                if (protected_cell(x, y) || map.blocked(x, y))
                    continue;
                map.set(x, y, true);
                if (++placed >= target)
                    return map;
            }
    }
    return map;
}

namespace {

int cell_index(double v, int n)
{
    int c = static_cast<int>(std::lround(v));
    return std::min(n, std::max(1, c));
}

} // namespace

std::vector<std::pair<int, int>> supercover_cells(const std::array<double, 2>& a,
                                                  const std::array<double, 2>& b,
                                                  int n)
{
    const double dx = b[0] - a[0];
    const double dy = b[1] - a[1];

    // Parameter values where the segment crosses a cell boundary (k + 0.5).
    struct Event {
        double t;
        int axis;
    };
    std::vector<Event> events;
    auto collect = [&events](double p0, double d, int axis) {
        if (d == 0.0)
            return;
        const double lo = std::min(p0, p0 + d);
        const double hi = std::max(p0, p0 + d);
        const int k_lo = static_cast<int>(std::ceil(lo - 0.5));
        const int k_hi = static_cast<int>(std::floor(hi - 0.5));
        for (int k = k_lo; k <= k_hi; ++k) {
            const double t = (k + 0.5 - p0) / d;
            if (t > 0.0 && t < 1.0)
                events.push_back({t, axis});
        }
    };
    collect(a[0], dx, 0);
    collect(a[1], dy, 1);
    std::sort(events.begin(), events.end(),
              [](const Event& l, const Event& r) { return l.t < r.t; });

    std::set<std::pair<int, int>> cells;
    double prev = 0.0;
    for (std::size_t i = 0; i <= events.size(); ++i) {
        const double next = i < events.size() ? events[i].t : 1.0;
        const double mid = 0.5 * (prev + next);
        cells.insert({cell_index(a[0] + mid * dx, n), cell_index(a[1] + mid * dy, n)});
        prev = next;
    }

    // A simultaneous x/y crossing is a corner pass: the segment touches all
    // four cells meeting at that corner.
    constexpr double eps = 1e-12;
    for (std::size_t i = 0; i + 1 < events.size(); ++i) {
        if (events[i].axis == events[i + 1].axis)
            continue;
        if (events[i + 1].t - events[i].t > eps)
            continue;
        const double t = events[i].t;
        const int px = static_cast<int>(std::lround(a[0] + t * dx - 0.5));
        const int py = static_cast<int>(std::lround(a[1] + t * dy - 0.5));
        for (int ox = 0; ox <= 1; ++ox)
            for (int oy = 0; oy <= 1; ++oy) {
                const int cx = px + ox;
                const int cy = py + oy;
                if (cx >= 1 && cx <= n && cy >= 1 && cy <= n)
                    cells.insert({cx, cy});
            }
    }

    return {cells.begin(), cells.end()};
}

bool rasterize_and_check(const GridPath& path, const GridMap& map)
{
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        for (const auto& [cx, cy] : supercover_cells(path.points[i],
                                                     path.points[i + 1], map.n))
            if (map.blocked(cx, cy))
                return false;
    return true;
}

GridPath decode_grid_candidate(const std::vector<double>& candidate,
                               const GridMap& map, int n_interior)
{
    if (n_interior < 1)
        throw std::invalid_argument("decode_grid_candidate: n_interior must be >= 1");
    if (candidate.size() != static_cast<std::size_t>(2 * n_interior))
        throw std::invalid_argument("decode_grid_candidate: candidate dim must be 2*n_interior");

    GridPath path;
    path.points.reserve(n_interior + 2);
    path.points.push_back({1.0, 1.0});
    auto clamp01 = [&map](double v) {
        return std::min(static_cast<double>(map.n), std::max(1.0, v));
    };
    for (int i = 0; i < n_interior; ++i)
        path.points.push_back({clamp01(candidate[2 * i]), clamp01(candidate[2 * i + 1])});
    path.points.push_back({static_cast<double>(map.n), static_cast<double>(map.n)});
    path.feasible = rasterize_and_check(path, map);
    return path;
}

double grid_path_length(const GridPath& path)
{
    if (path.points.size() < 2)
        throw std::invalid_argument("grid_path_length: need at least 2 points");
    double total = 0.0;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i)
        total += std::hypot(path.points[i + 1][0] - path.points[i][0],
                            path.points[i + 1][1] - path.points[i][1]);
    return total;
}

int count_turning_points(const GridPath& path)
{
    constexpr double eps = 1e-12;
    int count = 0;
    bool have_heading = false;
    double heading = 0.0;
    for (std::size_t i = 0; i + 1 < path.points.size(); ++i) {
        const double dx = path.points[i + 1][0] - path.points[i][0];
        const double dy = path.points[i + 1][1] - path.points[i][1];
        if (std::hypot(dx, dy) < eps)
            continue;
        const double h = std::atan2(dy, dx);
        if (have_heading) {
            double diff = std::fabs(h - heading);
            if (diff > M_PI)
                diff = 2.0 * M_PI - diff;
            if (diff > 1e-6)
                ++count;
        }
        heading = h;
        have_heading = true;
    }
    return count;
}

double grid_fitness(const std::vector<double>& candidate, const GridMap& map,
                    int n_interior)
{
    const GridPath path = decode_grid_candidate(candidate, map, n_interior);
    if (!path.feasible)
        return static_cast<double>(map.n) * map.n;
    return grid_path_length(path);
}

SearchSpace grid_search_space(const GridMap& map, int n_interior)
{
    return SearchSpace::uniform_box(2 * static_cast<std::size_t>(n_interior), 1.0,
                                    static_cast<double>(map.n));
}

ScenarioObjective grid_objective(const GridMap& map, int n_interior)
{
    return [map, n_interior](const std::vector<double>& x) {
        return grid_fitness(x, map, n_interior);
    };
}

} // namespace mcoa::grid
