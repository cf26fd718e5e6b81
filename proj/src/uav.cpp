#include "mcoa/uav.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>

namespace mcoa::uav {

double terrain_base_height(double x, double y)
{
    const double r = std::sqrt(x * x + y * y);
    return 2.0 * (std::cos(x) + std::sin(x)) + std::sin(r) + std::cos(r);
}

double slope_height(double x, double y, const TerrainModel& terrain)
{
    double z = 0.0;
    for (const auto& s : terrain.slopes) {
        const double dx = terrain.literal_exponent ? (x * x - s.cx) / s.ax
                                                   : (x - s.cx) / s.ax;
        const double dy = terrain.literal_exponent ? (y * y - s.cy) / s.ay
                                                   : (y - s.cy) / s.ay;
        z += s.height * std::exp(-dx * dx - dy * dy);
    }
    return z;
}

UavPath decode_candidate_to_path(const std::vector<double>& candidate,
                                 int n_interior, const Point3& start,
                                 const Point3& end)
{
    if (n_interior < 1)
        throw std::invalid_argument("decode_candidate_to_path: n_interior must be >= 1");
    if (candidate.size() != static_cast<std::size_t>(3 * n_interior))
        throw std::invalid_argument("decode_candidate_to_path: candidate dim must be 3*n_interior");
    UavPath path;
    path.waypoints.reserve(n_interior + 2);
    path.waypoints.push_back(start);
    for (int i = 0; i < n_interior; ++i)
        path.waypoints.push_back(
            {candidate[3 * i], candidate[3 * i + 1], candidate[3 * i + 2]});
    path.waypoints.push_back(end);
    return path;
}

double path_length_cost(const UavPath& path)
{
    double total = 0.0;
    for (std::size_t j = 0; j + 1 < path.waypoints.size(); ++j) {
        const auto& a = path.waypoints[j];
        const auto& b = path.waypoints[j + 1];
        total += std::sqrt((b[0] - a[0]) * (b[0] - a[0]) +
                           (b[1] - a[1]) * (b[1] - a[1]) +
                           (b[2] - a[2]) * (b[2] - a[2]));
    }
    return total;
}

double point_segment_distance_2d(const Point2& c, const Point2& a, const Point2& b)
{
    const double abx = b[0] - a[0];
    const double aby = b[1] - a[1];
    const double len2 = abx * abx + aby * aby;
    double t = 0.0;
    if (len2 > 0.0) {
        t = ((c[0] - a[0]) * abx + (c[1] - a[1]) * aby) / len2;
        t = std::min(1.0, std::max(0.0, t));
    }
    const double px = a[0] + t * abx;
    const double py = a[1] + t * aby;
    // sqrt of the squared sum is safe here: scenario coordinates are bounded
    // far away from floating-point under/overflow, and it avoids hypot's
    // input-dependent slow paths in this innermost loop.
    const double dx = c[0] - px;
    const double dy = c[1] - py;
    return std::sqrt(dx * dx + dy * dy);
}

double threat_cost(const UavPath& path, const std::vector<CylinderObstacle>& obstacles,
                   const ConstraintParams& params, bool* feasible)
{
    double total = 0.0;
    bool ok = true;
    for (std::size_t j = 0; j + 1 < path.waypoints.size(); ++j) {
        const Point2 a{path.waypoints[j][0], path.waypoints[j][1]};
        const Point2 b{path.waypoints[j + 1][0], path.waypoints[j + 1][1]};
        for (const auto& obs : obstacles) {
            // Cheap bounding-box reject before the exact distance test.
            const double reach = params.collision_margin + obs.radius;
            if (std::max(a[0], b[0]) < obs.x - reach ||
                std::min(a[0], b[0]) > obs.x + reach ||
                std::max(a[1], b[1]) < obs.y - reach ||
                std::min(a[1], b[1]) > obs.y + reach)
                continue;
            const double d = point_segment_distance_2d({obs.x, obs.y}, a, b);
            if (d >= reach)
                continue;
            if (d <= obs.radius) {
                total += params.infeasible_cost;
                ok = false;
            } else {
                total += params.penalty * (params.collision_margin + obs.radius - d);
            }
        }
    }
    if (feasible)
        *feasible = ok;
    return total;
}

double altitude_cost(const UavPath& path, const ConstraintParams& params,
                     bool* feasible)
{
    double total = 0.0;
    bool ok = true;
    for (const auto& w : path.waypoints) {
        const double h = w[2];
        if (h <= 0.0) {
            total += params.infeasible_cost;
            ok = false;
        } else if (h >= params.h_max) {
            total += params.penalty * (h - params.h_max);
        } else if (h <= params.h_min) {
            total += params.penalty * (params.h_min - h);
        }
    }
    if (feasible)
        *feasible = ok;
    return total;
}

double turn_and_pitch_cost(const UavPath& path, const ConstraintParams& params)
{
    const auto& w = path.waypoints;
    if (w.size() < 3)
        throw std::invalid_argument("turn_and_pitch_cost: need at least 3 waypoints");
    constexpr double eps = 1e-12;

    const std::size_t segments = w.size() - 1;
    std::vector<double> dx(segments), dy(segments), dz(segments), len2d(segments);
    for (std::size_t j = 0; j < segments; ++j) {
        dx[j] = w[j + 1][0] - w[j][0];
        dy[j] = w[j + 1][1] - w[j][1];
        dz[j] = w[j + 1][2] - w[j][2];
        len2d[j] = std::hypot(dx[j], dy[j]);
    }

    double turn_sum = 0.0;
    for (std::size_t j = 0; j + 1 < segments; ++j) {
        if (len2d[j] < eps || len2d[j + 1] < eps)
            continue; // degenerate projection contributes nothing
        const double cross = dx[j] * dy[j + 1] - dy[j] * dx[j + 1];
        const double dot = dx[j] * dx[j + 1] + dy[j] * dy[j + 1];
        turn_sum += std::atan2(std::fabs(cross), dot);
    }

    double pitch_sum = 0.0;
    double prev_beta = 0.0; // beta_0 convention: level flight
    for (std::size_t j = 0; j < segments; ++j) {
        const double beta = len2d[j] < eps ? 0.0 : std::atan(dz[j] / len2d[j]);
        pitch_sum += std::fabs(beta - prev_beta);
        prev_beta = beta;
    }

    return params.a1 * turn_sum + params.a2 * pitch_sum;
}

UavScenario UavScenario::benchmark_default()
{
    UavScenario s;
    const double peaks[10][4] = {
        {400, 500, 150, 30}, {700, 150, 150, 50}, {550, 450, 150, 40},
        {350, 100, 150, 50}, {400, 650, 150, 30}, {800, 800, 150, 30},
        {750, 350, 150, 70}, {150, 350, 150, 60}, {920, 600, 150, 90},
        {920, 200, 150, 50},
    };
    for (const auto& p : peaks) {
        s.obstacles.push_back({p[0], p[1], p[2], p[3]});
        s.terrain.slopes.push_back({p[2], p[0], p[1], p[3], p[3]});
    }
    return s;
}

SearchSpace UavScenario::search_space() const
{
    SearchSpace space;
    space.lower.reserve(3 * n_interior);
    space.upper.reserve(3 * n_interior);
    for (int i = 0; i < n_interior; ++i) {
        space.lower.insert(space.lower.end(), {xy_min, xy_min, z_min});
        space.upper.insert(space.upper.end(), {xy_max, xy_max, z_max});
    }
    return space;
}

UavPath UavScenario::decode(const std::vector<double>& candidate) const
{
    return decode_candidate_to_path(candidate, n_interior, start, end);
}

CostBreakdown UavScenario::cost_breakdown(const std::vector<double>& candidate) const
{
    const UavPath path = decode(candidate);
    CostBreakdown cb;
    bool threat_ok = true;
    bool altitude_ok = true;
    cb.length = path_length_cost(path);
    cb.threat = threat_cost(path, obstacles, params, &threat_ok);
    cb.altitude = altitude_cost(path, params, &altitude_ok);
    cb.angle = turn_and_pitch_cost(path, params);
    cb.feasible = threat_ok && altitude_ok;

    double sum = 0.0;
    for (double c : {cb.length, cb.threat, cb.altitude, cb.angle})
        sum += std::isfinite(c) ? c : params.infeasible_cost;
    cb.total = sum / 4.0;
    return cb;
}

double UavScenario::total_cost(const std::vector<double>& candidate) const
{
    return cost_breakdown(candidate).total;
}

ScenarioObjective UavScenario::objective() const
{
    UavScenario copy = *this;
    return [copy](const std::vector<double>& x) { return copy.total_cost(x); };
}

nlohmann::json UavScenario::to_json() const
{
    nlohmann::json j;
    j["start"] = start;
    j["end"] = end;
    j["n_interior"] = n_interior;
    j["bounds"] = {{"xy", {xy_min, xy_max}}, {"z", {z_min, z_max}}};
    for (const auto& o : obstacles)
        j["obstacles"].push_back(
            {{"x", o.x}, {"y", o.y}, {"z", o.top}, {"radius", o.radius}});
    j["constraints"] = {{"collision_margin", params.collision_margin},
                        {"penalty", params.penalty},
                        {"h_min", params.h_min},
                        {"h_max", params.h_max},
                        {"a1", params.a1},
                        {"a2", params.a2},
                        {"infeasible_cost", params.infeasible_cost}};
    return j;
}

UavScenario UavScenario::from_json(const nlohmann::json& j)
{
    UavScenario s;
    s.obstacles.clear();
    s.terrain.slopes.clear();
    if (j.contains("start"))
        s.start = j.at("start").get<Point3>();
    if (j.contains("end"))
        s.end = j.at("end").get<Point3>();
    if (j.contains("n_interior"))
        s.n_interior = j.at("n_interior").get<int>();
    if (j.contains("bounds")) {
        const auto& b = j.at("bounds");
        if (b.contains("xy")) {
            s.xy_min = b.at("xy").at(0).get<double>();
            s.xy_max = b.at("xy").at(1).get<double>();
        }
        if (b.contains("z")) {
            s.z_min = b.at("z").at(0).get<double>();
            s.z_max = b.at("z").at(1).get<double>();
        }
    }
    for (const auto& o : j.value("obstacles", nlohmann::json::array())) {
        CylinderObstacle obs{o.at("x").get<double>(), o.at("y").get<double>(),
                             o.value("z", 150.0), o.at("radius").get<double>()};
        s.obstacles.push_back(obs);
        s.terrain.slopes.push_back({obs.top, obs.x, obs.y, obs.radius, obs.radius});
    }
    if (j.contains("constraints")) {
        const auto& c = j.at("constraints");
        auto& p = s.params;
        p.collision_margin = c.value("collision_margin", p.collision_margin);
        p.penalty = c.value("penalty", p.penalty);
        p.h_min = c.value("h_min", p.h_min);
        p.h_max = c.value("h_max", p.h_max);
        p.a1 = c.value("a1", p.a1);
        p.a2 = c.value("a2", p.a2);
        p.infeasible_cost = c.value("infeasible_cost", p.infeasible_cost);
    }
    if (s.n_interior < 1)
        throw std::invalid_argument("UavScenario: n_interior must be >= 1");
    return s;
}

UavScenario UavScenario::load_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("UavScenario: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return from_json(j);
}

} // namespace mcoa::uav
