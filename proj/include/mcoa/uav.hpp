#ifndef MCOA_UAV_HPP
#define MCOA_UAV_HPP

#include "mcoa/core.hpp"

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

namespace mcoa::uav {

using Point3 = std::array<double, 3>;
using Point2 = std::array<double, 2>;

struct SlopeRecord {
    double height;  // h_i, m
    double cx, cy;  // slope center, m
    double ax, ay;  // attenuation along x and y, m (> 0)
};

struct TerrainModel {
    std::vector<SlopeRecord> slopes;
    /// Use the published exponent argument (x^2 - x_i)/x_si verbatim instead
    /// of the corrected (x - x_i)/x_si.
    bool literal_exponent = false;
};

struct CylinderObstacle {
    double x, y;   // ground-plane center, m
    double top;    // cylinder top, m (export only; the threat test is 2D)
    double radius; // R_k, m
};

struct ConstraintParams {
    double collision_margin = 20.0; // D, m
    double penalty = 10.0;
    double h_min = 20.0;
    double h_max = 200.0;
    double a1 = 1.0; // horizontal turn weight
    double a2 = 1.0; // pitch change weight
    double infeasible_cost = 1e6;
};

/// Fixed-endpoint waypoint polyline; first/last waypoints are the scenario
/// endpoints, interior waypoints come from the decision vector.
struct UavPath {
    std::vector<Point3> waypoints;
};

struct CostBreakdown {
    double length = 0.0;   // F1
    double threat = 0.0;   // F2
    double altitude = 0.0; // F3
    double angle = 0.0;    // F4
    double total = 0.0;    // (F1+F2+F3+F4)/4
    /// True when no sentinel branch fired (no core collision, no h <= 0).
    bool feasible = true;
};

struct UavScenario {
    Point3 start{150.0, 150.0, 50.0};
    Point3 end{900.0, 720.0, 150.0};
    int n_interior = 10;
    double xy_min = 0.0, xy_max = 1000.0;
    double z_min = 0.0, z_max = 200.0;
    std::vector<CylinderObstacle> obstacles;
    TerrainModel terrain;
    ConstraintParams params;

    /// The ten-peak benchmark environment.
    static UavScenario benchmark_default();

    static UavScenario from_json(const nlohmann::json& j);
    static UavScenario load_file(const std::string& path);
    nlohmann::json to_json() const;

    SearchSpace search_space() const;

    UavPath decode(const std::vector<double>& candidate) const;
    CostBreakdown cost_breakdown(const std::vector<double>& candidate) const;
    double total_cost(const std::vector<double>& candidate) const;

    ScenarioObjective objective() const;
};

/// Base terrain height z1(x, y).
double terrain_base_height(double x, double y);

/// Summed Gaussian slope heights z2(x, y).
double slope_height(double x, double y, const TerrainModel& terrain);

UavPath decode_candidate_to_path(const std::vector<double>& candidate,
                                 int n_interior, const Point3& start,
                                 const Point3& end);

/// F1: sum of consecutive waypoint distances.
double path_length_cost(const UavPath& path);

/// Distance from c to the closed segment [a, b] in the ground plane.
double point_segment_distance_2d(const Point2& c, const Point2& a, const Point2& b);

/// F2: per-segment, per-obstacle collision penalties; sets *feasible to
/// false when any segment enters an obstacle core.
double threat_cost(const UavPath& path, const std::vector<CylinderObstacle>& obstacles,
                   const ConstraintParams& params, bool* feasible = nullptr);

/// F3: altitude-corridor penalties per waypoint; h <= 0 is a sentinel.
double altitude_cost(const UavPath& path, const ConstraintParams& params,
                     bool* feasible = nullptr);

/// F4: weighted horizontal turn angles plus pitch-change magnitudes.
double turn_and_pitch_cost(const UavPath& path, const ConstraintParams& params);

} // namespace mcoa::uav

#endif // MCOA_UAV_HPP
