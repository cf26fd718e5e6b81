#include "mcoa/uav.hpp"

#include <cmath>
#include <doctest.h>

using namespace mcoa;
using namespace mcoa::uav;

TEST_CASE("terrain base height")
{
    CHECK(terrain_base_height(0.0, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(terrain_base_height(M_PI / 2.0, 0.0) == doctest::Approx(3.0).epsilon(1e-9));

    // |2 cos x + 2 sin x| <= 2*sqrt(2), |sin r + cos r| <= sqrt(2)
    RngStream rng(5);
    const double bound = 3.0 * std::sqrt(2.0) + 1e-9;
    for (int i = 0; i < 1000; ++i)
        CHECK(std::fabs(terrain_base_height(rng.uniform(-1000, 1000),
                                            rng.uniform(-1000, 1000))) <= bound);
}

TEST_CASE("slope height")
{
    TerrainModel empty;
    CHECK(slope_height(3.0, 4.0, empty) == 0.0);

    TerrainModel one;
    one.slopes.push_back({150.0, 400.0, 500.0, 30.0, 30.0});
    CHECK(slope_height(400.0, 500.0, one) == doctest::Approx(150.0).epsilon(1e-12));
    CHECK(slope_height(430.0, 500.0, one) ==
          doctest::Approx(150.0 * std::exp(-1.0)).epsilon(1e-12));
}

TEST_CASE("candidate decoding round trip")
{
    const Point3 start{150, 150, 50};
    const Point3 end{900, 720, 150};
    const std::vector<double> cand{500, 400, 100};
    const auto path = decode_candidate_to_path(cand, 1, start, end);
    REQUIRE(path.waypoints.size() == 3);
    CHECK(path.waypoints.front() == start);
    CHECK(path.waypoints[1] == Point3{500, 400, 100});
    CHECK(path.waypoints.back() == end);

    CHECK_THROWS_AS(decode_candidate_to_path(cand, 2, start, end),
                    std::invalid_argument);
    CHECK_THROWS_AS(decode_candidate_to_path(cand, 0, start, end),
                    std::invalid_argument);
}

TEST_CASE("path length cost")
{
    UavPath straight{{{0, 0, 0}, {3, 4, 0}}};
    CHECK(path_length_cost(straight) == doctest::Approx(5.0).epsilon(1e-15));

    UavPath collinear{{{0, 0, 0}, {1, 1, 1}, {2, 2, 2}}};
    CHECK(path_length_cost(collinear) ==
          doctest::Approx(2.0 * std::sqrt(3.0)).epsilon(1e-12));

    // triangle inequality against the endpoint distance
    RngStream rng(3);
    for (int i = 0; i < 200; ++i) {
        UavPath p;
        for (int j = 0; j < 4; ++j)
            p.waypoints.push_back({rng.uniform(0, 1000), rng.uniform(0, 1000),
                                   rng.uniform(0, 200)});
        const auto& a = p.waypoints.front();
        const auto& b = p.waypoints.back();
        const double direct = std::sqrt((b[0] - a[0]) * (b[0] - a[0]) +
                                        (b[1] - a[1]) * (b[1] - a[1]) +
                                        (b[2] - a[2]) * (b[2] - a[2]));
        CHECK(path_length_cost(p) >= direct - 1e-9);
    }
}

TEST_CASE("point-segment distance in the plane")
{
    CHECK(point_segment_distance_2d({0, 1}, {-1, 0}, {1, 0}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(point_segment_distance_2d({2, 0}, {-1, 0}, {1, 0}) ==
          doctest::Approx(1.0).epsilon(1e-15));
    CHECK(point_segment_distance_2d({0.5, 0}, {-1, 0}, {1, 0}) ==
          doctest::Approx(0.0).epsilon(1e-15));
    // degenerate segment
    CHECK(point_segment_distance_2d({3, 4}, {0, 0}, {0, 0}) ==
          doctest::Approx(5.0).epsilon(1e-15));
}

TEST_CASE("threat cost branches")
{
    ConstraintParams params;
    std::vector<CylinderObstacle> obstacles{{0.0, 0.0, 150.0, 30.0}};

    SUBCASE("far segment costs nothing")
    {
        UavPath p{{{500, 500, 100}, {600, 600, 100}}};
        CHECK(threat_cost(p, obstacles, params) == 0.0);
    }
    SUBCASE("core hit pays the sentinel")
    {
        UavPath p{{{-100, 0, 100}, {100, 0, 100}}};
        bool feasible = true;
        CHECK(threat_cost(p, obstacles, params, &feasible) ==
              params.infeasible_cost);
        CHECK_FALSE(feasible);
    }
    SUBCASE("boundary d_k == R_k is a core hit")
    {
        UavPath p{{{-100, 30, 100}, {100, 30, 100}}};
        CHECK(threat_cost(p, obstacles, params) == params.infeasible_cost);
    }
    SUBCASE("buffer zone pays the linear penalty")
    {
        // d = 40, R = 30, D = 20, penalty = 10: 10 * (50 - 40) = 100
        UavPath p{{{-100, 40, 100}, {100, 40, 100}}};
        bool feasible = false;
        CHECK(threat_cost(p, obstacles, params, &feasible) ==
              doctest::Approx(100.0).epsilon(1e-12));
        CHECK(feasible);
    }
    SUBCASE("continuity across the outer boundary")
    {
        UavPath just_out{{{-100, 50.0 + 1e-9, 100}, {100, 50.0 + 1e-9, 100}}};
        UavPath just_in{{{-100, 50.0 - 1e-9, 100}, {100, 50.0 - 1e-9, 100}}};
        CHECK(threat_cost(just_out, obstacles, params) == 0.0);
        CHECK(threat_cost(just_in, obstacles, params) ==
              doctest::Approx(0.0).epsilon(1e-6));
    }
}

TEST_CASE("altitude cost branches")
{
    ConstraintParams params;
    params.penalty = 2.0;

    SUBCASE("inside the corridor costs nothing")
    {
        UavPath p{{{0, 0, 50}, {10, 0, 100}, {20, 0, 199.9}}};
        CHECK(altitude_cost(p, params) == 0.0);
    }
    SUBCASE("above the ceiling")
    {
        UavPath p{{{0, 0, 50}, {10, 0, 205}}};
        CHECK(altitude_cost(p, params) == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("below the floor")
    {
        UavPath p{{{0, 0, 50}, {10, 0, 15}}};
        CHECK(altitude_cost(p, params) == doctest::Approx(10.0).epsilon(1e-12));
    }
    SUBCASE("non-positive altitude is a sentinel")
    {
        UavPath p{{{0, 0, 50}, {10, 0, -1}}};
        bool feasible = true;
        CHECK(altitude_cost(p, params, &feasible) == params.infeasible_cost);
        CHECK_FALSE(feasible);
    }
    SUBCASE("continuity at the corridor boundaries")
    {
        UavPath at_max{{{0, 0, params.h_max}}};
        UavPath at_min{{{0, 0, params.h_min}}};
        CHECK(altitude_cost(at_max, params) == 0.0);
        CHECK(altitude_cost(at_min, params) == 0.0);
    }
}

TEST_CASE("turn and pitch cost")
{
    ConstraintParams params;

    SUBCASE("collinear level path costs nothing")
    {
        UavPath p{{{0, 0, 100}, {10, 0, 100}, {20, 0, 100}}};
        CHECK(turn_and_pitch_cost(p, params) == 0.0);
    }
    SUBCASE("right-angle turn")
    {
        UavPath p{{{0, 0, 100}, {10, 0, 100}, {10, 10, 100}}};
        CHECK(turn_and_pitch_cost(p, params) ==
              doctest::Approx(M_PI / 2.0).epsilon(1e-12));
    }
    SUBCASE("level then a 45-degree climb")
    {
        UavPath p{{{0, 0, 100}, {10, 0, 100}, {20, 0, 110}}};
        // pitch changes from 0 to atan(1), no horizontal turn
        CHECK(turn_and_pitch_cost(p, params) ==
              doctest::Approx(M_PI / 4.0).epsilon(1e-12));
    }
    SUBCASE("first climb is measured against level flight")
    {
        UavPath p{{{0, 0, 100}, {10, 0, 110}, {20, 0, 120}}};
        // beta_0 = 0, both segments climb at atan(1)... only the first
        // deviation is charged
        CHECK(turn_and_pitch_cost(p, params) ==
              doctest::Approx(std::atan(1.0)).epsilon(1e-12));
    }
    SUBCASE("vertical segment contributes no angle")
    {
        UavPath p{{{0, 0, 100}, {0, 0, 150}, {10, 0, 150}}};
        CHECK(std::isfinite(turn_and_pitch_cost(p, params)));
    }
}

TEST_CASE("total cost composition")
{
    UavScenario scenario = UavScenario::benchmark_default();
    scenario.n_interior = 1;

    SUBCASE("equal-weight averaging")
    {
        // a straight, level-ish feasible corridor: total = F1 / 4
        UavScenario clear = scenario;
        clear.obstacles.clear();
        clear.start = {0, 0, 100};
        clear.end = {100, 0, 100};
        const std::vector<double> cand{50, 0, 100};
        const auto cb = clear.cost_breakdown(cand);
        CHECK(cb.threat == 0.0);
        CHECK(cb.altitude == 0.0);
        CHECK(cb.angle == 0.0);
        CHECK(cb.total == doctest::Approx(cb.length / 4.0).epsilon(1e-12));
        CHECK(cb.feasible);
    }
    SUBCASE("sentinel dominates a core crossing")
    {
        // interior waypoint inside obstacle 1 at (400, 500)
        const std::vector<double> cand{400, 500, 100};
        const auto cb = scenario.cost_breakdown(cand);
        CHECK(cb.total >= scenario.params.infeasible_cost / 4.0);
        CHECK_FALSE(cb.feasible);
    }
}

TEST_CASE("threat cost matches a dense-sampling distance oracle")
{
    // 3-waypoint paths against a single obstacle
    ConstraintParams params;
    RngStream rng(2024);
    for (int rep = 0; rep < 50; ++rep) {
        std::vector<CylinderObstacle> obstacles{
            {rng.uniform(100, 900), rng.uniform(100, 900), 150.0,
             rng.uniform(20, 90)}};
        UavPath p;
        for (int j = 0; j < 3; ++j)
            p.waypoints.push_back({rng.uniform(0, 1000), rng.uniform(0, 1000),
                                   rng.uniform(50, 150)});

        double oracle = 0.0;
        for (int s = 0; s < 2; ++s) {
            const auto& a = p.waypoints[s];
            const auto& b = p.waypoints[s + 1];
            double dmin = std::numeric_limits<double>::infinity();
            const int steps = 200000;
            for (int k = 0; k <= steps; ++k) {
                const double t = static_cast<double>(k) / steps;
                const double x = a[0] + t * (b[0] - a[0]);
                const double y = a[1] + t * (b[1] - a[1]);
                dmin = std::min(dmin, std::hypot(x - obstacles[0].x,
                                                 y - obstacles[0].y));
            }
            const auto& obs = obstacles[0];
            if (dmin >= params.collision_margin + obs.radius)
                continue;
            if (dmin <= obs.radius)
                oracle += params.infeasible_cost;
            else
                oracle += params.penalty *
                          (params.collision_margin + obs.radius - dmin);
        }
        CHECK(threat_cost(p, obstacles, params) ==
              doctest::Approx(oracle).epsilon(1e-4));
    }
}

TEST_CASE("scenario JSON round trip")
{
    const auto original = UavScenario::benchmark_default();
    const auto parsed = UavScenario::from_json(original.to_json());
    CHECK(parsed.start == original.start);
    CHECK(parsed.end == original.end);
    CHECK(parsed.n_interior == original.n_interior);
    REQUIRE(parsed.obstacles.size() == original.obstacles.size());
    for (std::size_t i = 0; i < parsed.obstacles.size(); ++i) {
        CHECK(parsed.obstacles[i].x == original.obstacles[i].x);
        CHECK(parsed.obstacles[i].radius == original.obstacles[i].radius);
    }
    CHECK(parsed.params.collision_margin == original.params.collision_margin);

    // same objective values
    const auto space = original.search_space();
    RngStream rng(6);
    for (int rep = 0; rep < 10; ++rep) {
        std::vector<double> cand;
        for (std::size_t j = 0; j < space.dim(); ++j)
            cand.push_back(rng.uniform(space.lower[j], space.upper[j]));
        CHECK(original.total_cost(cand) == parsed.total_cost(cand));
    }
}

TEST_CASE("benchmark scenario matches the ten-peak table")
{
    const auto s = UavScenario::benchmark_default();
    REQUIRE(s.obstacles.size() == 10);
    CHECK(s.obstacles[0].x == 400.0);
    CHECK(s.obstacles[0].y == 500.0);
    CHECK(s.obstacles[0].radius == 30.0);
    CHECK(s.obstacles[8].x == 920.0);
    CHECK(s.obstacles[8].radius == 90.0);
    CHECK(s.start == Point3{150, 150, 50});
    CHECK(s.end == Point3{900, 720, 150});
    REQUIRE(s.terrain.slopes.size() == 10);
    CHECK(s.terrain.slopes[1].ax == 50.0);
}
