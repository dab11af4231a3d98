#pragma once

#include <span>
#include <vector>

#include "ersim/rng.hpp"
#include "ersim/topology.hpp"

namespace ersim {

struct WaypointNode {
  Vec2 position;
  Vec2 waypoint;
  double speed = 0.0;            // m/s
  double pause_remaining = 0.0;  // s
};

// Random waypoint state for every node of a run.
struct WaypointState {
  std::vector<WaypointNode> nodes;
};

struct WaypointModel {
  Arena arena;
  double pause_time = 0.0;  // s
  double v_max = 30.0;      // m/s; 0 freezes every node

  // Speeds are drawn uniformly from (min_speed_fraction * v_max, v_max].
  static constexpr double kMinSpeedFraction = 0.1;
};

// Every node starts paused at its position for one pause period, as in the
// classic setdest scenarios.
WaypointState initial_waypoint_state(std::span<const Vec2> positions, const WaypointModel& model);

// Advances all nodes by dt seconds. Paused nodes count down; when a pause
// expires the node draws a fresh waypoint and speed. Moving nodes advance
// speed * dt toward their waypoint and clamp on arrival, entering a pause.
WaypointState waypoint_step(WaypointState state, double dt, const WaypointModel& model, Rng& rng);

std::vector<Vec2> positions_of(const WaypointState& state);

}  // namespace ersim
