#include "ersim/mobility.hpp"

#include <algorithm>
#include <cmath>

#include "ersim/error.hpp"

namespace ersim {

namespace {

void redraw(WaypointNode& node, const WaypointModel& model, Rng& rng) {
  node.waypoint = {rng.uniform(0.0, model.arena.width), rng.uniform(0.0, model.arena.height)};
  // uniform() is in [0, 1), so the speed lands in (0.1 v_max, v_max].
  node.speed = model.v_max - (1.0 - WaypointModel::kMinSpeedFraction) * model.v_max * rng.uniform();
}

}  // namespace

WaypointState initial_waypoint_state(std::span<const Vec2> positions,
                                     const WaypointModel& model) {
  WaypointState state;
  state.nodes.reserve(positions.size());
  for (Vec2 p : positions) {
    state.nodes.push_back(
        {.position = p, .waypoint = p, .speed = 0.0, .pause_remaining = model.pause_time});
  }
  return state;
}

WaypointState waypoint_step(WaypointState state, double dt, const WaypointModel& model,
                            Rng& rng) {
  if (!(dt > 0.0)) throw Error(ErrorCode::kInvalidArgument, "waypoint_step: dt must be > 0");
  if (model.v_max <= 0.0) return state;

  for (auto& node : state.nodes) {
    if (node.speed <= 0.0 || node.pause_remaining > 0.0) {
      node.pause_remaining = std::max(0.0, node.pause_remaining - dt);
      if (node.pause_remaining == 0.0) redraw(node, model, rng);
      continue;
    }
    const double dx = node.waypoint.x - node.position.x;
    const double dy = node.waypoint.y - node.position.y;
    const double remaining = std::hypot(dx, dy);
    const double travel = node.speed * dt;
    if (travel >= remaining) {
      node.position = node.waypoint;
      node.pause_remaining = model.pause_time;
      if (model.pause_time == 0.0) redraw(node, model, rng);
    } else {
      node.position.x += dx / remaining * travel;
      node.position.y += dy / remaining * travel;
      // Guard against rounding pushing a coordinate a hair outside the arena.
      node.position.x = std::clamp(node.position.x, 0.0, model.arena.width);
      node.position.y = std::clamp(node.position.y, 0.0, model.arena.height);
    }
  }
  return state;
}

std::vector<Vec2> positions_of(const WaypointState& state) {
  std::vector<Vec2> out;
  out.reserve(state.nodes.size());
  for (const auto& n : state.nodes) out.push_back(n.position);
  return out;
}

}  // namespace ersim
