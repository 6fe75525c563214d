#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "escape/scenario.hpp"

namespace escape {

struct Outcome
{
  enum class Kind { Escaped, Trapped, Overrun, TimedOut };

  Kind kind = Kind::TimedOut;
  int tick = 0;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

const char* to_string(Outcome::Kind k);

struct TickRecord
{
  int tick = 0;
  std::size_t fire_cells = 0;
  std::size_t smoke_cells = 0;
  bool replanned = false;
  /// Walked cost plus the planned remainder; nullopt when no route exists.
  std::optional<double> route_cost;

  friend bool operator==(const TickRecord&, const TickRecord&) = default;
};

/// A route as produced by the planner, kept for auditing.
struct RouteEvent
{
  int tick = 0;
  std::vector<Cell> path;
  double cost = 0.0;
};

struct SimState
{
  GridMap map;
  std::vector<FireSource> fires;
  std::vector<SmokeParticle> smoke;
  Cell evacuee;
  /// Current route; route[route_pos] is the evacuee's cell.
  std::vector<Cell> route;
  std::size_t route_pos = 0;
  CostUnits walked = 0;
  std::optional<CostUnits> route_cost;
  int tick = 0;
  std::optional<Outcome> outcome;
  std::vector<RouteEvent> routes;
};

/// Builds the tick-0 state: stamps the merged initial fires, plans the
/// first route and resolves immediate outcomes (start == goal, start in a
/// hazard, no route).
SimState initial_state(const Scenario& scenario, GridMap map);

/// Advances one tick. Order: weather, fire advect+grow, merge, spread,
/// fire raster, smoke advect+emit+raster, evacuee move, route check and
/// replan, outcome. Hazards move first, so the evacuee only ever steps onto
/// cells that are enterable after this tick's hazard update.
TickRecord tick(SimState& state, const Scenario& scenario, Rng& rng);

TickRecord snapshot_record(const SimState& state, bool replanned);

struct SimReport
{
  std::string scenario_sha256;
  std::uint64_t seed = 0;
  std::vector<TickRecord> ticks;
  Outcome outcome;
  std::optional<double> final_cost;
  int replans = 0;
};

/// Called once for tick 0 and once after every tick.
using FrameSink = std::function<void(int tick, const SimState& state)>;

/// Loads the scenario map, then ticks until an outcome or the tick budget
/// runs out (TimedOut). Throws MapIoError / ConfigError before tick 0.
SimReport run(const Scenario& scenario, const FrameSink& frames = {});
SimReport run(const Scenario& scenario, GridMap map, const FrameSink& frames = {});

/// Map with the remaining route and start/goal markers drawn.
RgbImage render_frame(const SimState& state, const Scenario& scenario);

std::string report_json(const SimReport& report);
std::string report_csv(const SimReport& report);

}  // namespace escape
