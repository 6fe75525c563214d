#include "escape/sim.hpp"

#include <algorithm>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

#include "escape/png_io.hpp"

namespace escape {

const char* to_string(Outcome::Kind k)
{
  switch (k) {
    case Outcome::Kind::Escaped: return "Escaped";
    case Outcome::Kind::Trapped: return "Trapped";
    case Outcome::Kind::Overrun: return "Overrun";
    case Outcome::Kind::TimedOut: return "TimedOut";
  }
  return "?";
}

namespace {

// Adopts a fresh plan from the evacuee's cell. Returns false when no route
// exists, in which case the state is marked Trapped.
bool adopt_plan(SimState& state, const Scenario& scenario)
{
  try {
    PlanResult p = plan(state.map, scenario.cost_params, state.evacuee, scenario.goal);
    state.route = std::move(p.path);
    state.route_pos = 0;
    state.route_cost = state.walked + to_units(p.total_cost);
    state.routes.push_back({state.tick, state.route, from_units(*state.route_cost)});
    return true;
  } catch (const HazardAtEndpoint&) {
  } catch (const NoRouteFound&) {
  }
  state.route.clear();
  state.route_pos = 0;
  state.route_cost.reset();
  state.outcome = Outcome{Outcome::Kind::Trapped, state.tick};
  return false;
}

bool route_blocked(const SimState& state)
{
  for (std::size_t i = state.route_pos + 1; i < state.route.size(); ++i) {
    if (effective_class(state.map, state.route[i]) == Traversal::Forbidden)
      return true;
  }
  return false;
}

}  // namespace

SimState initial_state(const Scenario& scenario, GridMap map)
{
  if (!map.in_bounds(scenario.start))
    throw ConfigError("/start", "outside the map");
  if (!map.in_bounds(scenario.goal))
    throw ConfigError("/goal", "outside the map");

  SimState state{std::move(map), merge_fires(scenario.initial_fires), {}, scenario.start, {}, 0, 0, {}, 0, {}, {}};
  rasterize_fire_inplace(state.fires, state.map);

  if (effective_class(state.map, state.evacuee) == Traversal::Forbidden) {
    state.outcome = Outcome{Outcome::Kind::Overrun, 0};
    return state;
  }
  if (!adopt_plan(state, scenario))
    return state;
  if (state.evacuee == scenario.goal)
    state.outcome = Outcome{Outcome::Kind::Escaped, 0};
  return state;
}

TickRecord snapshot_record(const SimState& state, bool replanned)
{
  TickRecord r;
  r.tick = state.tick;
  r.fire_cells = state.map.count(Hazard::Fire);
  r.smoke_cells = state.map.count(Hazard::Smoke);
  r.replanned = replanned;
  if (state.route_cost)
    r.route_cost = from_units(*state.route_cost);
  return r;
}

TickRecord tick(SimState& state, const Scenario& scenario, Rng& rng)
{
  if (state.outcome)
    throw Error("tick called on a finished simulation");
  ++state.tick;

  // weather
  const Weather& weather = scenario.weather_at(state.tick);

  // fire motion, growth and merging
  for (auto& f : state.fires)
    f = grow_fire(advect_fire(f, weather, scenario.fire_params, 1.0), scenario.fire_params, 1.0);
  state.fires = merge_fires(std::move(state.fires));

  // probabilistic spread onto nearby roads
  for (const auto& f : state.fires) {
    for (const Cell c : spread_mask(f, state.map, weather, scenario.fire_params, rng))
      state.map.set_hazard(c, Hazard::Fire);
  }

  // discs
  rasterize_fire_inplace(state.fires, state.map);

  // smoke
  state.smoke = advect_smoke(std::move(state.smoke), weather, scenario.smoke_params, 1);
  for (const auto& f : state.fires) {
    auto fresh = emit_smoke(f, scenario.smoke_params, weather, rng);
    state.smoke.insert(state.smoke.end(), fresh.begin(), fresh.end());
  }
  rasterize_smoke_inplace(state.smoke, state.map);

  // evacuee
  if (effective_class(state.map, state.evacuee) == Traversal::Forbidden) {
    state.outcome = Outcome{Outcome::Kind::Overrun, state.tick};
    return snapshot_record(state, false);
  }
  for (int step = 0; step < scenario.evacuee_speed && state.route_pos + 1 < state.route.size(); ++step) {
    const Cell next = state.route[state.route_pos + 1];
    const bool diagonal = next.x != state.evacuee.x && next.y != state.evacuee.y;
    const auto cost =
        step_cost_units(state.map, scenario.cost_params, next, diagonal ? MoveKind::Diagonal : MoveKind::Cardinal);
    if (!cost)
      break;
    state.walked += *cost;
    ++state.route_pos;
    state.evacuee = next;
  }
  if (state.evacuee == scenario.goal) {
    state.outcome = Outcome{Outcome::Kind::Escaped, state.tick};
    return snapshot_record(state, false);
  }

  // replan on invalidation
  bool replanned = false;
  if (route_blocked(state)) {
    replanned = true;
    if (!adopt_plan(state, scenario))
      return snapshot_record(state, true);
  }

  if (state.tick >= scenario.ticks)
    state.outcome = Outcome{Outcome::Kind::TimedOut, state.tick};
  return snapshot_record(state, replanned);
}

SimReport run(const Scenario& scenario, GridMap map, const FrameSink& frames)
{
  scenario.validate();
  Rng rng(scenario.seed);
  SimState state = initial_state(scenario, std::move(map));

  SimReport report;
  report.scenario_sha256 = scenario.source_sha256;
  report.seed = scenario.seed;
  report.ticks.push_back(snapshot_record(state, false));
  if (frames)
    frames(0, state);

  while (!state.outcome) {
    report.ticks.push_back(tick(state, scenario, rng));
    if (frames)
      frames(state.tick, state);
  }

  report.outcome = *state.outcome;
  if (state.route_cost)
    report.final_cost = from_units(*state.route_cost);
  report.replans = static_cast<int>(std::count_if(report.ticks.begin(), report.ticks.end(),
                                                  [](const TickRecord& r) { return r.replanned; }));
  return report;
}

SimReport run(const Scenario& scenario, const FrameSink& frames)
{
  scenario.validate();
  return run(scenario, load_map(read_png(scenario.map)), frames);
}

RgbImage render_frame(const SimState& state, const Scenario& scenario)
{
  std::vector<Cell> remaining;
  if (state.route_pos < state.route.size())
    remaining.assign(state.route.begin() + static_cast<std::ptrdiff_t>(state.route_pos), state.route.end());
  return render(state.map, remaining, Markers{scenario.start, scenario.goal});
}

std::string report_json(const SimReport& report)
{
  nlohmann::ordered_json j;
  j["scenario_sha256"] = report.scenario_sha256;
  j["seed"] = report.seed;
  j["outcome"] = {{"kind", to_string(report.outcome.kind)}, {"tick", report.outcome.tick}};
  j["final_cost"] = report.final_cost ? nlohmann::ordered_json(*report.final_cost) : nlohmann::ordered_json();
  j["replans"] = report.replans;
  auto& ticks = j["ticks"] = nlohmann::ordered_json::array();
  for (const auto& r : report.ticks) {
    ticks.push_back({{"tick", r.tick},
                     {"fire_cells", r.fire_cells},
                     {"smoke_cells", r.smoke_cells},
                     {"replanned", r.replanned},
                     {"route_cost", r.route_cost ? nlohmann::ordered_json(*r.route_cost) : nlohmann::ordered_json()}});
  }
  return j.dump(2) + "\n";
}

std::string report_csv(const SimReport& report)
{
  std::string out = "tick,fire_cells,smoke_cells,replanned,route_cost\n";
  for (const auto& r : report.ticks) {
    out += fmt::format("{},{},{},{},{}\n", r.tick, r.fire_cells, r.smoke_cells, r.replanned ? 1 : 0,
                       r.route_cost ? fmt::format("{}", *r.route_cost) : std::string());
  }
  return out;
}

}  // namespace escape
