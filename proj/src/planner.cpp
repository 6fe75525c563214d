#include "escape/planner.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <queue>
#include <string>

namespace escape {

namespace {

void validate_weights(const ClassWeights& w, const std::string& field)
{
  if (!(w.cardinal > 0.0))
    throw ConfigError(field, "cardinal weight must be > 0");
  if (!(w.diagonal >= w.cardinal && w.diagonal <= 2.0 * w.cardinal))
    throw ConfigError(field, "diagonal weight must lie in [d1, 2*d1]");
}

}  // namespace

void CostParams::validate() const
{
  validate_weights(good_road, "good_road");
  validate_weights(bad_road, "bad_road");
}

CostParams CostParams::scaled(double k) const
{
  return {{good_road.cardinal * k, good_road.diagonal * k}, {bad_road.cardinal * k, bad_road.diagonal * k}};
}

CostUnits to_units(double cost)
{
  return static_cast<CostUnits>(std::llround(cost * kCostScale));
}

double from_units(CostUnits units)
{
  return static_cast<double>(units) / kCostScale;
}

std::optional<CostUnits> step_cost_units(const GridMap& map, const CostParams& params, Cell to, MoveKind move)
{
  const Traversal t = effective_class(map, to);
  if (t == Traversal::Forbidden)
    return std::nullopt;
  const ClassWeights& w = params.weights(t);
  return to_units(move == MoveKind::Diagonal ? w.diagonal : w.cardinal);
}

std::optional<double> step_cost(const GridMap& map, const CostParams& params, Cell to, MoveKind move)
{
  if (auto u = step_cost_units(map, params, to, move))
    return from_units(*u);
  return std::nullopt;
}

CostUnits heuristic_units(Cell n, Cell goal, const GridMap& map, const CostParams& params)
{
  const CostUnits dx = std::abs(n.x - goal.x);
  const CostUnits dy = std::abs(n.y - goal.y);
  const ClassWeights& w = params.weights(effective_class(map, n));
  const CostUnits d1 = to_units(w.cardinal);
  const CostUnits d2 = to_units(w.diagonal);
  return d1 * std::max(dx, dy) + (d2 - d1) * std::min(dx, dy);
}

double heuristic(Cell n, Cell goal, const GridMap& map, const CostParams& params)
{
  return from_units(heuristic_units(n, goal, map, params));
}

void check_endpoints(const GridMap& map, Cell start, Cell goal)
{
  if (!map.in_bounds(start))
    throw ConfigError("start", "outside the map");
  if (!map.in_bounds(goal))
    throw ConfigError("goal", "outside the map");

  const auto check = [&](Cell c, Endpoint which, const char* name) {
    if (effective_class(map, c) != Traversal::Forbidden)
      return;
    const std::string why = map.hazard(c) != Hazard::None ? " inside hazard" : " not on a road";
    throw HazardAtEndpoint(which, name + why);
  };
  check(start, Endpoint::Start, "start");
  check(goal, Endpoint::Goal, "goal");
}

namespace {

struct FrontierEntry
{
  CostUnits f;
  CostUnits h;
  std::size_t index;
};

// std::priority_queue is a max-heap; this orders the smallest (f, h, index) on top.
struct FrontierOrder
{
  bool operator()(const FrontierEntry& a, const FrontierEntry& b) const
  {
    if (a.f != b.f)
      return a.f > b.f;
    if (a.h != b.h)
      return a.h > b.h;
    return a.index > b.index;
  }
};

}  // namespace

PlanResult plan(const GridMap& map, const CostParams& params, Cell start, Cell goal)
{
  check_endpoints(map, start, goal);

  const std::size_t n = static_cast<std::size_t>(map.width()) * map.height();
  constexpr CostUnits kUnreached = std::numeric_limits<CostUnits>::max();
  std::vector<CostUnits> g(n, kUnreached);
  std::vector<std::int64_t> parent(n, -1);
  std::vector<bool> closed(n, false);

  const auto cell_of = [&](std::size_t i) {
    return Cell{static_cast<int>(i % map.width()), static_cast<int>(i / map.width())};
  };

  std::priority_queue<FrontierEntry, std::vector<FrontierEntry>, FrontierOrder> open;
  const std::size_t start_i = map.index(start);
  const std::size_t goal_i = map.index(goal);
  g[start_i] = 0;
  const CostUnits h0 = heuristic_units(start, goal, map, params);
  open.push({h0, h0, start_i});

  long expanded = 0;
  while (!open.empty()) {
    const FrontierEntry top = open.top();
    open.pop();
    if (closed[top.index])
      continue;
    closed[top.index] = true;
    ++expanded;

    if (top.index == goal_i) {
      PlanResult result;
      result.expanded = expanded;
      result.total_cost = from_units(g[goal_i]);
      for (std::int64_t i = static_cast<std::int64_t>(goal_i); i >= 0; i = parent[i])
        result.path.push_back(cell_of(static_cast<std::size_t>(i)));
      std::reverse(result.path.begin(), result.path.end());
      return result;
    }

    const Cell here = cell_of(top.index);
    for (const auto& nb : neighbors8(map, here)) {
      const std::size_t ni = map.index(nb.cell);
      if (closed[ni])
        continue;
      const auto step = step_cost_units(map, params, nb.cell, nb.move);
      if (!step)
        continue;
      const CostUnits candidate = g[top.index] + *step;
      if (candidate >= g[ni])
        continue;
      g[ni] = candidate;
      parent[ni] = static_cast<std::int64_t>(top.index);
      const CostUnits h = heuristic_units(nb.cell, goal, map, params);
      open.push({candidate + h, h, ni});
    }
  }
  throw NoRouteFound(expanded);
}

std::optional<double> path_cost(const GridMap& map, const CostParams& params, const std::vector<Cell>& path)
{
  CostUnits total = 0;
  for (std::size_t i = 1; i < path.size(); ++i) {
    const int dx = std::abs(path[i].x - path[i - 1].x);
    const int dy = std::abs(path[i].y - path[i - 1].y);
    if (dx > 1 || dy > 1 || (dx == 0 && dy == 0) || !map.in_bounds(path[i]))
      return std::nullopt;
    const auto step =
        step_cost_units(map, params, path[i], (dx == 1 && dy == 1) ? MoveKind::Diagonal : MoveKind::Cardinal);
    if (!step)
      return std::nullopt;
    total += *step;
  }
  return from_units(total);
}

}  // namespace escape
