#include "escape/oracle.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <utility>

namespace escape {

PlanResult dijkstra_reference(const GridMap& map, const CostParams& params, Cell start, Cell goal)
{
  check_endpoints(map, start, goal);

  const int w = map.width();
  const std::size_t n = static_cast<std::size_t>(w) * map.height();
  constexpr CostUnits kInf = std::numeric_limits<CostUnits>::max();
  std::vector<CostUnits> dist(n, kInf);
  std::vector<std::size_t> prev(n, n);
  std::vector<bool> done(n, false);

  // ordered set doubles as a decrease-key queue: (g, row-major index)
  std::set<std::pair<CostUnits, std::size_t>> frontier;
  const std::size_t s = map.index(start);
  const std::size_t t = map.index(goal);
  dist[s] = 0;
  frontier.emplace(0, s);

  long settled = 0;
  while (!frontier.empty()) {
    const auto [d, u] = *frontier.begin();
    frontier.erase(frontier.begin());
    done[u] = true;
    ++settled;
    if (u == t)
      break;

    const Cell cu{static_cast<int>(u % w), static_cast<int>(u / w)};
    for (const auto& nb : neighbors8(map, cu)) {
      const std::size_t v = map.index(nb.cell);
      if (done[v])
        continue;
      const auto step = step_cost_units(map, params, nb.cell, nb.move);
      if (!step)
        continue;
      if (d + *step < dist[v]) {
        if (dist[v] != kInf)
          frontier.erase({dist[v], v});
        dist[v] = d + *step;
        prev[v] = u;
        frontier.emplace(dist[v], v);
      }
    }
  }

  if (!done[t])
    throw NoRouteFound(settled);

  PlanResult result;
  result.expanded = settled;
  result.total_cost = from_units(dist[t]);
  for (std::size_t v = t; v != n; v = prev[v])
    result.path.push_back({static_cast<int>(v % w), static_cast<int>(v / w)});
  std::reverse(result.path.begin(), result.path.end());
  return result;
}

}  // namespace escape
