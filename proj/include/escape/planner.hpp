#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "escape/worldmap.hpp"

namespace escape {

/// Step weights for one road class: d1 per axis-aligned step, d2 per diagonal.
struct ClassWeights
{
  double cardinal = 1.0;
  double diagonal = 1.4;

  friend bool operator==(const ClassWeights&, const ClassWeights&) = default;
};

struct CostParams
{
  ClassWeights good_road{1.0, 1.4};
  ClassWeights bad_road{100.0, 140.0};

  /// d1 > 0 and d1 <= d2 <= 2 d1 for each class. Throws ConfigError.
  void validate() const;

  const ClassWeights& weights(Traversal t) const { return t == Traversal::BadRoad ? bad_road : good_road; }
  CostParams scaled(double k) const;
};

/// Costs are accumulated in integer micro-units so that sums are exact and
/// independent of summation order. Weights are rounded to the nearest 1e-6.
using CostUnits = std::int64_t;
inline constexpr double kCostScale = 1e6;

CostUnits to_units(double cost);
double from_units(CostUnits units);

struct PlanResult
{
  std::vector<Cell> path;   ///< start..goal inclusive
  double total_cost = 0.0;  ///< sum of step costs; equals f at the goal
  long expanded = 0;        ///< nodes popped from the frontier
};

/// Cost of stepping onto `to`, keyed on its effective class. nullopt means
/// the cell may not be entered.
std::optional<CostUnits> step_cost_units(const GridMap& map, const CostParams& params, Cell to, MoveKind move);
std::optional<double> step_cost(const GridMap& map, const CostParams& params, Cell to, MoveKind move);

/// Weighted diagonal distance d1*max(dx,dy) + (d2-d1)*min(dx,dy), using the
/// weight pair of n's own class. Forbidden cells use the good-road pair.
CostUnits heuristic_units(Cell n, Cell goal, const GridMap& map, const CostParams& params);
double heuristic(Cell n, Cell goal, const GridMap& map, const CostParams& params);

/// Throws ConfigError for out-of-bounds endpoints and HazardAtEndpoint when
/// either endpoint is not enterable. Start is checked first.
void check_endpoints(const GridMap& map, Cell start, Cell goal);

/// Best-first search on f = g + h over the 8-connected grid. Ties on f go to
/// the smaller h, then to the row-major smaller cell. Closed cells are never
/// reopened, so with the bad-road weights (which overestimate on mixed
/// maps) the result may be suboptimal.
///
/// Throws HazardAtEndpoint or NoRouteFound.
PlanResult plan(const GridMap& map, const CostParams& params, Cell start, Cell goal);

/// Sum of step costs along `path`; nullopt if any step is not between
/// 8-neighbors or enters a forbidden cell.
std::optional<double> path_cost(const GridMap& map, const CostParams& params, const std::vector<Cell>& path);

}  // namespace escape
