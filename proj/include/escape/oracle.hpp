#pragma once

#include "escape/planner.hpp"

namespace escape {

/// Uniform-cost search over the same step costs as plan(), no heuristic.
/// Exhaustive, so total_cost is optimal. Same error contract as plan().
PlanResult dijkstra_reference(const GridMap& map, const CostParams& params, Cell start, Cell goal);

}  // namespace escape
