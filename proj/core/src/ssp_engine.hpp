#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "airslot/types.hpp"

namespace airslot::detail {

/// Maximum-weight assignment of unit-demand movements to capacitated
/// slots with a convex two-tier occupancy cost: the first `threshold[j]`
/// movements in slot j are free, each further one up to `capacity[j]`
/// costs `congestion_cost`. This is the flow form of the b-matching the
/// allocation problem reduces to; the spill edges appear here as the
/// priced tier of each slot's capacity.
struct AssignmentProblem {
  int num_movements = 0;
  int num_slots = 0;
  const ScaledValue* weights = nullptr;  // row-major m*n, all >= 0
  const int* capacity = nullptr;
  const int* threshold = nullptr;        // 0 <= threshold[j] <= capacity[j]
  ScaledValue congestion_cost = 0;       // >= 0
};

/// Successive shortest augmenting paths with Dijkstra over slot nodes and
/// node potentials. Each iteration augments along the best path (max
/// gain) and stops as soon as that gain is no longer strictly positive,
/// so the returned flow is the global optimum and zero-gain assignments
/// are never made. Deterministic: entry movements are chosen by lowest
/// id among maximisers, Dijkstra breaks label ties by node index, and
/// relaxations require strict improvement.
///
/// Returns slot_of (-1 = unassigned). `skip_movement` removes one
/// movement from the problem, which the payment rule uses.
std::vector<int> solve_assignment(const AssignmentProblem& problem, int skip_movement = -1);

}  // namespace airslot::detail
