#pragma once

#include <vector>

#include "airslot/flow_graph.hpp"
#include "airslot/instance.hpp"
#include "airslot/types.hpp"

namespace airslot {

/// Movements in slot j beyond its congestion-free threshold:
/// max(occupancy_j - T_j, 0). Throws std::invalid_argument on an unknown
/// slot id or an infeasible allocation.
int congestion_level(const Instance& instance, const Allocation& allocation, int slot);

/// Objective of an allocation on the scaled integer weights:
///   sum_ij w_ij x_ij - scaled_g * sum_j max(occ_j - T_j, 0).
/// Throws std::invalid_argument if the allocation violates a slot
/// capacity or references an unknown slot.
ScaledValue scaled_objective_value(const Instance& instance, const Allocation& allocation);

/// Social welfare in INR: the scaled objective divided by the fixed-point
/// scale. Equal to MechanismResult::social_utility for the mechanism's
/// own allocation.
double objective_value(const Instance& instance, const Allocation& allocation);

struct SolveResult {
  Allocation allocation;
  BMatchingSolution matching;
};

/// Optimal allocation of the affine-maximizer program, computed as a
/// maximum-weight b-matching by successive shortest augmenting paths on
/// the flow network of `build_bmatching_graph`. Augments only while the
/// best augmenting path has strictly positive gain; path selection is
/// deterministic, ordered by (movement_id, slot_id), so re-runs return
/// the identical optimum. Feasibility, integrality and the prescribed
/// spill-edge weights are checked on every solve.
SolveResult solve_allocation(const Instance& instance);

/// Same optimisation with one movement removed from the instance. The
/// payment rule calls this once per movement.
SolveResult solve_allocation_without(const Instance& instance, int skipped_movement);

}  // namespace airslot
