#pragma once

#include "airslot/instance.hpp"
#include "airslot/types.hpp"

namespace airslot {

struct BruteForceResult {
  Allocation allocation;
  ScaledValue scaled_objective = 0;
};

/// Enumeration oracle: tries every assignment of each movement to a slot
/// or to none, keeps feasible ones, and returns the maximiser of the
/// scaled objective. Ties break toward the lexicographically smallest
/// assignment vector ordered by movement id, slots ascending with
/// "unassigned" greatest.
///
/// Independent of the flow solver by design: the objective is accumulated
/// inline during enumeration. Guarded by (n+1)^m <= 10^6; beyond that it
/// throws std::invalid_argument.
BruteForceResult brute_force_allocate(const Instance& instance);

}  // namespace airslot
