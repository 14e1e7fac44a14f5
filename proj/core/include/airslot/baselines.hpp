#pragma once

#include <optional>
#include <string>
#include <vector>

#include "airslot/instance.hpp"
#include "airslot/types.hpp"

namespace airslot {

/// Evaluation of a fixed, externally supplied assignment under the
/// mechanism's objective. Infeasibility is reported, never clipped: the
/// objective is still the formula value and the violating slots are listed.
struct FixedEvalReport {
  double social_utility = 0.0;
  ScaledValue scaled_objective = 0;
  bool feasible = true;
  std::vector<int> overloaded_slots;
};

FixedEvalReport evaluate_fixed_allocation(const Instance& instance, const Allocation& given);

/// Displacement-minimising allocation: assigns movements to slots to
/// minimise sum |assigned_i - requested_i|, charging `rejection_penalty`
/// (default: the number of slots, worse than any displacement) for each
/// movement left out. Solved exactly as a min-cost assignment under the
/// slot capacities; deterministic tie-break as in the allocator.
Allocation displacement_minimizing_allocate(const Instance& instance,
                                            std::optional<int> rejection_penalty = std::nullopt);

/// Total displacement + rejection cost of an allocation, the objective of
/// displacement_minimizing_allocate.
std::int64_t displacement_cost(const Instance& instance, const Allocation& allocation,
                               std::optional<int> rejection_penalty = std::nullopt);

struct ComparisonRow {
  std::string scenario;
  double g = 0.0;
  double mechanism_social_utility = 0.0;
  double current_social_utility = 0.0;
  double iata_social_utility = 0.0;
  std::optional<double> improvement_vs_current_pct;  // absent when |base| = 0
  std::optional<double> improvement_vs_iata_pct;
  bool current_feasible = true;
};

/// All methods are evaluated under the same congestion-aware objective at
/// each g; the displacement baseline itself does not depend on g.
struct ComparisonReport {
  std::vector<ComparisonRow> rows;
};

ComparisonReport compare(const Instance& instance, const Allocation& current,
                         const std::vector<double>& g_sweep,
                         const std::string& scenario_name = "scenario");

}  // namespace airslot
