#include "airslot/allocator.hpp"

#include <sstream>
#include <stdexcept>

#include "ssp_engine.hpp"

namespace airslot {

namespace {

void check_allocation_shape(const Instance& instance, const Allocation& allocation) {
  if (allocation.num_movements() != instance.num_movements())
    throw std::invalid_argument("allocation size does not match the instance");
  for (const auto& s : allocation.slot_of)
    if (s && (*s < 0 || *s >= instance.num_slots())) {
      std::ostringstream e;
      e << "allocation references unknown slot id " << *s;
      throw std::invalid_argument(e.str());
    }
}

void check_capacities(const Instance& instance, const std::vector<int>& occ) {
  for (int j = 0; j < instance.num_slots(); ++j)
    if (occ[j] > instance.slots[j].capacity) {
      std::ostringstream e;
      e << "infeasible allocation: slot " << j << " holds " << occ[j] << " movements, capacity "
        << instance.slots[j].capacity;
      throw std::invalid_argument(e.str());
    }
}

}  // namespace

int congestion_level(const Instance& instance, const Allocation& allocation, int slot) {
  if (slot < 0 || slot >= instance.num_slots()) {
    std::ostringstream e;
    e << "unknown slot id " << slot;
    throw std::invalid_argument(e.str());
  }
  check_allocation_shape(instance, allocation);
  auto occ = allocation.occupancy(instance.num_slots());
  check_capacities(instance, occ);
  int over = occ[slot] - instance.slots[slot].threshold;
  return over > 0 ? over : 0;
}

ScaledValue scaled_objective_value(const Instance& instance, const Allocation& allocation) {
  check_allocation_shape(instance, allocation);
  auto occ = allocation.occupancy(instance.num_slots());
  check_capacities(instance, occ);

  ScaledValue total = 0;
  for (int i = 0; i < instance.num_movements(); ++i)
    if (allocation.slot_of[i]) total += instance.scaled_weights.at(i, *allocation.slot_of[i]);
  for (int j = 0; j < instance.num_slots(); ++j) {
    int over = occ[j] - instance.slots[j].threshold;
    if (over > 0) total -= instance.scaled_g * over;
  }
  return total;
}

double objective_value(const Instance& instance, const Allocation& allocation) {
  return static_cast<double>(scaled_objective_value(instance, allocation)) /
         static_cast<double>(instance.params.scale);
}

namespace {

SolveResult solve_impl(const Instance& instance, int skip_movement) {
  const FlowGraph graph = build_bmatching_graph(instance);
  const int m = graph.num_movements;
  const int n = graph.num_slots;

  detail::AssignmentProblem problem;
  problem.num_movements = m;
  problem.num_slots = n;
  problem.weights = graph.movement_edge_weight.data.data();
  problem.capacity = graph.slot_bound.data();
  problem.threshold = graph.slot_threshold.data();
  problem.congestion_cost = instance.scaled_g;

  std::vector<int> slot_of = detail::solve_assignment(problem, skip_movement);

  SolveResult result;
  result.allocation = Allocation(m);
  for (int i = 0; i < m; ++i)
    if (slot_of[i] >= 0) result.allocation.slot_of[i] = slot_of[i];

  // Movement edges mirror the allocation; spill edges take the value an
  // optimal b-matching must give them, then the whole solution is checked.
  result.matching.movement_edge = result.allocation.slot_of;
  result.matching.spill_edge.resize(n);
  ScaledValue matching_objective = 0;
  for (int i = 0; i < m; ++i)
    if (slot_of[i] >= 0) matching_objective += graph.movement_edge_weight.at(i, slot_of[i]);
  for (int j = 0; j < n; ++j) {
    result.matching.spill_edge[j] = spill_edge_weight_required(graph, result.matching, j);
    matching_objective += graph.spill_edge_weight[j] * result.matching.spill_edge[j];
  }
  result.matching.objective = matching_objective;

  // The matching and allocation objectives differ by the constant
  // scaled_g * sum_j (C_j - T_j); anything else is a solver defect.
  ScaledValue spill_capacity = 0;
  for (int j = 0; j < n; ++j) spill_capacity += graph.spill_bound[j];
  ScaledValue allocation_objective = scaled_objective_value(instance, result.allocation);
  if (matching_objective != allocation_objective + instance.scaled_g * spill_capacity)
    throw std::logic_error("b-matching and allocation objectives are inconsistent");

  return result;
}

}  // namespace

SolveResult solve_allocation(const Instance& instance) { return solve_impl(instance, -1); }

SolveResult solve_allocation_without(const Instance& instance, int skipped_movement) {
  if (skipped_movement < 0 || skipped_movement >= instance.num_movements())
    throw std::invalid_argument("invalid movement id");
  return solve_impl(instance, skipped_movement);
}

}  // namespace airslot
