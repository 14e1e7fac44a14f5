#include "airslot/baselines.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <stdexcept>

#include "airslot/allocator.hpp"
#include "ssp_engine.hpp"

namespace airslot {

FixedEvalReport evaluate_fixed_allocation(const Instance& instance, const Allocation& given) {
  if (given.num_movements() != instance.num_movements())
    throw std::invalid_argument("assignment size does not match the instance");
  for (const auto& s : given.slot_of)
    if (s && (*s < 0 || *s >= instance.num_slots())) {
      std::ostringstream e;
      e << "assignment references unknown slot id " << *s;
      throw std::invalid_argument(e.str());
    }

  FixedEvalReport report;
  auto occ = given.occupancy(instance.num_slots());
  ScaledValue total = 0;
  for (int i = 0; i < instance.num_movements(); ++i)
    if (given.slot_of[i]) total += instance.scaled_weights.at(i, *given.slot_of[i]);
  for (int j = 0; j < instance.num_slots(); ++j) {
    int over = occ[j] - instance.slots[j].threshold;
    if (over > 0) total -= instance.scaled_g * over;
    if (occ[j] > instance.slots[j].capacity) {
      report.feasible = false;
      report.overloaded_slots.push_back(j);
    }
  }
  report.scaled_objective = total;
  report.social_utility = static_cast<double>(total) / static_cast<double>(instance.params.scale);
  return report;
}

namespace {

int resolve_rejection_penalty(const Instance& instance, std::optional<int> rejection_penalty) {
  int d_rej = rejection_penalty.value_or(instance.num_slots());
  if (d_rej < 0) throw std::invalid_argument("rejection penalty must be non-negative");
  return d_rej;
}

}  // namespace

Allocation displacement_minimizing_allocate(const Instance& instance,
                                            std::optional<int> rejection_penalty) {
  const int m = instance.num_movements();
  const int n = instance.num_slots();
  const int d_rej = resolve_rejection_penalty(instance, rejection_penalty);

  // Minimising displacement with a per-rejection charge is the same
  // assignment problem with profit d_rej - |slot - requested| per edge
  // and no congestion tier; profits stay positive, so capacity is the
  // only thing that forces rejections.
  WeightMatrix profit(m, n);
  for (int i = 0; i < m; ++i) {
    int requested = instance.movements[i].requested_slot;
    for (int j = 0; j < n; ++j) profit.at(i, j) = d_rej - std::abs(j - requested);
  }
  std::vector<int> capacity(n), threshold(n);
  for (int j = 0; j < n; ++j) capacity[j] = threshold[j] = instance.slots[j].capacity;

  detail::AssignmentProblem problem;
  problem.num_movements = m;
  problem.num_slots = n;
  problem.weights = profit.data.data();
  problem.capacity = capacity.data();
  problem.threshold = threshold.data();
  problem.congestion_cost = 0;

  std::vector<int> slot_of = detail::solve_assignment(problem);
  Allocation allocation(m);
  for (int i = 0; i < m; ++i)
    if (slot_of[i] >= 0) allocation.slot_of[i] = slot_of[i];
  return allocation;
}

std::int64_t displacement_cost(const Instance& instance, const Allocation& allocation,
                               std::optional<int> rejection_penalty) {
  if (allocation.num_movements() != instance.num_movements())
    throw std::invalid_argument("allocation size does not match the instance");
  const int d_rej = resolve_rejection_penalty(instance, rejection_penalty);
  std::int64_t cost = 0;
  for (int i = 0; i < instance.num_movements(); ++i) {
    if (allocation.slot_of[i])
      cost += std::abs(*allocation.slot_of[i] - instance.movements[i].requested_slot);
    else
      cost += d_rej;
  }
  return cost;
}

ComparisonReport compare(const Instance& instance, const Allocation& current,
                         const std::vector<double>& g_sweep, const std::string& scenario_name) {
  ComparisonReport report;
  const Allocation iata = displacement_minimizing_allocate(instance);

  for (double g : g_sweep) {
    Instance at_g = instance.with_g(g);
    SolveResult mech = solve_allocation(at_g);

    ComparisonRow row;
    row.scenario = scenario_name;
    row.g = g;
    row.mechanism_social_utility = objective_value(at_g, mech.allocation);
    FixedEvalReport current_eval = evaluate_fixed_allocation(at_g, current);
    FixedEvalReport iata_eval = evaluate_fixed_allocation(at_g, iata);
    row.current_social_utility = current_eval.social_utility;
    row.iata_social_utility = iata_eval.social_utility;
    row.current_feasible = current_eval.feasible;

    // Rows with non-positive baseline utility get no percentage.
    auto improvement = [&](double base) -> std::optional<double> {
      if (base <= 0.0) return std::nullopt;
      return (row.mechanism_social_utility - base) / std::abs(base) * 100.0;
    };
    row.improvement_vs_current_pct = improvement(row.current_social_utility);
    row.improvement_vs_iata_pct = improvement(row.iata_social_utility);
    report.rows.push_back(std::move(row));
  }
  return report;
}

}  // namespace airslot
