#include "airslot/baselines.hpp"

#include <cmath>

#include "airslot/allocator.hpp"
#include "airslot/rng.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace airslot;
using airslot::test::make_weighted_instance;

namespace {

/// Enumeration oracle for the displacement objective.
std::int64_t min_displacement_cost(const Instance& instance, int d_rej) {
  const int m = instance.num_movements();
  const int n = instance.num_slots();
  std::vector<int> occ(n, 0);
  std::int64_t best = -1;
  std::vector<int> choice(m, -1);
  auto rec = [&](auto&& self, int depth, std::int64_t cost) -> void {
    if (depth == m) {
      if (best < 0 || cost < best) best = cost;
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (occ[j] >= instance.slots[j].capacity) continue;
      ++occ[j];
      self(self, depth + 1, cost + std::abs(j - instance.movements[depth].requested_slot));
      --occ[j];
    }
    self(self, depth + 1, cost + d_rej);
  };
  rec(rec, 0, 0);
  return best;
}

Instance with_requests(Instance instance, const std::vector<int>& requested) {
  for (std::size_t i = 0; i < requested.size(); ++i)
    instance.movements[i].requested_slot = requested[i];
  return instance;
}

}  // namespace

TEST_CASE("fixed allocations are evaluated, not clipped") {
  Instance instance = make_weighted_instance(2, {1, 2}, 0.5, 10.0, {{30.0, 20.0}, {25.0, 5.0}});

  SUBCASE("empty assignment scores zero") {
    FixedEvalReport r = evaluate_fixed_allocation(instance, Allocation(2));
    CHECK(r.social_utility == doctest::Approx(0.0));
    CHECK(r.feasible);
  }
  SUBCASE("the mechanism's own output scores its social utility") {
    SolveResult solved = solve_allocation(instance);
    FixedEvalReport r = evaluate_fixed_allocation(instance, solved.allocation);
    CHECK(r.scaled_objective == scaled_objective_value(instance, solved.allocation));
    CHECK(r.feasible);
  }
  SUBCASE("overloaded slots are listed") {
    Allocation bad(2);
    bad.slot_of[0] = 0;
    bad.slot_of[1] = 0;  // slot 0 has capacity 1
    FixedEvalReport r = evaluate_fixed_allocation(instance, bad);
    CHECK(!r.feasible);
    REQUIRE(r.overloaded_slots.size() == 1);
    CHECK(r.overloaded_slots[0] == 0);
  }
}

TEST_CASE("displacement baseline") {
  SUBCASE("requests within capacity are honoured verbatim") {
    Instance instance = make_weighted_instance(3, {1, 1, 1}, 0.2, 0.0,
                                               {{1.0, 1.0, 1.0}, {1.0, 1.0, 1.0}});
    instance = with_requests(instance, {2, 0});
    Allocation a = displacement_minimizing_allocate(instance);
    CHECK(*a.slot_of[0] == 2);
    CHECK(*a.slot_of[1] == 0);
    CHECK(displacement_cost(instance, a) == 0);
  }
  SUBCASE("contention displaces exactly one movement by one slot") {
    Instance instance =
        make_weighted_instance(2, {1, 1}, 0.2, 0.0, {{1.0, 1.0}, {1.0, 1.0}});
    instance = with_requests(instance, {0, 0});
    Allocation a = displacement_minimizing_allocate(instance);
    CHECK(a.assigned_count() == 2);
    CHECK(displacement_cost(instance, a) == 1);
  }
  SUBCASE("movements beyond total capacity are rejected at the penalty") {
    Instance instance = make_weighted_instance(1, {1}, 0.2, 0.0, {{1.0}, {1.0}, {1.0}});
    instance = with_requests(instance, {0, 0, 0});
    Allocation a = displacement_minimizing_allocate(instance);
    CHECK(a.assigned_count() == 1);
    // Two rejections at D_rej = n = 1 each.
    CHECK(displacement_cost(instance, a) == 2);
    // The evaluator prices a fully rejected schedule at m * D_rej.
    CHECK(displacement_cost(instance, Allocation(3)) == 3);
  }
  SUBCASE("matches the enumeration minimum on random instances") {
    SplitMix64 rng(424242);
    for (int t = 0; t < 120; ++t) {
      Instance instance = test::random_instance(rng);
      Allocation a = displacement_minimizing_allocate(instance);
      CHECK(displacement_cost(instance, a) ==
            min_displacement_cost(instance, instance.num_slots()));
    }
  }
}

TEST_CASE("comparison report") {
  Instance instance = make_weighted_instance(
      2, {1, 2}, 0.5, 10.0, {{300.0, 200.0}, {250.0, 50.0}, {40.0, 90.0}});

  SUBCASE("current equal to the optimum gives a 0% row") {
    SolveResult solved = solve_allocation(instance);
    ComparisonReport report = compare(instance, solved.allocation, {instance.params.g});
    REQUIRE(report.rows.size() == 1);
    REQUIRE(report.rows[0].improvement_vs_current_pct.has_value());
    CHECK(*report.rows[0].improvement_vs_current_pct == doctest::Approx(0.0));
  }
  SUBCASE("the mechanism dominates both baselines at every g") {
    SplitMix64 rng(515151);
    for (int t = 0; t < 40; ++t) {
      Instance random = test::random_instance(rng);
      // Any feasible fixed assignment will do as "current".
      Allocation current = displacement_minimizing_allocate(random);
      ComparisonReport report = compare(random, current, {0.0, 20.0, 500.0});
      for (const auto& row : report.rows) {
        CHECK(row.mechanism_social_utility >= row.current_social_utility - 1e-9);
        CHECK(row.mechanism_social_utility >= row.iata_social_utility - 1e-9);
      }
    }
  }
  SUBCASE("mechanism column is non-increasing in g") {
    Allocation current(3);
    ComparisonReport report = compare(instance, current, {0.0, 15.0, 40.0, 200.0});
    for (std::size_t r = 1; r < report.rows.size(); ++r)
      CHECK(report.rows[r].mechanism_social_utility <=
            report.rows[r - 1].mechanism_social_utility + 1e-12);
  }
  SUBCASE("non-positive baselines are reported without a percentage") {
    Allocation current(3);  // empty current: baseline social utility 0
    ComparisonReport report = compare(instance, current, {10.0});
    CHECK(!report.rows[0].improvement_vs_current_pct.has_value());
  }
  SUBCASE("reports are deterministic") {
    Allocation current = displacement_minimizing_allocate(instance);
    ComparisonReport a = compare(instance, current, {0.0, 10.0});
    ComparisonReport b = compare(instance, current, {0.0, 10.0});
    REQUIRE(a.rows.size() == b.rows.size());
    for (std::size_t r = 0; r < a.rows.size(); ++r) {
      CHECK(a.rows[r].mechanism_social_utility == b.rows[r].mechanism_social_utility);
      CHECK(a.rows[r].current_social_utility == b.rows[r].current_social_utility);
      CHECK(a.rows[r].iata_social_utility == b.rows[r].iata_social_utility);
    }
  }
}
