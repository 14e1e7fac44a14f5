#include "airslot/brute_force.hpp"

#include <stdexcept>
#include <vector>

namespace airslot {

namespace {

struct Enumerator {
  const Instance& instance;
  int m, n;
  std::vector<int> current;  // -1 = none
  std::vector<int> occ;
  ScaledValue weight_sum = 0;

  bool have_best = false;
  std::vector<int> best;
  ScaledValue best_objective = 0;

  explicit Enumerator(const Instance& inst)
      : instance(inst),
        m(inst.num_movements()),
        n(inst.num_slots()),
        current(inst.num_movements(), -1),
        occ(inst.num_slots(), 0) {}

  void run(int depth) {
    if (depth == m) {
      ScaledValue obj = weight_sum;
      for (int j = 0; j < n; ++j) {
        int over = occ[j] - instance.slots[j].threshold;
        if (over > 0) obj -= instance.scaled_g * over;
      }
      // Slots ascending then "none" is exactly ascending lexicographic
      // order, so keeping the first maximum yields the smallest vector.
      if (!have_best || obj > best_objective) {
        have_best = true;
        best = current;
        best_objective = obj;
      }
      return;
    }
    for (int j = 0; j < n; ++j) {
      if (occ[j] >= instance.slots[j].capacity) continue;
      current[depth] = j;
      ++occ[j];
      weight_sum += instance.scaled_weights.at(depth, j);
      run(depth + 1);
      weight_sum -= instance.scaled_weights.at(depth, j);
      --occ[j];
    }
    current[depth] = -1;
    run(depth + 1);
  }
};

}  // namespace

BruteForceResult brute_force_allocate(const Instance& instance) {
  const int m = instance.num_movements();
  const int n = instance.num_slots();
  double states = 1.0;
  for (int i = 0; i < m; ++i) {
    states *= n + 1;
    if (states > 1e6) throw std::invalid_argument("instance too large for enumeration");
  }

  Enumerator e(instance);
  e.run(0);

  BruteForceResult result;
  result.allocation = Allocation(m);
  if (e.have_best) {
    for (int i = 0; i < m; ++i)
      if (e.best[i] >= 0) result.allocation.slot_of[i] = e.best[i];
    result.scaled_objective = e.best_objective;
  }
  return result;
}

}  // namespace airslot
