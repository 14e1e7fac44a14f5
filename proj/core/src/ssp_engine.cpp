#include "ssp_engine.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace airslot::detail {

namespace {

constexpr ScaledValue kInf = std::numeric_limits<ScaledValue>::max() / 4;

struct Search {
  std::vector<ScaledValue> label;
  std::vector<int> parent_node;  // preceding slot, -1 = entry arc, -2 = unset
  std::vector<int> parent_via;   // movement carried by the arc into this node
  std::vector<char> done;
};

}  // namespace

std::vector<int> solve_assignment(const AssignmentProblem& problem, int skip_movement) {
  const int m = problem.num_movements;
  const int n = problem.num_slots;
  const ScaledValue g = problem.congestion_cost;
  if (g < 0) throw std::invalid_argument("solve_assignment: negative congestion cost");

  std::vector<int> slot_of(m, -1);
  if (m == 0 || n == 0) return slot_of;

  auto weight = [&](int i, int j) -> ScaledValue {
    return problem.weights[static_cast<std::size_t>(i) * n + j];
  };

  // Pool of unassigned movements, ascending id.
  std::vector<int> pool;
  pool.reserve(m);
  for (int i = 0; i < m; ++i)
    if (i != skip_movement) pool.push_back(i);

  // Best entry per slot over the pool: highest weight, lowest id on ties.
  std::vector<ScaledValue> entry_weight(n, 0);
  std::vector<int> entry_movement(n, -1);
  auto rescan_entry = [&](int j) {
    entry_movement[j] = -1;
    for (int i : pool) {
      if (entry_movement[j] == -1 || weight(i, j) > entry_weight[j]) {
        entry_weight[j] = weight(i, j);
        entry_movement[j] = i;
      }
    }
  };
  for (int j = 0; j < n; ++j) rescan_entry(j);

  std::vector<std::vector<int>> members(n);  // assigned movements per slot, ascending id
  std::vector<int> occ(n, 0);

  const int kSink = n;
  std::vector<ScaledValue> pi(n + 1, 0);
  Search s;
  s.label.assign(n + 1, 0);
  s.parent_node.assign(n + 1, -2);
  s.parent_via.assign(n + 1, -1);
  s.done.assign(n + 1, 0);

  auto tier_cost = [&](int j) -> ScaledValue {
    // Marginal cost of one more unit leaving slot j to the sink.
    return occ[j] < problem.threshold[j] ? 0 : g;
  };

  for (;;) {
    if (pool.empty()) break;

    std::fill(s.done.begin(), s.done.end(), 0);
    std::fill(s.parent_node.begin(), s.parent_node.end(), -2);
    for (int j = 0; j < n; ++j) {
      if (entry_movement[j] >= 0) {
        s.label[j] = -entry_weight[j] - pi[j];
        s.parent_node[j] = -1;
        s.parent_via[j] = entry_movement[j];
      } else {
        s.label[j] = kInf;
      }
    }
    s.label[kSink] = kInf;

    for (int round = 0; round <= n; ++round) {
      int u = -1;
      ScaledValue best = kInf;
      for (int v = 0; v <= n; ++v)
        if (!s.done[v] && s.label[v] < best) {
          best = s.label[v];
          u = v;
        }
      if (u == -1) break;
      s.done[u] = 1;
      if (u == kSink) continue;  // arcs out of the sink are never on an s-t path

      // Reassignment arcs: a movement in u can vacate toward any slot.
      for (int q : members[u]) {
        const ScaledValue w_here = weight(q, u);
        for (int b = 0; b < n; ++b) {
          if (b == u || s.done[b]) continue;
          ScaledValue cand = s.label[u] + (w_here - weight(q, b)) + pi[u] - pi[b];
          if (cand < s.label[b]) {
            s.label[b] = cand;
            s.parent_node[b] = u;
            s.parent_via[b] = q;
          }
        }
      }
      // Capacity tier arc into the sink.
      if (occ[u] < problem.capacity[u] && !s.done[kSink]) {
        ScaledValue cand = s.label[u] + tier_cost(u) + pi[u] - pi[kSink];
        if (cand < s.label[kSink]) {
          s.label[kSink] = cand;
          s.parent_node[kSink] = u;
          s.parent_via[kSink] = -1;
        }
      }
    }

    if (s.label[kSink] >= kInf) break;
    const ScaledValue true_cost = s.label[kSink] + pi[kSink];
    if (true_cost >= 0) break;  // best augmenting path no longer gains

    // Collect the path before touching state: sink <- slots <- entry.
    struct Hop {
      int to_slot;
      int movement;  // -1 on the entry hop placeholder
    };
    std::vector<Hop> hops;
    int cur = s.parent_node[kSink];
    while (s.parent_node[cur] != -1) {
      hops.push_back({cur, s.parent_via[cur]});
      cur = s.parent_node[cur];
    }
    const int entry_slot = cur;
    const int entry_mv = s.parent_via[cur];
    assert(entry_mv >= 0);

    // Potentials: shift by the capped labels so all reduced costs stay
    // non-negative for the next search.
    const ScaledValue cap = s.label[kSink];
    for (int v = 0; v <= n; ++v) pi[v] += std::min(s.label[v], cap);

    // Apply: assign the entry movement, then replay moves entry-to-sink.
    auto insert_member = [&](int j, int q) {
      auto& v = members[j];
      v.insert(std::lower_bound(v.begin(), v.end(), q), q);
      ++occ[j];
    };
    auto erase_member = [&](int j, int q) {
      auto& v = members[j];
      v.erase(std::lower_bound(v.begin(), v.end(), q));
      --occ[j];
    };

    insert_member(entry_slot, entry_mv);
    slot_of[entry_mv] = entry_slot;
    int from = entry_slot;
    for (auto it = hops.rbegin(); it != hops.rend(); ++it) {
      erase_member(from, it->movement);
      insert_member(it->to_slot, it->movement);
      slot_of[it->movement] = it->to_slot;
      from = it->to_slot;
    }

    pool.erase(std::lower_bound(pool.begin(), pool.end(), entry_mv));
    for (int j = 0; j < n; ++j)
      if (entry_movement[j] == entry_mv) rescan_entry(j);

#ifndef NDEBUG
    // Reduced-cost feasibility of every arc the next search may use.
    for (int a = 0; a < n; ++a) {
      for (int q : members[a])
        for (int b = 0; b < n; ++b)
          assert(weight(q, a) - weight(q, b) + pi[a] - pi[b] >= 0);
      if (occ[a] < problem.capacity[a]) assert(tier_cost(a) + pi[a] - pi[kSink] >= 0);
    }
#endif
  }

  return slot_of;
}

}  // namespace airslot::detail
