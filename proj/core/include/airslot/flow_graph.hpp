#pragma once

#include <vector>

#include "airslot/instance.hpp"
#include "airslot/types.hpp"

namespace airslot {

/// Bipartite b-matching instance the allocation problem reduces to.
///
/// Left side P holds the movements plus one spill node per slot; right
/// side Q holds the slots. Movement edges (i, j) carry the scaled weight
/// of assigning i to j; spill edges (t_j, j) carry the scaled congestion
/// cost and soak up the congestion-prone share of the slot's capacity.
/// Degree bounds: 1 per movement, C_j per slot, C_j - T_j per spill node.
struct FlowGraph {
  int num_movements = 0;
  int num_slots = 0;

  WeightMatrix movement_edge_weight;       // |E1| = m*n, row-major
  std::vector<ScaledValue> spill_edge_weight;  // |E2| = n, all equal scaled_g
  std::vector<int> slot_bound;             // b_j = C_j
  std::vector<int> spill_bound;            // b_{t_j} = C_j - T_j
  std::vector<int> slot_threshold;         // T_j, kept for evaluators

  int p_node_count() const { return num_movements + num_slots; }
  int q_node_count() const { return num_slots; }
  int e1_count() const { return num_movements * num_slots; }
  int e2_count() const { return num_slots; }
};

/// Deterministic construction ordered by (movement_id, slot_id).
FlowGraph build_bmatching_graph(const Instance& instance);

/// Integer edge weights of an optimal b-matching. Movement edges are 0/1
/// and recorded as the slot each movement's unit edge points at; spill
/// edges may carry several units.
struct BMatchingSolution {
  std::vector<std::optional<int>> movement_edge;  // y on E1
  std::vector<int> spill_edge;                    // y on E2, per slot
  ScaledValue objective = 0;                      // scaled b-matching value
};

/// Value an optimal b-matching must place on the spill edge of slot j:
/// C_j - occupancy_j when the slot is congested, C_j - T_j otherwise.
/// Used as a consistency assertion against the solver's actual edges.
/// Throws std::invalid_argument on an unknown slot or occupancy > C_j.
int spill_edge_weight_required(const FlowGraph& graph, const BMatchingSolution& solution, int slot);

}  // namespace airslot
