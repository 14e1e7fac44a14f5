#include "airslot/flow_graph.hpp"

#include <sstream>
#include <stdexcept>

namespace airslot {

FlowGraph build_bmatching_graph(const Instance& instance) {
  FlowGraph g;
  g.num_movements = instance.num_movements();
  g.num_slots = instance.num_slots();
  g.movement_edge_weight = instance.scaled_weights;
  g.spill_edge_weight.assign(g.num_slots, instance.scaled_g);
  g.slot_bound.resize(g.num_slots);
  g.spill_bound.resize(g.num_slots);
  g.slot_threshold.resize(g.num_slots);
  for (int j = 0; j < g.num_slots; ++j) {
    const Slot& s = instance.slots[j];
    g.slot_bound[j] = s.capacity;
    g.spill_bound[j] = s.capacity - s.threshold;
    g.slot_threshold[j] = s.threshold;
  }
  return g;
}

int spill_edge_weight_required(const FlowGraph& graph, const BMatchingSolution& solution,
                               int slot) {
  if (slot < 0 || slot >= graph.num_slots) {
    std::ostringstream e;
    e << "unknown slot id " << slot;
    throw std::invalid_argument(e.str());
  }
  int occupancy = 0;
  for (const auto& edge : solution.movement_edge)
    if (edge && *edge == slot) ++occupancy;
  const int capacity = graph.slot_bound[slot];
  const int threshold = capacity - graph.spill_bound[slot];
  if (occupancy > capacity) {
    std::ostringstream e;
    e << "solution is infeasible at slot " << slot << ": occupancy " << occupancy << " > capacity "
      << capacity;
    throw std::invalid_argument(e.str());
  }
  return occupancy > threshold ? capacity - occupancy : graph.spill_bound[slot];
}

}  // namespace airslot
