#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace mwb {

using Flow = std::int64_t;

inline constexpr Flow kUnboundedCapacity = std::numeric_limits<Flow>::max() / 8;

struct FlowArc {
  int from = 0;
  int to = 0;
  Flow lower = 0;
  Flow capacity = 0;
  std::int64_t cost = 0;  // must be >= 0
};

// Directed network with per-arc lower bounds. When `required_flow` is set, the s-t flow value is
// exactly that; otherwise the s-t value is free (a min-cost circulation with a free t->s return).
struct FlowNetwork {
  int num_nodes = 0;
  int source = 0;
  int sink = 0;
  std::optional<Flow> required_flow;
  std::vector<FlowArc> arcs;

  int add_node() { return num_nodes++; }
  int add_arc(int from, int to, Flow lower, Flow capacity, std::int64_t cost) {
    arcs.push_back({from, to, lower, capacity, cost});
    return static_cast<int>(arcs.size()) - 1;
  }
};

struct FlowResult {
  std::vector<Flow> flow;  // per arc, same order as FlowNetwork::arcs
  std::int64_t cost = 0;
  Flow value = 0;          // net flow out of the source
};

// Minimum-cost feasible flow respecting lower bounds and capacities, or nullopt if none exists.
// Throws std::invalid_argument on negative costs or lower > capacity.
std::optional<FlowResult> min_cost_flow_lb(const FlowNetwork& net);

}  // namespace mwb
