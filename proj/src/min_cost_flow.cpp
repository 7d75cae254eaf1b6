#include "mwb/min_cost_flow.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <stdexcept>

namespace mwb {

namespace {

// Successive shortest paths with Dijkstra on reduced costs. All input costs are nonnegative, so
// zero potentials are valid at the start.
class Residual {
 public:
  explicit Residual(int n) : head_(n, -1) {}

  int add(int from, int to, Flow cap, std::int64_t cost) {
    int id = static_cast<int>(to_.size());
    push(from, to, cap, cost);
    push(to, from, 0, -cost);
    return id;
  }

  Flow flow_on(int id) const { return cap_[id ^ 1]; }

  // Pushes as much as possible from s to t (up to `limit`) along cheapest paths.
  std::pair<Flow, std::int64_t> run(int s, int t, Flow limit) {
    int n = static_cast<int>(head_.size());
    std::vector<std::int64_t> potential(n, 0), dist(n);
    std::vector<int> via(n);
    Flow total = 0;
    std::int64_t cost = 0;
    constexpr std::int64_t kFar = std::numeric_limits<std::int64_t>::max() / 4;
    using Item = std::pair<std::int64_t, int>;
    while (total < limit) {
      std::fill(dist.begin(), dist.end(), kFar);
      std::fill(via.begin(), via.end(), -1);
      std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
      dist[s] = 0;
      queue.push({0, s});
      while (!queue.empty()) {
        auto [d, u] = queue.top();
        queue.pop();
        if (d != dist[u]) continue;
        for (int a = head_[u]; a >= 0; a = next_[a]) {
          if (cap_[a] <= 0) continue;
          int w = to_[a];
          std::int64_t nd = d + cost_[a] + potential[u] - potential[w];
          if (nd < dist[w]) {
            dist[w] = nd;
            via[w] = a;
            queue.push({nd, w});
          }
        }
      }
      if (dist[t] >= kFar) break;
      for (int u = 0; u < n; ++u)
        if (dist[u] < kFar) potential[u] += dist[u];
      Flow push = limit - total;
      for (int u = t; u != s; u = to_[via[u] ^ 1]) push = std::min(push, cap_[via[u]]);
      for (int u = t; u != s; u = to_[via[u] ^ 1]) {
        cap_[via[u]] -= push;
        cap_[via[u] ^ 1] += push;
        cost += push * cost_[via[u]];
      }
      total += push;
    }
    return {total, cost};
  }

 private:
  void push(int from, int to, Flow cap, std::int64_t cost) {
    to_.push_back(to);
    cap_.push_back(cap);
    cost_.push_back(cost);
    next_.push_back(head_[from]);
    head_[from] = static_cast<int>(to_.size()) - 1;
  }

  std::vector<int> head_, to_, next_;
  std::vector<Flow> cap_;
  std::vector<std::int64_t> cost_;
};

}  // namespace

std::optional<FlowResult> min_cost_flow_lb(const FlowNetwork& net) {
  int n = net.num_nodes;
  int super_source = n, super_sink = n + 1;
  Residual g(n + 2);
  std::vector<Flow> excess(n, 0);
  std::int64_t base_cost = 0;
  std::vector<int> ids;
  ids.reserve(net.arcs.size());
  for (const auto& a : net.arcs) {
    if (a.cost < 0) throw std::invalid_argument("negative arc cost");
    if (a.lower < 0 || a.lower > a.capacity)
      throw std::invalid_argument("arc lower bound outside [0, capacity]");
    ids.push_back(g.add(a.from, a.to, a.capacity - a.lower, a.cost));
    excess[a.to] += a.lower;
    excess[a.from] -= a.lower;
    base_cost += a.lower * a.cost;
  }
  // Return arc t->s closes the s-t flow into a circulation.
  int back = -1;
  if (net.required_flow) {
    excess[net.source] += *net.required_flow;
    excess[net.sink] -= *net.required_flow;
  } else {
    back = g.add(net.sink, net.source, kUnboundedCapacity, 0);
  }
  Flow demand = 0;
  for (int v = 0; v < n; ++v) {
    if (excess[v] > 0) {
      g.add(super_source, v, excess[v], 0);
      demand += excess[v];
    } else if (excess[v] < 0) {
      g.add(v, super_sink, -excess[v], 0);
    }
  }
  auto [pushed, cost] = g.run(super_source, super_sink, demand);
  if (pushed < demand) return std::nullopt;

  FlowResult out;
  out.cost = base_cost + cost;
  out.flow.resize(net.arcs.size());
  for (std::size_t i = 0; i < net.arcs.size(); ++i) out.flow[i] = net.arcs[i].lower + g.flow_on(ids[i]);
  if (net.required_flow) {
    out.value = *net.required_flow;
  } else {
    out.value = g.flow_on(back);
  }
  return out;
}

}  // namespace mwb
