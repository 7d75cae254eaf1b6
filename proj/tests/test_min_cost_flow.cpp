#include <doctest.h>

#include <random>

#include "mwb/min_cost_flow.hpp"
#include "support/test_support.hpp"

using namespace mwb;
using mwb::testing::brute_force_flow;

namespace {

void check_conservation(const FlowNetwork& net, const FlowResult& r) {
  std::vector<Flow> balance(net.num_nodes, 0);
  std::int64_t cost = 0;
  for (std::size_t a = 0; a < net.arcs.size(); ++a) {
    CHECK(r.flow[a] >= net.arcs[a].lower);
    CHECK(r.flow[a] <= net.arcs[a].capacity);
    balance[net.arcs[a].from] -= r.flow[a];
    balance[net.arcs[a].to] += r.flow[a];
    cost += r.flow[a] * net.arcs[a].cost;
  }
  CHECK(cost == r.cost);
  for (int v = 0; v < net.num_nodes; ++v)
    if (v != net.source && v != net.sink) CHECK(balance[v] == 0);
  CHECK(-balance[net.source] == r.value);
  if (net.required_flow) CHECK(r.value == *net.required_flow);
}

}  // namespace

TEST_CASE("single arcs") {
  FlowNetwork net;
  net.source = net.add_node();
  net.sink = net.add_node();
  net.required_flow = 1;
  net.add_arc(0, 1, 1, 1, 5);
  auto r = min_cost_flow_lb(net);
  REQUIRE(r.has_value());
  CHECK(r->cost == 5);

  FlowNetwork bad = net;
  bad.arcs[0].capacity = 0;
  CHECK_THROWS_AS(min_cost_flow_lb(bad), std::invalid_argument);

  FlowNetwork negative = net;
  negative.arcs[0].cost = -1;
  CHECK_THROWS_AS(min_cost_flow_lb(negative), std::invalid_argument);
}

TEST_CASE("lower bound forces a detour") {
  // s -> a -> t cheap, s -> b -> t expensive but b -> t must carry one unit.
  FlowNetwork net;
  int s = net.add_node(), a = net.add_node(), b = net.add_node(), t = net.add_node();
  net.source = s;
  net.sink = t;
  net.required_flow = 2;
  net.add_arc(s, a, 0, 2, 1);
  net.add_arc(a, t, 0, 2, 1);
  net.add_arc(s, b, 0, 2, 5);
  net.add_arc(b, t, 1, 2, 0);
  auto r = min_cost_flow_lb(net);
  REQUIRE(r.has_value());
  CHECK(r->cost == 7);
  check_conservation(net, *r);
}

TEST_CASE("unreachable lower bound is infeasible") {
  FlowNetwork net;
  int s = net.add_node(), t = net.add_node(), x = net.add_node();
  net.source = s;
  net.sink = t;
  net.required_flow = 1;
  net.add_arc(s, t, 0, 1, 0);
  net.add_arc(x, t, 1, 1, 0);
  CHECK_FALSE(min_cost_flow_lb(net).has_value());
}

TEST_CASE("random networks agree with brute force") {
  std::mt19937_64 gen(99);
  int checked = 0, feasible = 0;
  for (int round = 0; round < 400; ++round) {
    FlowNetwork net;
    int nodes = 2 + static_cast<int>(gen() % 5);
    for (int i = 0; i < nodes; ++i) net.add_node();
    net.source = 0;
    net.sink = nodes - 1;
    int arcs = 1 + static_cast<int>(gen() % 6);
    for (int i = 0; i < arcs; ++i) {
      int from = static_cast<int>(gen() % nodes), to = static_cast<int>(gen() % nodes);
      if (from == to) continue;
      Flow cap = static_cast<Flow>(gen() % 3);
      Flow lower = gen() % 4 == 0 ? std::min<Flow>(cap, 1) : 0;
      net.add_arc(from, to, lower, cap, static_cast<std::int64_t>(gen() % 5));
    }
    if (gen() % 2) net.required_flow = static_cast<Flow>(gen() % 3);
    auto want = brute_force_flow(net, 2);
    auto got = min_cost_flow_lb(net);
    ++checked;
    REQUIRE(got.has_value() == want.has_value());
    if (!got) continue;
    ++feasible;
    CHECK(got->cost == *want);
    check_conservation(net, *got);
  }
  CHECK(checked == 400);
  CHECK(feasible > 100);
}
