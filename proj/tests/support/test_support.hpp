#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <random>
#include <string>
#include <vector>

#include "mwb/format.hpp"
#include "mwb/generators.hpp"
#include "mwb/instance.hpp"
#include "mwb/min_cost_flow.hpp"
#include "mwb/rules.hpp"

namespace mwb::testing {

inline constexpr const char* kE0Text = R"(candidates: a b c p
k: 2
voter v1: a b c
voter v2: b c
voter v3: a
voter v4: a b
voter v5: a b
voter v6: a c
voter v7: b c p
voter v8: a
voter v9: a
)";

inline Election e0() { return parse_election(kE0Text).election; }

inline BriberyInstance e0_instance(OpKind op, int k = 2, Cost budget = kUnboundedBudget) {
  BriberyInstance inst;
  inst.election = e0();
  inst.p = 3;
  inst.k = k;
  inst.budget = budget;
  inst.op = op;
  return inst;
}

struct RandomShape {
  int min_m = 2, max_m = 6;
  int min_n = 1, max_n = 6;
  int max_price = 3;
  OpKind op = OpKind::Add;
  bool priced = false;
  bool restricted = false;
  double forbid = 0.0;
};

// Seeded instance with unbounded budget; m, n, k, p and the approval density are drawn too.
inline BriberyInstance random_instance(std::uint64_t seed, const RandomShape& shape) {
  std::mt19937_64 gen(seed * 0x9E3779B97F4A7C15ULL + 17);
  auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
  int m = pick(shape.min_m, shape.max_m);
  int n = pick(shape.min_n, shape.max_n);
  double prob = std::array<double, 4>{0.25, 0.4, 0.5, 0.7}[pick(0, 3)];
  BriberyInstance inst;
  inst.election = gen_random_election(m, n, prob, gen());
  if (shape.priced) inst.prices = gen_random_prices(inst.election, shape.max_price, gen(), shape.forbid);
  // Mostly a weak p and a committee smaller than m, so that few instances are already solved.
  inst.k = pick(1, std::max(1, m - 1));
  inst.p = pick(0, m - 1);
  if (pick(0, 9) < 8) {
    auto scores = av_scores(inst.election);
    int low = *std::min_element(scores.begin(), scores.end());
    std::vector<CandidateIndex> weakest;
    for (int c = 0; c < m; ++c)
      if (scores[c] == low) weakest.push_back(c);
    inst.p = weakest[pick(0, static_cast<int>(weakest.size()) - 1)];
  }
  inst.budget = kUnboundedBudget;
  inst.op = shape.op;
  inst.priced = shape.priced;
  inst.restricted_to_p = shape.restricted;
  return inst;
}

inline BriberyInstance with_budget(BriberyInstance inst, Cost budget) {
  inst.budget = budget;
  return inst;
}

// Dijkstra over whole elections, one atomic action per edge. Independent of the oracle module's
// per-voter decomposition; only for tiny instances.
inline std::optional<Cost> naive_margin(const BriberyInstance& inst, Rule rule) {
  const Election& start = inst.election;
  int m = start.num_candidates(), n = start.num_voters();
  auto encode = [&](const Election& e) {
    std::uint64_t key = 0;
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < m; ++c)
        if (e.approves(v, c)) key |= std::uint64_t{1} << (v * m + c);
    return key;
  };
  std::map<std::uint64_t, Cost> dist;
  using Item = std::pair<Cost, std::uint64_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::map<std::uint64_t, Election> states;
  auto push = [&](const Election& e, Cost d) {
    auto key = encode(e);
    auto it = dist.find(key);
    if (it != dist.end() && it->second <= d) return;
    dist[key] = d;
    states[key] = e;
    queue.push({d, key});
  };
  push(start, 0);
  while (!queue.empty()) {
    auto [d, key] = queue.top();
    queue.pop();
    if (dist[key] != d) continue;
    Election e = states[key];
    if (is_cowinner(e, rule, inst.k, inst.p)) return d;
    auto relax = [&](const AtomicAction& a) {
      Price price = inst.price_of(a);
      if (price.is_infinite()) return;
      Election next = e;
      next.set_approvals(a.voter, e.approvals(a.voter));
      CandidateSet s = e.approvals(a.voter);
      if (a.kind == OpKind::Add) s.set(a.to);
      if (a.kind == OpKind::Delete) s.reset(a.from);
      if (a.kind == OpKind::Swap) s.reset(a.from), s.set(a.to);
      next.set_approvals(a.voter, s);
      push(next, d + price.value());
    };
    for (int v = 0; v < n; ++v)
      for (int c = 0; c < m; ++c) {
        bool has = e.approves(v, c);
        if (inst.op == OpKind::Add && !has && (!inst.restricted_to_p || c == inst.p))
          relax(AtomicAction::add(v, c));
        if (inst.op == OpKind::Delete && has) relax(AtomicAction::del(v, c));
        if (inst.op == OpKind::Swap && has)
          for (int to = 0; to < m; ++to)
            if (!e.approves(v, to) && (!inst.restricted_to_p || to == inst.p))
              relax(AtomicAction::swap(v, c, to));
      }
  }
  return std::nullopt;
}

inline int max_independent_set(const Graph& g) {
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << g.num_vertices); ++mask) {
    bool ok = std::none_of(g.edges.begin(), g.edges.end(), [&](auto e) {
      return (mask >> e.first & 1) && (mask >> e.second & 1);
    });
    if (ok) best = std::max(best, __builtin_popcount(mask));
  }
  return best;
}

inline bool has_exact_cover(const X3CInstance& x) {
  int sets = static_cast<int>(x.sets.size());
  for (std::uint32_t mask = 0; mask < (1u << sets); ++mask) {
    if (__builtin_popcount(mask) != x.n) continue;
    std::vector<int> hits(3 * x.n, 0);
    for (int j = 0; j < sets; ++j)
      if (mask >> j & 1)
        for (int e : x.sets[j]) ++hits[e];
    if (std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; })) return true;
  }
  return false;
}

// Exhaustive search over integral arc flows bounded by `cap_limit` per arc.
inline std::optional<std::int64_t> brute_force_flow(const FlowNetwork& net, Flow cap_limit) {
  std::size_t arcs = net.arcs.size();
  std::vector<Flow> flow(arcs, 0);
  std::optional<std::int64_t> best;
  auto rec = [&](auto&& self, std::size_t i) -> void {
    if (i == arcs) {
      std::vector<Flow> balance(net.num_nodes, 0);
      std::int64_t cost = 0;
      for (std::size_t a = 0; a < arcs; ++a) {
        balance[net.arcs[a].from] -= flow[a];
        balance[net.arcs[a].to] += flow[a];
        cost += flow[a] * net.arcs[a].cost;
      }
      for (int v = 0; v < net.num_nodes; ++v) {
        if (v == net.source || v == net.sink) continue;
        if (balance[v] != 0) return;
      }
      Flow value = -balance[net.source];
      if (net.source != net.sink && balance[net.sink] != value) return;
      if (net.required_flow && value != *net.required_flow) return;
      if (!net.required_flow && value < 0) return;
      if (!best || cost < *best) best = cost;
      return;
    }
    Flow hi = std::min(net.arcs[i].capacity, cap_limit);
    for (Flow f = net.arcs[i].lower; f <= hi; ++f) {
      flow[i] = f;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return best;
}

}  // namespace mwb::testing
