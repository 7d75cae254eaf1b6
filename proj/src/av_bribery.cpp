#include "mwb/av_bribery.hpp"

#include <algorithm>
#include <numeric>

#include "mwb/min_cost_flow.hpp"
#include "mwb/rules.hpp"

namespace mwb {

namespace {

BriberySolution finish(const BriberyInstance& inst, std::vector<AtomicAction> actions, Cost cost) {
  BriberySolution s;
  s.cost = cost;
  s.feasible = inst.within_budget(cost);
  s.actions = std::move(actions);
  if (!s.feasible) return BriberySolution::infeasible();
  return s;
}

// k-th highest AV score among candidates other than p, or 0 when there are fewer than k others.
int kth_other_score(const std::vector<int>& score, CandidateIndex p, int k) {
  std::vector<int> others;
  for (int c = 0; c < static_cast<int>(score.size()); ++c)
    if (c != p) others.push_back(score[c]);
  if (static_cast<int>(others.size()) < k) return 0;
  std::nth_element(others.begin(), others.begin() + (k - 1), others.end(), std::greater<>());
  return others[k - 1];
}

}  // namespace

BriberySolution av_add(const BriberyInstance& inst) {
  inst.validate();
  const Election& e = inst.election;
  auto score = av_scores(e);
  int need = std::max(0, kth_other_score(score, inst.p, inst.k) - score[inst.p]);

  struct Offer {
    Cost price;
    VoterIndex voter;
  };
  std::vector<Offer> offers;
  for (VoterIndex v = 0; v < e.num_voters(); ++v) {
    if (e.approves(v, inst.p)) continue;
    Price price = inst.add_price(v, inst.p);
    if (price.is_finite()) offers.push_back({price.value(), v});
  }
  if (static_cast<int>(offers.size()) < need) return BriberySolution::infeasible();
  std::sort(offers.begin(), offers.end(), [](const Offer& a, const Offer& b) {
    return std::tie(a.price, a.voter) < std::tie(b.price, b.voter);
  });
  std::vector<AtomicAction> actions;
  Cost cost = 0;
  for (int i = 0; i < need; ++i) {
    actions.push_back(AtomicAction::add(offers[i].voter, inst.p));
    cost += offers[i].price;
  }
  std::sort(actions.begin(), actions.end());
  return finish(inst, std::move(actions), cost);
}

BriberySolution av_delete(const BriberyInstance& inst) {
  inst.validate();
  const Election& e = inst.election;
  auto score = av_scores(e);
  int sp = score[inst.p];

  struct Plan {
    Cost cost;
    CandidateIndex candidate;
    std::vector<AtomicAction> actions;
  };
  std::vector<Plan> plans;
  int above = 0;
  for (CandidateIndex c = 0; c < e.num_candidates(); ++c) {
    if (c == inst.p || score[c] <= sp) continue;
    ++above;
    std::vector<std::pair<Cost, VoterIndex>> offers;
    for (VoterIndex v = 0; v < e.num_voters(); ++v) {
      if (!e.approves(v, c)) continue;
      Price price = inst.del_price(v, c);
      if (price.is_finite()) offers.emplace_back(price.value(), v);
    }
    int drop = score[c] - sp;
    if (static_cast<int>(offers.size()) < drop) continue;
    std::sort(offers.begin(), offers.end());
    Plan plan{0, c, {}};
    for (int i = 0; i < drop; ++i) {
      plan.cost += offers[i].first;
      plan.actions.push_back(AtomicAction::del(offers[i].second, c));
    }
    plans.push_back(std::move(plan));
  }
  int must = above - (inst.k - 1);
  if (must <= 0) return finish(inst, {}, 0);
  if (static_cast<int>(plans.size()) < must) return BriberySolution::infeasible();
  std::stable_sort(plans.begin(), plans.end(),
                   [](const Plan& a, const Plan& b) { return a.cost < b.cost; });
  std::vector<AtomicAction> actions;
  Cost cost = 0;
  for (int i = 0; i < must; ++i) {
    cost += plans[i].cost;
    actions.insert(actions.end(), plans[i].actions.begin(), plans[i].actions.end());
  }
  std::sort(actions.begin(), actions.end());
  return finish(inst, std::move(actions), cost);
}

BriberySolution av_swap_unit(const BriberyInstance& inst) {
  inst.validate();
  const Election& start = inst.election;
  const int m = start.num_candidates(), n = start.num_voters();
  const CandidateIndex p = inst.p;
  std::optional<BriberySolution> best;

  for (int threshold = 0; threshold <= n; ++threshold) {
    Election e = start;
    std::vector<AtomicAction> actions;
    Cost cost = 0;
    bool ok = false;
    while (true) {
      auto score = av_scores(e);
      if (is_cowinner(e, Rule::AV, inst.k, p)) {
        ok = true;
        break;
      }
      if (!inst.unbounded() && cost + 1 > inst.budget) break;
      std::vector<CandidateIndex> others;
      for (int c = 0; c < m; ++c)
        if (c != p) others.push_back(c);
      std::stable_sort(others.begin(), others.end(),
                       [&](int a, int b) { return score[a] > score[b]; });
      CandidateIndex source = -1;
      for (std::size_t i = inst.k - 1; i < others.size(); ++i) {
        int c = others[i];
        if (score[c] > score[p] && score[c] > threshold &&
            (source < 0 || score[c] > score[source] || (score[c] == score[source] && c < source)))
          source = c;
      }
      std::optional<AtomicAction> move;
      if (source >= 0) {
        for (VoterIndex v = 0; v < n && !move; ++v)
          if (e.approves(v, source) && !e.approves(v, p)) move = AtomicAction::swap(v, source, p);
      } else {
        for (VoterIndex v = 0; v < n && !move; ++v) {
          if (e.approves(v, p) || e.approvals(v).none()) continue;
          move = AtomicAction::swap(v, static_cast<CandidateIndex>(e.approvals(v).find_first()), p);
        }
      }
      if (!move) break;
      apply_action_in_place(e, *move);
      actions.push_back(*move);
      cost += 1;
    }
    if (!ok) continue;
    BriberySolution s{actions, cost, true};
    if (!best || better_solution(s, *best)) best = std::move(s);
  }
  if (!best) return BriberySolution::infeasible();
  return finish(inst, std::move(best->actions), best->cost);
}

namespace {

constexpr Cost kNoPath = std::numeric_limits<Cost>::max() / 8;

// Cheapest way to move one approval of voter v from a to b, through intermediate candidates
// when swaps are unrestricted.
struct VoteDistances {
  int m = 0;
  std::vector<Cost> dist;  // m * m
  std::vector<int> next;   // first hop on a cheapest path
  Cost at(int a, int b) const { return dist[a * m + b]; }
};

VoteDistances vote_distances(const BriberyInstance& inst, VoterIndex v) {
  int m = inst.election.num_candidates();
  VoteDistances d{m, std::vector<Cost>(m * m, kNoPath), std::vector<int>(m * m, -1)};
  for (int a = 0; a < m; ++a) {
    d.dist[a * m + a] = 0;
    d.next[a * m + a] = a;
    for (int b = 0; b < m; ++b) {
      if (a == b || (inst.restricted_to_p && b != inst.p)) continue;
      Price price = inst.swap_price(v, a, b);
      if (price.is_finite()) {
        d.dist[a * m + b] = price.value();
        d.next[a * m + b] = b;
      }
    }
  }
  if (inst.restricted_to_p) return d;
  for (int x = 0; x < m; ++x)
    for (int a = 0; a < m; ++a) {
      if (d.dist[a * m + x] >= kNoPath) continue;
      for (int b = 0; b < m; ++b) {
        Cost via = d.dist[a * m + x] + d.dist[x * m + b];
        if (d.dist[x * m + b] < kNoPath && via < d.dist[a * m + b]) {
          d.dist[a * m + b] = via;
          d.next[a * m + b] = d.next[a * m + x];
        }
      }
    }
  return d;
}

// Turns the net approval moves of one vote into a valid swap sequence. `moves[u][w]` counts
// approvals moved along u->w. Cycles are cancelled first (they never lower the cost); an
// acyclic move set can always be ordered so each swap goes from an approved to an unapproved
// candidate.
void order_vote_moves(VoterIndex v, std::vector<std::vector<int>> moves, CandidateSet occupied,
                      std::vector<AtomicAction>& out) {
  int m = static_cast<int>(moves.size());
  auto find_cycle = [&]() -> std::vector<int> {
    std::vector<int> state(m, 0), parent(m, -1);
    std::vector<int> cycle;
    auto dfs = [&](auto&& self, int u) -> bool {
      state[u] = 1;
      for (int w = 0; w < m; ++w) {
        if (moves[u][w] == 0) continue;
        if (state[w] == 1) {
          cycle.push_back(w);
          for (int x = u; x != w; x = parent[x]) cycle.push_back(x);
          std::reverse(cycle.begin(), cycle.end());
          return true;
        }
        if (state[w] == 0) {
          parent[w] = u;
          if (self(self, w)) return true;
        }
      }
      state[u] = 2;
      return false;
    };
    for (int u = 0; u < m; ++u)
      if (state[u] == 0 && dfs(dfs, u)) return cycle;
    return {};
  };
  for (auto cycle = find_cycle(); !cycle.empty(); cycle = find_cycle()) {
    int low = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < cycle.size(); ++i)
      low = std::min(low, moves[cycle[i]][cycle[(i + 1) % cycle.size()]]);
    for (std::size_t i = 0; i < cycle.size(); ++i)
      moves[cycle[i]][cycle[(i + 1) % cycle.size()]] -= low;
  }

  auto out_degree = [&](int u) {
    int d = 0;
    for (int w = 0; w < m; ++w) d += moves[u][w];
    return d;
  };
  while (true) {
    int u = -1, w = -1;
    for (int a = 0; a < m && u < 0; ++a)
      for (int b = 0; b < m; ++b)
        if (moves[a][b] > 0) {
          u = a;
          w = b;
          break;
        }
    if (u < 0) break;
    // Walk forward to a candidate with no outgoing moves; it is currently unapproved.
    int z = w;
    while (out_degree(z) > 0) {
      for (int b = 0; b < m; ++b)
        if (moves[z][b] > 0) {
          z = b;
          break;
        }
    }
    // Walk back over unapproved candidates until reaching an approved one.
    int target = z;
    while (true) {
      int from = -1;
      for (int a = 0; a < m; ++a)
        if (moves[a][target] > 0) {
          from = a;
          break;
        }
      if (occupied.test(from)) {
        out.push_back(AtomicAction::swap(v, from, target));
        occupied.reset(from);
        occupied.set(target);
        --moves[from][target];
        break;
      }
      target = from;
    }
  }
}

}  // namespace

BriberySolution av_priced_swap_exact(const BriberyInstance& inst, const Limits& limits) {
  inst.validate();
  const Election& e = inst.election;
  const int m = e.num_candidates(), n = e.num_voters(), k = inst.k;
  const CandidateIndex p = inst.p;
  std::uint64_t guesses = binomial(m - 1, k - 1);
  if (guesses > limits.max_guesses / static_cast<std::uint64_t>(n + 1))
    throw ResourceError("committee and threshold guesses exceed " +
                        std::to_string(limits.max_guesses));
  if (is_cowinner(e, Rule::AV, k, p)) return finish(inst, {}, 0);

  auto score = av_scores(e);
  std::vector<VoteDistances> dist;
  for (VoterIndex v = 0; v < n; ++v) dist.push_back(vote_distances(inst, v));

  // Fixed part of the network: candidate -> (vote, lost approval) -> (vote, gained approval)
  // -> candidate. Nodes 0..m-1 are candidates, then s and t.
  FlowNetwork base;
  base.num_nodes = m;
  base.source = base.add_node();
  base.sink = base.add_node();
  struct Transfer {
    int arc;
    VoterIndex voter;
    CandidateIndex from, to;
  };
  std::vector<Transfer> transfers;
  for (VoterIndex v = 0; v < n; ++v) {
    const auto& s = e.approvals(v);
    std::vector<int> gain_node(m, -1);
    for (CandidateIndex b = 0; b < m; ++b) {
      if (s.test(b) || (inst.restricted_to_p && b != p)) continue;
      gain_node[b] = base.add_node();
      base.add_arc(gain_node[b], b, 0, 1, 0);
    }
    for (CandidateIndex a = 0; a < m; ++a) {
      if (!s.test(a)) continue;
      int lose = base.add_node();
      base.add_arc(a, lose, 0, 1, 0);
      for (CandidateIndex b = 0; b < m; ++b) {
        if (gain_node[b] < 0 || dist[v].at(a, b) >= kNoPath) continue;
        int arc = base.add_arc(lose, gain_node[b], 0, 1, dist[v].at(a, b));
        transfers.push_back({arc, v, a, b});
      }
    }
  }
  base.add_arc(base.sink, base.source, 0, kUnboundedCapacity, 0);

  std::optional<BriberySolution> best;
  std::vector<char> member(m, 0);
  member[p] = 1;
  std::vector<CandidateIndex> others;
  for (int c = 0; c < m; ++c)
    if (c != p) others.push_back(c);

  auto solve_guess = [&](int threshold) {
    FlowNetwork net = base;
    for (CandidateIndex c = 0; c < m; ++c) {
      int s = score[c];
      if (member[c]) {
        if (s >= threshold) {
          net.add_arc(net.source, c, 0, s - threshold, 0);
          net.add_arc(c, net.sink, 0, kUnboundedCapacity, 0);
        } else {
          net.add_arc(c, net.sink, threshold - s, kUnboundedCapacity, 0);
        }
      } else if (s > threshold) {
        net.add_arc(net.source, c, s - threshold, kUnboundedCapacity, 0);
      } else {
        net.add_arc(net.source, c, 0, kUnboundedCapacity, 0);
        net.add_arc(c, net.sink, 0, threshold - s, 0);
      }
    }
    auto result = min_cost_flow_lb(net);
    if (!result) return;
    if (best && result->cost > best->cost) return;

    std::vector<AtomicAction> actions;
    std::vector<std::vector<std::vector<int>>> moves(
        n, std::vector<std::vector<int>>(m, std::vector<int>(m, 0)));
    std::vector<char> touched(n, 0);
    for (const auto& t : transfers) {
      if (result->flow[t.arc] == 0) continue;
      touched[t.voter] = 1;
      const auto& d = dist[t.voter];
      for (int u = t.from; u != t.to;) {
        int w = d.next[u * m + t.to];
        ++moves[t.voter][u][w];
        u = w;
      }
    }
    for (VoterIndex v = 0; v < n; ++v)
      if (touched[v]) order_vote_moves(v, moves[v], e.approvals(v), actions);
    BriberySolution s{actions, instance_cost(inst, actions), true};
    if (!best || better_solution(s, *best)) best = std::move(s);
  };

  // Committees W = {p} + (k-1) others, in lexicographic order.
  std::vector<int> pick(k - 1);
  std::iota(pick.begin(), pick.end(), 0);
  int r = k - 1, pool = static_cast<int>(others.size());
  while (true) {
    for (int i : pick) member[others[i]] = 1;
    for (int threshold = 0; threshold <= n; ++threshold) solve_guess(threshold);
    for (int i : pick) member[others[i]] = 0;
    int i = r - 1;
    while (i >= 0 && pick[i] == pool - r + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
  }
  if (!best) return BriberySolution::infeasible();
  return finish(inst, std::move(best->actions), best->cost);
}

}  // namespace mwb
