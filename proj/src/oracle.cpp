#include "mwb/oracle.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "vote_search.hpp"

namespace mwb {

namespace detail {

Cost max_total(const OptionTable& options) {
  Cost total = 0;
  for (const auto& list : options) {
    Cost top = 0;
    for (const auto& o : list) top = std::max(top, o.cost);
    total += top;
  }
  return total;
}

std::optional<BriberySolution> cheapest_combination(const BriberyInstance& inst, Rule rule,
                                                    const OptionTable& table, Cost max_cost,
                                                    const Limits& limits) {
  const int n = static_cast<int>(table.size());
  Cost cap = std::min(max_cost, max_total(table));
  if (cap < 0) return std::nullopt;
  if (static_cast<std::uint64_t>(cap + 1) * (n + 1) > limits.max_enumeration)
    throw ResourceError("cost range " + std::to_string(cap) + " too large for exhaustive search");

  OptionTable options = table;
  for (auto& list : options)
    std::stable_sort(list.begin(), list.end(),
                     [](const VoteOption& a, const VoteOption& b) { return a.cost < b.cost; });

  // reach[i][c]: voters i..n-1 can spend exactly c.
  std::vector<std::vector<char>> reach(n + 1, std::vector<char>(cap + 1, 0));
  reach[n][0] = 1;
  for (int i = n - 1; i >= 0; --i)
    for (Cost c = 0; c <= cap; ++c) {
      if (!reach[i + 1][c]) continue;
      for (const auto& o : options[i]) {
        if (c + o.cost > cap) break;
        reach[i][c + o.cost] = 1;
      }
    }

  Election work = inst.election;
  std::vector<int> pick(n, 0);
  std::uint64_t leaves = 0;
  auto dfs = [&](auto&& self, int i, Cost left) -> bool {
    if (i == n) {
      if (++leaves > limits.max_oracle_leaves)
        throw ResourceError("exhaustive search exceeded " + std::to_string(limits.max_oracle_leaves) +
                            " leaves");
      return is_cowinner(work, rule, inst.k, inst.p, limits);
    }
    for (std::size_t j = 0; j < options[i].size(); ++j) {
      const auto& o = options[i][j];
      if (o.cost > left) break;
      if (!reach[i + 1][left - o.cost]) continue;
      pick[i] = static_cast<int>(j);
      if (j != 0) work.set_approvals(i, o.approvals);
      bool found = self(self, i + 1, left - o.cost);
      if (j != 0) work.set_approvals(i, inst.election.approvals(i));
      if (found) return true;
    }
    return false;
  };

  for (Cost t = 0; t <= cap; ++t) {
    if (!reach[0][t]) continue;
    if (dfs(dfs, 0, t)) {
      BriberySolution s{{}, t, true};
      for (int i = 0; i < n; ++i) {
        const auto& acts = options[i][pick[i]].actions;
        s.actions.insert(s.actions.end(), acts.begin(), acts.end());
      }
      return s;
    }
  }
  return std::nullopt;
}

}  // namespace detail

namespace {

using detail::OptionTable;
using detail::VoteOption;

void check_states(std::uint64_t count, const Limits& limits) {
  if (count > limits.max_vote_states)
    throw ResourceError("a single vote has " + std::to_string(count) +
                        " reachable ballots, above the limit of " +
                        std::to_string(limits.max_vote_states));
}

// All ballots reachable from voter v's ballot with the instance's operation, each with the
// cheapest action sequence that reaches it.
std::vector<VoteOption> vote_options(const BriberyInstance& inst, VoterIndex v, const Limits& limits) {
  const Election& e = inst.election;
  const int m = e.num_candidates();
  const CandidateSet& start = e.approvals(v);
  std::vector<VoteOption> out;
  out.push_back({start, 0, {}});
  const CandidateIndex p = inst.p;

  if (inst.op == OpKind::Swap && inst.restricted_to_p) {
    if (start.test(p)) return out;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (!start.test(c)) continue;
      Price price = inst.swap_price(v, c, p);
      if (price.is_infinite()) continue;
      CandidateSet s = start;
      s.reset(c);
      s.set(p);
      out.push_back({s, price.value(), {AtomicAction::swap(v, c, p)}});
    }
    return out;
  }

  if (inst.op == OpKind::Add && inst.restricted_to_p) {
    if (start.test(p)) return out;
    Price price = inst.add_price(v, p);
    if (price.is_finite()) {
      CandidateSet s = start;
      s.set(p);
      out.push_back({s, price.value(), {AtomicAction::add(v, p)}});
    }
    return out;
  }

  if (inst.op == OpKind::Add || inst.op == OpKind::Delete) {
    // Toggle any subset of the candidates that the operation may change.
    bool add = inst.op == OpKind::Add;
    std::vector<std::pair<CandidateIndex, Cost>> free;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (start.test(c) == add) continue;
      Price price = add ? inst.add_price(v, c) : inst.del_price(v, c);
      if (price.is_finite()) free.emplace_back(c, price.value());
    }
    check_states(std::uint64_t{1} << std::min<std::size_t>(free.size(), 63), limits);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << free.size()); ++mask) {
      VoteOption o{start, 0, {}};
      for (std::size_t i = 0; i < free.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        auto [c, price] = free[i];
        o.approvals.flip(c);
        o.cost += price;
        o.actions.push_back(add ? AtomicAction::add(v, c) : AtomicAction::del(v, c));
      }
      out.push_back(std::move(o));
    }
    return out;
  }

  // Unrestricted swaps: Dijkstra over ballots of the same size.
  check_states(binomial(m, start.count()), limits);
  struct Node {
    Cost dist;
    std::optional<std::pair<CandidateSet, AtomicAction>> via;
  };
  std::map<CandidateSet, Node> seen;
  using Item = std::pair<Cost, CandidateSet>;
  auto later = [](const Item& a, const Item& b) {
    return a.first != b.first ? a.first > b.first : b.second < a.second;
  };
  std::priority_queue<Item, std::vector<Item>, decltype(later)> queue(later);
  seen[start] = {0, std::nullopt};
  queue.push({0, start});
  std::vector<CandidateSet> order;
  std::set<CandidateSet> settled;
  while (!queue.empty()) {
    auto [d, s] = queue.top();
    queue.pop();
    if (seen[s].dist != d) continue;
    if (!settled.insert(s).second) continue;
    order.push_back(s);
    for (CandidateIndex a = 0; a < m; ++a) {
      if (!s.test(a)) continue;
      for (CandidateIndex b = 0; b < m; ++b) {
        if (s.test(b)) continue;
        Price price = inst.swap_price(v, a, b);
        if (price.is_infinite()) continue;
        CandidateSet t = s;
        t.reset(a);
        t.set(b);
        Cost nd = d + price.value();
        auto it = seen.find(t);
        if (it == seen.end() || nd < it->second.dist) {
          seen[t] = {nd, std::make_pair(s, AtomicAction::swap(v, a, b))};
          queue.push({nd, t});
        }
      }
    }
  }
  for (const auto& s : order) {
    if (s == start) continue;
    VoteOption o{s, seen[s].dist, {}};
    for (CandidateSet cur = s; seen[cur].via; cur = seen[cur].via->first)
      o.actions.push_back(seen[cur].via->second);
    std::reverse(o.actions.begin(), o.actions.end());
    out.push_back(std::move(o));
  }
  return out;
}

}  // namespace

BriberySolution oracle_bribery(const BriberyInstance& inst, Rule rule, const Limits& limits) {
  inst.validate();
  OptionTable table;
  for (VoterIndex v = 0; v < inst.election.num_voters(); ++v)
    table.push_back(vote_options(inst, v, limits));
  auto found = detail::cheapest_combination(inst, rule, table, inst.budget, limits);
  if (!found) return BriberySolution::infeasible();
  return *found;
}

std::optional<Cost> oracle_margin(const BriberyInstance& inst, Rule rule, const Limits& limits) {
  BriberyInstance open = inst;
  open.budget = kUnboundedBudget;
  auto s = oracle_bribery(open, rule, limits);
  if (!s.feasible) return std::nullopt;
  return s.cost;
}

}  // namespace mwb
