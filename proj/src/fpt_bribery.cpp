#include "mwb/fpt_bribery.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "mwb/min_cost_flow.hpp"
#include "mwb/oracle.hpp"
#include "vote_search.hpp"

namespace mwb {

namespace {

using detail::OptionTable;
using detail::VoteOption;

BriberySolution finish(const BriberyInstance& inst, BriberySolution s) {
  if (!s.feasible || !inst.within_budget(s.cost)) return BriberySolution::infeasible();
  return s;
}

std::vector<CandidateIndex> representatives(const Election& e, CandidateIndex p) {
  std::vector<CandidateIndex> pool{p};
  int n = e.num_voters();
  for (const auto& [type, group] : candidate_types(e)) {
    int taken = 0;
    for (CandidateIndex c : group) {
      if (c == p) continue;
      if (taken++ >= std::max(n, 1)) break;
      pool.push_back(c);
    }
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

// Unit-price options of one vote when only `pool` candidates may change.
std::vector<VoteOption> pool_options(const BriberyInstance& inst, VoterIndex v,
                                     const std::vector<CandidateIndex>& pool, const Limits& limits) {
  const CandidateSet& start = inst.election.approvals(v);
  const CandidateIndex p = inst.p;
  std::vector<VoteOption> out{{start, 0, {}}};
  std::vector<CandidateIndex> in, out_of;
  for (CandidateIndex c : pool) (start.test(c) ? in : out_of).push_back(c);

  if (inst.restricted_to_p) {
    if (start.test(p)) return out;
    if (inst.op == OpKind::Add) {
      CandidateSet s = start;
      s.set(p);
      out.push_back({s, 1, {AtomicAction::add(v, p)}});
    } else {
      for (CandidateIndex c : in) {
        CandidateSet s = start;
        s.reset(c);
        s.set(p);
        out.push_back({s, 1, {AtomicAction::swap(v, c, p)}});
      }
    }
    return out;
  }

  if (out_of.size() >= 63 || (std::uint64_t{1} << out_of.size()) > limits.max_vote_states)
    throw ResourceError("too many representative candidates for one vote");
  for (std::uint64_t gain = 1; gain < (std::uint64_t{1} << out_of.size()); ++gain) {
    std::vector<CandidateIndex> added;
    for (std::size_t i = 0; i < out_of.size(); ++i)
      if (gain >> i & 1) added.push_back(out_of[i]);
    if (inst.op == OpKind::Add) {
      VoteOption o{start, static_cast<Cost>(added.size()), {}};
      for (CandidateIndex c : added) {
        o.approvals.set(c);
        o.actions.push_back(AtomicAction::add(v, c));
      }
      out.push_back(std::move(o));
      continue;
    }
    // Swap: pair each gained candidate with a distinct lost one.
    if (added.size() > in.size()) continue;
    for (std::uint64_t loss = 1; loss < (std::uint64_t{1} << in.size()); ++loss) {
      if (static_cast<std::size_t>(std::popcount(loss)) != added.size()) continue;
      VoteOption o{start, static_cast<Cost>(added.size()), {}};
      std::size_t j = 0;
      for (std::size_t i = 0; i < in.size(); ++i) {
        if (!(loss >> i & 1)) continue;
        o.approvals.reset(in[i]);
        o.approvals.set(added[j]);
        o.actions.push_back(AtomicAction::swap(v, in[i], added[j]));
        ++j;
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

// Every voter approves p: one add, or one swap from the voter's lowest-index pool candidate.
std::optional<BriberySolution> everyone_approves_p(const BriberyInstance& inst,
                                                   const std::vector<CandidateIndex>& pool) {
  const Election& e = inst.election;
  BriberySolution s{{}, 0, true};
  for (VoterIndex v = 0; v < e.num_voters(); ++v) {
    if (e.approves(v, inst.p)) continue;
    if (inst.op == OpKind::Add) {
      s.actions.push_back(AtomicAction::add(v, inst.p));
    } else {
      auto it = std::find_if(pool.begin(), pool.end(), [&](CandidateIndex c) { return e.approves(v, c); });
      if (it == pool.end()) return std::nullopt;
      s.actions.push_back(AtomicAction::swap(v, *it, inst.p));
    }
    s.cost += 1;
  }
  return s;
}

}  // namespace

BriberySolution add_for_p_subset_enum(const BriberyInstance& inst, Rule rule, const Limits& limits) {
  inst.validate();
  if (inst.op != OpKind::Add || !inst.restricted_to_p)
    throw std::invalid_argument("voter-subset enumeration handles Add restricted to p");
  const Election& e = inst.election;
  std::vector<std::pair<VoterIndex, Cost>> open;
  for (VoterIndex v = 0; v < e.num_voters(); ++v) {
    if (e.approves(v, inst.p)) continue;
    Price price = inst.add_price(v, inst.p);
    if (price.is_finite()) open.emplace_back(v, price.value());
  }
  if (static_cast<int>(open.size()) > limits.max_subset_voters)
    throw ResourceError(std::to_string(open.size()) + " voters exceed the subset limit of " +
                        std::to_string(limits.max_subset_voters));

  std::optional<BriberySolution> best;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << open.size()); ++mask) {
    Cost cost = 0;
    for (std::size_t i = 0; i < open.size(); ++i)
      if (mask >> i & 1) cost += open[i].second;
    if (!inst.within_budget(cost) || (best && cost > best->cost)) continue;
    BriberySolution s{{}, cost, true};
    for (std::size_t i = 0; i < open.size(); ++i)
      if (mask >> i & 1) s.actions.push_back(AtomicAction::add(open[i].first, inst.p));
    if (best && !better_solution(s, *best)) continue;
    if (is_cowinner(apply_actions(e, s.actions), rule, inst.k, inst.p, limits)) best = std::move(s);
  }
  if (!best) return BriberySolution::infeasible();
  return *best;
}

BriberySolution unpriced_type_enum(const BriberyInstance& inst, Rule rule, const Limits& limits) {
  inst.validate();
  if (inst.priced) throw std::invalid_argument("type enumeration needs unit prices");
  if (inst.op == OpKind::Delete) throw std::invalid_argument("type enumeration handles Add and Swap");
  const int n = inst.election.num_voters();
  auto pool = representatives(inst.election, inst.p);
  OptionTable table;
  for (VoterIndex v = 0; v < n; ++v) table.push_back(pool_options(inst, v, pool, limits));

  Cost below_n = std::min<Cost>(inst.budget, n - 1);
  if (below_n >= 0) {
    if (auto s = detail::cheapest_combination(inst, rule, table, below_n, limits)) return *s;
  }
  if (inst.budget < n) return BriberySolution::infeasible();
  if (auto s = everyone_approves_p(inst, pool)) {
    if (is_cowinner(apply_actions(inst.election, s->actions), rule, inst.k, inst.p, limits))
      return finish(inst, *s);
  }
  // The rule's fixed tie-breaking can keep p out even with unanimous support.
  return oracle_bribery(inst, rule, limits);
}

BriberySolution priced_swap_to_p_type_enum(const BriberyInstance& inst, Rule rule,
                                           const Limits& limits) {
  inst.validate();
  if (inst.op != OpKind::Swap || !inst.restricted_to_p)
    throw std::invalid_argument("type enumeration for priced swaps needs Swap restricted to p");
  const Election& e = inst.election;
  const int n = e.num_voters(), m = e.num_candidates();
  const CandidateIndex p = inst.p;
  if (n > limits.max_subset_voters)
    throw ResourceError("too many voters for per-type conversion enumeration");

  std::vector<VoterIndex> open;
  for (VoterIndex v = 0; v < n; ++v)
    if (!e.approves(v, p)) open.push_back(v);

  // (original type, voters swapped away) -> (cost, candidate), n cheapest kept.
  std::map<std::pair<CandidateType, std::uint64_t>, std::vector<std::pair<Cost, CandidateIndex>>,
           bool (*)(const std::pair<CandidateType, std::uint64_t>&,
                    const std::pair<CandidateType, std::uint64_t>&)>
      cheapest([](const auto& a, const auto& b) {
        if (a.first != b.first) return TypeValueLess{}(a.first, b.first);
        return a.second < b.second;
      });
  for (CandidateIndex c = 0; c < m; ++c) {
    if (c == p) continue;
    std::vector<std::pair<VoterIndex, Cost>> movable;
    for (VoterIndex v : open) {
      if (!e.approves(v, c)) continue;
      Price price = inst.swap_price(v, c, p);
      if (price.is_finite()) movable.emplace_back(v, price.value());
    }
    CandidateType type = candidate_type(e, c);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << movable.size()); ++mask) {
      Cost cost = 0;
      std::uint64_t voters = 0;
      for (std::size_t i = 0; i < movable.size(); ++i) {
        if (!(mask >> i & 1)) continue;
        cost += movable[i].second;
        voters |= std::uint64_t{1} << movable[i].first;
      }
      cheapest[{type, voters}].emplace_back(cost, c);
    }
  }
  std::vector<char> in_pool(m, 0);
  in_pool[p] = 1;
  for (auto& [key, list] : cheapest) {
    std::sort(list.begin(), list.end());
    for (std::size_t i = 0; i < list.size() && i < static_cast<std::size_t>(n); ++i)
      in_pool[list[i].second] = 1;
  }

  OptionTable table;
  for (VoterIndex v = 0; v < n; ++v) {
    const CandidateSet& start = e.approvals(v);
    std::vector<VoteOption> options{{start, 0, {}}};
    if (!start.test(p)) {
      for (CandidateIndex c = 0; c < m; ++c) {
        if (!in_pool[c] || !start.test(c)) continue;
        Price price = inst.swap_price(v, c, p);
        if (price.is_infinite()) continue;
        CandidateSet s = start;
        s.reset(c);
        s.set(p);
        options.push_back({s, price.value(), {AtomicAction::swap(v, c, p)}});
      }
    }
    table.push_back(std::move(options));
  }
  auto s = detail::cheapest_combination(inst, rule, table, inst.budget, limits);
  if (!s) return BriberySolution::infeasible();
  return *s;
}

namespace {

using Mask = std::uint32_t;

int coverage_of(Mask covered) { return std::popcount(covered); }

// Whether some best committee over the present types (at most k of them) includes p's type.
bool ccav_types_admit(const std::vector<Mask>& present, Mask p_type, int k) {
  int t = static_cast<int>(present.size());
  int best = 0, best_p = 0;
  for (std::uint32_t pick = 1; pick < (1u << t); ++pick) {
    if (std::popcount(pick) > k) continue;
    Mask covered = 0;
    bool has_p = false;
    for (int i = 0; i < t; ++i) {
      if (!(pick >> i & 1)) continue;
      covered |= present[i];
      has_p = has_p || present[i] == p_type;
    }
    best = std::max(best, coverage_of(covered));
    if (has_p) best_p = std::max(best_p, coverage_of(covered));
  }
  return best_p == best;
}

struct Leader {
  Mask type;
  CandidateIndex leader;
};

// Greedy CCAV on leaders only, as in gav_selects_by_types, with packed masks.
bool gav_picks(const std::vector<Leader>& types, int k, CandidateIndex p) {
  Mask covered = 0;
  std::uint32_t used = 0;
  int rounds = 0, below = 0;
  while (rounds < k) {
    int best = -1, best_gain = 0;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (used >> t & 1) continue;
      int gain = std::popcount(types[t].type & ~covered);
      if (gain > best_gain || (gain == best_gain && gain > 0 && types[t].leader < types[best].leader)) {
        best = static_cast<int>(t);
        best_gain = gain;
      }
    }
    if (best < 0) break;
    used |= 1u << best;
    covered |= types[best].type;
    ++rounds;
    if (types[best].leader == p) return true;
    if (types[best].leader < p) ++below;
  }
  return p - below < k - rounds;
}

}  // namespace

BriberySolution ccav_gav_flow_bribery(const BriberyInstance& inst, Rule rule, const Limits& limits) {
  inst.validate();
  if (rule != Rule::CCAV && rule != Rule::GAV)
    throw std::invalid_argument("type-guessing flow handles CCAV and GAV");
  if (inst.op == OpKind::Swap) throw std::invalid_argument("type-guessing flow handles Add and Delete");
  const Election& e = inst.election;
  const int n = e.num_voters(), m = e.num_candidates(), k = inst.k;
  const CandidateIndex p = inst.p;
  if (n > limits.max_type_voters)
    throw ResourceError(std::to_string(n) + " voters exceed the type-guessing limit of " +
                        std::to_string(limits.max_type_voters));
  if (is_cowinner(e, rule, k, p, limits)) return finish(inst, {{}, 0, true});
  if (rule == Rule::CCAV && k > n) return finish(inst, {{}, 0, true});

  const int types = 1 << n;
  const bool add = inst.op == OpKind::Add;
  std::vector<Mask> own(m, 0);
  for (VoterIndex v = 0; v < n; ++v)
    for (CandidateIndex c = 0; c < m; ++c)
      if (e.approves(v, c)) own[c] |= 1u << v;

  // conv[c][s]: cheapest add or delete sequence turning c's type into s. The entries are
  // independent of each other because prices depend only on (voter, candidate).
  constexpr Cost kNever = -1;
  std::vector<std::vector<Cost>> conv(m, std::vector<Cost>(types, kNever));
  for (CandidateIndex c = 0; c < m; ++c) {
    for (Mask s = 0; s < static_cast<Mask>(types); ++s) {
      bool reachable = add ? (s & own[c]) == own[c] : (s & own[c]) == s;
      if (!reachable) continue;
      if (add && inst.restricted_to_p && c != p && s != own[c]) continue;
      Cost cost = 0;
      for (VoterIndex v = 0; v < n && cost != kNever; ++v) {
        if (!((s ^ own[c]) >> v & 1)) continue;
        Price price = add ? inst.add_price(v, c) : inst.del_price(v, c);
        cost = price.is_finite() ? cost + price.value() : kNever;
      }
      conv[c][s] = cost;
    }
  }
  auto build = [&](const std::vector<Mask>& final_type) {
    BriberySolution s{{}, 0, true};
    for (CandidateIndex c = 0; c < m; ++c) {
      s.cost += conv[c][final_type[c]];
      for (VoterIndex v = 0; v < n; ++v) {
        if (!((final_type[c] ^ own[c]) >> v & 1)) continue;
        s.actions.push_back(add ? AtomicAction::add(v, c) : AtomicAction::del(v, c));
      }
    }
    std::sort(s.actions.begin(), s.actions.end());
    return s;
  };

  std::optional<BriberySolution> best;
  auto offer = [&](BriberySolution s) {
    if (!best || better_solution(s, *best)) best = std::move(s);
  };
  auto bound = [&]() { return best ? std::min(best->cost, inst.budget) : inst.budget; };

  if (rule == Rule::GAV) {
    // Candidates in index order either open a new type (becoming its lowest-index holder) or
    // join the cheapest type opened so far; only the openers influence the greedy outcome.
    std::vector<Leader> leaders;
    std::vector<Mask> final_type(m, 0);
    std::uint64_t nodes = 0;
    auto dfs = [&](auto&& self, CandidateIndex c, Cost cost) -> void {
      if (++nodes > limits.max_enumeration) throw ResourceError("type guessing exceeded its limit");
      if (cost > bound()) return;
      if (c == m) {
        if (gav_picks(leaders, k, p)) offer(build(final_type));
        return;
      }
      Mask join = 0;
      Cost join_cost = kNever;
      for (const auto& l : leaders) {
        Cost x = conv[c][l.type];
        if (x != kNever && (join_cost == kNever || x < join_cost || (x == join_cost && l.type < join)))
          join = l.type, join_cost = x;
      }
      if (join_cost != kNever) {
        final_type[c] = join;
        self(self, c + 1, cost + join_cost);
      }
      for (Mask s = 0; s < static_cast<Mask>(types); ++s) {
        if (conv[c][s] == kNever) continue;
        if (std::any_of(leaders.begin(), leaders.end(), [&](const Leader& l) { return l.type == s; }))
          continue;
        leaders.push_back({s, c});
        final_type[c] = s;
        self(self, c + 1, cost + conv[c][s]);
        leaders.pop_back();
      }
    };
    dfs(dfs, 0, 0);
  } else {
    // CCAV: guess the set of present types and p's type; assign candidates by min-cost flow
    // with a lower bound of one candidate per guessed type.
    std::uint64_t guesses = 0;
    std::vector<Mask> present;
    auto evaluate = [&]() {
      for (Mask p_type : present) {
        if (conv[p][p_type] == kNever) continue;
        if (!ccav_types_admit(present, p_type, k)) continue;
        if (++guesses > limits.max_guesses) throw ResourceError("type guesses exceed the limit");
        // Cheap lower bound before building the network.
        Cost lower = conv[p][p_type];
        bool possible = true;
        for (CandidateIndex c = 0; c < m && possible; ++c) {
          if (c == p) continue;
          Cost low = kNever;
          for (Mask s : present)
            if (conv[c][s] != kNever && (low == kNever || conv[c][s] < low)) low = conv[c][s];
          if (low == kNever) possible = false;
          else lower += low;
        }
        if (!possible || lower > bound()) continue;

        FlowNetwork net;
        net.num_nodes = m + static_cast<int>(present.size());
        net.source = net.add_node();
        net.sink = net.add_node();
        net.required_flow = m;
        struct Choice {
          int arc;
          CandidateIndex c;
          Mask type;
        };
        std::vector<Choice> choices;
        for (CandidateIndex c = 0; c < m; ++c) {
          net.add_arc(net.source, c, 1, 1, 0);
          for (std::size_t j = 0; j < present.size(); ++j) {
            Mask s = present[j];
            if (conv[c][s] == kNever || (c == p && s != p_type)) continue;
            choices.push_back({net.add_arc(c, m + static_cast<int>(j), 0, 1, conv[c][s]), c, s});
          }
        }
        for (std::size_t j = 0; j < present.size(); ++j)
          net.add_arc(m + static_cast<int>(j), net.sink, 1, kUnboundedCapacity, 0);
        auto flow = min_cost_flow_lb(net);
        if (!flow || flow->cost > bound()) continue;
        std::vector<Mask> final_type(m, 0);
        for (const auto& ch : choices)
          if (flow->flow[ch.arc] > 0) final_type[ch.c] = ch.type;
        offer(build(final_type));
      }
    };
    auto choose = [&](auto&& self, Mask next) -> void {
      if (!present.empty()) evaluate();
      if (static_cast<int>(present.size()) == m) return;
      for (Mask s = next; s < static_cast<Mask>(types); ++s) {
        present.push_back(s);
        self(self, s + 1);
        present.pop_back();
      }
    };
    choose(choose, 0);
  }
  if (!best) return BriberySolution::infeasible();
  return finish(inst, *best);
}

}  // namespace mwb
