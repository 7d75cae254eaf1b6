#include "mwb/approx_bribery.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "mwb/rules.hpp"

namespace mwb {

namespace {

BriberySolution finish(const BriberyInstance& inst, std::vector<AtomicAction> actions, Cost cost) {
  if (!inst.within_budget(cost)) return BriberySolution::infeasible();
  std::sort(actions.begin(), actions.end());
  return {std::move(actions), cost, true};
}

void require_add_for_p(const BriberyInstance& inst, const char* who) {
  inst.validate();
  if (inst.op != OpKind::Add) throw std::invalid_argument(std::string(who) + " handles Add only");
}

struct Item {
  VoterIndex voter;
  Cost price;
  int size;  // |v| before the addition
};

std::vector<Item> add_items(const Election& e, CandidateIndex p, const PriceTable& prices) {
  std::vector<Item> items;
  for (VoterIndex v = 0; v < e.num_voters(); ++v) {
    if (e.approves(v, p)) continue;
    Price price = prices.add(v, p);
    if (price.is_finite()) items.push_back({v, price.value(), static_cast<int>(e.approvals(v).count())});
  }
  return items;
}

// 0/1 knapsack over every capacity 0..capacity, maximizing gain then minimizing cost.
template <class V>
class GainTable {
 public:
  GainTable(std::vector<Item> items, std::vector<V> value, Cost capacity)
      : items_(std::move(items)), value_(std::move(value)), cap_(capacity) {
    std::size_t q = items_.size(), width = static_cast<std::size_t>(cap_) + 1;
    take_.assign(q * width, 0);
    best_.assign(width, V(0));
    cost_.assign(width, 0);
    for (std::size_t i = 0; i < q; ++i) {
      Cost w = items_[i].price;
      for (Cost b = cap_; b >= w; --b) {
        V cand = best_[b - w] + value_[i];
        Cost cand_cost = cost_[b - w] + w;
        if (cand > best_[b] || (cand == best_[b] && cand_cost < cost_[b])) {
          best_[b] = cand;
          cost_[b] = cand_cost;
          take_[i * width + b] = 1;
        }
      }
    }
  }

  std::vector<VoterIndex> select(Cost budget) const {
    std::size_t width = static_cast<std::size_t>(cap_) + 1;
    Cost b = std::min(budget, cap_);
    std::vector<VoterIndex> out;
    for (std::size_t i = items_.size(); i-- > 0;) {
      if (take_[i * width + b]) {
        out.push_back(items_[i].voter);
        b -= items_[i].price;
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::vector<Item> items_;
  std::vector<V> value_;
  Cost cap_;
  std::vector<char> take_;
  std::vector<V> best_;
  std::vector<Cost> cost_;
};

// Runs `body` with a GainTable over exact scaled integers when they fit, otherwise rationals.
template <class Body>
auto with_gain_table(const std::vector<Item>& items, Cost capacity, Body&& body) {
  std::int64_t l = 1;
  bool fits = true;
  for (const auto& it : items) {
    std::int64_t d = it.size + 1;
    __int128 next = static_cast<__int128>(l / std::gcd(l, d)) * d;
    if (next * static_cast<__int128>(items.size() + 1) > INT64_MAX) {
      fits = false;
      break;
    }
    l = static_cast<std::int64_t>(next);
  }
  if (fits) {
    std::vector<std::int64_t> value;
    for (const auto& it : items) value.push_back(l / (it.size + 1));
    return body(GainTable<std::int64_t>(items, value, capacity));
  }
  std::vector<Rational> value;
  for (const auto& it : items) value.push_back(Rational(1, it.size + 1));
  return body(GainTable<Rational>(items, value, capacity));
}

Cost total_price(const std::vector<Item>& items) {
  Cost total = 0;
  for (const auto& it : items) total += it.price;
  return total;
}

GainSelection describe(const Election& e, const std::vector<Item>& items,
                       std::vector<VoterIndex> voters) {
  GainSelection out;
  for (VoterIndex v : voters) {
    auto it = std::find_if(items.begin(), items.end(), [&](const Item& x) { return x.voter == v; });
    out.cost += it->price;
    out.gain += Rational(1, static_cast<std::int64_t>(e.approvals(v).count()) + 1);
  }
  out.voters = std::move(voters);
  return out;
}

}  // namespace

GainSelection sav_max_gain(const Election& e, CandidateIndex p, Cost budget,
                           const PriceTable& prices) {
  if (budget < 0) throw std::invalid_argument("negative budget");
  auto items = add_items(e, p, prices);
  Cost capacity = std::min(budget, total_price(items));
  auto voters = with_gain_table(items, capacity, [&](const auto& table) { return table.select(capacity); });
  return describe(e, items, std::move(voters));
}

BriberySolution sav_add_for_p_2approx(const BriberyInstance& inst, const Limits& limits) {
  require_add_for_p(inst, "SAV 2-approximation");
  if (inst.priced && !inst.restricted_to_p)
    throw std::invalid_argument("SAV 2-approximation needs restriction to p when priced");
  const Election& e = inst.election;
  if (is_cowinner(e, Rule::SAV, inst.k, inst.p)) return {{}, 0, true};
  PriceTable unit;
  const PriceTable& prices = inst.priced ? inst.prices : unit;
  auto items = add_items(e, inst.p, prices);
  Cost sweep = std::min(inst.budget, total_price(items));
  if (static_cast<std::uint64_t>(sweep + 1) * (items.size() + 1) > limits.max_enumeration)
    throw ResourceError("knapsack table of " + std::to_string(items.size()) + " x " +
                        std::to_string(sweep + 1) + " exceeds the limit");

  return with_gain_table(items, sweep, [&](const auto& table) -> BriberySolution {
    std::vector<VoterIndex> last;
    bool first = true;
    for (Cost t = 0; t <= sweep; ++t) {
      auto voters = table.select(t);
      if (!first && voters == last) continue;
      first = false;
      last = voters;
      std::vector<AtomicAction> actions;
      for (VoterIndex v : voters) actions.push_back(AtomicAction::add(v, inst.p));
      if (is_cowinner(apply_actions(e, actions), Rule::SAV, inst.k, inst.p))
        return finish(inst, actions, instance_cost(inst, actions));
    }
    return BriberySolution::infeasible();
  });
}

namespace {

struct RoundState {
  std::vector<char> chosen;   // selected in rounds before the guessed one
  std::vector<int> count;     // |W ∩ v| per voter
};

// Replays `rounds` greedy rounds of GAV or RAV and reports whether p was already picked.
bool replay_rounds(const Election& e, Rule rule, int rounds, CandidateIndex p, RoundState& st) {
  st.chosen.assign(e.num_candidates(), 0);
  st.count.assign(e.num_voters(), 0);
  if (rounds == 0) return false;
  Committee w = rule == Rule::GAV ? gav_committee(e, rounds) : rav_committee(e, rounds);
  for (CandidateIndex c : w) {
    st.chosen[c] = 1;
    for (VoterIndex v = 0; v < e.num_voters(); ++v) st.count[v] += e.approves(v, c) ? 1 : 0;
  }
  return st.chosen[p] != 0;
}

void require_restricted(const BriberyInstance& inst, const char* who) {
  require_add_for_p(inst, who);
  if (!inst.restricted_to_p) throw std::invalid_argument(std::string(who) + " needs restriction to p");
}

}  // namespace

BriberySolution gav_add_for_p(const BriberyInstance& inst) {
  require_restricted(inst, "GAV add-for-p");
  const Election& e = inst.election;
  const int m = e.num_candidates(), n = e.num_voters();
  const CandidateIndex p = inst.p;
  std::optional<BriberySolution> best;
  RoundState st;
  for (int round = 1; round <= inst.k; ++round) {
    if (replay_rounds(e, Rule::GAV, round - 1, p, st)) return {{}, 0, true};
    auto marginal = [&](CandidateIndex c) {
      int g = 0;
      for (VoterIndex v = 0; v < n; ++v) g += (st.count[v] == 0 && e.approves(v, c)) ? 1 : 0;
      return g;
    };
    int target = 0;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (c == p || st.chosen[c]) continue;
      target = std::max(target, marginal(c) + (c < p ? 1 : 0));
    }
    int deficit = target - marginal(p);
    std::vector<std::pair<Cost, VoterIndex>> offers;
    for (VoterIndex v = 0; v < n; ++v) {
      if (st.count[v] != 0 || e.approves(v, p)) continue;
      Price price = inst.add_price(v, p);
      if (price.is_finite()) offers.emplace_back(price.value(), v);
    }
    if (deficit > static_cast<int>(offers.size())) continue;
    std::sort(offers.begin(), offers.end());
    BriberySolution s{{}, 0, true};
    for (int i = 0; i < deficit; ++i) {
      s.actions.push_back(AtomicAction::add(offers[i].second, p));
      s.cost += offers[i].first;
    }
    std::sort(s.actions.begin(), s.actions.end());
    if (!best || better_solution(s, *best)) best = std::move(s);
  }
  if (!best) return BriberySolution::infeasible();
  return finish(inst, std::move(best->actions), best->cost);
}

namespace {

struct CoverItem {
  VoterIndex voter;
  Cost price;
  std::int64_t gain;
};

// Cheapest subset whose gains sum to at least `need`, or nullopt. Exact when `exact` is set
// (all prices equal), otherwise the value-scaling scheme with error epsilon.
std::optional<std::vector<VoterIndex>> knapsack_cover(std::vector<CoverItem> items, std::int64_t need,
                                                      bool unit, const Rational& epsilon,
                                                      const Limits& limits) {
  std::vector<VoterIndex> free_take;
  std::vector<CoverItem> paid;
  for (const auto& it : items) {
    if (it.price == 0) {
      free_take.push_back(it.voter);
      need -= it.gain;
    } else {
      paid.push_back(it);
    }
  }
  if (need <= 0) return free_take;
  std::int64_t reachable = 0;
  for (const auto& it : paid) reachable += it.gain;
  if (reachable < need) return std::nullopt;

  if (unit) {
    std::stable_sort(paid.begin(), paid.end(),
                     [](const CoverItem& a, const CoverItem& b) { return a.gain > b.gain; });
    auto out = free_take;
    for (const auto& it : paid) {
      if (need <= 0) break;
      out.push_back(it.voter);
      need -= it.gain;
    }
    return out;
  }

  // Guess the most expensive chosen item; round prices down to multiples of eps * P / q.
  std::optional<std::vector<VoterIndex>> best;
  Cost best_cost = 0;
  std::int64_t q = static_cast<std::int64_t>(paid.size());
  BigInt eps_num = epsilon.numerator(), eps_den = epsilon.denominator();
  std::vector<Cost> distinct;
  for (const auto& it : paid) distinct.push_back(it.price);
  std::sort(distinct.begin(), distinct.end());
  distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
  for (Cost top : distinct) {
    std::vector<CoverItem> pool;
    std::vector<std::int64_t> scaled;
    std::int64_t total_scaled = 0;
    std::int64_t pool_gain = 0;
    for (const auto& it : paid) {
      if (it.price > top) continue;
      BigInt s = BigInt(it.price) * q * eps_den / (eps_num * top);
      pool.push_back(it);
      scaled.push_back(static_cast<std::int64_t>(s));
      total_scaled += static_cast<std::int64_t>(s);
      pool_gain += it.gain;
    }
    if (pool_gain < need) continue;
    std::size_t width = static_cast<std::size_t>(total_scaled) + 1;
    if (width * (pool.size() + 1) > limits.max_enumeration)
      throw ResourceError("knapsack scaling table exceeds the limit");
    // gain[c] = max gain with scaled cost at most c.
    std::vector<std::int64_t> gain(width, 0);
    std::vector<char> take(pool.size() * width, 0);
    for (std::size_t i = 0; i < pool.size(); ++i) {
      for (std::int64_t c = total_scaled; c >= scaled[i]; --c) {
        std::int64_t cand = gain[c - scaled[i]] + pool[i].gain;
        if (cand > gain[c]) {
          gain[c] = cand;
          take[i * width + c] = 1;
        }
      }
    }
    std::int64_t c = 0;
    while (gain[c] < need) ++c;
    std::vector<VoterIndex> chosen = free_take;
    Cost actual = 0;
    for (std::size_t i = pool.size(); i-- > 0;) {
      if (take[i * width + c]) {
        chosen.push_back(pool[i].voter);
        actual += pool[i].price;
        c -= scaled[i];
      }
    }
    if (!best || actual < best_cost) {
      best = std::move(chosen);
      best_cost = actual;
    }
  }
  return best;
}

}  // namespace

BriberySolution rav_add_for_p(const BriberyInstance& inst, const Rational& epsilon,
                              const Limits& limits) {
  require_restricted(inst, "RAV add-for-p");
  if (epsilon <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  const Election& e = inst.election;
  const int m = e.num_candidates(), n = e.num_voters();
  const CandidateIndex p = inst.p;
  auto scale_opt = lcm_upto(inst.k);
  if (!scale_opt || static_cast<__int128>(*scale_opt) * (n + 1) * 2 > INT64_MAX)
    throw ResourceError("harmonic gains do not fit in 64-bit integers");
  std::int64_t scale = *scale_opt;

  bool unit = !inst.priced;
  if (!unit) {
    std::optional<Cost> seen;
    unit = true;
    for (VoterIndex v = 0; v < n && unit; ++v) {
      if (e.approves(v, p)) continue;
      Price price = inst.add_price(v, p);
      if (price.is_infinite()) continue;
      if (seen && *seen != price.value()) unit = false;
      seen = price.value();
    }
  }

  std::optional<BriberySolution> best;
  RoundState st;
  for (int round = 1; round <= inst.k; ++round) {
    if (replay_rounds(e, Rule::RAV, round - 1, p, st)) return {{}, 0, true};
    auto marginal = [&](CandidateIndex c) {
      std::int64_t g = 0;
      for (VoterIndex v = 0; v < n; ++v)
        if (e.approves(v, c)) g += scale / (st.count[v] + 1);
      return g;
    };
    std::int64_t target = 0;
    for (CandidateIndex c = 0; c < m; ++c) {
      if (c == p || st.chosen[c]) continue;
      target = std::max(target, marginal(c) + (c < p ? 1 : 0));
    }
    std::int64_t need = target - marginal(p);
    std::vector<CoverItem> items;
    for (VoterIndex v = 0; v < n; ++v) {
      if (e.approves(v, p)) continue;
      Price price = inst.add_price(v, p);
      if (price.is_finite()) items.push_back({v, price.value(), scale / (st.count[v] + 1)});
    }
    auto chosen = knapsack_cover(items, need, unit, epsilon, limits);
    if (!chosen) continue;
    std::vector<AtomicAction> actions;
    for (VoterIndex v : *chosen) actions.push_back(AtomicAction::add(v, p));
    std::sort(actions.begin(), actions.end());
    BriberySolution s{actions, instance_cost(inst, actions), true};
    if (!best || better_solution(s, *best)) best = std::move(s);
  }
  if (!best) return BriberySolution::infeasible();
  return finish(inst, std::move(best->actions), best->cost);
}

}  // namespace mwb
