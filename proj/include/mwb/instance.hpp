#pragma once

#include <limits>
#include <vector>

#include "mwb/action.hpp"
#include "mwb/election.hpp"
#include "mwb/prices.hpp"

namespace mwb {

// Budget value meaning "no limit"; solvers then report the minimum cost (the margin).
inline constexpr Cost kUnboundedBudget = std::numeric_limits<Cost>::max();

struct BriberyInstance {
  Election election;
  PriceTable prices;
  CandidateIndex p = 0;
  int k = 1;
  Cost budget = 0;
  OpKind op = OpKind::Add;
  bool priced = false;
  bool restricted_to_p = false;

  // Price of an action under this instance; always 1 when the instance is unpriced.
  Price price_of(const AtomicAction& a) const {
    return priced ? action_price(prices, a) : Price(1);
  }
  Price add_price(VoterIndex v, CandidateIndex c) const {
    return priced ? prices.add(v, c) : Price(1);
  }
  Price del_price(VoterIndex v, CandidateIndex c) const {
    return priced ? prices.del(v, c) : Price(1);
  }
  Price swap_price(VoterIndex v, CandidateIndex from, CandidateIndex to) const {
    return priced ? prices.swap(v, from, to) : Price(1);
  }

  bool within_budget(Cost c) const { return c <= budget; }
  bool unbounded() const { return budget == kUnboundedBudget; }

  // Throws std::invalid_argument on an inconsistent instance (bad p, k outside [1,m],
  // negative budget, restricted Delete).
  void validate() const;
};

struct BriberySolution {
  std::vector<AtomicAction> actions;
  Cost cost = 0;
  bool feasible = false;

  static BriberySolution infeasible() { return {}; }
};

// Cost of `actions` under the instance's pricing (unit prices when unpriced).
Cost instance_cost(const BriberyInstance& inst, std::span<const AtomicAction> actions);

// Orders solutions by cost, then lexicographically by action list.
bool better_solution(const BriberySolution& a, const BriberySolution& b);

}  // namespace mwb
