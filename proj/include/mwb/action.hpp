#pragma once

#include <compare>
#include <span>
#include <string>
#include <vector>

#include "mwb/election.hpp"
#include "mwb/prices.hpp"

namespace mwb {

enum class OpKind { Add, Delete, Swap };

const char* to_string(OpKind op);

// One bribery step. Add uses `to`, Delete uses `from`, Swap uses both.
struct AtomicAction {
  OpKind kind = OpKind::Add;
  VoterIndex voter = 0;
  CandidateIndex from = -1;
  CandidateIndex to = -1;

  static AtomicAction add(VoterIndex v, CandidateIndex c) { return {OpKind::Add, v, -1, c}; }
  static AtomicAction del(VoterIndex v, CandidateIndex c) { return {OpKind::Delete, v, c, -1}; }
  static AtomicAction swap(VoterIndex v, CandidateIndex from, CandidateIndex to) {
    return {OpKind::Swap, v, from, to};
  }

  friend auto operator<=>(const AtomicAction&, const AtomicAction&) = default;
};

// Solution-file syntax: "add v1 p", "del v2 b", "swap v6 c p".
std::string format_action(const Election& e, const AtomicAction& a);

// Applies one action in place. Throws InvalidAction when the precondition fails; the
// election is left unchanged in that case.
void apply_action_in_place(Election& e, const AtomicAction& a);

Election apply_action(const Election& e, const AtomicAction& a);

// Left-to-right replay; each action is checked against the state produced by its predecessors.
Election apply_actions(const Election& e, std::span<const AtomicAction> actions);

Price action_price(const PriceTable& prices, const AtomicAction& a);

// Sum of the action prices. Throws InfeasibleAction on a forbidden action.
Cost solution_cost(std::span<const AtomicAction> actions, const PriceTable& prices);

}  // namespace mwb
