#pragma once

// Shared exhaustive search: every voter picks one final ballot from a precomputed option list.

#include <optional>
#include <vector>

#include "mwb/errors.hpp"
#include "mwb/instance.hpp"
#include "mwb/rules.hpp"

namespace mwb::detail {

struct VoteOption {
  CandidateSet approvals;
  Cost cost = 0;
  std::vector<AtomicAction> actions;  // valid in order, starting from the original ballot
};

// Per voter; option 0 is always the untouched ballot at cost 0.
using OptionTable = std::vector<std::vector<VoteOption>>;

// Cheapest option combination of total cost <= max_cost that makes p a co-winner, found by
// iterative deepening over the achievable totals. Throws ResourceError past
// limits.max_oracle_leaves evaluated combinations.
std::optional<BriberySolution> cheapest_combination(const BriberyInstance& inst, Rule rule,
                                                    const OptionTable& options, Cost max_cost,
                                                    const Limits& limits);

// Largest total any combination can reach.
Cost max_total(const OptionTable& options);

}  // namespace mwb::detail
