#pragma once

#include "mwb/errors.hpp"
#include "mwb/instance.hpp"
#include "mwb/rules.hpp"

namespace mwb {

// Solvers whose running time is exponential only in the number of voters n. All are exact and
// report infeasible when the cheapest solution exceeds the budget.

// Add restricted to p: tries every subset of the voters not approving p. Throws ResourceError
// when more than limits.max_subset_voters voters qualify.
BriberySolution add_for_p_subset_enum(const BriberyInstance& inst, Rule rule,
                                      const Limits& limits = default_limits());

// Unit-price Add or Swap. Only the n lowest-index candidates of each type (plus p) are touched
// while searching below cost n; from cost n on, making every voter approve p is tried, and if
// the rule's tie-breaking still excludes p the search continues over all candidates.
BriberySolution unpriced_type_enum(const BriberyInstance& inst, Rule rule,
                                   const Limits& limits = default_limits());

// Priced Swap restricted to p. For every pair of types (s, s') with s' obtained from s by
// swapping to p, only the n cheapest candidates making that change are kept.
BriberySolution priced_swap_to_p_type_enum(const BriberyInstance& inst, Rule rule,
                                           const Limits& limits = default_limits());

// CCAV or GAV with Add or Delete, priced or not. Guesses the candidate types present after the
// bribery; for CCAV each guess is a min-cost flow with lower bounds, for GAV the guess also fixes
// the lowest-index holder of each type. Throws ResourceError when n > limits.max_type_voters.
BriberySolution ccav_gav_flow_bribery(const BriberyInstance& inst, Rule rule,
                                      const Limits& limits = default_limits());

}  // namespace mwb
