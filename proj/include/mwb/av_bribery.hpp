#pragma once

#include "mwb/errors.hpp"
#include "mwb/instance.hpp"

namespace mwb {

// Bribery under AV. Each solver returns the cheapest solution it finds; the solution is
// marked infeasible when that cost exceeds the budget (or no solution exists at all).
// Ties on cost go to the lexicographically smallest action list.

// Adds approvals for p only, cheapest first. Exact for every Add variant.
BriberySolution av_add(const BriberyInstance& inst);

// Brings the cheapest members of {c : score(c) > score(p)} down to p's score. Exact.
BriberySolution av_delete(const BriberyInstance& inst);

// Unit-price swaps to p with a guessed threshold T in [0, n]. Exact for unit prices, restricted
// or not.
BriberySolution av_swap_unit(const BriberyInstance& inst);

// Priced swaps: guesses the committee W containing p and the threshold T, then solves a
// min-cost circulation. Exact; throws ResourceError if C(m-1, k-1) * (n+1) exceeds
// limits.max_guesses.
BriberySolution av_priced_swap_exact(const BriberyInstance& inst,
                                     const Limits& limits = default_limits());

}  // namespace mwb
