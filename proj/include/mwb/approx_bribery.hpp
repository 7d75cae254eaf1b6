#pragma once

#include <vector>

#include "mwb/errors.hpp"
#include "mwb/instance.hpp"
#include "mwb/rational.hpp"

namespace mwb {

struct GainSelection {
  std::vector<VoterIndex> voters;  // ascending
  Rational gain;                   // sum of 1/(|v|+1) over the chosen voters
  Cost cost = 0;
};

// Chooses voters not approving p to receive an approval for p, maximizing p's SAV gain within
// the budget (0/1 knapsack over the add prices). Ties favour the cheaper selection.
GainSelection sav_max_gain(const Election& e, CandidateIndex p, Cost budget,
                           const PriceTable& prices = {});

// SAV add-for-p: smallest budget t whose max-gain selection makes p a co-winner. Cost is at most
// twice the optimum. Requires an Add instance that is restricted to p or unpriced.
BriberySolution sav_add_for_p_2approx(const BriberyInstance& inst,
                                      const Limits& limits = default_limits());

// GAV add-for-p (restricted): guesses the round in which p is picked. Exact, priced or not.
BriberySolution gav_add_for_p(const BriberyInstance& inst);

// RAV add-for-p (restricted): guesses the round, then solves a min-cost knapsack cover.
// Exact for unit prices; cost at most (1 + epsilon) times the optimum when priced.
// Throws std::invalid_argument when epsilon <= 0.
BriberySolution rav_add_for_p(const BriberyInstance& inst, const Rational& epsilon = Rational(1, 10),
                              const Limits& limits = default_limits());

}  // namespace mwb
