#pragma once

#include <optional>

#include "mwb/errors.hpp"
#include "mwb/instance.hpp"
#include "mwb/rules.hpp"

namespace mwb {

// Exhaustive exact solver for every rule and operation variant. Enumerates final ballots per
// voter (the cheapest action sequence reaching each one), then deepens over total cost. Meant
// for m, n <= 6; throws ResourceError past the configured limits.
BriberySolution oracle_bribery(const BriberyInstance& inst, Rule rule,
                               const Limits& limits = default_limits());

// Minimum bribery cost ignoring the instance budget; nullopt when no action set works.
std::optional<Cost> oracle_margin(const BriberyInstance& inst, Rule rule,
                                  const Limits& limits = default_limits());

}  // namespace mwb
