#include "mwb/instance.hpp"

#include <stdexcept>

#include "mwb/errors.hpp"

namespace mwb {

void BriberyInstance::validate() const {
  int m = election.num_candidates();
  if (m == 0) throw std::invalid_argument("election has no candidates");
  if (p < 0 || p >= m) throw std::invalid_argument("preferred candidate out of range");
  if (k < 1 || k > m) throw std::invalid_argument("committee size must lie in [1, m]");
  if (budget < 0) throw std::invalid_argument("negative budget");
  if (restricted_to_p && op == OpKind::Delete)
    throw std::invalid_argument("restriction to p does not apply to deletions");
}

Cost instance_cost(const BriberyInstance& inst, std::span<const AtomicAction> actions) {
  Cost total = 0;
  for (const auto& a : actions) {
    Price p = inst.price_of(a);
    if (p.is_infinite()) throw InfeasibleAction("forbidden action in solution");
    total += p.value();
  }
  return total;
}

bool better_solution(const BriberySolution& a, const BriberySolution& b) {
  if (a.feasible != b.feasible) return a.feasible;
  if (a.cost != b.cost) return a.cost < b.cost;
  return a.actions < b.actions;
}

}  // namespace mwb
