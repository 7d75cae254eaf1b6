#include "mwb/action.hpp"

#include "mwb/errors.hpp"

namespace mwb {

const char* to_string(OpKind op) {
  switch (op) {
    case OpKind::Add: return "add";
    case OpKind::Delete: return "delete";
    case OpKind::Swap: return "swap";
  }
  return "?";
}

std::string format_action(const Election& e, const AtomicAction& a) {
  const std::string& voter = e.voter_name(a.voter);
  switch (a.kind) {
    case OpKind::Add: return "add " + voter + " " + e.candidate_name(a.to);
    case OpKind::Delete: return "del " + voter + " " + e.candidate_name(a.from);
    case OpKind::Swap:
      return "swap " + voter + " " + e.candidate_name(a.from) + " " + e.candidate_name(a.to);
  }
  return {};
}

void apply_action_in_place(Election& e, const AtomicAction& a) {
  auto valid_candidate = [&](CandidateIndex c) { return c >= 0 && c < e.num_candidates(); };
  if (a.voter < 0 || a.voter >= e.num_voters())
    throw InvalidAction("no voter with index " + std::to_string(a.voter));
  const std::string& voter = e.voter_name(a.voter);
  CandidateSet s = e.approvals(a.voter);
  switch (a.kind) {
    case OpKind::Add:
      if (!valid_candidate(a.to)) throw InvalidAction("add for " + voter + ": bad candidate");
      if (s.test(a.to))
        throw InvalidAction("add " + voter + " " + e.candidate_name(a.to) + ": already approved");
      s.set(a.to);
      break;
    case OpKind::Delete:
      if (!valid_candidate(a.from)) throw InvalidAction("delete for " + voter + ": bad candidate");
      if (!s.test(a.from))
        throw InvalidAction("del " + voter + " " + e.candidate_name(a.from) + ": not approved");
      s.reset(a.from);
      break;
    case OpKind::Swap:
      if (!valid_candidate(a.from) || !valid_candidate(a.to))
        throw InvalidAction("swap for " + voter + ": bad candidate");
      if (a.from == a.to)
        throw InvalidAction("swap " + voter + " " + e.candidate_name(a.from) + " to itself");
      if (!s.test(a.from))
        throw InvalidAction("swap " + voter + " " + e.candidate_name(a.from) + " " +
                            e.candidate_name(a.to) + ": source not approved");
      if (s.test(a.to))
        throw InvalidAction("swap " + voter + " " + e.candidate_name(a.from) + " " +
                            e.candidate_name(a.to) + ": target already approved");
      s.reset(a.from);
      s.set(a.to);
      break;
  }
  e.set_approvals(a.voter, s);
}

Election apply_action(const Election& e, const AtomicAction& a) {
  Election out = e;
  apply_action_in_place(out, a);
  return out;
}

Election apply_actions(const Election& e, std::span<const AtomicAction> actions) {
  Election out = e;
  for (const auto& a : actions) apply_action_in_place(out, a);
  return out;
}

Price action_price(const PriceTable& prices, const AtomicAction& a) {
  switch (a.kind) {
    case OpKind::Add: return prices.add(a.voter, a.to);
    case OpKind::Delete: return prices.del(a.voter, a.from);
    case OpKind::Swap: return prices.swap(a.voter, a.from, a.to);
  }
  return Price::infinite();
}

Cost solution_cost(std::span<const AtomicAction> actions, const PriceTable& prices) {
  Cost total = 0;
  for (const auto& a : actions) {
    Price p = action_price(prices, a);
    if (p.is_infinite())
      throw InfeasibleAction("action on voter " + std::to_string(a.voter) + " is forbidden");
    total += p.value();
  }
  return total;
}

}  // namespace mwb
