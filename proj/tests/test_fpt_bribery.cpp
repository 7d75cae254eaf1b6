#include <doctest.h>

#include "mwb/av_bribery.hpp"
#include "mwb/fpt_bribery.hpp"
#include "mwb/oracle.hpp"
#include "support/test_support.hpp"

using namespace mwb;
using namespace mwb::testing;

namespace {

const std::array<Rule, 6> kRules{Rule::AV, Rule::SAV, Rule::CCAV, Rule::GAV, Rule::PAV, Rule::RAV};

void check_against_oracle(const BriberyInstance& inst, Rule rule, const BriberySolution& s) {
  auto opt = oracle_margin(inst, rule);
  CHECK(s.feasible == opt.has_value());
  if (!opt) return;
  CHECK(s.cost == *opt);
  auto after = apply_actions(inst.election, s.actions);
  CHECK(is_cowinner(after, rule, inst.k, inst.p));
  CHECK(instance_cost(inst, s.actions) == s.cost);
}

// Appends a copy of candidate `c` with the same approvers.
BriberyInstance with_clone(BriberyInstance inst, CandidateIndex c) {
  const Election& e = inst.election;
  std::vector<std::string> names;
  for (const auto& x : e.candidates()) names.push_back(x.name);
  names.push_back("clone" + std::to_string(e.num_candidates()));
  std::vector<ApprovalBallot> ballots;
  for (int v = 0; v < e.num_voters(); ++v) {
    CandidateSet s = e.approvals(v);
    s.resize(names.size());
    if (e.approves(v, c)) s.set(names.size() - 1);
    ballots.push_back({e.voter_name(v), s});
  }
  inst.election = Election(names, ballots);
  return inst;
}

}  // namespace

TEST_CASE("add_for_p_subset_enum") {
  auto fixture = e0_instance(OpKind::Add);
  fixture.restricted_to_p = true;
  CHECK(add_for_p_subset_enum(fixture, Rule::AV).cost == 4);
  CHECK(add_for_p_subset_enum(fixture, Rule::AV).cost == av_add(fixture).cost);
  auto done = e0_instance(OpKind::Add, 4, 0);
  done.restricted_to_p = true;
  CHECK(add_for_p_subset_enum(done, Rule::PAV).cost == 0);
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    RandomShape shape;
    shape.op = OpKind::Add;
    shape.restricted = true;
    shape.priced = seed % 2;
    shape.max_n = 5;
    auto inst = random_instance(seed + 30000, shape);
    Rule rule = kRules[seed % 6];
    check_against_oracle(inst, rule, add_for_p_subset_enum(inst, rule));
  }
  Limits tight;
  tight.max_subset_voters = 3;
  CHECK_THROWS_AS(add_for_p_subset_enum(fixture, Rule::AV, tight), ResourceError);
}

TEST_CASE("unpriced_type_enum") {
  CHECK(unpriced_type_enum(e0_instance(OpKind::Swap), Rule::AV).cost == 3);
  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    RandomShape shape;
    shape.op = seed % 2 ? OpKind::Swap : OpKind::Add;
    shape.restricted = seed % 4 < 2;
    shape.max_n = 4;
    auto inst = random_instance(seed + 31000, shape);
    Rule rule = kRules[seed % 6];
    check_against_oracle(inst, rule, unpriced_type_enum(inst, rule));
  }
}

TEST_CASE("unpriced_type_enum: budget of n suffices") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    RandomShape shape;
    shape.op = seed % 2 ? OpKind::Swap : OpKind::Add;
    shape.max_n = 4;
    auto inst = random_instance(seed + 32000, shape);
    Rule rule = kRules[seed % 6];
    // Swaps need a nonempty ballot in every voter lacking p; Add always works.
    bool swappable = true;
    for (int v = 0; v < inst.election.num_voters(); ++v)
      if (!inst.election.approves(v, inst.p) && inst.election.approvals(v).none()) swappable = false;
    if (shape.op == OpKind::Swap && !swappable) continue;
    if (rule == Rule::GAV || rule == Rule::RAV) continue;  // lowest-index tie-breaking is not neutral
    auto s = unpriced_type_enum(with_budget(inst, inst.election.num_voters()), rule);
    CHECK(s.feasible);
    CHECK(s.cost <= inst.election.num_voters());
  }
}

TEST_CASE("unpriced_type_enum ignores surplus clones") {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    RandomShape shape;
    shape.op = seed % 2 ? OpKind::Swap : OpKind::Add;
    shape.max_n = 3;
    shape.max_m = 5;
    auto inst = random_instance(seed + 33000, shape);
    Rule rule = kRules[seed % 6];
    int n = inst.election.num_voters();
    CandidateIndex c = (inst.p + 1) % inst.election.num_candidates();
    if (c == inst.p) continue;
    auto padded = inst;
    // Below k clones a new copy can still push p out, so pad past both k and n.
    for (int i = 0; i < n + inst.k; ++i) padded = with_clone(padded, c);
    auto base = unpriced_type_enum(padded, rule);
    auto more = unpriced_type_enum(with_clone(padded, c), rule);
    // Clones go at the end, so p's index and the tie-breaking among earlier candidates are kept.
    CHECK(base.feasible == more.feasible);
    CHECK(base.cost == more.cost);
  }
}

TEST_CASE("priced_swap_to_p_type_enum") {
  auto blocked = e0_instance(OpKind::Swap);
  blocked.restricted_to_p = true;
  blocked.priced = true;
  for (int v = 0; v < 9; ++v)
    for (int c = 0; c < 3; ++c) blocked.prices.set_swap(v, c, 3, Price::infinite());
  CHECK_FALSE(priced_swap_to_p_type_enum(blocked, Rule::SAV).feasible);

  for (std::uint64_t seed = 0; seed < 240; ++seed) {
    RandomShape shape;
    shape.op = OpKind::Swap;
    shape.restricted = true;
    shape.priced = true;
    shape.max_m = 5;
    shape.max_n = 4;
    auto inst = random_instance(seed + 34000, shape);
    Rule rule = kRules[seed % 6];
    check_against_oracle(inst, rule, priced_swap_to_p_type_enum(inst, rule));
    auto unit = inst;
    unit.priced = false;
    auto a = unpriced_type_enum(unit, rule);
    unit.priced = true;
    unit.prices = {};
    auto b = priced_swap_to_p_type_enum(unit, rule);
    CHECK(a.feasible == b.feasible);
    CHECK(a.cost == b.cost);
  }
}

TEST_CASE("ccav_gav_flow_bribery") {
  auto unanimous = Election::from_names({"a", "b", "p"}, {{"v1", {"a", "p"}}, {"v2", {"b", "p"}}});
  for (int k = 1; k <= 3; ++k) {
    BriberyInstance inst;
    inst.election = unanimous;
    inst.p = 2;
    inst.k = k;
    inst.budget = 0;
    inst.op = OpKind::Delete;
    CHECK(ccav_gav_flow_bribery(inst, Rule::CCAV).feasible);
    CHECK(ccav_gav_flow_bribery(inst, Rule::CCAV).cost == 0);
  }
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RandomShape shape;
    shape.op = seed % 2 ? OpKind::Delete : OpKind::Add;
    shape.priced = seed % 4 < 2;
    shape.restricted = shape.op == OpKind::Add && seed % 3 == 0;
    shape.max_m = 5;
    shape.max_n = seed % 5 == 0 ? 4 : 3;
    shape.max_price = 2;
    auto inst = random_instance(seed + 35000, shape);
    Rule rule = seed % 8 < 4 ? Rule::CCAV : Rule::GAV;
    check_against_oracle(inst, rule, ccav_gav_flow_bribery(inst, rule));
  }
  auto big = e0_instance(OpKind::Add);
  CHECK_THROWS_AS(ccav_gav_flow_bribery(big, Rule::CCAV), ResourceError);
}

TEST_CASE("ccav_gav_flow_bribery: an affordable type can still lose") {
  // p's only cheap change makes it cover v3 alone, which no optimal committee needs.
  auto e = Election::from_names({"a", "b", "p"}, {{"v1", {"a"}}, {"v2", {"b"}}, {"v3", {"a"}}});
  BriberyInstance inst;
  inst.election = e;
  inst.p = 2;
  inst.k = 2;
  inst.op = OpKind::Add;
  inst.priced = true;
  inst.prices.set_add(0, 2, Price(5));
  inst.prices.set_add(1, 2, Price(5));
  inst.prices.set_add(2, 2, Price(1));
  inst.budget = 1;
  for (int v = 0; v < 3; ++v)
    for (int c = 0; c < 2; ++c) inst.prices.set_add(v, c, Price(9));
  CHECK_FALSE(ccav_gav_flow_bribery(inst, Rule::CCAV).feasible);
  CHECK_FALSE(oracle_bribery(inst, Rule::CCAV).feasible);
  auto opt = oracle_margin(inst, Rule::CCAV);
  REQUIRE(opt.has_value());
  inst.budget = *opt;
  CHECK(ccav_gav_flow_bribery(inst, Rule::CCAV).feasible);
  CHECK(ccav_gav_flow_bribery(inst, Rule::CCAV).cost == *opt);
}
