#include <doctest.h>

#include "mwb/av_bribery.hpp"
#include "mwb/generators.hpp"
#include "mwb/oracle.hpp"
#include "support/test_support.hpp"

using namespace mwb;
using namespace mwb::testing;

namespace {

void check_replay(const BriberyInstance& inst, const BriberySolution& s) {
  REQUIRE(s.feasible);
  auto after = apply_actions(inst.election, s.actions);
  CHECK(is_cowinner(after, Rule::AV, inst.k, inst.p));
  CHECK(instance_cost(inst, s.actions) == s.cost);
}

}  // namespace

TEST_CASE("av_add on the fixture") {
  auto s = av_add(e0_instance(OpKind::Add, 2, 4));
  CHECK(s.feasible);
  CHECK(s.cost == 4);
  check_replay(e0_instance(OpKind::Add, 2, 4), s);
  CHECK_FALSE(av_add(e0_instance(OpKind::Add, 2, 3)).feasible);
  auto none = av_add(e0_instance(OpKind::Add, 4, 0));
  CHECK(none.feasible);
  CHECK(none.cost == 0);
  CHECK(none.actions.empty());
}

TEST_CASE("av_add follows nondecreasing price") {
  auto inst = e0_instance(OpKind::Add, 3, kUnboundedBudget);
  inst.priced = true;
  inst.prices.set_add(0, 3, Price(5));
  inst.prices.set_add(2, 3, Price(2));
  inst.prices.set_add(3, 3, Price::infinite());
  // p needs 3 more to tie c at 4 with k = 3; cheapest three finite adds: 1 + 1 + 1.
  auto s = av_add(inst);
  CHECK(s.cost == 3);
  for (const auto& a : s.actions) CHECK(a.to == 3);
  check_replay(inst, s);
}

TEST_CASE("av_delete on the fixture") {
  auto s = av_delete(e0_instance(OpKind::Delete, 2));
  CHECK(s.cost == 7);
  check_replay(e0_instance(OpKind::Delete, 2), s);
  CHECK(av_delete(e0_instance(OpKind::Delete, 3)).cost == 3);
  CHECK(av_delete(e0_instance(OpKind::Delete, 4)).cost == 0);
  for (const auto& a : s.actions) CHECK(a.from != 3);
}

TEST_CASE("av_swap_unit on the fixture") {
  auto s = av_swap_unit(e0_instance(OpKind::Swap, 2));
  CHECK(s.cost == 3);
  check_replay(e0_instance(OpKind::Swap, 2), s);
  CHECK(av_swap_unit(e0_instance(OpKind::Swap, 3)).cost == 2);
  CHECK(av_swap_unit(e0_instance(OpKind::Swap, 4)).cost == 0);
  CHECK_FALSE(av_swap_unit(e0_instance(OpKind::Swap, 2, 2)).feasible);
}

TEST_CASE("av_priced_swap_exact equals the unit algorithm on unit prices") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomShape shape;
    shape.op = OpKind::Swap;
    shape.restricted = seed % 2;
    auto inst = random_instance(seed, shape);
    auto unit = av_swap_unit(inst);
    inst.priced = true;  // empty table: every price is 1
    auto flow = av_priced_swap_exact(inst);
    CHECK(unit.feasible == flow.feasible);
    CHECK(unit.cost == flow.cost);
  }
}

TEST_CASE("av_priced_swap_exact with every swap forbidden") {
  auto inst = e0_instance(OpKind::Swap);
  inst.priced = true;
  for (int v = 0; v < 9; ++v)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) inst.prices.set_swap(v, a, b, Price::infinite());
  CHECK_FALSE(av_priced_swap_exact(inst).feasible);
}

TEST_CASE("av_priced_swap_exact chains swaps inside one vote") {
  // Direct c->p is forbidden but c->b and b->p are cheap: the flow needs a two-step move.
  auto e = Election::from_names({"a", "b", "c", "p"}, {{"v1", {"a", "c"}}, {"v2", {"a", "c"}}, {"v3", {"b"}}});
  BriberyInstance inst;
  inst.election = e;
  inst.p = 3;
  inst.k = 1;
  inst.budget = kUnboundedBudget;
  inst.op = OpKind::Swap;
  inst.priced = true;
  for (int v = 0; v < 3; ++v)
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        if (a != b) inst.prices.set_swap(v, a, b, Price(9));
  inst.prices.set_swap(0, 0, 1, Price(1));
  inst.prices.set_swap(0, 1, 3, Price(1));
  auto s = av_priced_swap_exact(inst);
  auto o = oracle_margin(inst, Rule::AV);
  REQUIRE(o.has_value());
  CHECK(s.cost == *o);
  check_replay(inst, s);
}

TEST_CASE("av solvers: budget 0 feasibility is the co-winner test, and budgets are monotone") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    RandomShape shape;
    shape.op = std::array<OpKind, 3>{OpKind::Add, OpKind::Delete, OpKind::Swap}[seed % 3];
    shape.priced = seed % 2;
    auto inst = random_instance(seed + 50, shape);
    auto run = [&](Cost b) {
      auto x = with_budget(inst, b);
      if (shape.op == OpKind::Add) return av_add(x);
      if (shape.op == OpKind::Delete) return av_delete(x);
      return shape.priced ? av_priced_swap_exact(x) : av_swap_unit(x);
    };
    CHECK(run(0).feasible == is_cowinner(inst.election, Rule::AV, inst.k, inst.p));
    bool seen = false;
    for (Cost b = 0; b <= 8; ++b) {
      bool f = run(b).feasible;
      CHECK(!(seen && !f));
      seen = seen || f;
    }
  }
}

TEST_CASE("av solvers match the oracle") {
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    RandomShape shape;
    shape.op = std::array<OpKind, 3>{OpKind::Add, OpKind::Delete, OpKind::Swap}[seed % 3];
    shape.priced = (seed / 3) % 2;
    shape.restricted = shape.op != OpKind::Delete && seed % 4 == 0;
    auto inst = random_instance(seed + 900, shape);
    auto o = oracle_margin(inst, Rule::AV);
    BriberySolution s;
    if (shape.op == OpKind::Add) s = av_add(inst);
    else if (shape.op == OpKind::Delete) s = av_delete(inst);
    else s = shape.priced ? av_priced_swap_exact(inst) : av_swap_unit(inst);
    CHECK(s.feasible == o.has_value());
    if (o) {
      CHECK(s.cost == *o);
      check_replay(inst, s);
    }
    if (shape.op == OpKind::Add)
      for (const auto& a : s.actions) CHECK(a.to == inst.p);
    if (shape.op == OpKind::Delete)
      for (const auto& a : s.actions) CHECK(a.from != inst.p);
  }
}

TEST_CASE("independent-set instances cost exactly 3h") {
  Graph k4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
  auto inst = gen_is_to_av_swap(k4, 1);
  auto s = av_priced_swap_exact(inst);
  CHECK(s.feasible);
  CHECK(s.cost == 3);
  CHECK_FALSE(av_priced_swap_exact(gen_is_to_av_swap(k4, 2)).feasible);
}

TEST_CASE("guess guard") {
  auto inst = e0_instance(OpKind::Swap);
  inst.priced = true;
  Limits tight;
  tight.max_guesses = 5;
  CHECK_THROWS_AS(av_priced_swap_exact(inst, tight), ResourceError);
}
