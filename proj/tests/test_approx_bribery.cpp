#include <doctest.h>

#include "mwb/approx_bribery.hpp"
#include "mwb/oracle.hpp"
#include "support/test_support.hpp"

using namespace mwb;
using namespace mwb::testing;

namespace {

// Exhaustive reference for the max-gain subproblem.
std::pair<Rational, Cost> best_gain(const Election& e, CandidateIndex p, Cost budget, const PriceTable& prices) {
  std::vector<VoterIndex> open;
  for (int v = 0; v < e.num_voters(); ++v)
    if (!e.approves(v, p) && prices.add(v, p).is_finite()) open.push_back(v);
  Rational best(0);
  Cost best_cost = 0;
  for (std::uint32_t mask = 0; mask < (1u << open.size()); ++mask) {
    Rational gain(0);
    Cost cost = 0;
    for (std::size_t i = 0; i < open.size(); ++i)
      if (mask >> i & 1) {
        gain += Rational(1, static_cast<std::int64_t>(e.approvals(open[i]).count()) + 1);
        cost += prices.add(open[i], p).value();
      }
    if (cost > budget) continue;
    if (gain > best || (gain == best && cost < best_cost)) best = gain, best_cost = cost;
  }
  return {best, best_cost};
}

BriberyInstance restricted_add(std::uint64_t seed, bool priced, int max_n = 6) {
  RandomShape shape;
  shape.op = OpKind::Add;
  shape.priced = priced;
  shape.restricted = true;
  shape.max_n = max_n;
  return random_instance(seed, shape);
}

}  // namespace

TEST_CASE("sav_max_gain examples") {
  auto e = e0();
  auto zero = sav_max_gain(e, 3, 0);
  CHECK(zero.voters.empty());
  CHECK(zero.gain == Rational(0));
  auto two = Election::from_names({"a", "b", "c", "p"}, {{"v1", {}}, {"v2", {"a", "b", "c"}}});
  auto pick = sav_max_gain(two, 3, 1);
  CHECK(pick.voters == std::vector<VoterIndex>{0});
  CHECK(pick.gain == Rational(1));
  // v3, v8 and v9 each approve one candidate, so two of them give 1/2 + 1/2.
  auto e0_two = sav_max_gain(e, 3, 2);
  CHECK(e0_two.gain == Rational(1));
  CHECK(e0_two.cost == 2);
  CHECK(e0_two.voters == std::vector<VoterIndex>{2, 7});
}

TEST_CASE("sav_max_gain is optimal against subset enumeration") {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto e = gen_random_election(2 + seed % 4, static_cast<int>(seed % 13), 0.4, seed);
    auto prices = gen_random_prices(e, 4, seed + 1, 0.1);
    CandidateIndex p = static_cast<int>(seed % e.num_candidates());
    Cost budget = static_cast<Cost>(seed % 9);
    auto got = sav_max_gain(e, p, budget, prices);
    auto [gain, cost] = best_gain(e, p, budget, prices);
    CHECK(got.gain == gain);
    CHECK(got.cost == cost);
    Rational sum(0);
    Cost paid = 0;
    for (auto v : got.voters) {
      CHECK_FALSE(e.approves(v, p));
      sum += Rational(1, static_cast<std::int64_t>(e.approvals(v).count()) + 1);
      paid += prices.add(v, p).value();
    }
    CHECK(sum == got.gain);
    CHECK(paid == got.cost);
  }
}

TEST_CASE("sav 2-approximation") {
  auto done = e0_instance(OpKind::Add, 4, 0);
  CHECK(sav_add_for_p_2approx(done).cost == 0);
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto inst = restricted_add(seed + 400, seed % 2);
    if (seed % 3 == 0) inst.restricted_to_p = false, inst.priced = false;
    auto opt = oracle_margin(inst, Rule::SAV);
    auto s = sav_add_for_p_2approx(inst);
    REQUIRE(s.feasible == opt.has_value());
    if (!opt) continue;
    CHECK(s.cost <= 2 * *opt);
    CHECK(is_cowinner(apply_actions(inst.election, s.actions), Rule::SAV, inst.k, inst.p));
    for (const auto& a : s.actions) CHECK(a.to == inst.p);
  }
  auto priced_open = restricted_add(1, true);
  priced_open.restricted_to_p = false;
  CHECK_THROWS_AS(sav_add_for_p_2approx(priced_open), std::invalid_argument);
}

TEST_CASE("sav oracle regression on the fixture") {
  // First verified oracle output, frozen.
  auto inst = e0_instance(OpKind::Add);
  inst.restricted_to_p = true;
  auto opt = oracle_margin(inst, Rule::SAV);
  REQUIRE(opt.has_value());
  CHECK(*opt == 4);
}

TEST_CASE("gav_add_for_p") {
  auto e = e0();
  auto inst = e0_instance(OpKind::Add, 4, 0);
  inst.restricted_to_p = true;
  CHECK(gav_add_for_p(inst).cost == 0);
  auto fixture = e0_instance(OpKind::Add);
  fixture.restricted_to_p = true;
  CHECK(gav_add_for_p(fixture).cost == 7);

  auto blocked = e0_instance(OpKind::Add);
  blocked.restricted_to_p = true;
  blocked.priced = true;
  for (int v = 0; v < 9; ++v) blocked.prices.set_add(v, 3, Price::infinite());
  CHECK_FALSE(gav_add_for_p(blocked).feasible);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto x = restricted_add(seed + 800, seed % 2);
    auto opt = oracle_margin(x, Rule::GAV);
    auto s = gav_add_for_p(x);
    CHECK(s.feasible == opt.has_value());
    if (opt) CHECK(s.cost == *opt);
    for (const auto& a : s.actions) {
      CHECK(a.to == x.p);
      CHECK_FALSE(x.election.approves(a.voter, x.p));
    }
  }
}

TEST_CASE("rav_add_for_p") {
  auto done = e0_instance(OpKind::Add, 4, 0);
  done.restricted_to_p = true;
  CHECK(rav_add_for_p(done).cost == 0);
  CHECK_THROWS_AS(rav_add_for_p(done, Rational(0)), std::invalid_argument);
  CHECK_THROWS_AS(rav_add_for_p(done, Rational(-1, 2)), std::invalid_argument);

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto x = restricted_add(seed + 1200, false);
    auto opt = oracle_margin(x, Rule::RAV);
    auto s = rav_add_for_p(x);
    CHECK(s.feasible == opt.has_value());
    if (opt) CHECK(s.cost == *opt);
  }
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto x = restricted_add(seed + 1600, true);
    auto opt = oracle_margin(x, Rule::RAV);
    for (auto eps : {Rational(1, 10), Rational(1, 2), Rational(1)}) {
      auto s = rav_add_for_p(x, eps);
      CHECK(s.feasible == opt.has_value());
      if (!opt) continue;
      CHECK(Rational(s.cost) <= (Rational(1) + eps) * Rational(*opt));
      CHECK(is_cowinner(apply_actions(x.election, s.actions), Rule::RAV, x.k, x.p));
      for (const auto& a : s.actions) CHECK(a.to == x.p);
    }
  }
}
