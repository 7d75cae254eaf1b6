#include <doctest.h>

#include "mwb/av_bribery.hpp"
#include "mwb/generators.hpp"
#include "mwb/oracle.hpp"
#include "mwb/rules.hpp"
#include "support/test_support.hpp"

using namespace mwb;
using namespace mwb::testing;

namespace {
const Graph kK4{4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}};
}

TEST_CASE("independent-set reduction on K4") {
  auto inst = gen_is_to_av_swap(kK4, 1);
  CHECK(inst.election.num_candidates() == 5);
  CHECK(inst.election.num_voters() == 9);
  CHECK(inst.k == 4);
  CHECK(inst.budget == 3);
  CHECK(inst.restricted_to_p);
  CHECK(inst.priced);
  auto scores = av_scores(inst.election);
  CHECK(scores == std::vector<int>{0, 6, 6, 6, 6});
  CHECK(max_independent_set(kK4) == 1);
  auto s = oracle_bribery(inst, Rule::AV);
  CHECK(s.feasible);
  CHECK(s.cost == 3);
  CHECK_FALSE(oracle_bribery(gen_is_to_av_swap(kK4, 2), Rule::AV).feasible);
}

TEST_CASE("independent-set reduction rejects bad input") {
  Graph path{3, {{0, 1}, {1, 2}}};
  CHECK_THROWS_AS(gen_is_to_av_swap(path, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_is_to_av_swap(kK4, 0), std::invalid_argument);
  CHECK_THROWS_AS(gen_is_to_av_swap(kK4, 5), std::invalid_argument);
}

TEST_CASE("cubic graph enumeration") {
  CHECK(cubic_graphs(4).size() == 1);
  CHECK(cubic_graphs(6).size() == 2);
  // Five connected graphs plus two disjoint copies of K4.
  CHECK(cubic_graphs(8).size() == 6);
  for (int v : {4, 6, 8})
    for (const auto& g : cubic_graphs(v)) CHECK(g.is_cubic());
}

TEST_CASE("reduction is faithful on six-vertex graphs") {
  for (const auto& g : cubic_graphs(6)) {
    int alpha = max_independent_set(g);
    for (int h = 1; h <= 3; ++h) {
      auto inst = gen_is_to_av_swap(g, h);
      auto scores = av_scores(inst.election);
      for (int c = 1; c <= 6; ++c) CHECK(scores[c] == 3 + 3 * h);
      auto s = av_priced_swap_exact(inst);
      CHECK(s.feasible == (alpha >= h));
      if (s.feasible) CHECK(s.cost == 3 * h);
    }
  }
}

TEST_CASE("exact-cover reduction, n = 1") {
  auto x = X3CInstance::repeated_blocks(1);
  CHECK(has_exact_cover(x));
  auto inst = gen_x3c_to_sav_swap(x, 1);
  std::int64_t big_n = x3c_dummy_count(1, 1);
  CHECK(big_n == 54);
  CHECK(inst.election.num_voters() == 3 + 56 + 540);
  CHECK(inst.election.num_candidates() == 1 + 3 + 54);
  CHECK(inst.k == 54 + 2 + 1);
  CHECK(inst.budget == 3);
  auto scores = sav_scores(inst.election);
  CHECK(scores[0] == Rational(0));
  for (int j = 1; j <= 3; ++j) CHECK(scores[j] == Rational(1 + 1) - Rational(1, big_n + 3));
  // Swap each element voter's approval of S1 to p.
  std::vector<AtomicAction> cover{AtomicAction::swap(0, 1, 0), AtomicAction::swap(1, 1, 0),
                                  AtomicAction::swap(2, 1, 0)};
  CHECK(is_cowinner(apply_actions(inst.election, cover), Rule::SAV, inst.k, 0));
}

TEST_CASE("exact-cover reduction group sizes") {
  for (int n : {1, 2}) {
    for (int alpha : {1, 2}) {
      auto inst = gen_x3c_to_sav_swap(X3CInstance::repeated_blocks(n), alpha);
      std::int64_t big_n = x3c_dummy_count(n, alpha);
      int element = 0, middle = 0, dummy = 0;
      for (int v = 0; v < inst.election.num_voters(); ++v) {
        char tag = inst.election.voter_name(v)[0];
        element += tag == 'x';
        middle += tag == 'u';
        dummy += tag == 'w';
      }
      CHECK(element == 3 * n);
      CHECK(middle == n * (big_n + 3 * n) - 1);
      CHECK(dummy == 10 * n * big_n);
    }
  }
}

TEST_CASE("exact-cover reduction: no cover means no cheap bribery") {
  // Regular n = 2 family in which every two sets intersect, so there is no exact cover.
  X3CInstance x{2, {{0, 1, 2}, {0, 1, 3}, {0, 4, 5}, {1, 4, 5}, {2, 3, 4}, {2, 3, 5}}};
  x.validate();
  CHECK_FALSE(has_exact_cover(x));
  auto inst = gen_x3c_to_sav_swap(x, 1);
  // Spend the whole budget on element voters, one swap each (every such swap gives p 1/3; a swap
  // in the other groups gives p at most 1/N). Try every choice of set candidate per voter.
  int voters = 6;
  bool any = false;
  std::vector<int> choice(voters, 0);
  auto rec = [&](auto&& self, int v) -> void {
    if (any) return;
    if (v == voters) {
      std::vector<AtomicAction> acts;
      for (int u = 0; u < voters; ++u) {
        auto held = members(inst.election.approvals(u));
        acts.push_back(AtomicAction::swap(u, held[choice[u]], 0));
      }
      any = is_cowinner(apply_actions(inst.election, acts), Rule::SAV, inst.k, 0);
      return;
    }
    for (int i = 0; i < 3; ++i) choice[v] = i, self(self, v + 1);
  };
  rec(rec, 0);
  CHECK_FALSE(any);
  auto yes = gen_x3c_to_sav_swap(X3CInstance::repeated_blocks(2), 1);
  std::vector<AtomicAction> cover;
  for (int u = 0; u < 6; ++u) cover.push_back(AtomicAction::swap(u, 1 + 3 * (u / 3), 0));
  CHECK(is_cowinner(apply_actions(yes.election, cover), Rule::SAV, yes.k, 0));
}

TEST_CASE("exact-cover validation") {
  X3CInstance bad{1, {{0, 1, 2}, {0, 1, 2}, {0, 1, 1}}};
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  CHECK_THROWS_AS(gen_x3c_to_sav_swap(X3CInstance::repeated_blocks(1), 0), std::invalid_argument);
}

TEST_CASE("random elections") {
  auto none = gen_random_election(4, 5, 0.0, 1);
  for (int v = 0; v < 5; ++v) CHECK(none.approvals(v).none());
  auto all = gen_random_election(4, 5, 1.0, 1);
  for (int v = 0; v < 5; ++v) CHECK(all.approvals(v).all());
  CHECK(gen_random_election(6, 6, 0.5, 42) == gen_random_election(6, 6, 0.5, 42));
  CHECK_FALSE(gen_random_election(6, 6, 0.5, 42) == gen_random_election(6, 6, 0.5, 43));
  CHECK_THROWS_AS(gen_random_election(0, 3, 0.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(gen_random_election(2, 3, 1.5, 1), std::invalid_argument);
  auto e = gen_random_election(3, 4, 0.5, 9);
  CHECK(gen_random_prices(e, 3, 5) == gen_random_prices(e, 3, 5));
}
