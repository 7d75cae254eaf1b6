#pragma once

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

#include "mwb/instance.hpp"

namespace mwb {

struct Graph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;

  // No loops, no repeated edges, endpoints in range.
  bool is_simple() const;
  bool is_cubic() const;
};

// Candidates p, c1..cV; one unit-price voter per edge approving its endpoints; 3h voters
// approving every vertex candidate whose swaps to p cost 3h+1. k = V - h + 1, budget 3h,
// priced Swap restricted to p. Throws std::invalid_argument unless g is cubic and 1 <= h <= V.
BriberyInstance gen_is_to_av_swap(const Graph& g, int h);

// Restricted exact cover by 3-sets over elements 0..3n-1: 3n sets of three distinct elements,
// each element in exactly three sets.
struct X3CInstance {
  int n = 0;
  std::vector<std::array<int, 3>> sets;

  // Throws std::invalid_argument when the regularity conditions fail.
  void validate() const;
  // n disjoint blocks, each listed three times; always has an exact cover.
  static X3CInstance repeated_blocks(int n);
};

// Candidates p, S1..S3n, d1..dN with N = 27(alpha n + 1); 3n element voters, n(N+3n)-1 voters on
// every set and dummy candidate, 10nN voters on the dummies. k = N + 2n + 1, budget 3n, unit-price
// Swap restricted to p.
BriberyInstance gen_x3c_to_sav_swap(const X3CInstance& x, int alpha);
std::int64_t x3c_dummy_count(int n, int alpha);

// Candidates c1..cm, voters v1..vn; every approval is an independent coin with the given
// probability, drawn from mt19937_64 (top 53 bits of each output, scaled to [0,1)).
Election gen_random_election(int m, int n, double approval_probability, std::uint64_t seed);

// Every add, delete and swap price drawn uniformly from [1, max_price]; with probability
// forbid_probability an entry is infinite instead.
PriceTable gen_random_prices(const Election& e, int max_price, std::uint64_t seed,
                             double forbid_probability = 0.0);

// All cubic graphs on `vertices` vertices up to isomorphism (vertices even, >= 4).
std::vector<Graph> cubic_graphs(int vertices);

bool isomorphic(const Graph& a, const Graph& b);

}  // namespace mwb
