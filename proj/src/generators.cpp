#include "mwb/generators.hpp"

#include <algorithm>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace mwb {

namespace {

std::vector<std::vector<char>> adjacency(const Graph& g) {
  std::vector<std::vector<char>> adj(g.num_vertices, std::vector<char>(g.num_vertices, 0));
  for (auto [u, v] : g.edges) adj[u][v] = adj[v][u] = 1;
  return adj;
}

double coin(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

}  // namespace

bool Graph::is_simple() const {
  std::set<std::pair<int, int>> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= num_vertices || v >= num_vertices || u == v) return false;
    if (!seen.insert(std::minmax(u, v)).second) return false;
  }
  return true;
}

bool Graph::is_cubic() const {
  if (!is_simple()) return false;
  std::vector<int> degree(num_vertices, 0);
  for (auto [u, v] : edges) ++degree[u], ++degree[v];
  return std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; });
}

BriberyInstance gen_is_to_av_swap(const Graph& g, int h) {
  if (!g.is_cubic()) throw std::invalid_argument("graph is not cubic");
  if (h < 1 || h > g.num_vertices) throw std::invalid_argument("h must lie in [1, vertices]");
  const int v_count = g.num_vertices;
  std::vector<std::string> names{"p"};
  for (int i = 1; i <= v_count; ++i) names.push_back("c" + std::to_string(i));
  std::vector<ApprovalBallot> ballots;
  int e_index = 0;
  for (auto [u, v] : g.edges) {
    CandidateSet s(v_count + 1);
    s.set(u + 1);
    s.set(v + 1);
    ballots.push_back({"e" + std::to_string(++e_index), s});
  }
  for (int i = 1; i <= 3 * h; ++i) {
    CandidateSet s(v_count + 1);
    s.set();
    s.reset(0);
    ballots.push_back({"b" + std::to_string(i), s});
  }
  BriberyInstance inst;
  inst.election = Election(names, std::move(ballots));
  int first_big = static_cast<int>(g.edges.size());
  for (VoterIndex v = first_big; v < inst.election.num_voters(); ++v)
    for (CandidateIndex c = 1; c <= v_count; ++c) inst.prices.set_swap(v, c, 0, Price(3 * h + 1));
  inst.p = 0;
  inst.k = v_count - h + 1;
  inst.budget = 3 * h;
  inst.op = OpKind::Swap;
  inst.priced = true;
  inst.restricted_to_p = true;
  return inst;
}

void X3CInstance::validate() const {
  if (n < 1) throw std::invalid_argument("X3C needs n >= 1");
  if (static_cast<int>(sets.size()) != 3 * n) throw std::invalid_argument("X3C needs exactly 3n sets");
  std::vector<int> hits(3 * n, 0);
  for (const auto& s : sets) {
    for (int x : s) {
      if (x < 0 || x >= 3 * n) throw std::invalid_argument("X3C element out of range");
      ++hits[x];
    }
    if (s[0] == s[1] || s[0] == s[2] || s[1] == s[2])
      throw std::invalid_argument("X3C set with a repeated element");
  }
  for (int h : hits)
    if (h != 3) throw std::invalid_argument("X3C element not in exactly three sets");
}

X3CInstance X3CInstance::repeated_blocks(int n) {
  X3CInstance x{n, {}};
  for (int b = 0; b < n; ++b)
    for (int copy = 0; copy < 3; ++copy) x.sets.push_back({3 * b, 3 * b + 1, 3 * b + 2});
  return x;
}

std::int64_t x3c_dummy_count(int n, int alpha) { return 27 * (static_cast<std::int64_t>(alpha) * n + 1); }

BriberyInstance gen_x3c_to_sav_swap(const X3CInstance& x, int alpha) {
  x.validate();
  if (alpha < 1) throw std::invalid_argument("alpha must be a positive integer");
  const int n = x.n;
  const std::int64_t big_n = x3c_dummy_count(n, alpha);
  const int set_count = 3 * n;
  const int m = 1 + set_count + static_cast<int>(big_n);
  std::vector<std::string> names{"p"};
  for (int j = 1; j <= set_count; ++j) names.push_back("S" + std::to_string(j));
  for (std::int64_t d = 1; d <= big_n; ++d) names.push_back("d" + std::to_string(d));

  std::vector<ApprovalBallot> ballots;
  for (int elem = 0; elem < 3 * n; ++elem) {
    CandidateSet s(m);
    for (int j = 0; j < set_count; ++j)
      if (std::find(x.sets[j].begin(), x.sets[j].end(), elem) != x.sets[j].end()) s.set(1 + j);
    ballots.push_back({"x" + std::to_string(elem + 1), s});
  }
  CandidateSet sets_and_dummies(m);
  sets_and_dummies.set();
  sets_and_dummies.reset(0);
  std::int64_t middle = n * (big_n + 3 * n) - 1;
  for (std::int64_t i = 1; i <= middle; ++i) ballots.push_back({"u" + std::to_string(i), sets_and_dummies});
  CandidateSet dummies = sets_and_dummies;
  for (int j = 1; j <= set_count; ++j) dummies.reset(j);
  for (std::int64_t i = 1; i <= 10 * n * big_n; ++i) ballots.push_back({"w" + std::to_string(i), dummies});

  BriberyInstance inst;
  inst.election = Election(names, std::move(ballots));
  inst.p = 0;
  inst.k = static_cast<int>(big_n) + 2 * n + 1;
  inst.budget = 3 * n;
  inst.op = OpKind::Swap;
  inst.priced = false;
  inst.restricted_to_p = true;
  return inst;
}

Election gen_random_election(int m, int n, double approval_probability, std::uint64_t seed) {
  if (m < 1) throw std::invalid_argument("need at least one candidate");
  if (n < 0) throw std::invalid_argument("negative voter count");
  if (!(approval_probability >= 0.0 && approval_probability <= 1.0))
    throw std::invalid_argument("approval probability outside [0, 1]");
  std::mt19937_64 gen(seed);
  std::vector<std::string> names;
  for (int c = 1; c <= m; ++c) names.push_back("c" + std::to_string(c));
  std::vector<ApprovalBallot> ballots;
  for (int v = 1; v <= n; ++v) {
    CandidateSet s(m);
    for (int c = 0; c < m; ++c)
      if (coin(gen) < approval_probability) s.set(c);
    ballots.push_back({"v" + std::to_string(v), s});
  }
  return Election(names, std::move(ballots));
}

PriceTable gen_random_prices(const Election& e, int max_price, std::uint64_t seed,
                             double forbid_probability) {
  if (max_price < 1) throw std::invalid_argument("max price must be positive");
  std::mt19937_64 gen(seed);
  std::uniform_int_distribution<int> value(1, max_price);
  auto draw = [&]() { return coin(gen) < forbid_probability ? Price::infinite() : Price(value(gen)); };
  PriceTable t;
  int m = e.num_candidates();
  for (VoterIndex v = 0; v < e.num_voters(); ++v)
    for (CandidateIndex a = 0; a < m; ++a) {
      t.set_add(v, a, draw());
      t.set_del(v, a, draw());
      for (CandidateIndex b = 0; b < m; ++b)
        if (a != b) t.set_swap(v, a, b, draw());
    }
  return t;
}

bool isomorphic(const Graph& a, const Graph& b) {
  if (a.num_vertices != b.num_vertices || a.edges.size() != b.edges.size()) return false;
  int n = a.num_vertices;
  auto adj_a = adjacency(a), adj_b = adjacency(b);
  std::vector<int> deg_a(n, 0), deg_b(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) deg_a[i] += adj_a[i][j], deg_b[i] += adj_b[i][j];
  std::vector<int> map(n, -1);
  std::vector<char> used(n, 0);
  auto rec = [&](auto&& self, int u) -> bool {
    if (u == n) return true;
    for (int w = 0; w < n; ++w) {
      if (used[w] || deg_a[u] != deg_b[w]) continue;
      bool ok = true;
      for (int x = 0; x < u && ok; ++x) ok = adj_a[u][x] == adj_b[w][map[x]];
      if (!ok) continue;
      map[u] = w;
      used[w] = 1;
      if (self(self, u + 1)) return true;
      used[w] = 0;
    }
    return false;
  };
  return rec(rec, 0);
}

std::vector<Graph> cubic_graphs(int vertices) {
  if (vertices < 4 || vertices % 2 != 0)
    throw std::invalid_argument("cubic graphs need an even vertex count of at least 4");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < vertices; ++i)
    for (int j = i + 1; j < vertices; ++j) pairs.emplace_back(i, j);
  std::vector<Graph> classes;
  std::vector<int> degree(vertices, 0);
  Graph current{vertices, {}};
  // Up to relabeling, vertex 0 is adjacent to exactly 1, 2 and 3.
  auto rec = [&](auto&& self, std::size_t idx) -> void {
    if (idx == pairs.size()) {
      if (!std::all_of(degree.begin(), degree.end(), [](int d) { return d == 3; })) return;
      for (const auto& g : classes)
        if (isomorphic(g, current)) return;
      classes.push_back(current);
      return;
    }
    auto [u, v] = pairs[idx];
    // Once all pairs starting at u are decided, u must be saturated.
    bool last_for_u = v == vertices - 1;
    bool forced_in = u == 0 && v <= 3;
    bool forced_out = u == 0 && v > 3;
    if (!forced_out && degree[u] < 3 && degree[v] < 3) {
      ++degree[u], ++degree[v];
      current.edges.emplace_back(u, v);
      if (!last_for_u || degree[u] == 3) self(self, idx + 1);
      current.edges.pop_back();
      --degree[u], --degree[v];
    }
    if (!forced_in && (!last_for_u || degree[u] == 3)) self(self, idx + 1);
  };
  rec(rec, 0);
  return classes;
}

}  // namespace mwb
