#include "mwb/rules.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace mwb {

namespace {

using Word = std::uint64_t;

void check_k(const Election& e, int k) {
  if (k < 1 || k > e.num_candidates())
    throw std::invalid_argument("committee size " + std::to_string(k) + " outside [1, " +
                                std::to_string(e.num_candidates()) + "]");
}

// Approver sets of all candidates as packed words (n bits each).
struct VoterMasks {
  int words = 0;
  std::vector<Word> bits;  // m * words

  explicit VoterMasks(const Election& e) : words((e.num_voters() + 63) / 64) {
    bits.assign(static_cast<std::size_t>(e.num_candidates()) * words, 0);
    for (VoterIndex v = 0; v < e.num_voters(); ++v) {
      const auto& s = e.approvals(v);
      for (auto c = s.find_first(); c != CandidateSet::npos; c = s.find_next(c))
        bits[c * words + v / 64] |= Word{1} << (v % 64);
    }
  }
  const Word* of(CandidateIndex c) const { return bits.data() + static_cast<std::size_t>(c) * words; }
};

int popcount_or(const Word* acc, const Word* add, int words) {
  int total = 0;
  for (int i = 0; i < words; ++i) total += std::popcount(acc[i] | add[i]);
  return total;
}

std::vector<std::vector<VoterIndex>> voters_of(const Election& e) {
  std::vector<std::vector<VoterIndex>> out(e.num_candidates());
  for (VoterIndex v = 0; v < e.num_voters(); ++v) {
    const auto& s = e.approvals(v);
    for (auto c = s.find_first(); c != CandidateSet::npos; c = s.find_next(c)) out[c].push_back(v);
  }
  return out;
}

void check_enumerable(const Election& e, int k, const Limits& limits) {
  auto count = binomial(e.num_candidates(), k);
  if (count > limits.max_committees)
    throw ResourceError("C(" + std::to_string(e.num_candidates()) + "," + std::to_string(k) +
                        ") = " + std::to_string(count) + " committees exceeds the limit of " +
                        std::to_string(limits.max_committees));
}

// Depth-first enumeration of k-subsets in lexicographic order; `enter(c, depth)` is called when c
// is placed at position depth, `leave` on backtrack, `leaf(committee)` at full size.
template <class Enter, class Leave, class Leaf>
void enumerate_subsets(int m, int k, Enter&& enter, Leave&& leave, Leaf&& leaf) {
  Committee w;
  w.reserve(k);
  bool stop = false;
  auto rec = [&](auto&& self, int start) -> void {
    if (static_cast<int>(w.size()) == k) {
      if (!leaf(w)) stop = true;
      return;
    }
    int need = k - static_cast<int>(w.size());
    for (int c = start; c <= m - need && !stop; ++c) {
      enter(c, static_cast<int>(w.size()));
      w.push_back(c);
      self(self, c + 1);
      w.pop_back();
      leave(c);
    }
  };
  rec(rec, 0);
}

// CCAV: coverage for every committee, via incremental OR per depth.
template <class Leaf>
void enumerate_coverage(const Election& e, int k, Leaf&& leaf) {
  VoterMasks masks(e);
  int words = masks.words;
  std::vector<Word> stack(static_cast<std::size_t>(k + 1) * std::max(words, 1), 0);
  std::vector<int> cover(k + 1, 0);
  enumerate_subsets(
      e.num_candidates(), k,
      [&](int c, int depth) {
        const Word* prev = stack.data() + depth * words;
        Word* next = stack.data() + (depth + 1) * words;
        const Word* add = masks.of(c);
        for (int i = 0; i < words; ++i) next[i] = prev[i] | add[i];
        cover[depth + 1] = popcount_or(next, next, words);
      },
      [](int) {}, [&](const Committee& w) { return leaf(w, cover[k]); });
}

// Scaled harmonic weights: weight[t] = L/t for t = 1..k, or Rational 1/t.
template <class S>
std::vector<S> harmonic_weights(int k, std::int64_t scale);

template <>
std::vector<std::int64_t> harmonic_weights<std::int64_t>(int k, std::int64_t scale) {
  std::vector<std::int64_t> w(k + 1, 0);
  for (int t = 1; t <= k; ++t) w[t] = scale / t;
  return w;
}

template <>
std::vector<Rational> harmonic_weights<Rational>(int k, std::int64_t) {
  std::vector<Rational> w(k + 1, 0);
  for (int t = 1; t <= k; ++t) w[t] = Rational(1, t);
  return w;
}

// L = lcm(1..k) if n * L * k fits comfortably in int64 (bounds any PAV total).
std::optional<std::int64_t> pav_scale(int n, int k) {
  auto l = lcm_upto(k);
  if (!l) return std::nullopt;
  __int128 bound = static_cast<__int128>(*l) * (n + 1) * (k + 1);
  if (bound > static_cast<__int128>(INT64_MAX) / 4) return std::nullopt;
  return l;
}

template <class S, class Leaf>
void enumerate_pav(const Election& e, int k, std::int64_t scale, Leaf&& leaf) {
  auto weight = harmonic_weights<S>(k, scale);
  auto approvers = voters_of(e);
  std::vector<int> count(e.num_voters(), 0);
  std::vector<S> score(k + 1, S(0));
  enumerate_subsets(
      e.num_candidates(), k,
      [&](int c, int depth) {
        S s = score[depth];
        for (VoterIndex v : approvers[c]) s += weight[++count[v]];
        score[depth + 1] = s;
      },
      [&](int c) {
        for (VoterIndex v : approvers[c]) --count[v];
      },
      [&](const Committee& w) { return leaf(w, score[k]); });
}

template <class S>
void pav_winners(const Election& e, int k, std::int64_t scale,
                 const std::function<bool(const Committee&)>& visit) {
  std::optional<S> best;
  enumerate_pav<S>(e, k, scale, [&](const Committee&, const S& s) {
    if (!best || s > *best) best = s;
    return true;
  });
  enumerate_pav<S>(e, k, scale, [&](const Committee& w, const S& s) {
    return s == *best ? visit(w) : true;
  });
}

template <class S>
bool pav_cowinner(const Election& e, int k, CandidateIndex p, std::int64_t scale) {
  std::optional<S> best, best_p;
  enumerate_pav<S>(e, k, scale, [&](const Committee& w, const S& s) {
    if (!best || s > *best) best = s;
    if (std::binary_search(w.begin(), w.end(), p) && (!best_p || s > *best_p)) best_p = s;
    return true;
  });
  return best_p && *best_p == *best;
}

// SAV scores scaled by lcm(1..max ballot size), when that fits.
std::optional<std::vector<std::int64_t>> sav_scaled(const Election& e) {
  int max_size = 1;
  for (const auto& b : e.ballots()) max_size = std::max<int>(max_size, b.approved.count());
  auto l = lcm_upto(max_size);
  if (!l || static_cast<__int128>(*l) * (e.num_voters() + 1) > INT64_MAX) return std::nullopt;
  std::vector<std::int64_t> score(e.num_candidates(), 0);
  for (const auto& b : e.ballots()) {
    auto size = static_cast<std::int64_t>(b.approved.count());
    if (size == 0) continue;
    std::int64_t share = *l / size;
    for (auto c = b.approved.find_first(); c != CandidateSet::npos; c = b.approved.find_next(c))
      score[c] += share;
  }
  return score;
}

template <class S>
void top_k_committees(const std::vector<S>& score, int k,
                      const std::function<bool(const Committee&)>& visit) {
  int m = static_cast<int>(score.size());
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return score[a] > score[b]; });
  const S& threshold = score[order[k - 1]];
  Committee sure;
  std::vector<CandidateIndex> tied;
  for (int c = 0; c < m; ++c) {
    if (score[c] > threshold) sure.push_back(c);
    else if (score[c] == threshold) tied.push_back(c);
  }
  int pick = k - static_cast<int>(sure.size());
  enumerate_subsets(
      static_cast<int>(tied.size()), pick, [](int, int) {}, [](int) {},
      [&](const Committee& chosen) {
        Committee w = sure;
        for (int i : chosen) w.push_back(tied[i]);
        std::sort(w.begin(), w.end());
        return visit(w);
      });
}

template <class S>
bool top_k_cowinner(const std::vector<S>& score, int k, CandidateIndex p) {
  int above = 0;
  for (const auto& s : score) above += s > score[p] ? 1 : 0;
  return above <= k - 1;
}

template <class S>
Committee rav_greedy(const Election& e, int k, std::int64_t scale) {
  auto weight = harmonic_weights<S>(k, scale);
  auto approvers = voters_of(e);
  std::vector<int> count(e.num_voters(), 0);
  std::vector<char> chosen(e.num_candidates(), 0);
  Committee w;
  for (int round = 0; round < k; ++round) {
    int best = -1;
    S best_gain(0);
    for (CandidateIndex c = 0; c < e.num_candidates(); ++c) {
      if (chosen[c]) continue;
      S gain(0);
      for (VoterIndex v : approvers[c]) gain += weight[count[v] + 1];
      if (best < 0 || gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    chosen[best] = 1;
    w.push_back(best);
    for (VoterIndex v : approvers[best]) ++count[v];
  }
  std::sort(w.begin(), w.end());
  return w;
}

}  // namespace

const char* to_string(Rule r) {
  switch (r) {
    case Rule::AV: return "AV";
    case Rule::SAV: return "SAV";
    case Rule::CCAV: return "CCAV";
    case Rule::GAV: return "GAV";
    case Rule::PAV: return "PAV";
    case Rule::RAV: return "RAV";
  }
  return "?";
}

std::optional<Rule> parse_rule(std::string_view name) {
  std::string upper(name);
  for (auto& ch : upper) ch = static_cast<char>(std::toupper(static_cast<unsigned char>(ch)));
  for (Rule r : {Rule::AV, Rule::SAV, Rule::CCAV, Rule::GAV, Rule::PAV, Rule::RAV})
    if (upper == to_string(r)) return r;
  return std::nullopt;
}

std::optional<std::int64_t> lcm_upto(int n) {
  std::int64_t l = 1;
  for (int i = 2; i <= n; ++i) {
    std::int64_t g = std::gcd(l, static_cast<std::int64_t>(i));
    __int128 next = static_cast<__int128>(l / g) * i;
    if (next > INT64_MAX) return std::nullopt;
    l = static_cast<std::int64_t>(next);
  }
  return l;
}

std::vector<int> av_scores(const Election& e) {
  std::vector<int> score(e.num_candidates(), 0);
  for (const auto& b : e.ballots())
    for (auto c = b.approved.find_first(); c != CandidateSet::npos; c = b.approved.find_next(c))
      ++score[c];
  return score;
}

std::vector<Rational> sav_scores(const Election& e) {
  std::vector<Rational> out(e.num_candidates(), 0);
  if (auto scaled = sav_scaled(e)) {
    int max_size = 1;
    for (const auto& b : e.ballots()) max_size = std::max<int>(max_size, b.approved.count());
    std::int64_t l = *lcm_upto(max_size);
    for (int c = 0; c < e.num_candidates(); ++c) out[c] = Rational((*scaled)[c], l);
    return out;
  }
  // Group by ballot size so each candidate needs one division per distinct size.
  std::map<int, std::vector<std::int64_t>> by_size;
  for (const auto& b : e.ballots()) {
    int size = static_cast<int>(b.approved.count());
    if (size == 0) continue;
    auto& counts = by_size[size];
    counts.resize(e.num_candidates(), 0);
    for (auto c = b.approved.find_first(); c != CandidateSet::npos; c = b.approved.find_next(c))
      ++counts[c];
  }
  for (const auto& [size, counts] : by_size)
    for (int c = 0; c < e.num_candidates(); ++c)
      if (counts[c] != 0) out[c] += Rational(counts[c], size);
  return out;
}

int ccav_coverage(const Election& e, const Committee& w) {
  int covered = 0;
  for (const auto& b : e.ballots()) {
    for (CandidateIndex c : w) {
      if (b.approved.test(c)) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

Rational pav_score(const Election& e, const Committee& w) {
  Rational total = 0;
  for (const auto& b : e.ballots()) {
    int hits = 0;
    for (CandidateIndex c : w) hits += b.approved.test(c) ? 1 : 0;
    for (int t = 1; t <= hits; ++t) total += Rational(1, t);
  }
  return total;
}

Committee gav_committee(const Election& e, int k) {
  check_k(e, k);
  VoterMasks masks(e);
  std::vector<Word> covered(masks.words, 0);
  std::vector<char> chosen(e.num_candidates(), 0);
  Committee w;
  for (int round = 0; round < k; ++round) {
    int best = -1, best_gain = -1;
    for (CandidateIndex c = 0; c < e.num_candidates(); ++c) {
      if (chosen[c]) continue;
      const Word* mask = masks.of(c);
      int gain = 0;
      for (int i = 0; i < masks.words; ++i) gain += std::popcount(mask[i] & ~covered[i]);
      if (gain > best_gain) {
        best = c;
        best_gain = gain;
      }
    }
    chosen[best] = 1;
    w.push_back(best);
    const Word* mask = masks.of(best);
    for (int i = 0; i < masks.words; ++i) covered[i] |= mask[i];
  }
  std::sort(w.begin(), w.end());
  return w;
}

Committee rav_committee(const Election& e, int k) {
  check_k(e, k);
  if (auto scale = pav_scale(e.num_voters(), k)) return rav_greedy<std::int64_t>(e, k, *scale);
  return rav_greedy<Rational>(e, k, 1);
}

void for_each_winning_committee(const Election& e, Rule rule, int k,
                                const std::function<bool(const Committee&)>& visit,
                                const Limits& limits) {
  check_k(e, k);
  switch (rule) {
    case Rule::AV:
      top_k_committees(av_scores(e), k, visit);
      return;
    case Rule::SAV:
      if (auto scaled = sav_scaled(e)) top_k_committees(*scaled, k, visit);
      else top_k_committees(sav_scores(e), k, visit);
      return;
    case Rule::GAV:
      visit(gav_committee(e, k));
      return;
    case Rule::RAV:
      visit(rav_committee(e, k));
      return;
    case Rule::CCAV: {
      check_enumerable(e, k, limits);
      int best = -1;
      enumerate_coverage(e, k, [&](const Committee&, int cover) {
        best = std::max(best, cover);
        return true;
      });
      enumerate_coverage(e, k, [&](const Committee& w, int cover) {
        return cover == best ? visit(w) : true;
      });
      return;
    }
    case Rule::PAV: {
      check_enumerable(e, k, limits);
      if (auto scale = pav_scale(e.num_voters(), k)) pav_winners<std::int64_t>(e, k, *scale, visit);
      else pav_winners<Rational>(e, k, 1, visit);
      return;
    }
  }
}

std::vector<Committee> winning_committees(const Election& e, Rule rule, int k,
                                          const Limits& limits) {
  std::vector<Committee> out;
  for_each_winning_committee(
      e, rule, k,
      [&](const Committee& w) {
        if (out.size() >= limits.max_committees)
          throw ResourceError("more than " + std::to_string(limits.max_committees) +
                              " winning committees");
        out.push_back(w);
        return true;
      },
      limits);
  return out;
}

bool is_cowinner(const Election& e, Rule rule, int k, CandidateIndex p, const Limits& limits) {
  check_k(e, k);
  if (p < 0 || p >= e.num_candidates()) throw std::invalid_argument("candidate out of range");
  switch (rule) {
    case Rule::AV:
      return top_k_cowinner(av_scores(e), k, p);
    case Rule::SAV:
      if (auto scaled = sav_scaled(e)) return top_k_cowinner(*scaled, k, p);
      return top_k_cowinner(sav_scores(e), k, p);
    case Rule::GAV: {
      auto w = gav_committee(e, k);
      return std::binary_search(w.begin(), w.end(), p);
    }
    case Rule::RAV: {
      auto w = rav_committee(e, k);
      return std::binary_search(w.begin(), w.end(), p);
    }
    case Rule::CCAV: {
      check_enumerable(e, k, limits);
      int best = -1, best_p = -1;
      enumerate_coverage(e, k, [&](const Committee& w, int cover) {
        best = std::max(best, cover);
        if (std::binary_search(w.begin(), w.end(), p)) best_p = std::max(best_p, cover);
        return true;
      });
      return best_p == best;
    }
    case Rule::PAV: {
      check_enumerable(e, k, limits);
      if (auto scale = pav_scale(e.num_voters(), k))
        return pav_cowinner<std::int64_t>(e, k, p, *scale);
      return pav_cowinner<Rational>(e, k, p, 1);
    }
  }
  return false;
}

bool gav_selects_by_types(const std::vector<TypeLeader>& types, int num_voters, int k,
                          CandidateIndex p) {
  CandidateType covered(num_voters);
  std::vector<char> used(types.size(), 0);
  int rounds = 0;
  int chosen_below_p = 0;
  while (rounds < k) {
    int best = -1;
    std::size_t best_gain = 0;
    for (std::size_t t = 0; t < types.size(); ++t) {
      if (used[t]) continue;
      std::size_t gain = (types[t].type - covered).count();
      if (gain == 0) continue;
      if (best < 0 || gain > best_gain ||
          (gain == best_gain && types[t].leader < types[best].leader)) {
        best = static_cast<int>(t);
        best_gain = gain;
      }
    }
    if (best < 0) break;
    used[best] = 1;
    covered |= types[best].type;
    ++rounds;
    if (types[best].leader == p) return true;
    if (types[best].leader < p) ++chosen_below_p;
  }
  // Remaining rounds take the unselected candidates in index order.
  return p - chosen_below_p < k - rounds;
}

bool type_cowinner_ccav_gav(const Election& e, Rule rule, int k, CandidateIndex p,
                            const Limits& limits) {
  check_k(e, k);
  if (rule != Rule::CCAV && rule != Rule::GAV)
    throw std::invalid_argument("type-based co-winner test supports CCAV and GAV only");
  auto types = candidate_types(e);
  if (rule == Rule::GAV) {
    std::vector<TypeLeader> leaders;
    for (const auto& [type, group] : types) leaders.push_back({type, group.front()});
    return gav_selects_by_types(leaders, e.num_voters(), k, p);
  }

  // With more seats than voters, p plus one candidate per voter fits in a committee.
  if (k > e.num_voters()) return true;
  std::vector<CandidateType> distinct;
  int p_type = -1;
  CandidateType own = candidate_type(e, p);
  for (const auto& [type, group] : types) {
    if (type == own) p_type = static_cast<int>(distinct.size());
    distinct.push_back(type);
  }
  int t = static_cast<int>(distinct.size());
  int seats = std::min(k, t);
  std::uint64_t work = 0;
  for (int s = 1; s <= seats; ++s) work += binomial(t, s);
  if (work > limits.max_committees)
    throw ResourceError("too many type subsets (" + std::to_string(work) + ")");

  // Coverage depends only on which distinct types are used; any set of at most k types extends to
  // a size-k committee because m >= k.
  int best = 0, best_p = 0;
  CandidateType acc(e.num_voters());
  std::vector<CandidateType> stack(seats + 1, acc);
  std::vector<char> has_p(seats + 1, 0);
  auto rec = [&](auto&& self, int start, int depth) -> void {
    int cover = static_cast<int>(stack[depth].count());
    best = std::max(best, cover);
    if (has_p[depth]) best_p = std::max(best_p, cover);
    if (depth == seats) return;
    for (int i = start; i < t; ++i) {
      stack[depth + 1] = stack[depth] | distinct[i];
      has_p[depth + 1] = has_p[depth] || i == p_type;
      self(self, i + 1, depth + 1);
    }
  };
  rec(rec, 0, 0);
  return best_p == best;
}

}  // namespace mwb
