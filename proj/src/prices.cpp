#include "mwb/prices.hpp"

#include <algorithm>
#include <stdexcept>

namespace mwb {

namespace {

void check(Price p) {
  if (p.is_finite() && p.value() < 0) throw std::invalid_argument("negative price");
}

void check_index(int v) {
  if (v < 0 || v >= (1 << 21)) throw std::invalid_argument("price index out of range");
}

Price lookup(const std::unordered_map<std::uint64_t, Price>& m, std::uint64_t k) {
  auto it = m.find(k);
  return it == m.end() ? Price(1) : it->second;
}

constexpr std::uint64_t kMask = (1u << 21) - 1;

}  // namespace

Price PriceTable::add(VoterIndex v, CandidateIndex c) const { return lookup(add_, key(v, c)); }
Price PriceTable::del(VoterIndex v, CandidateIndex c) const { return lookup(del_, key(v, c)); }
Price PriceTable::swap(VoterIndex v, CandidateIndex from, CandidateIndex to) const {
  return lookup(swap_, key(v, from, to));
}

void PriceTable::set_add(VoterIndex v, CandidateIndex c, Price p) {
  check(p);
  check_index(v);
  check_index(c);
  add_[key(v, c)] = p;
}

void PriceTable::set_del(VoterIndex v, CandidateIndex c, Price p) {
  check(p);
  check_index(v);
  check_index(c);
  del_[key(v, c)] = p;
}

void PriceTable::set_swap(VoterIndex v, CandidateIndex from, CandidateIndex to, Price p) {
  check(p);
  check_index(v);
  check_index(from);
  check_index(to);
  swap_[key(v, from, to)] = p;
}

std::vector<PriceTable::PairEntry> PriceTable::add_entries() const {
  std::vector<std::pair<std::uint64_t, Price>> raw(add_.begin(), add_.end());
  std::sort(raw.begin(), raw.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<PairEntry> out;
  for (auto& [k, p] : raw)
    out.push_back({static_cast<VoterIndex>(k >> 42), static_cast<CandidateIndex>((k >> 21) & kMask), p});
  return out;
}

std::vector<PriceTable::PairEntry> PriceTable::del_entries() const {
  std::vector<std::pair<std::uint64_t, Price>> raw(del_.begin(), del_.end());
  std::sort(raw.begin(), raw.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<PairEntry> out;
  for (auto& [k, p] : raw)
    out.push_back({static_cast<VoterIndex>(k >> 42), static_cast<CandidateIndex>((k >> 21) & kMask), p});
  return out;
}

std::vector<PriceTable::SwapEntry> PriceTable::swap_entries() const {
  std::vector<std::pair<std::uint64_t, Price>> raw(swap_.begin(), swap_.end());
  std::sort(raw.begin(), raw.end(), [](auto& a, auto& b) { return a.first < b.first; });
  std::vector<SwapEntry> out;
  for (auto& [k, p] : raw)
    out.push_back({static_cast<VoterIndex>(k >> 42), static_cast<CandidateIndex>((k >> 21) & kMask),
                   static_cast<CandidateIndex>(k & kMask), p});
  return out;
}

bool operator==(const PriceTable& a, const PriceTable& b) {
  // Explicit entries equal to the default are equivalent to absent ones.
  auto same = [](const std::unordered_map<std::uint64_t, Price>& x,
                 const std::unordered_map<std::uint64_t, Price>& y) {
    for (auto& [k, p] : x)
      if (lookup(y, k) != p) return false;
    for (auto& [k, p] : y)
      if (lookup(x, k) != p) return false;
    return true;
  };
  return same(a.add_, b.add_) && same(a.del_, b.del_) && same(a.swap_, b.swap_);
}

}  // namespace mwb
