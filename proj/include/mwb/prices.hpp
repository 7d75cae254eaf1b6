#pragma once

#include <cstdint>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "mwb/election.hpp"

namespace mwb {

using Cost = std::int64_t;

// Nonnegative integer price, or the forbidden marker. Never a large magic number.
class Price {
 public:
  constexpr Price() = default;
  constexpr explicit Price(Cost value) : value_(value) {}
  static constexpr Price infinite() {
    Price p;
    p.infinite_ = true;
    return p;
  }

  constexpr bool is_infinite() const { return infinite_; }
  constexpr bool is_finite() const { return !infinite_; }
  // Precondition: is_finite().
  constexpr Cost value() const { return value_; }

  std::string str() const { return infinite_ ? "inf" : std::to_string(value_); }

  friend constexpr bool operator==(Price a, Price b) {
    return a.infinite_ == b.infinite_ && (a.infinite_ || a.value_ == b.value_);
  }

 private:
  Cost value_ = 1;
  bool infinite_ = false;
};

// Per-operation prices. Every entry not set explicitly costs 1.
class PriceTable {
 public:
  Price add(VoterIndex v, CandidateIndex c) const;
  Price del(VoterIndex v, CandidateIndex c) const;
  Price swap(VoterIndex v, CandidateIndex from, CandidateIndex to) const;

  // Negative values are rejected with std::invalid_argument.
  void set_add(VoterIndex v, CandidateIndex c, Price p);
  void set_del(VoterIndex v, CandidateIndex c, Price p);
  void set_swap(VoterIndex v, CandidateIndex from, CandidateIndex to, Price p);

  bool empty() const { return add_.empty() && del_.empty() && swap_.empty(); }

  struct PairEntry {
    VoterIndex voter;
    CandidateIndex candidate;
    Price price;
  };
  struct SwapEntry {
    VoterIndex voter;
    CandidateIndex from;
    CandidateIndex to;
    Price price;
  };
  // Explicit overrides, sorted by (voter, candidate...).
  std::vector<PairEntry> add_entries() const;
  std::vector<PairEntry> del_entries() const;
  std::vector<SwapEntry> swap_entries() const;

  friend bool operator==(const PriceTable& a, const PriceTable& b);

 private:
  static std::uint64_t key(std::uint64_t v, std::uint64_t a, std::uint64_t b = 0) {
    return (v << 42) | (a << 21) | b;
  }
  std::unordered_map<std::uint64_t, Price> add_;
  std::unordered_map<std::uint64_t, Price> del_;
  std::unordered_map<std::uint64_t, Price> swap_;
};

}  // namespace mwb
