#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace mwb {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed election or solution text. line() is 1-based.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

// An atomic action whose precondition does not hold on the election it is applied to.
class InvalidAction : public Error {
 public:
  using Error::Error;
};

// An action that carries the forbidden (infinite) price.
class InfeasibleAction : public Error {
 public:
  using Error::Error;
};

// An exhaustive step would exceed its configured size guard.
class ResourceError : public Error {
 public:
  using Error::Error;
};

// Size guards for the exponential solvers. Exceeding any of them raises ResourceError.
struct Limits {
  std::uint64_t max_committees = 1'000'000;     // C(m,k) for CCAV/PAV brute force
  int max_subset_voters = 20;                   // 2^n voter-subset enumeration
  int max_type_voters = 4;                      // 2^(2^n) candidate-type guesses
  std::uint64_t max_guesses = 2'000'000;        // committee x threshold guesses
  std::uint64_t max_enumeration = 50'000'000;   // action-set enumeration
  std::uint64_t max_oracle_leaves = 400'000'000;
  std::uint64_t max_vote_states = 1u << 16;     // per-vote reachable ballots in the oracle
};

inline const Limits& default_limits() {
  static const Limits limits;
  return limits;
}

// Saturating binomial coefficient.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > UINT64_MAX) return UINT64_MAX;
  }
  return static_cast<std::uint64_t>(r);
}

}  // namespace mwb
