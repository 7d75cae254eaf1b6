#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace mwb {

using CandidateIndex = int;
using VoterIndex = int;

// Bitset over candidates (bit c set iff candidate c is in the set).
using CandidateSet = boost::dynamic_bitset<std::uint64_t>;

struct Candidate {
  CandidateIndex index = 0;
  std::string name;
};

struct ApprovalBallot {
  std::string voter_name;
  CandidateSet approved;
};

// An approval election: candidates in a fixed order and one ballot per voter.
//
// Candidate and voter names are unique whitespace-free tokens. Ballots may be empty.
class Election {
 public:
  Election() = default;
  Election(std::vector<std::string> candidate_names, std::vector<ApprovalBallot> ballots);

  // Convenience constructor from names, e.g. {{"v1", {"a", "b"}}, {"v2", {}}}.
  static Election from_names(
      std::vector<std::string> candidate_names,
      const std::vector<std::pair<std::string, std::vector<std::string>>>& ballots);

  int num_candidates() const { return static_cast<int>(candidates_.size()); }
  int num_voters() const { return static_cast<int>(ballots_.size()); }

  const std::vector<Candidate>& candidates() const { return candidates_; }
  const std::vector<ApprovalBallot>& ballots() const { return ballots_; }
  const std::string& candidate_name(CandidateIndex c) const { return candidates_.at(c).name; }
  const std::string& voter_name(VoterIndex v) const { return ballots_.at(v).voter_name; }
  const CandidateSet& approvals(VoterIndex v) const { return ballots_[v].approved; }
  bool approves(VoterIndex v, CandidateIndex c) const { return ballots_[v].approved.test(c); }

  std::optional<CandidateIndex> find_candidate(std::string_view name) const;
  std::optional<VoterIndex> find_voter(std::string_view name) const;
  // Throws std::out_of_range for unknown names.
  CandidateIndex candidate_index(std::string_view name) const;
  VoterIndex voter_index(std::string_view name) const;

  CandidateSet empty_set() const { return CandidateSet(candidates_.size()); }

  // Replaces one voter's approval set (same length as the candidate list).
  void set_approvals(VoterIndex v, const CandidateSet& approved);

  friend bool operator==(const Election& a, const Election& b);

 private:
  std::vector<Candidate> candidates_;
  std::vector<ApprovalBallot> ballots_;
  std::unordered_map<std::string, CandidateIndex> candidate_by_name_;
  std::unordered_map<std::string, VoterIndex> voter_by_name_;
};

// Approver set of one candidate: bit i set iff voter i approves it.
using CandidateType = boost::dynamic_bitset<std::uint64_t>;

// Orders types by their value as a binary number (voter i contributes 2^i).
struct TypeValueLess {
  bool operator()(const CandidateType& a, const CandidateType& b) const;
};

CandidateType candidate_type(const Election& e, CandidateIndex c);

// Partition of the candidates by identical approver sets. Members are listed by index.
std::map<CandidateType, std::vector<CandidateIndex>, TypeValueLess> candidate_types(
    const Election& e);

std::vector<CandidateIndex> members(const CandidateSet& s);

}  // namespace mwb
