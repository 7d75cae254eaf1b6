#include "mwb/election.hpp"

#include <stdexcept>

namespace mwb {

namespace {

bool valid_token(std::string_view s) {
  if (s.empty()) return false;
  for (char ch : s)
    if (ch == ' ' || ch == '\t' || ch == '\n' || ch == '\r' || ch == ':' || ch == '#') return false;
  return true;
}

}  // namespace

Election::Election(std::vector<std::string> candidate_names, std::vector<ApprovalBallot> ballots)
    : ballots_(std::move(ballots)) {
  candidates_.reserve(candidate_names.size());
  for (std::size_t i = 0; i < candidate_names.size(); ++i) {
    if (!valid_token(candidate_names[i]))
      throw std::invalid_argument("invalid candidate name '" + candidate_names[i] + "'");
    auto [it, inserted] =
        candidate_by_name_.emplace(candidate_names[i], static_cast<CandidateIndex>(i));
    if (!inserted) throw std::invalid_argument("duplicate candidate '" + candidate_names[i] + "'");
    candidates_.push_back({static_cast<CandidateIndex>(i), std::move(candidate_names[i])});
  }
  for (std::size_t v = 0; v < ballots_.size(); ++v) {
    auto& b = ballots_[v];
    if (!valid_token(b.voter_name))
      throw std::invalid_argument("invalid voter name '" + b.voter_name + "'");
    if (b.approved.size() != candidates_.size())
      throw std::invalid_argument("ballot of " + b.voter_name + " has wrong width");
    auto [it, inserted] = voter_by_name_.emplace(b.voter_name, static_cast<VoterIndex>(v));
    if (!inserted) throw std::invalid_argument("duplicate voter '" + b.voter_name + "'");
  }
}

Election Election::from_names(
    std::vector<std::string> candidate_names,
    const std::vector<std::pair<std::string, std::vector<std::string>>>& ballots) {
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t i = 0; i < candidate_names.size(); ++i) index[candidate_names[i]] = i;
  std::vector<ApprovalBallot> out;
  out.reserve(ballots.size());
  for (const auto& [voter, approved] : ballots) {
    CandidateSet s(candidate_names.size());
    for (const auto& name : approved) {
      auto it = index.find(name);
      if (it == index.end()) throw std::invalid_argument("unknown candidate '" + name + "'");
      s.set(it->second);
    }
    out.push_back({voter, std::move(s)});
  }
  return Election(std::move(candidate_names), std::move(out));
}

std::optional<CandidateIndex> Election::find_candidate(std::string_view name) const {
  auto it = candidate_by_name_.find(std::string(name));
  if (it == candidate_by_name_.end()) return std::nullopt;
  return it->second;
}

std::optional<VoterIndex> Election::find_voter(std::string_view name) const {
  auto it = voter_by_name_.find(std::string(name));
  if (it == voter_by_name_.end()) return std::nullopt;
  return it->second;
}

CandidateIndex Election::candidate_index(std::string_view name) const {
  auto c = find_candidate(name);
  if (!c) throw std::out_of_range("unknown candidate '" + std::string(name) + "'");
  return *c;
}

VoterIndex Election::voter_index(std::string_view name) const {
  auto v = find_voter(name);
  if (!v) throw std::out_of_range("unknown voter '" + std::string(name) + "'");
  return *v;
}

void Election::set_approvals(VoterIndex v, const CandidateSet& approved) {
  if (approved.size() != candidates_.size())
    throw std::invalid_argument("approval set has wrong width");
  ballots_.at(v).approved = approved;
}

bool operator==(const Election& a, const Election& b) {
  if (a.candidates_.size() != b.candidates_.size() || a.ballots_.size() != b.ballots_.size())
    return false;
  for (std::size_t i = 0; i < a.candidates_.size(); ++i)
    if (a.candidates_[i].name != b.candidates_[i].name) return false;
  for (std::size_t v = 0; v < a.ballots_.size(); ++v)
    if (a.ballots_[v].voter_name != b.ballots_[v].voter_name ||
        a.ballots_[v].approved != b.ballots_[v].approved)
      return false;
  return true;
}

bool TypeValueLess::operator()(const CandidateType& a, const CandidateType& b) const {
  std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    bool x = i < a.size() && a.test(i);
    bool y = i < b.size() && b.test(i);
    if (x != y) return y;
  }
  return false;
}

CandidateType candidate_type(const Election& e, CandidateIndex c) {
  CandidateType t(static_cast<std::size_t>(e.num_voters()));
  for (VoterIndex v = 0; v < e.num_voters(); ++v)
    if (e.approves(v, c)) t.set(v);
  return t;
}

std::map<CandidateType, std::vector<CandidateIndex>, TypeValueLess> candidate_types(
    const Election& e) {
  std::map<CandidateType, std::vector<CandidateIndex>, TypeValueLess> out;
  for (CandidateIndex c = 0; c < e.num_candidates(); ++c) out[candidate_type(e, c)].push_back(c);
  return out;
}

std::vector<CandidateIndex> members(const CandidateSet& s) {
  std::vector<CandidateIndex> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != CandidateSet::npos; i = s.find_next(i))
    out.push_back(static_cast<CandidateIndex>(i));
  return out;
}

}  // namespace mwb
