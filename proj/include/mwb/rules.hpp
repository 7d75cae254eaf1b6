#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwb/election.hpp"
#include "mwb/errors.hpp"
#include "mwb/rational.hpp"

namespace mwb {

enum class Rule { AV, SAV, CCAV, GAV, PAV, RAV };

const char* to_string(Rule r);
// Accepts lowercase or uppercase names ("av", "SAV", ...).
std::optional<Rule> parse_rule(std::string_view name);

// Sorted list of exactly k candidate indices.
using Committee = std::vector<CandidateIndex>;

std::vector<int> av_scores(const Election& e);
std::vector<Rational> sav_scores(const Election& e);

// Number of ballots that approve at least one committee member.
int ccav_coverage(const Election& e, const Committee& w);
// Sum over ballots of H(|W ∩ v|).
Rational pav_score(const Election& e, const Committee& w);

// Greedy committees with lowest-index tie-breaking. Throw std::invalid_argument unless
// 1 <= k <= m.
Committee gav_committee(const Election& e, int k);
Committee rav_committee(const Election& e, int k);

// Calls `visit` for every winning committee in lexicographic order; stops early when it returns
// false. AV/SAV stream all tie-completions without materializing them. CCAV/PAV enumerate all
// k-subsets and throw ResourceError past limits.max_committees.
void for_each_winning_committee(const Election& e, Rule rule, int k,
                                const std::function<bool(const Committee&)>& visit,
                                const Limits& limits = default_limits());

// Materialized family; throws ResourceError if it has more than limits.max_committees members.
std::vector<Committee> winning_committees(const Election& e, Rule rule, int k,
                                          const Limits& limits = default_limits());

bool is_cowinner(const Election& e, Rule rule, int k, CandidateIndex p,
                 const Limits& limits = default_limits());

// Co-winner test for CCAV and GAV that works on candidate types instead of candidates.
bool type_cowinner_ccav_gav(const Election& e, Rule rule, int k, CandidateIndex p,
                            const Limits& limits = default_limits());

// A candidate type together with the lowest-index candidate holding it.
struct TypeLeader {
  CandidateType type;
  CandidateIndex leader;
};

// Whether greedy CCAV picks p when the candidate types present are `types` (each with its leader)
// and p is one of the candidates. Only leaders matter: within a type, the leader is always
// picked first, and once no candidate adds coverage the rest are taken in index order.
bool gav_selects_by_types(const std::vector<TypeLeader>& types, int num_voters, int k,
                          CandidateIndex p);

// Least common multiple of 1..n, or nullopt if it does not fit in int64.
std::optional<std::int64_t> lcm_upto(int n);

}  // namespace mwb
