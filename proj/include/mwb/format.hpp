#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mwb/action.hpp"
#include "mwb/election.hpp"
#include "mwb/prices.hpp"

namespace mwb {

// Contents of an election file.
//
//   candidates: a b c p
//   k: 2
//   voter v1: a b c
//   addprice v1 p 4
//   delprice v2 b 2
//   swapprice v6 c p inf
//
// '#' starts a comment, blank lines are ignored, unlisted prices are 1.
struct ElectionFile {
  Election election;
  PriceTable prices;
  std::optional<int> k;
};

// Throws ParseError (with the 1-based line number) on malformed input, duplicate names,
// unknown candidates or voters, and negative prices.
ElectionFile parse_election(std::string_view text);

std::string serialize_election(const Election& e, const PriceTable& prices = {},
                               std::optional<int> k = std::nullopt);

// Solution-file lines ("add v1 p", "del v2 b", "swap v6 c p"); comments and blank lines are
// skipped. Unknown names raise ParseError.
std::vector<AtomicAction> parse_actions(std::string_view text, const Election& e);

struct ParsedActionLine {
  int line = 0;
  std::string text;
  AtomicAction action;
};
std::vector<ParsedActionLine> parse_action_lines(std::string_view text, const Election& e);

std::string read_file(const std::string& path);

}  // namespace mwb
