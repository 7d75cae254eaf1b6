#include "mwb/format.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_set>

#include "mwb/errors.hpp"

namespace mwb {

namespace {

std::vector<std::string> split_ws(std::string_view s) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < s.size() && s[j] != ' ' && s[j] != '\t' && s[j] != '\r') ++j;
    if (j > i) out.emplace_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

// Lines with comments stripped, paired with their 1-based numbers; blank lines dropped.
std::vector<std::pair<int, std::string>> content_lines(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!split_ws(line).empty()) out.emplace_back(number, std::string(line));
    if (end == text.size()) break;
    pos = end + 1;
  }
  return out;
}

std::optional<long long> parse_integer(const std::string& s) {
  long long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

Price parse_price(int line, const std::string& s) {
  if (s == "inf") return Price::infinite();
  auto v = parse_integer(s);
  if (!v) throw ParseError(line, "malformed price '" + s + "'");
  if (*v < 0) throw ParseError(line, "negative price " + s);
  return Price(*v);
}

// "key: rest" where the key may or may not carry the colon directly.
bool starts_with_key(const std::string& line, std::string_view key, std::string& rest) {
  auto tokens = split_ws(line);
  if (tokens.empty()) return false;
  std::string first = tokens[0];
  std::string_view k = key;
  if (first == std::string(k) + ":") {
    rest = line.substr(line.find(':') + 1);
    return true;
  }
  if (first == k && tokens.size() > 1 && tokens[1] == ":") {
    rest = line.substr(line.find(':') + 1);
    return true;
  }
  return false;
}

}  // namespace

ElectionFile parse_election(std::string_view text) {
  std::optional<std::vector<std::string>> names;
  std::optional<int> k;
  std::unordered_map<std::string, int> candidate_index;
  struct PendingBallot {
    int line;
    std::string voter;
    std::vector<std::string> approved;
  };
  std::vector<PendingBallot> ballots;
  std::vector<std::pair<int, std::vector<std::string>>> price_lines;

  for (auto& [number, line] : content_lines(text)) {
    std::string rest;
    auto tokens = split_ws(line);
    if (starts_with_key(line, "candidates", rest)) {
      if (names) throw ParseError(number, "duplicate candidates line");
      names = split_ws(rest);
      for (std::size_t i = 0; i < names->size(); ++i) {
        if (!candidate_index.emplace((*names)[i], static_cast<int>(i)).second)
          throw ParseError(number, "duplicate candidate '" + (*names)[i] + "'");
      }
    } else if (starts_with_key(line, "k", rest)) {
      auto parts = split_ws(rest);
      if (parts.size() != 1) throw ParseError(number, "malformed k line");
      auto v = parse_integer(parts[0]);
      if (!v || *v < 1) throw ParseError(number, "committee size must be a positive integer");
      k = static_cast<int>(*v);
    } else if (tokens[0] == "voter") {
      if (!names) throw ParseError(number, "voter line before candidates line");
      auto colon = line.find(':');
      if (colon == std::string::npos) throw ParseError(number, "voter line without ':'");
      auto head = split_ws(std::string_view(line).substr(0, colon));
      if (head.size() != 2) throw ParseError(number, "malformed voter line");
      PendingBallot b{number, head[1], split_ws(std::string_view(line).substr(colon + 1))};
      std::unordered_set<std::string> seen;
      for (auto& c : b.approved) {
        if (!candidate_index.count(c)) throw ParseError(number, "unknown candidate '" + c + "'");
        if (!seen.insert(c).second) throw ParseError(number, "candidate '" + c + "' listed twice");
      }
      ballots.push_back(std::move(b));
    } else if (tokens[0] == "addprice" || tokens[0] == "delprice" || tokens[0] == "swapprice") {
      std::size_t want = tokens[0] == "swapprice" ? 5 : 4;
      if (tokens.size() != want) throw ParseError(number, "malformed " + tokens[0] + " line");
      parse_price(number, tokens.back());
      price_lines.emplace_back(number, tokens);
    } else {
      throw ParseError(number, "unrecognized line '" + tokens[0] + "'");
    }
  }
  if (!names) throw ParseError(0, "missing candidates line");

  std::vector<ApprovalBallot> built;
  std::unordered_set<std::string> voters;
  for (auto& b : ballots) {
    if (!voters.insert(b.voter).second) throw ParseError(b.line, "duplicate voter '" + b.voter + "'");
    CandidateSet s(names->size());
    for (auto& c : b.approved) s.set(candidate_index[c]);
    built.push_back({b.voter, std::move(s)});
  }

  ElectionFile out;
  try {
    out.election = Election(*names, std::move(built));
  } catch (const std::invalid_argument& ex) {
    throw ParseError(1, ex.what());
  }
  out.k = k;
  for (auto& [number, t] : price_lines) {
    auto voter = out.election.find_voter(t[1]);
    if (!voter) throw ParseError(number, "unknown voter '" + t[1] + "'");
    auto cand = [&, n = number](const std::string& name) {
      auto c = out.election.find_candidate(name);
      if (!c) throw ParseError(n, "unknown candidate '" + name + "'");
      return *c;
    };
    Price price = parse_price(number, t.back());
    if (t[0] == "addprice") {
      out.prices.set_add(*voter, cand(t[2]), price);
    } else if (t[0] == "delprice") {
      out.prices.set_del(*voter, cand(t[2]), price);
    } else {
      CandidateIndex from = cand(t[2]);
      CandidateIndex to = cand(t[3]);
      if (from == to) throw ParseError(number, "swap price from a candidate to itself");
      out.prices.set_swap(*voter, from, to, price);
    }
  }
  return out;
}

std::string serialize_election(const Election& e, const PriceTable& prices, std::optional<int> k) {
  std::ostringstream os;
  os << "candidates:";
  for (const auto& c : e.candidates()) os << ' ' << c.name;
  os << '\n';
  if (k) os << "k: " << *k << '\n';
  for (const auto& b : e.ballots()) {
    os << "voter " << b.voter_name << ':';
    for (auto c : members(b.approved)) os << ' ' << e.candidate_name(c);
    os << '\n';
  }
  for (const auto& en : prices.add_entries())
    os << "addprice " << e.voter_name(en.voter) << ' ' << e.candidate_name(en.candidate) << ' '
       << en.price.str() << '\n';
  for (const auto& en : prices.del_entries())
    os << "delprice " << e.voter_name(en.voter) << ' ' << e.candidate_name(en.candidate) << ' '
       << en.price.str() << '\n';
  for (const auto& en : prices.swap_entries())
    os << "swapprice " << e.voter_name(en.voter) << ' ' << e.candidate_name(en.from) << ' '
       << e.candidate_name(en.to) << ' ' << en.price.str() << '\n';
  return os.str();
}

std::vector<ParsedActionLine> parse_action_lines(std::string_view text, const Election& e) {
  std::vector<ParsedActionLine> out;
  for (auto& [number, line] : content_lines(text)) {
    auto t = split_ws(line);
    auto voter = [&, n = number](const std::string& name) {
      auto v = e.find_voter(name);
      if (!v) throw ParseError(n, "unknown voter '" + name + "'");
      return *v;
    };
    auto cand = [&, n = number](const std::string& name) {
      auto c = e.find_candidate(name);
      if (!c) throw ParseError(n, "unknown candidate '" + name + "'");
      return *c;
    };
    AtomicAction a;
    if (t[0] == "add" && t.size() == 3) {
      a = AtomicAction::add(voter(t[1]), cand(t[2]));
    } else if ((t[0] == "del" || t[0] == "delete") && t.size() == 3) {
      a = AtomicAction::del(voter(t[1]), cand(t[2]));
    } else if (t[0] == "swap" && t.size() == 4) {
      a = AtomicAction::swap(voter(t[1]), cand(t[2]), cand(t[3]));
    } else {
      throw ParseError(number, "malformed action '" + line + "'");
    }
    out.push_back({number, line, a});
  }
  return out;
}

std::vector<AtomicAction> parse_actions(std::string_view text, const Election& e) {
  std::vector<AtomicAction> out;
  for (auto& l : parse_action_lines(text, e)) out.push_back(l.action);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace mwb
