#include "mwb/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "mwb/approx_bribery.hpp"
#include "mwb/av_bribery.hpp"
#include "mwb/format.hpp"
#include "mwb/fpt_bribery.hpp"
#include "mwb/generators.hpp"
#include "mwb/oracle.hpp"
#include "mwb/rules.hpp"

namespace mwb {

namespace {

class Unsupported : public Error {
 public:
  using Error::Error;
};

struct Solver {
  std::string name;
  std::string guarantee;  // empty for exact solvers
  std::function<BriberySolution(const BriberyInstance&)> run;
};

enum class Algorithm { Auto, Exact, Approx, FptN, Oracle };

std::optional<Solver> exact_solver(Rule rule, const BriberyInstance& inst) {
  if (rule == Rule::AV) {
    switch (inst.op) {
      case OpKind::Add: return Solver{"av-add", "", av_add};
      case OpKind::Delete: return Solver{"av-delete", "", av_delete};
      case OpKind::Swap:
        if (!inst.priced) return Solver{"av-swap-unit", "", av_swap_unit};
        return Solver{"av-priced-swap-flow", "",
                      [](const BriberyInstance& i) { return av_priced_swap_exact(i); }};
    }
  }
  if (inst.op == OpKind::Add && inst.restricted_to_p) {
    if (rule == Rule::GAV) return Solver{"gav-add-for-p", "", gav_add_for_p};
    if (rule == Rule::RAV && !inst.priced)
      return Solver{"rav-add-for-p", "", [](const BriberyInstance& i) { return rav_add_for_p(i); }};
  }
  return std::nullopt;
}

std::optional<Solver> approx_solver(Rule rule, const BriberyInstance& inst, const Rational& epsilon) {
  if (inst.op != OpKind::Add) return std::nullopt;
  if (rule == Rule::SAV && (inst.restricted_to_p || !inst.priced))
    return Solver{"sav-add-for-p-2approx", "cost at most 2 x optimum",
                  [](const BriberyInstance& i) { return sav_add_for_p_2approx(i); }};
  if (rule == Rule::RAV && inst.restricted_to_p && inst.priced)
    return Solver{"rav-add-for-p-ptas", "cost at most (1 + " + epsilon.str() + ") x optimum",
                  [epsilon](const BriberyInstance& i) { return rav_add_for_p(i, epsilon); }};
  return std::nullopt;
}

std::vector<Solver> fpt_solvers(Rule rule, const BriberyInstance& inst) {
  auto bind = [rule](auto fn) {
    return [rule, fn](const BriberyInstance& i) { return fn(i, rule, default_limits()); };
  };
  std::vector<Solver> out;
  if ((rule == Rule::CCAV || rule == Rule::GAV) && inst.op != OpKind::Swap)
    out.push_back({"ccav-gav-type-flow", "", bind(ccav_gav_flow_bribery)});
  if (inst.op == OpKind::Add && inst.restricted_to_p)
    out.push_back({"add-for-p-voter-subsets", "", bind(add_for_p_subset_enum)});
  if (!inst.priced && inst.op != OpKind::Delete)
    out.push_back({"unpriced-type-enumeration", "", bind(unpriced_type_enum)});
  if (inst.priced && inst.op == OpKind::Swap && inst.restricted_to_p)
    out.push_back({"priced-swap-type-enumeration", "", bind(priced_swap_to_p_type_enum)});
  return out;
}

Solver oracle_solver(Rule rule) {
  return {"oracle", "", [rule](const BriberyInstance& i) { return oracle_bribery(i, rule); }};
}

// Candidate solvers in the order they are tried.
std::vector<Solver> choose_solvers(Rule rule, const BriberyInstance& inst, Algorithm algorithm,
                                   const Rational& epsilon) {
  std::vector<Solver> out;
  auto push = [&](std::optional<Solver> s) {
    if (s) out.push_back(std::move(*s));
  };
  switch (algorithm) {
    case Algorithm::Exact: push(exact_solver(rule, inst)); break;
    case Algorithm::Approx: push(approx_solver(rule, inst, epsilon)); break;
    case Algorithm::FptN: out = fpt_solvers(rule, inst); break;
    case Algorithm::Oracle: out.push_back(oracle_solver(rule)); break;
    case Algorithm::Auto:
      // Polynomial cells first, then the approximations, then the FPT(n) family, then brute force.
      push(exact_solver(rule, inst));
      if (out.empty()) push(approx_solver(rule, inst, epsilon));
      if (out.empty()) {
        out = fpt_solvers(rule, inst);
        out.push_back(oracle_solver(rule));
      }
      break;
  }
  if (out.empty()) throw Unsupported("the selected algorithm does not handle this rule and operation");
  return out;
}

// Runs the candidates in order; a size guard moves on to the next one unless it is the last.
std::pair<Solver, BriberySolution> solve(const std::vector<Solver>& candidates, const BriberyInstance& inst) {
  for (std::size_t i = 0;; ++i) {
    try {
      return {candidates[i], candidates[i].run(inst)};
    } catch (const ResourceError&) {
      if (i + 1 == candidates.size()) throw;
    }
  }
}

std::string committee_str(const Election& e, const Committee& w) {
  std::string out = "{";
  for (std::size_t i = 0; i < w.size(); ++i) out += (i ? ", " : "") + e.candidate_name(w[i]);
  return out + "}";
}

std::string variant_str(const BriberyInstance& inst) {
  std::string s = to_string(inst.op);
  s += inst.priced ? ", priced" : ", unit prices";
  if (inst.restricted_to_p) s += ", restricted to p";
  return s;
}

struct Common {
  std::string file;
  std::string rule_name = "av";
  std::optional<int> k;
};

ElectionFile load(const std::string& path) { return parse_election(read_file(path)); }

Rule rule_of(const std::string& name) {
  auto r = parse_rule(name);
  if (!r) throw std::invalid_argument("unknown rule '" + name + "'");
  return *r;
}

int committee_size(const Common& c, const ElectionFile& f) {
  if (c.k) return *c.k;
  if (f.k) return *f.k;
  throw std::invalid_argument("committee size missing: pass --k or add a 'k:' line");
}

OpKind op_of(const std::string& name) {
  if (name == "add") return OpKind::Add;
  if (name == "delete" || name == "del") return OpKind::Delete;
  if (name == "swap") return OpKind::Swap;
  throw std::invalid_argument("unknown operation '" + name + "'");
}

Algorithm algorithm_of(const std::string& name) {
  if (name == "auto") return Algorithm::Auto;
  if (name == "exact") return Algorithm::Exact;
  if (name == "approx") return Algorithm::Approx;
  if (name == "fpt-n") return Algorithm::FptN;
  if (name == "oracle") return Algorithm::Oracle;
  throw std::invalid_argument("unknown algorithm '" + name + "'");
}

int cmd_winners(const Common& c, std::ostream& out) {
  auto f = load(c.file);
  Rule rule = rule_of(c.rule_name);
  int k = committee_size(c, f);
  const Election& e = f.election;
  out << "rule: " << to_string(rule) << "\nk: " << k << '\n';
  if (rule == Rule::AV) {
    auto s = av_scores(e);
    out << "scores:\n";
    for (int i = 0; i < e.num_candidates(); ++i) out << "  " << e.candidate_name(i) << ' ' << s[i] << '\n';
  } else if (rule == Rule::SAV) {
    auto s = sav_scores(e);
    out << "scores:\n";
    for (int i = 0; i < e.num_candidates(); ++i) out << "  " << e.candidate_name(i) << ' ' << s[i] << '\n';
  }
  constexpr std::size_t kShown = 1000;
  std::vector<Committee> shown;
  std::size_t total = 0;
  for_each_winning_committee(e, rule, k, [&](const Committee& w) {
    if (total++ < kShown) shown.push_back(w);
    return true;
  });
  out << "winning committees: " << total << '\n';
  for (const auto& w : shown) {
    out << "  " << committee_str(e, w);
    if (rule == Rule::CCAV || rule == Rule::GAV) out << "  coverage " << ccav_coverage(e, w);
    if (rule == Rule::PAV || rule == Rule::RAV) out << "  pav " << pav_score(e, w);
    out << '\n';
  }
  if (total > kShown) out << "  ... " << (total - kShown) << " more\n";
  return kExitOk;
}

struct BribeOptions {
  Common common;
  std::string op = "add";
  std::string p;
  std::optional<Cost> budget;
  bool priced = false;
  bool restricted = false;
  std::string algorithm = "auto";
  std::string epsilon = "1/10";
};

BriberyInstance make_instance(const BribeOptions& o, const ElectionFile& f, CandidateIndex p) {
  BriberyInstance inst;
  inst.election = f.election;
  inst.prices = f.prices;
  inst.p = p;
  inst.k = committee_size(o.common, f);
  inst.budget = o.budget.value_or(kUnboundedBudget);
  inst.op = op_of(o.op);
  inst.priced = o.priced;
  inst.restricted_to_p = o.restricted;
  inst.validate();
  return inst;
}

Rational epsilon_of(const std::string& text) {
  Rational eps;
  try {
    eps = Rational::parse(text);
  } catch (const std::exception&) {
    throw std::invalid_argument("malformed epsilon '" + text + "'");
  }
  if (eps <= Rational(0)) throw std::invalid_argument("epsilon must be positive");
  return eps;
}

int cmd_bribe(const BribeOptions& o, std::ostream& out) {
  auto f = load(o.common.file);
  Rule rule = rule_of(o.common.rule_name);
  auto p = f.election.find_candidate(o.p);
  if (!p) throw std::invalid_argument("unknown candidate '" + o.p + "'");
  auto inst = make_instance(o, f, *p);
  auto [solver, s] = solve(choose_solvers(rule, inst, algorithm_of(o.algorithm), epsilon_of(o.epsilon)), inst);
  out << "rule: " << to_string(rule) << "\nk: " << inst.k << "\np: " << o.p << "\noperation: "
      << variant_str(inst) << "\nbudget: " << (inst.unbounded() ? "none" : std::to_string(inst.budget))
      << "\nalgorithm: " << solver.name << '\n';
  if (!solver.guarantee.empty()) out << "guarantee: " << solver.guarantee << '\n';
  out << "result: " << (s.feasible ? "feasible" : "infeasible") << '\n';
  if (!s.feasible) return kExitInfeasible;
  out << "cost: " << s.cost << "\nactions: " << s.actions.size() << '\n';
  for (const auto& a : s.actions) out << "  " << format_action(inst.election, a) << '\n';
  return kExitOk;
}

int cmd_rank(const BribeOptions& o, std::ostream& out) {
  auto f = load(o.common.file);
  Rule rule = rule_of(o.common.rule_name);
  Rational eps = epsilon_of(o.epsilon);
  const Election& e = f.election;
  struct Row {
    std::optional<Cost> margin;
    CandidateIndex c;
  };
  std::vector<Row> rows;
  std::vector<std::string> names;
  std::string guarantee;
  for (CandidateIndex c = 0; c < e.num_candidates(); ++c) {
    BribeOptions open = o;
    open.budget.reset();
    auto inst = make_instance(open, f, c);
    auto [solver, s] = solve(choose_solvers(rule, inst, algorithm_of(o.algorithm), eps), inst);
    if (std::find(names.begin(), names.end(), solver.name) == names.end()) names.push_back(solver.name);
    if (!solver.guarantee.empty()) guarantee = solver.guarantee;
    rows.push_back({s.feasible ? std::optional<Cost>(s.cost) : std::nullopt, c});
  }
  std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
    if (a.margin.has_value() != b.margin.has_value()) return a.margin.has_value();
    return a.margin && *a.margin < *b.margin;
  });
  BriberyInstance shape = make_instance(o, f, 0);
  out << "rule: " << to_string(rule) << "\nk: " << shape.k << "\noperation: " << variant_str(shape)
      << "\nalgorithm: ";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << '\n';
  if (!guarantee.empty()) out << "guarantee: " << guarantee << '\n';
  out << "margins:\n";
  for (const auto& r : rows)
    out << "  " << e.candidate_name(r.c) << ' ' << (r.margin ? std::to_string(*r.margin) : "inf") << '\n';
  return kExitOk;
}

struct GenOptions {
  std::string kind;
  int m = 0, n = 0;
  double prob = 0.5;
  std::uint64_t seed = 1;
  int k = 1;
  int max_price = 0;
  int vertices = 4;
  std::string edges;
  int h = 1;
  int x3c_n = 1;
  std::string sets;
  int alpha = 1;
  std::string out_path;
};

Graph parse_graph(int vertices, const std::string& edges) {
  Graph g{vertices, {}};
  if (edges.empty()) {
    for (int u = 0; u < vertices; ++u)
      for (int v = u + 1; v < vertices; ++v) g.edges.emplace_back(u, v);
    return g;
  }
  std::stringstream ss(edges);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto dash = item.find('-');
    if (dash == std::string::npos) throw std::invalid_argument("edge '" + item + "' is not u-v");
    g.edges.emplace_back(std::stoi(item.substr(0, dash)), std::stoi(item.substr(dash + 1)));
  }
  return g;
}

X3CInstance parse_sets(int n, const std::string& sets) {
  if (sets.empty()) return X3CInstance::repeated_blocks(n);
  X3CInstance x;
  std::stringstream ss(sets);
  std::string item;
  while (std::getline(ss, item, ';')) {
    std::array<int, 3> s{};
    std::stringstream parts(item);
    std::string num;
    int i = 0;
    while (std::getline(parts, num, ',')) {
      if (i >= 3) throw std::invalid_argument("set '" + item + "' has more than three elements");
      s[i++] = std::stoi(num) - 1;
    }
    if (i != 3) throw std::invalid_argument("set '" + item + "' needs three elements");
    x.sets.push_back(s);
  }
  x.n = static_cast<int>(x.sets.size()) / 3;
  return x;
}

int cmd_gen(const GenOptions& o, std::ostream& out, std::ostream& err) {
  std::ostringstream file;
  BriberyInstance inst;
  bool reduction = true;
  if (o.kind == "random") {
    reduction = false;
    inst.election = gen_random_election(o.m, o.n, o.prob, o.seed);
    if (o.k < 1 || o.k > o.m) throw std::invalid_argument("k must lie in [1, m]");
    inst.k = o.k;
    if (o.max_price > 0) inst.prices = gen_random_prices(inst.election, o.max_price, o.seed + 1);
    file << "# random election: m=" << o.m << " n=" << o.n << " p=" << o.prob << " seed=" << o.seed << '\n';
  } else if (o.kind == "is-reduction") {
    inst = gen_is_to_av_swap(parse_graph(o.vertices, o.edges), o.h);
    file << "# independent set reduction: h=" << o.h << '\n';
  } else if (o.kind == "x3c-reduction") {
    inst = gen_x3c_to_sav_swap(parse_sets(o.x3c_n, o.sets), o.alpha);
    file << "# exact cover reduction: alpha=" << o.alpha << '\n';
  } else {
    throw std::invalid_argument("unknown generator kind '" + o.kind + "'");
  }
  if (reduction) {
    file << "# p: " << inst.election.candidate_name(inst.p) << "\n# op: " << to_string(inst.op)
         << (inst.restricted_to_p ? " restricted to p" : "") << (inst.priced ? ", priced" : ", unit prices")
         << "\n# budget: " << inst.budget << '\n';
  }
  file << serialize_election(inst.election, inst.prices, inst.k);
  // The summary must not end up inside a redirected election file.
  std::ostream* summary = &out;
  if (o.out_path.empty()) {
    out << file.str();
    summary = &err;
  } else {
    std::ofstream f(o.out_path);
    if (!f) throw std::invalid_argument("cannot write " + o.out_path);
    f << file.str();
    out << "wrote " << o.out_path << '\n';
  }
  *summary << "candidates: " << inst.election.num_candidates() << "\nvoters: " << inst.election.num_voters()
           << "\nk: " << inst.k << '\n';
  if (reduction) *summary << "budget: " << inst.budget << '\n';
  return kExitOk;
}

struct VerifyOptions {
  Common common;
  std::string solution;
  std::string p;
  bool priced = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out, std::ostream& err) {
  auto f = load(o.common.file);
  Rule rule = rule_of(o.common.rule_name);
  int k = committee_size(o.common, f);
  auto p = f.election.find_candidate(o.p);
  if (!p) throw std::invalid_argument("unknown candidate '" + o.p + "'");
  if (k > f.election.num_candidates()) throw std::invalid_argument("k exceeds the number of candidates");
  std::string text = read_file(o.solution);
  std::vector<ParsedActionLine> lines;
  try {
    lines = parse_action_lines(text, f.election);
  } catch (const ParseError& ex) {
    err << "invalid action at " << ex.what() << '\n';
    return kExitInvalidAction;
  }
  Election e = f.election;
  PriceTable unit;
  const PriceTable& prices = o.priced ? f.prices : unit;
  Cost cost = 0;
  for (const auto& l : lines) {
    try {
      apply_action_in_place(e, l.action);
      Price price = action_price(prices, l.action);
      if (price.is_infinite()) throw InfeasibleAction("forbidden action (infinite price)");
      cost += price.value();
    } catch (const Error& ex) {
      err << "invalid action at line " << l.line << ": " << l.text << ": " << ex.what() << '\n';
      return kExitInvalidAction;
    }
  }
  bool wins = is_cowinner(e, rule, k, *p);
  out << "valid: yes\nactions: " << lines.size() << "\ncost: " << cost << "\np co-winner: "
      << (wins ? "yes" : "no") << '\n';
  return wins ? kExitOk : kExitInfeasible;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Approval-based multiwinner elections: winners and bribery"};
  app.require_subcommand(1);

  auto add_common = [](CLI::App* sub, Common& c) {
    sub->add_option("file", c.file, "Election file")->required();
    sub->add_option("--rule", c.rule_name, "av, sav, ccav, gav, pav or rav")->capture_default_str();
    sub->add_option("--k", c.k, "Committee size (overrides the file's k: line)");
  };

  Common winners;
  auto* w = app.add_subcommand("winners", "Scores and winning committees");
  add_common(w, winners);

  BribeOptions bribe;
  auto add_bribe = [&](CLI::App* sub, BribeOptions& b, bool with_target) {
    add_common(sub, b.common);
    sub->add_option("--op", b.op, "add, delete or swap")->capture_default_str();
    if (with_target) {
      sub->add_option("--p", b.p, "Preferred candidate")->required();
      sub->add_option("--budget", b.budget, "Budget; omit to report the minimum cost");
    }
    sub->add_flag("--priced", b.priced, "Use the file's prices instead of unit prices");
    sub->add_flag("--restrict-to-p", b.restricted, "Only operations that add approvals for p");
    sub->add_option("--algorithm", b.algorithm, "auto, exact, approx, fpt-n or oracle")->capture_default_str();
    sub->add_option("--epsilon", b.epsilon, "Error bound of the RAV PTAS")->capture_default_str();
  };
  auto* b = app.add_subcommand("bribe", "Cheapest bribery making p a co-winner");
  add_bribe(b, bribe, true);

  BribeOptions rank;
  auto* r = app.add_subcommand("rank", "Bribery margin of every candidate");
  add_bribe(r, rank, false);

  GenOptions gen;
  auto* g = app.add_subcommand("gen", "Generate an election file");
  g->set_help_flag("--help", "Print this help message and exit");
  g->add_option("--kind", gen.kind, "random, is-reduction or x3c-reduction")->required();
  g->add_option("--m", gen.m, "Candidates (random)");
  g->add_option("--n", gen.n, "Voters (random)");
  g->add_option("--prob", gen.prob, "Approval probability (random)");
  g->add_option("--seed", gen.seed, "Seed (random)");
  g->add_option("--k", gen.k, "Committee size (random)");
  g->add_option("--max-price", gen.max_price, "Write random prices in [1, max] (random)");
  g->add_option("--vertices", gen.vertices, "Vertex count (is-reduction)");
  g->add_option("--edges", gen.edges, "Edges as u-v,u-v,... with 0-based vertices; default complete graph");
  g->add_option("--h", gen.h, "Independent set size (is-reduction)");
  g->add_option("--x3c-n", gen.x3c_n, "n for the default repeated-block instance (x3c-reduction)");
  g->add_option("--sets", gen.sets, "Sets as a,b,c;a,b,c;... with 1-based elements (x3c-reduction)");
  g->add_option("--alpha", gen.alpha, "Approximation factor alpha (x3c-reduction)");
  g->add_option("--out", gen.out_path, "Output file; default stdout");

  VerifyOptions verify;
  auto* v = app.add_subcommand("verify", "Replay a solution file");
  add_common(v, verify.common);
  v->add_option("solution", verify.solution, "Solution file")->required();
  v->add_option("--p", verify.p, "Preferred candidate")->required();
  v->add_flag("--priced", verify.priced, "Charge the file's prices instead of unit prices");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& ex) {
    int code = app.exit(ex, out, err);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (*w) return cmd_winners(winners, out);
    if (*b) return cmd_bribe(bribe, out);
    if (*r) return cmd_rank(rank, out);
    if (*g) return cmd_gen(gen, out, err);
    if (*v) return cmd_verify(verify, out, err);
  } catch (const ParseError& ex) {
    err << "parse error: " << ex.what() << '\n';
    return kExitBadInput;
  } catch (const ResourceError& ex) {
    err << "resource limit: " << ex.what() << '\n';
    return kExitResource;
  } catch (const Unsupported& ex) {
    err << "unsupported: " << ex.what() << " (use --algorithm oracle)\n";
    return kExitUnsupported;
  } catch (const std::invalid_argument& ex) {
    err << "invalid input: " << ex.what() << '\n';
    return kExitBadInput;
  } catch (const Error& ex) {
    err << "error: " << ex.what() << '\n';
    return kExitBadInput;
  }
  return kExitBadInput;
}

}  // namespace mwb
