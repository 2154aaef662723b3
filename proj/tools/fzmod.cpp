// Command-line front-end: evaluation, distances, games, transformations,
// translation, approximation, and the theorem-derived check suites.
//
// Exit codes: 0 success, 1 property/check failure, 2 usage or input error.

#include <cctype>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "fzmod/approx.hpp"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/print.hpp"
#include "fzmod/semantics.hpp"
#include "fzmod/transforms.hpp"

namespace {

using namespace fzmod;

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Model load_model(const std::string& path) { return parse_model(slurp(path)); }

// "1/5 (0.2)" in text mode, bare rational in porcelain mode.
std::string show(const Truth& t, bool porcelain) {
  if (porcelain) return t.str();
  return t.str() + " (" + decimal_string(t) + ")";
}

Truth parse_truth_arg(const std::string& text, const char* what) {
  try {
    return Truth::parse(text);
  } catch (const ValueError& e) {
    throw Error(std::string(what) + ": " + e.what());
  }
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : text) {
    if (c == ',' || std::isspace(static_cast<unsigned char>(c))) {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct EvalArgs {
  std::string model_path, formula, formula_path;
  std::vector<std::string> states;
  std::vector<std::string> binds;
  bool fol = false;
};

std::string formula_text(const std::string& inline_text, const std::string& path) {
  if (!inline_text.empty() && !path.empty()) {
    throw Error("give --formula or --formula-file, not both");
  }
  if (!path.empty()) return slurp(path);
  if (inline_text.empty()) throw Error("a formula is required (--formula or --formula-file)");
  return inline_text;
}

int cmd_eval(const EvalArgs& args, bool porcelain) {
  Model m = load_model(args.model_path);
  std::string text = formula_text(args.formula, args.formula_path);
  if (!args.fol) {
    if (args.states.size() != 1) throw Error("eval needs exactly one --state");
    ModalFormula f = parse_modal(text);
    std::cout << show(eval_modal(m, f, m.state(args.states[0])), porcelain) << "\n";
    return 0;
  }
  FolFormula f = parse_fol(text);
  Assignment env;
  for (const auto& bind : args.binds) {
    auto eq = bind.find('=');
    if (eq == std::string::npos) throw Error("--bind expects var=state");
    env[bind.substr(0, eq)] = m.state(bind.substr(eq + 1));
  }
  // --state arguments bind free variables in order of name.
  auto free_vars = f.free_variables();
  std::size_t i = 0;
  for (const auto& var : free_vars) {
    if (env.count(var)) continue;
    if (i >= args.states.size()) {
      throw Error("free variable '" + var + "' has no state (use --state or --bind)");
    }
    env[var] = m.state(args.states[i++]);
  }
  if (i < args.states.size()) throw Error("more --state arguments than free variables");
  std::cout << show(eval_fol(m, f, env), porcelain) << "\n";
  return 0;
}

struct DistanceArgs {
  std::string model_path, other_path;
  std::string a, b;
  int depth = -1;
  bool unbounded = false;
  std::string method = "recurrence";
  bool witness = false;
  std::string delta = "1/100";
};

int cmd_distance(const DistanceArgs& args, bool porcelain) {
  Model m = load_model(args.model_path);
  if (!args.unbounded && args.depth < 0) throw Error("give --depth n or --unbounded");
  std::optional<int> depth;
  if (!args.unbounded) depth = args.depth;

  // Cross-model distances route through the disjoint union.
  std::string a = args.a, b = args.b;
  if (!args.other_path.empty()) {
    Model other = load_model(args.other_path);
    if (a.empty() || b.empty()) throw Error("cross-model distance needs --a and --b");
    auto u = disjoint_union(m, other);
    a = m.state_name(m.state(a)) + "/L";
    b = other.state_name(other.state(b)) + "/R";
    m = std::move(u.model);
  }

  auto table = [&]() -> DistanceTable {
    if (args.method == "recurrence") {
      return depth ? depth_distance(m, *depth) : behavioural_distance(m);
    }
    if (args.method == "kantorovich") {
      if (!depth) throw Error("--method kantorovich needs --depth");
      DistanceTable t = DistanceTable::zero(m, Provenance{"kantorovich", 0});
      for (int n = 0; n < *depth; ++n) t = kantorovich_step(m, t);
      return t;
    }
    throw Error("unknown --method '" + args.method + "'");
  };

  if (a.empty() != b.empty()) throw Error("give both --a and --b, or neither");
  if (a.empty()) {
    if (args.method == "game") throw Error("--method game needs --a and --b");
    std::cout << table().to_text();
    return 0;
  }

  Truth value;
  if (args.method == "game") {
    value = game_distance_oracle(m, m.state(a), m.state(b), depth);
  } else {
    value = table().at(m.state(a), m.state(b));
  }
  std::cout << show(value, porcelain) << "\n";

  if (args.witness) {
    int witness_depth = depth ? *depth : 0;
    if (!depth) {
      // Unbounded distance is attained at finite depth; find one that does.
      DistanceTable target = behavioural_distance(m);
      while (!(depth_distance(m, witness_depth) == target)) ++witness_depth;
    }
    auto result = logical_distance_lower(m, m.state(a), m.state(b), witness_depth,
                                         parse_truth_arg(args.delta, "--delta"));
    std::cout << "witness: " << print_modal(result.formula) << "\n";
    std::cout << "gap: " << show(result.gap, porcelain) << "\n";
  }
  return 0;
}

struct GameArgs {
  std::string model_path, other_path;
  std::string a, b;
  std::string epsilon = "0";
  int depth = -1;
  bool unbounded = false;
  bool trace = false;
  std::string moves;
};

int cmd_game(const GameArgs& args, bool porcelain) {
  (void)porcelain;
  Model m = load_model(args.model_path);
  Model other = args.other_path.empty() ? Model() : load_model(args.other_path);
  const Model& right = args.other_path.empty() ? m : other;
  if (!args.unbounded && args.depth < 0) throw Error("give --depth n or --unbounded");
  std::optional<int> depth;
  if (!args.unbounded) depth = args.depth;
  Truth eps = parse_truth_arg(args.epsilon, "--epsilon");

  auto outcome = bisim_wins(m, right, m.state(args.a), right.state(args.b), eps, depth);
  std::cout << player_name(outcome.winner()) << "\n";

  if (args.trace) {
    std::vector<BisimMove> script;
    for (const auto& word : split_list(args.moves)) {
      BisimMove move;
      std::string name = word;
      std::optional<bool> prefix_left;
      if (word.rfind("a:", 0) == 0) {
        prefix_left = true;
        name = word.substr(2);
      } else if (word.rfind("b:", 0) == 0) {
        prefix_left = false;
        name = word.substr(2);
      }
      if (outcome.winner() == Player::Duplicator) {
        // The script plays Spoiler: the side must be explicit.
        if (!prefix_left) throw Error("spoiler moves need a side prefix: a:<state> or b:<state>");
        move.on_left = *prefix_left;
        move.target = move.on_left ? m.state(name) : right.state(name);
      } else {
        // The script plays Duplicator's replies; the side is forced by the
        // witness move, so bare names are fine when unambiguous.
        if (prefix_left) {
          move.target = *prefix_left ? m.state(name) : right.state(name);
        } else {
          auto id = right.find_state(name);
          if (!id) id = m.find_state(name);
          if (!id) throw Error("unknown state '" + name + "'");
          move.target = *id;
        }
      }
      script.push_back(move);
    }
    Transcript t = game_trace(outcome, script);
    for (std::size_t i = 0; i < t.steps.size(); ++i) {
      const auto& s = t.steps[i];
      std::cout << "round " << (i + 1) << ": (" << s.config_a << "," << s.config_b << ") S "
                << (s.spoiler_on_left ? "a" : "b") << " -> " << s.spoiler_target << ", D -> "
                << s.reply_target << "\n";
    }
    std::cout << "end: " << t.end << "\n";
  }
  return 0;
}

struct CheckArgs {
  std::string suite = "all";
  CheckParams params;
  std::string density = "1/2";
  std::string delta = "1/100";
  std::string approx_eps = "1/20";
};

int cmd_check(CheckArgs args) {
  args.params.edge_density = parse_truth_arg(args.density, "--density");
  args.params.delta = parse_truth_arg(args.delta, "--delta");
  args.params.approx_eps = parse_truth_arg(args.approx_eps, "--eps");
  std::vector<CheckRow> rows;
  if (args.suite == "all") {
    rows = run_all_check_suites(args.params);
  } else {
    rows = run_check_suite(args.suite, args.params);
  }
  int failed = 0;
  std::map<std::string, std::pair<int, int>> per_suite;
  for (const auto& row : rows) {
    std::cout << format_check_row(row) << "\n";
    auto& [pass_count, total] = per_suite[row.suite];
    ++total;
    if (row.pass) {
      ++pass_count;
    } else {
      ++failed;
    }
  }
  for (const auto& [suite, counts] : per_suite) {
    std::cout << "SUITE " << suite << " " << counts.first << "/" << counts.second << " passed\n";
  }
  return failed == 0 ? 0 : 1;
}

struct TransformArgs {
  std::string op, model_path, other_path;
  std::string root;
  std::string states;
  int depth = 0;
  int radius = 0;
};

int cmd_transform(const TransformArgs& args) {
  Model m = load_model(args.model_path);
  if (args.op == "unravel") {
    std::cout << print_model(unravel(m, m.state(args.root), args.depth).model);
  } else if (args.op == "partial-unravel") {
    std::cout << print_model(partial_unravel(m, m.state(args.root), args.depth).model);
  } else if (args.op == "restrict") {
    std::vector<StateId> anchors;
    for (const auto& name : split_list(args.states)) anchors.push_back(m.state(name));
    if (anchors.empty()) throw Error("--op restrict needs --states");
    std::cout << print_model(neighbourhood_restrict(m, anchors, args.radius));
  } else if (args.op == "quotient") {
    std::cout << print_model(quotient_by_signature(m, args.depth).model);
  } else if (args.op == "union") {
    if (args.other_path.empty()) throw Error("--op union needs --other");
    std::cout << print_model(disjoint_union(m, load_model(args.other_path)).model);
  } else {
    throw Error("unknown --op '" + args.op +
                "' (unravel, partial-unravel, restrict, quotient, union)");
  }
  return 0;
}

int cmd_translate(const std::string& formula, const std::string& formula_path,
                  const std::string& var) {
  std::string text = formula_text(formula, formula_path);
  std::cout << print_fol(standard_translation(parse_modal(text), var)) << "\n";
  return 0;
}

struct ApproximateArgs {
  std::string model_path, fun_path;
  int depth = 0;
  std::string eps = "1/20";
};

int cmd_approximate(const ApproximateArgs& args, bool porcelain) {
  Model m = load_model(args.model_path);
  StateFunction f = StateFunction::parse(m, slurp(args.fun_path));
  ModalFormula approx =
      approximate_function(m, f, args.depth, parse_truth_arg(args.eps, "--epsilon"));
  std::cout << print_modal(approx) << "\n";
  if (!porcelain) {
    Truth worst = Truth::zero();
    for (StateId s = 0; s < m.state_count(); ++s) {
      worst = max(worst, abs_diff(eval_modal(m, approx, s), f.at(s)));
    }
    std::cout << "# rank " << approx.rank() << ", sup error " << worst.str() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fuzzy relational models: Zadeh modal/FOL logic, behavioural distances, games"};
  app.require_subcommand(1);
  bool porcelain = false;
  app.add_flag("--porcelain", porcelain, "machine-readable output (bare rationals)");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "evaluate a formula at a state");
  eval->add_option("--model", eval_args.model_path, "model file")->required();
  eval->add_option("--formula", eval_args.formula, "formula text");
  eval->add_option("--formula-file", eval_args.formula_path, "read the formula from a file");
  eval->add_option("--state", eval_args.states, "state name (repeatable for FOL)");
  eval->add_option("--bind", eval_args.binds, "FOL binding var=state (repeatable)");
  eval->add_flag("--fol", eval_args.fol, "parse and evaluate as FOL");

  DistanceArgs dist_args;
  auto* dist = app.add_subcommand("distance", "behavioural distance (table or one pair)");
  dist->add_option("--model", dist_args.model_path, "model file")->required();
  dist->add_option("--other", dist_args.other_path, "second model (cross-model distance)");
  dist->add_option("--a", dist_args.a, "first state");
  dist->add_option("--b", dist_args.b, "second state");
  dist->add_option("--depth", dist_args.depth, "finite depth n");
  dist->add_flag("--unbounded", dist_args.unbounded, "unbounded behavioural distance");
  dist->add_option("--method", dist_args.method, "recurrence | game | kantorovich");
  dist->add_flag("--witness", dist_args.witness, "also synthesize a witness formula");
  dist->add_option("--delta", dist_args.delta, "witness slack (default 1/100)");

  GameArgs game_args;
  auto* game = app.add_subcommand("game", "solve an epsilon-bisimulation game");
  game->add_option("--model", game_args.model_path, "model file")->required();
  game->add_option("--other", game_args.other_path, "second model");
  game->add_option("--a", game_args.a, "spoiler-side state")->required();
  game->add_option("--b", game_args.b, "duplicator-side state")->required();
  game->add_option("--epsilon", game_args.epsilon, "allowed deviation")->required();
  game->add_option("--depth", game_args.depth, "number of rounds");
  game->add_flag("--unbounded", game_args.unbounded, "unrestricted game");
  game->add_flag("--trace", game_args.trace, "replay the strategy against --moves");
  game->add_option("--moves", game_args.moves, "adversary script, e.g. \"a:s2,b:s5\"");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "run the theorem-derived property suites");
  check->add_option("--suite", check_args.suite, "suite name or 'all'");
  check->add_option("--seed", check_args.params.seed, "random seed");
  check->add_option("--models", check_args.params.models, "sample size");
  check->add_option("--max-states", check_args.params.max_states, "state bound");
  check->add_option("--max-atoms", check_args.params.max_atoms, "atom bound");
  check->add_option("--max-depth", check_args.params.max_depth, "depth bound");
  check->add_option("--den", check_args.params.den, "value grid denominator");
  check->add_option("--density", check_args.density, "edge probability");
  check->add_option("--formulas", check_args.params.formulas, "fuzz corpus size");
  check->add_option("--functions", check_args.params.functions_per_depth,
                    "density suite functions per depth");
  check->add_option("--delta", check_args.delta, "witness slack");
  check->add_option("--eps", check_args.approx_eps, "approximation bound");

  TransformArgs tf_args;
  auto* tf = app.add_subcommand("transform", "emit a transformed model");
  tf->add_option("--op", tf_args.op, "unravel | partial-unravel | restrict | quotient | union")
      ->required();
  tf->add_option("--model", tf_args.model_path, "model file")->required();
  tf->add_option("--other", tf_args.other_path, "second model (union)");
  tf->add_option("--root", tf_args.root, "root state (unravelling)");
  tf->add_option("--depth", tf_args.depth, "depth (unravelling, quotient)");
  tf->add_option("--radius", tf_args.radius, "radius (restrict)");
  tf->add_option("--states", tf_args.states, "anchor states (restrict), comma-separated");

  std::string translate_formula, translate_formula_path, translate_var = "x";
  auto* translate = app.add_subcommand("translate", "standard translation into FOL");
  translate->add_option("--formula", translate_formula, "modal formula");
  translate->add_option("--formula-file", translate_formula_path,
                        "read the formula from a file");
  translate->add_option("--var", translate_var, "free variable name (default x)");

  ApproximateArgs approx_args;
  auto* approx = app.add_subcommand("approximate", "modally approximate a state function");
  approx->add_option("--model", approx_args.model_path, "model file")->required();
  approx->add_option("--fun", approx_args.fun_path, "state function file")->required();
  approx->add_option("--depth", approx_args.depth, "rank bound")->required();
  approx->add_option("--epsilon", approx_args.eps, "approximation bound");

  try {
    app.parse(argc, argv);
    if (eval->parsed()) return cmd_eval(eval_args, porcelain);
    if (dist->parsed()) return cmd_distance(dist_args, porcelain);
    if (game->parsed()) return cmd_game(game_args, porcelain);
    if (check->parsed()) return cmd_check(check_args);
    if (tf->parsed()) return cmd_transform(tf_args);
    if (translate->parsed()) {
      return cmd_translate(translate_formula, translate_formula_path, translate_var);
    }
    if (approx->parsed()) return cmd_approximate(approx_args, porcelain);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  } catch (const NonExpansiveError& e) {
    std::cerr << "error: " << e.what() << "\n";
    std::cerr << "violating pair: (" << e.state_a() << ", " << e.state_b() << ")\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
