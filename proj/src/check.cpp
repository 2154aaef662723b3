#include "fzmod/check.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <sstream>

#include "fzmod/approx.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/semantics.hpp"
#include "fzmod/transforms.hpp"

namespace fzmod {

const char* const kForkModelText =
    "atoms: p\n"
    "states: s1 s2 s3 s4 s5 s6\n"
    "val s1 p 1\n"
    "val s2 p 1\n"
    "val s3 p 9/10\n"
    "val s4 p 1\n"
    "val s5 p 4/5\n"
    "val s6 p 9/10\n"
    "edge s1 s2 1/2\n"
    "edge s1 s3 1/2\n"
    "edge s4 s5 2/5\n"
    "edge s4 s6 3/10\n";

Model fork_model() { return parse_model(kForkModelText); }

LoopChain loop_chain_model(int chain_edges) {
  LoopChain out;
  out.loop_state = out.model.add_state("loop");
  out.model.set_relation(out.loop_state, out.loop_state, Truth::one());
  StateId prev = out.model.add_state("c0");
  out.chain_head = prev;
  for (int i = 1; i <= chain_edges; ++i) {
    StateId next = out.model.add_state("c" + std::to_string(i));
    out.model.set_relation(prev, next, Truth::one());
    prev = next;
  }
  return out;
}

namespace {

using Rows = std::vector<CheckRow>;

void add_row(Rows& rows, const std::string& suite, const std::string& case_id, bool pass,
             const std::string& detail) {
  rows.push_back(CheckRow{suite, case_id, pass, detail});
}

std::string rat(const Truth& t) { return t.str(); }

// ----------------------------------------------------------- suite: example

Rows suite_example(const CheckParams&) {
  Rows rows;
  const std::string suite = "example";
  Model fork = fork_model();
  StateId s1 = fork.state("s1");
  StateId s4 = fork.state("s4");

  auto expect = [&](const std::string& id, const Truth& got, const Truth& want) {
    add_row(rows, suite, id, got == want, "got " + rat(got) + ", want " + rat(want));
  };

  expect("d2-s1-s4", depth_distance(fork, 2).at(s1, s4), Truth::from_fraction(1, 5));
  expect("d1-s1-s4", depth_distance(fork, 1).at(s1, s4), Truth::from_fraction(1, 10));
  expect("d-unbounded-s1-s4", behavioural_distance(fork).at(s1, s4), Truth::from_fraction(1, 5));

  ModalFormula phi = parse_modal("<>(p .- 1/2)");
  expect("eval-s1", eval_modal(fork, phi, s1), Truth::from_fraction(1, 2));
  expect("eval-s4", eval_modal(fork, phi, s4), Truth::from_fraction(3, 10));

  auto d_game = bisim_wins(fork, fork, s1, s4, Truth::from_fraction(1, 5), 2);
  add_row(rows, suite, "game-eps-1/5", d_game.winner() == Player::Duplicator,
          "winner " + player_name(d_game.winner()));

  auto s_game = bisim_wins(fork, fork, s1, s4, Truth::from_fraction(19, 100), 2);
  bool spoiler = s_game.winner() == Player::Spoiler;
  std::string detail = "winner " + player_name(s_game.winner());
  bool witness_ok = false;
  if (spoiler) {
    auto witness = s_game.spoiler_witness(s1, s4, 2);
    if (witness && witness->on_left && witness->target == fork.state("s2")) {
      auto reply = s_game.duplicator_reply(s1, s4, *witness, 2);
      witness_ok = reply && *reply == fork.state("s5");
      detail += ", witness s1->s2 answered s4->" + (reply ? fork.state_name(*reply) : "none");
    } else {
      detail += ", unexpected witness";
    }
  }
  add_row(rows, suite, "game-eps-19/100", spoiler && witness_ok, detail);
  return rows;
}

// ------------------------------------------------------- suite: coincidence

Rows suite_coincidence(const CheckParams& p) {
  Rows rows;
  const std::string suite = "coincidence";
  Rng rng(p.seed);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  for (int k = 0; k < p.models; ++k) {
    Model m = random_model(rng, gen);
    bool pass = true;
    std::string detail;
    auto tables = depth_distance_tables(m, p.max_depth);
    for (int n = 1; n <= p.max_depth && pass; ++n) {
      DistanceTable kant = kantorovich_step(m, tables[n - 1]);
      for (StateId a = 0; a < m.state_count() && pass; ++a) {
        for (StateId b = 0; b <= a && pass; ++b) {
          Truth d_rec = tables[n].at(a, b);
          Truth d_game = game_distance_oracle(m, a, b, n);
          if (d_game != d_rec) {
            pass = false;
            detail = "game oracle " + rat(d_game) + " != recurrence " + rat(d_rec) + " at (" +
                     m.state_name(a) + "," + m.state_name(b) + "), depth " + std::to_string(n);
            break;
          }
          if (kant.at(a, b) != d_rec) {
            pass = false;
            detail = "kantorovich " + rat(kant.at(a, b)) + " != recurrence " + rat(d_rec) +
                     " at (" + m.state_name(a) + "," + m.state_name(b) + "), depth " +
                     std::to_string(n);
            break;
          }
          auto witness = logical_distance_lower(m, a, b, n, p.delta);
          if (witness.gap > d_rec || !leq_sum(d_rec, witness.gap, p.delta)) {
            pass = false;
            detail = "witness gap " + rat(witness.gap) + " outside [d-delta, d], d = " +
                     rat(d_rec) + " at (" + m.state_name(a) + "," + m.state_name(b) +
                     "), depth " + std::to_string(n);
            break;
          }
        }
      }
    }
    if (pass) {
      detail = std::to_string(m.state_count()) + " states, depths 1.." +
               std::to_string(p.max_depth) + " agree";
    }
    add_row(rows, suite, "model" + std::to_string(k), pass, detail);
  }
  return rows;
}

// ------------------------------------------------------ suite: pseudometric

Rows suite_pseudometric(const CheckParams& p) {
  Rows rows;
  const std::string suite = "pseudometric";
  Rng rng(p.seed + 1);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  int count = std::min(p.models, 100);
  const int top = 4;  // d_m <= d_n <= d for m <= n <= 4
  for (int k = 0; k < count; ++k) {
    Model m = k == 0 ? fork_model() : random_model(rng, gen);
    bool pass = true;
    std::string detail = "axioms verified on construction; chain d_0..d_4 <= d monotone";
    try {
      auto tables = depth_distance_tables(m, top);
      DistanceTable unbounded = behavioural_distance(m);
      for (int n = 1; n <= top && pass; ++n) {
        if (!DistanceTable::pointwise_leq(tables[n - 1], tables[n])) {
          pass = false;
          detail = "d_" + std::to_string(n - 1) + " > d_" + std::to_string(n) + " somewhere";
        }
      }
      if (pass && !DistanceTable::pointwise_leq(tables[top], unbounded)) {
        pass = false;
        detail = "d_4 exceeds the unbounded distance somewhere";
      }
    } catch (const PseudometricError& e) {
      pass = false;
      detail = std::string("pseudometric axiom violated: ") + e.what();
    }
    add_row(rows, suite, "model" + std::to_string(k), pass, detail);
  }
  return rows;
}

// ---------------------------------------------------------- suite: modalinv

Rows suite_modalinv(const CheckParams& p) {
  Rows rows;
  const std::string suite = "modalinv";
  Rng rng(p.seed + 2);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  const int per_model = 10;
  int batches = (p.formulas + per_model - 1) / per_model;
  const int max_rank = 3;
  for (int k = 0; k < batches; ++k) {
    Model m = random_model(rng, gen);
    auto tables = depth_distance_tables(m, max_rank);
    bool pass = true;
    std::string detail;
    for (int i = 0; i < per_model && pass; ++i) {
      ModalFormula phi = random_modal(rng, m.atoms(), max_rank, p.den);
      int r = phi.rank();
      for (StateId a = 0; a < m.state_count() && pass; ++a) {
        for (StateId b = 0; b < m.state_count() && pass; ++b) {
          Truth gap = abs_diff(eval_modal(m, phi, a), eval_modal(m, phi, b));
          if (gap > tables[r].at(a, b)) {
            pass = false;
            detail = "rank-" + std::to_string(r) + " formula exceeds d_" + std::to_string(r) +
                     " at (" + m.state_name(a) + "," + m.state_name(b) + "): gap " + rat(gap) +
                     " > " + rat(tables[r].at(a, b));
          }
        }
      }
    }
    if (pass) detail = std::to_string(per_model) + " formulas invariant";
    add_row(rows, suite, "batch" + std::to_string(k), pass, detail);
  }
  return rows;
}

// ----------------------------------------------------------- suite: density

Rows suite_density(const CheckParams& p) {
  Rows rows;
  const std::string suite = "density";
  Rng rng(p.seed + 3);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  for (int depth = 0; depth <= p.max_depth; ++depth) {
    bool pass = true;
    std::string detail;
    int done = 0;
    while (done < p.functions_per_depth && pass) {
      Model m = random_model(rng, gen);
      auto tables = depth_distance_tables(m, depth);
      const DistanceTable& d = tables[depth];
      // Three shapes of non-expansive functions: a shifted distance cone,
      // a meet of two cones, and the evaluation of a random formula.
      for (int shape = 0; shape < 3 && done < p.functions_per_depth && pass; ++shape) {
        std::vector<Truth> values(m.state_count());
        if (shape == 2) {
          ModalFormula phi = random_modal(rng, m.atoms(), depth, p.den);
          for (StateId s = 0; s < m.state_count(); ++s) values[s] = eval_modal(m, phi, s);
        } else {
          StateId x0 = static_cast<StateId>(rng.below(m.state_count()));
          Truth c = rng.truth_on_grid(p.den);
          for (StateId s = 0; s < m.state_count(); ++s) {
            values[s] = truncated_sub(c, d.at(x0, s));
          }
          if (shape == 1) {
            StateId x1 = static_cast<StateId>(rng.below(m.state_count()));
            Truth c1 = rng.truth_on_grid(p.den);
            for (StateId s = 0; s < m.state_count(); ++s) {
              values[s] = max(values[s], truncated_sub(c1, d.at(x1, s)));
            }
          }
        }
        StateFunction f(m, values);
        ModalFormula approx = approximate_function(m, f, depth, p.approx_eps);
        if (approx.rank() > depth) {
          pass = false;
          detail = "approximant rank " + std::to_string(approx.rank()) + " exceeds " +
                   std::to_string(depth);
          break;
        }
        for (StateId s = 0; s < m.state_count(); ++s) {
          Truth err = abs_diff(eval_modal(m, approx, s), f.at(s));
          if (err > p.approx_eps) {
            pass = false;
            detail = "approximation error " + rat(err) + " > " + rat(p.approx_eps) + " at " +
                     m.state_name(s);
            break;
          }
        }
        ++done;
      }
    }
    if (pass) {
      detail = std::to_string(done) + " functions approximated within " + rat(p.approx_eps);
    }
    add_row(rows, suite, "depth" + std::to_string(depth), pass, detail);
  }
  return rows;
}

// ---------------------------------------------------------- suite: locality

Rows suite_locality(const CheckParams& p) {
  Rows rows;
  const std::string suite = "locality";
  Rng rng(p.seed + 4);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  const int max_rank = 3;
  const int model_count = 40;
  for (int k = 0; k < model_count; ++k) {
    Model m = k == 0 ? fork_model() : random_model(rng, gen);
    bool pass = true;
    std::string detail;
    for (int i = 0; i < 5 && pass; ++i) {
      ModalFormula phi = random_modal(rng, m.atoms(), max_rank, p.den);
      int r = phi.rank();
      FolFormula translated = standard_translation(phi, "x");
      for (StateId s = 0; s < m.state_count() && pass; ++s) {
        auto report = locality_check(m, phi, s, r);
        if (!report.equal) {
          pass = false;
          detail = "rank-" + std::to_string(r) + " modal formula not " + std::to_string(r) +
                   "-local at " + m.state_name(s) + ": " + rat(report.on_model) + " vs " +
                   rat(report.on_restriction);
          break;
        }
        auto fol_report = locality_check(m, translated, s, r);
        if (!fol_report.equal) {
          pass = false;
          detail = "translated formula not " + std::to_string(r) + "-local at " +
                   m.state_name(s);
          break;
        }
      }
    }
    if (pass) detail = "5 formulas local at their rank radius";
    add_row(rows, suite, "model" + std::to_string(k), pass, detail);
  }
  return rows;
}

// ------------------------------------------------------- suite: translation

Rows suite_translation(const CheckParams& p) {
  Rows rows;
  const std::string suite = "translation";
  Rng rng(p.seed + 5);
  GenParams gen{p.max_states, p.max_atoms, p.den, p.edge_density};
  const int per_model = 10;
  int batches = (p.formulas + per_model - 1) / per_model;
  const int max_rank = 4;
  for (int k = 0; k < batches; ++k) {
    Model m = random_model(rng, gen);
    bool pass = true;
    std::string detail;
    for (int i = 0; i < per_model && pass; ++i) {
      ModalFormula phi = random_modal(rng, m.atoms(), max_rank, p.den);
      FolFormula translated = standard_translation(phi, "x");
      for (StateId s = 0; s < m.state_count() && pass; ++s) {
        Truth modal = eval_modal(m, phi, s);
        Truth fol = eval_fol(m, translated, Assignment{{"x", s}});
        if (modal != fol) {
          pass = false;
          detail = "modal " + rat(modal) + " != FOL " + rat(fol) + " at " + m.state_name(s);
        }
      }
    }
    if (pass) detail = std::to_string(per_model) + " translations value-preserving";
    add_row(rows, suite, "batch" + std::to_string(k), pass, detail);
  }
  return rows;
}

// ---------------------------------------------------------------- suite: ef

Rows suite_ef(const CheckParams& p) {
  Rows rows;
  const std::string suite = "ef";
  Rng rng(p.seed + 6);
  GenParams gen{std::min(p.max_states, 4), p.max_atoms, p.den, p.edge_density};
  const int max_rounds = 2;
  const int model_pairs = 12;
  std::vector<Truth> epsilons = {Truth::zero(), Truth::from_fraction(1, 12),
                                 Truth::from_fraction(1, 6), Truth::from_fraction(1, 3)};
  int total_wins = 0;
  for (int k = 0; k < model_pairs; ++k) {
    Model ma = random_model(rng, gen);
    GenParams gb = gen;
    gb.max_atoms = ma.atom_count();  // EF games need equal atom sets
    // Every third pair compares a model with itself, which guarantees
    // configurations Duplicator wins.
    Model mb = k % 3 == 0 ? ma : random_model(rng, gb);
    while (mb.atom_count() != ma.atom_count()) mb = random_model(rng, gb);
    bool pass = true;
    std::string detail;
    int wins_checked = 0;
    for (int rounds = 0; rounds <= max_rounds && pass; ++rounds) {
      auto pool = enumerate_fol_pool(ma.atoms(), 1, rounds, 150);
      for (const auto& eps : epsilons) {
        if (!pass) break;
        for (StateId a = 0; a < ma.state_count() && pass; ++a) {
          for (StateId b = 0; b < mb.state_count() && pass; ++b) {
            auto outcome = ef_wins(ma, mb, {a}, {b}, eps, rounds);
            if (outcome.winner() != Player::Duplicator) continue;
            ++wins_checked;
            for (const auto& phi : pool) {
              Truth va = eval_fol(ma, phi, Assignment{{"x1", a}});
              Truth vb = eval_fol(mb, phi, Assignment{{"x1", b}});
              if (abs_diff(va, vb) > eps) {
                pass = false;
                detail = "qr<=" + std::to_string(rounds) + " formula gap " +
                         rat(abs_diff(va, vb)) + " > eps " + rat(eps) + " at (" +
                         ma.state_name(a) + "," + mb.state_name(b) + ")";
                break;
              }
            }
          }
        }
      }
    }
    if (pass) {
      detail = std::to_string(wins_checked) + " duplicator wins respected the bound";
    }
    total_wins += wins_checked;
    add_row(rows, suite, "pair" + std::to_string(k), pass, detail);
  }
  add_row(rows, suite, "coverage", total_wins >= model_pairs,
          std::to_string(total_wins) + " winning configurations exercised");
  return rows;
}

// ---------------------------------------------------------- suite: zerodist

Rows suite_zerodist(const CheckParams& p) {
  Rows rows;
  const std::string suite = "zerodist";
  Rng rng(p.seed + 7);
  GenParams small{3, p.max_atoms, p.den, p.edge_density};
  std::vector<Truth> epsilons = {Truth::from_fraction(1, 100), Truth::from_fraction(1, 1000)};

  // Coproduct injections have behavioural distance 0.
  {
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 10 && pass; ++k) {
      Model ma = random_model(rng, small);
      GenParams gb = small;
      gb.max_atoms = ma.atom_count();
      Model mb = random_model(rng, gb);
      while (mb.atom_count() != ma.atom_count()) mb = random_model(rng, gb);
      auto u = disjoint_union(ma, mb);
      for (StateId a = 0; a < ma.state_count() && pass; ++a) {
        for (const auto& eps : epsilons) {
          auto g = bisim_wins(ma, u.model, a, u.left[a], eps, std::nullopt);
          if (g.winner() != Player::Duplicator) {
            pass = false;
            detail = "injection game lost at eps " + rat(eps) + ", state " + ma.state_name(a);
            break;
          }
        }
        if (pass) {
          auto w = disjoint_union(ma, u.model);
          Truth dist = behavioural_distance(w.model).at(w.left[a], w.right[u.left[a]]);
          if (!dist.is_zero()) {
            pass = false;
            detail = "injection distance " + rat(dist) + " != 0 at " + ma.state_name(a);
          }
        }
      }
    }
    if (pass) detail = "10 models, all injections at distance 0";
    add_row(rows, suite, "injections", pass, detail);
  }

  // Depth-k unravelling roots are 0-indistinguishable up to depth k.
  {
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 8 && pass; ++k) {
      Model m = random_model(rng, small);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      const int max_k = 2;
      for (int cut = 0; cut <= max_k && pass; ++cut) {
        TreeModel tree = unravel(m, a, cut);
        for (int n = 0; n <= cut && pass; ++n) {
          auto g = bisim_wins(m, tree.model, a, tree.root, Truth::zero(), n);
          if (g.winner() != Player::Duplicator) {
            pass = false;
            detail = "0-game lost at depth " + std::to_string(n) + " for truncation " +
                     std::to_string(cut);
          }
        }
        if (pass) {
          auto u = disjoint_union(m, tree.model);
          auto tables = depth_distance_tables(u.model, cut);
          for (int n = 0; n <= cut; ++n) {
            if (!tables[n].at(u.left[a], u.right[tree.root]).is_zero()) {
              pass = false;
              detail = "unravelling distance nonzero at depth " + std::to_string(n);
            }
          }
        }
      }
    }
    if (pass) detail = "8 models, roots indistinguishable up to the truncation depth";
    add_row(rows, suite, "unravelling", pass, detail);
  }

  // Partial unravelling roots are 0-indistinguishable at every depth.
  {
    bool pass = true;
    std::string detail;
    for (int k = 0; k < 6 && pass; ++k) {
      Model m = random_model(rng, small);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      RootedModel pu = partial_unravel(m, a, 1 + static_cast<int>(rng.below(2)));
      auto g = bisim_wins(m, pu.model, a, pu.root, Truth::zero(), std::nullopt);
      if (g.winner() != Player::Duplicator) {
        pass = false;
        detail = "unbounded 0-game lost against the partial unravelling";
        break;
      }
      auto u = disjoint_union(m, pu.model);
      Truth dist = behavioural_distance(u.model).at(u.left[a], u.right[pu.root]);
      if (!dist.is_zero()) {
        pass = false;
        detail = "partial unravelling distance " + rat(dist) + " != 0";
      }
    }
    if (pass) detail = "6 models, partial unravelling roots at distance 0";
    add_row(rows, suite, "partial-unravelling", pass, detail);
  }

  // Signature-equal states and quotient projections are at distance 0.
  {
    bool pass = true;
    std::string detail;
    int sig_pairs = 0;
    for (int k = 0; k < 8 && pass; ++k) {
      Model base = random_model(rng, small);
      // The union with itself guarantees signature-equal pairs.
      auto dup = disjoint_union(base, base);
      const Model& m = dup.model;
      for (int n = 0; n <= p.max_depth && pass; ++n) {
        auto sigs = signatures_at_depth(m, n);
        auto table = depth_distance(m, n);
        for (StateId a = 0; a < m.state_count() && pass; ++a) {
          for (StateId b = 0; b < a && pass; ++b) {
            if (sigs[a] == sigs[b]) {
              ++sig_pairs;
              if (!table.at(a, b).is_zero()) {
                pass = false;
                detail = "equal depth-" + std::to_string(n) + " signatures at distance " +
                         rat(table.at(a, b));
              }
            }
          }
        }
        if (!pass) break;
        auto quotient = quotient_by_signature(m, n);
        auto u = disjoint_union(m, quotient.model);
        auto qtable = depth_distance(u.model, n);
        for (StateId a = 0; a < m.state_count() && pass; ++a) {
          Truth dist = qtable.at(u.left[a], u.right[quotient.projection[a]]);
          if (!dist.is_zero()) {
            pass = false;
            detail = "quotient projection at depth " + std::to_string(n) + " has distance " +
                     rat(dist);
          }
        }
      }
    }
    if (pass) {
      detail = std::to_string(sig_pairs) + " signature-equal pairs and all projections at 0";
    }
    add_row(rows, suite, "signatures", pass, detail);
  }

  // Observation (not an assertion): on finite models, zero behavioural
  // distance appears to coincide with winning the 0-game. Duplicated
  // models make zero-distance pairs plentiful.
  {
    int zero_pairs = 0, zero_games_won = 0;
    for (int k = 0; k < 8; ++k) {
      Model base = random_model(rng, small);
      Model m = disjoint_union(base, base).model;
      auto d = behavioural_distance(m);
      for (StateId a = 0; a < m.state_count(); ++a) {
        for (StateId b = 0; b < a; ++b) {
          if (d.at(a, b).is_zero()) {
            ++zero_pairs;
            auto g = bisim_wins(m, m, a, b, Truth::zero(), std::nullopt);
            if (g.winner() == Player::Duplicator) ++zero_games_won;
          }
        }
      }
    }
    add_row(rows, suite, "zero-game-observation", true,
            "observed (not asserted): duplicator won the 0-game in " +
                std::to_string(zero_games_won) + "/" + std::to_string(zero_pairs) +
                " zero-distance pairs");
  }
  return rows;
}

// ------------------------------------------------------ suite: noninvariance

Rows suite_noninvariance(const CheckParams&) {
  Rows rows;
  const std::string suite = "noninvariance";
  FolFormula self_loop = parse_fol("R(x,x)");
  for (int n = 0; n <= 4; ++n) {
    LoopChain lc = loop_chain_model(n + 1);
    Truth dist = depth_distance(lc.model, n).at(lc.loop_state, lc.chain_head);
    Truth va = eval_fol(lc.model, self_loop, Assignment{{"x", lc.loop_state}});
    Truth vb = eval_fol(lc.model, self_loop, Assignment{{"x", lc.chain_head}});
    Truth gap = abs_diff(va, vb);
    bool pass = dist.is_zero() && gap.is_one();
    add_row(rows, suite, "depth" + std::to_string(n), pass,
            "d_" + std::to_string(n) + " = " + rat(dist) + ", R(x,x) gap = " + rat(gap));
  }
  return rows;
}

}  // namespace

const std::vector<std::string>& check_suite_names() {
  static const std::vector<std::string> names = {
      "example",  "coincidence", "pseudometric", "modalinv",  "density",
      "locality", "translation", "ef",           "zerodist",  "noninvariance"};
  return names;
}

std::vector<CheckRow> run_check_suite(const std::string& suite, const CheckParams& params) {
  if (suite == "example") return suite_example(params);
  if (suite == "coincidence") return suite_coincidence(params);
  if (suite == "pseudometric") return suite_pseudometric(params);
  if (suite == "modalinv") return suite_modalinv(params);
  if (suite == "density") return suite_density(params);
  if (suite == "locality") return suite_locality(params);
  if (suite == "translation") return suite_translation(params);
  if (suite == "ef") return suite_ef(params);
  if (suite == "zerodist") return suite_zerodist(params);
  if (suite == "noninvariance") return suite_noninvariance(params);
  throw ValueError("unknown check suite '" + suite + "'");
}

std::vector<CheckRow> run_all_check_suites(const CheckParams& params) {
  std::vector<CheckRow> rows;
  for (const auto& name : check_suite_names()) {
    auto sub = run_check_suite(name, params);
    rows.insert(rows.end(), sub.begin(), sub.end());
  }
  return rows;
}

std::string format_check_row(const CheckRow& row) {
  return "CHECK " + row.suite + " " + row.case_id + " " + (row.pass ? "PASS" : "FAIL") + " " +
         row.detail;
}

}  // namespace fzmod
