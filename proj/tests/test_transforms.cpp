#include "doctest.h"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/semantics.hpp"
#include "fzmod/transforms.hpp"

using namespace fzmod;

namespace {
Truth rat(std::int64_t n, std::int64_t d) { return Truth::from_fraction(n, d); }
}  // namespace

TEST_SUITE("transforms") {
  TEST_CASE("gaifman distance on the fork") {
    Model fork = fork_model();
    CHECK(gaifman_distance(fork, fork.state("s2"), fork.state("s3")) == 2);
    CHECK(!gaifman_distance(fork, fork.state("s1"), fork.state("s4")).has_value());
    CHECK(gaifman_distance(fork, fork.state("s1"), fork.state("s1")) == 0);
    CHECK(gaifman_distance(fork, fork.state("s1"), fork.state("s2")) == 1);
  }

  TEST_CASE("neighbourhood restriction") {
    Model fork = fork_model();
    Model ball = neighbourhood_restrict(fork, {fork.state("s1")}, 1);
    CHECK(ball.states() == std::vector<std::string>{"s1", "s2", "s3"});
    CHECK(ball.relation(ball.state("s1"), ball.state("s2")) == rat(1, 2));

    Model just_a = neighbourhood_restrict(fork, {fork.state("s4")}, 0);
    CHECK(just_a.states() == std::vector<std::string>{"s4"});
    CHECK(just_a.edge_count() == 0);

    // Radius beyond the component diameter keeps the whole component.
    Model comp = neighbourhood_restrict(fork, {fork.state("s2")}, 10);
    CHECK(comp.state_count() == 3);
  }

  TEST_CASE("unravelling the fork") {
    Model fork = fork_model();
    TreeModel tree = unravel(fork, fork.state("s1"), 2);
    CHECK(tree.model.state_count() == 3);
    CHECK(tree.model.state_name(tree.root) == "s1");
    CHECK(tree.model.find_state("s1/s2").has_value());
    CHECK(tree.model.find_state("s1/s3").has_value());
    CHECK(!tree.parent[tree.root].has_value());

    TreeModel leaf_only = unravel(fork, fork.state("s2"), 5);
    CHECK(leaf_only.model.state_count() == 1);

    // Tree shape: every non-root has exactly one parent edge.
    Rng rng(71);
    for (int i = 0; i < 10; ++i) {
      Model m = random_model(rng, GenParams{3, 1, 6, rat(1, 2)});
      TreeModel t = unravel(m, 0, 2);
      for (StateId s = 0; s < t.model.state_count(); ++s) {
        if (s == t.root) continue;
        REQUIRE(t.parent[s].has_value());
        CHECK(!t.model.relation(*t.parent[s], s).is_zero());
      }
    }
  }

  TEST_CASE("unravelling roots win the 0-game up to the truncation depth") {
    Model fork = fork_model();
    Rng rng(72);
    for (int i = 0; i < 8; ++i) {
      Model m = i == 0 ? fork : random_model(rng, GenParams{3, 1, 6, rat(1, 2)});
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      for (int cut = 0; cut <= 2; ++cut) {
        TreeModel t = unravel(m, a, cut);
        for (int n = 0; n <= cut; ++n) {
          CHECK(bisim_wins(m, t.model, a, t.root, Truth::zero(), n).winner() ==
                Player::Duplicator);
        }
      }
    }
  }

  TEST_CASE("partial unravelling") {
    // A one-state loop unravelled at depth 1: path of one edge into a fresh
    // loop copy.
    Model loop;
    StateId a = loop.add_state("a");
    loop.set_relation(a, a, Truth::one());
    RootedModel pu = partial_unravel(loop, a, 1);
    CHECK(pu.model.state_count() == 3);
    StateId step = pu.model.state("a/a");
    StateId copy = pu.model.state("a/a/a");
    CHECK(pu.model.relation(pu.root, step) == Truth::one());
    CHECK(pu.model.relation(step, copy) == Truth::one());
    CHECK(pu.model.relation(copy, copy) == Truth::one());

    // Depth 0: a fresh copy of the model entered through the root.
    Model fork = fork_model();
    RootedModel flat = partial_unravel(fork, fork.state("s1"), 0);
    CHECK(flat.model.state_count() == 1 + fork.state_count());
    CHECK(flat.model.relation(flat.root, flat.model.state("s1/s2")) == rat(1, 2));

    // The root wins the unbounded 0-game against the original state.
    Rng rng(73);
    for (int i = 0; i < 8; ++i) {
      Model m = random_model(rng, GenParams{3, 1, 6, rat(1, 2)});
      StateId s = static_cast<StateId>(rng.below(m.state_count()));
      RootedModel p = partial_unravel(m, s, 1 + static_cast<int>(rng.below(2)));
      CHECK(bisim_wins(m, p.model, s, p.root, Truth::zero(), std::nullopt).winner() ==
            Player::Duplicator);
    }
  }

  TEST_CASE("path names stay unambiguous under slashes") {
    Model m;
    m.add_state("a/b");
    m.add_state("c");
    m.set_relation(0, 1, Truth::one());
    m.set_relation(1, 0, rat(1, 2));
    TreeModel t = unravel(m, 0, 2);
    // Components double their slashes: "a/b" -> "a//b".
    CHECK(t.model.state_name(t.root) == "a//b");
    CHECK(t.model.find_state("a//b/c").has_value());
    CHECK(t.model.find_state("a//b/c/a//b").has_value());
    CHECK(t.model.state_count() == 3);
  }

  TEST_CASE("locality checks") {
    Model fork = fork_model();
    ModalFormula phi = parse_modal("<>(p .- 1/2)");
    FolFormula translated = standard_translation(phi, "x");
    auto report = locality_check(fork, translated, fork.state("s1"), 2);
    CHECK(report.equal);
    CHECK(report.on_model == rat(1, 2));
    CHECK(report.on_restriction == rat(1, 2));

    // A self-loop survives a radius-1 restriction.
    LoopChain lc = loop_chain_model(3);
    auto loop_report = locality_check(lc.model, parse_fol("R(x,x)"), lc.loop_state, 1);
    CHECK(loop_report.equal);
    CHECK(loop_report.on_model == Truth::one());

    auto const_report = locality_check(fork, ModalFormula::constant(rat(2, 7)),
                                       fork.state("s1"), 0);
    CHECK(const_report.equal);
    CHECK(const_report.on_model == rat(2, 7));

    CHECK_THROWS_AS(locality_check(fork, parse_fol("R(x,y)"), fork.state("s1"), 1), EvalError);
  }

  TEST_CASE("modal formulas are local at their rank and beyond") {
    Rng rng(74);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 15; ++i) {
      Model m = random_model(rng, gen);
      for (int j = 0; j < 4; ++j) {
        ModalFormula phi = random_modal(rng, m.atoms(), 3, 6);
        int r = phi.rank();
        FolFormula tr = standard_translation(phi, "x");
        // One quantifier per diamond; atoms add to the rank but not to qr.
        CHECK(tr.qrank() <= r);
        int big = 1;  // 3^qr, which always covers the rank
        for (int k = 0; k < tr.qrank(); ++k) big *= 3;
        CHECK(big >= r);
        for (StateId s = 0; s < m.state_count(); ++s) {
          CHECK(locality_check(m, phi, s, r).equal);
          CHECK(locality_check(m, tr, s, big).equal);
        }
      }
    }
  }

  TEST_CASE("neighbourhood restriction wins the depth-k 0-game") {
    Rng rng(75);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 12; ++i) {
      Model m = random_model(rng, gen);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      for (int k = 1; k <= 3; ++k) {
        Model ball = neighbourhood_restrict(m, {a}, k);
        StateId a_in_ball = ball.state(m.state_name(a));
        CHECK(bisim_wins(m, ball, a, a_in_ball, Truth::zero(), k).winner() ==
              Player::Duplicator);
      }
    }
  }
}
