#include "doctest.h"
#include "fzmod/approx.hpp"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/semantics.hpp"

using namespace fzmod;

namespace {
Truth rat(std::int64_t n, std::int64_t d) { return Truth::from_fraction(n, d); }
}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("value grid") {
    Model fork = fork_model();
    ValueGrid grid = ValueGrid::for_model(fork);
    CHECK(grid.denominator() == 10);
    CHECK(grid.contains(rat(3, 10)));
    CHECK(grid.contains(rat(1, 2)));
    CHECK(!grid.contains(rat(1, 3)));
    CHECK(grid.points().size() == 11);
    CHECK(grid.points_with_midpoints().size() == 21);
  }

  TEST_CASE("fork distances") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    auto tables = depth_distance_tables(fork, 3);
    CHECK(tables[0].at(s1, s4).is_zero());
    CHECK(tables[1].at(s1, s4) == rat(1, 10));
    CHECK(tables[2].at(s1, s4) == rat(1, 5));
    CHECK(tables[3].at(s1, s4) == rat(1, 5));
    CHECK(behavioural_distance(fork).at(s1, s4) == rat(1, 5));
    // Values stay on the model grid.
    ValueGrid grid = ValueGrid::for_model(fork);
    for (const auto& t : tables) {
      for (int a = 0; a < t.size(); ++a) {
        for (int b = 0; b < t.size(); ++b) CHECK(grid.contains(t.at(a, b)));
      }
    }
  }

  TEST_CASE("game oracle agrees on the fork") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    CHECK(game_distance_oracle(fork, s1, s4, 2) == rat(1, 5));
    CHECK(game_distance_oracle(fork, s1, s4, 1) == rat(1, 10));
    CHECK(game_distance_oracle(fork, s4, s4, std::nullopt).is_zero());
    CHECK(game_distance_oracle(fork, s1, s4, std::nullopt) == rat(1, 5));
  }

  TEST_CASE("kantorovich lift on the fork") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    LiftInput x = LiftInput::of_state(fork, s1);
    LiftInput y = LiftInput::of_state(fork, s4);
    DistanceTable zero = DistanceTable::zero(fork, Provenance{"test", 0});
    CHECK(kantorovich_lift(zero, x, y) == rat(1, 10));
    CHECK(kantorovich_lift(zero, x, x).is_zero());
    DistanceTable d1 = depth_distance(fork, 1);
    CHECK(kantorovich_lift(d1, x, y) == rat(1, 5));
  }

  TEST_CASE("candidate family matches exhaustive search on small carriers") {
    // The fork (6 states, grid 1/10) plus random models up to 6 states with
    // small grids.
    Model fork = fork_model();
    auto check_model = [](const Model& m, int max_depth) {
      auto tables = depth_distance_tables(m, max_depth);
      std::vector<LiftInput> in;
      for (StateId s = 0; s < m.state_count(); ++s) in.push_back(LiftInput::of_state(m, s));
      for (int n = 0; n < max_depth; ++n) {
        for (StateId a = 0; a < m.state_count(); ++a) {
          for (StateId b = 0; b < a; ++b) {
            Truth cand = kantorovich_candidate_sup(tables[n], in[a], in[b]);
            Truth full = kantorovich_exhaustive_sup(tables[n], in[a], in[b]);
            CHECK(cand == full);
          }
        }
      }
    };
    check_model(fork, 2);
    Rng rng(51);
    GenParams small_grid{6, 2, 4, rat(1, 2)};
    for (int i = 0; i < 8; ++i) check_model(random_model(rng, small_grid), 2);
    GenParams tiny{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 8; ++i) check_model(random_model(rng, tiny), 3);
  }

  TEST_CASE("three-way coincidence on random models") {
    Rng rng(52);
    GenParams gen{5, 2, 12, rat(1, 2)};
    for (int i = 0; i < 25; ++i) {
      Model m = random_model(rng, gen);
      auto tables = depth_distance_tables(m, 3);
      for (int n = 1; n <= 3; ++n) {
        DistanceTable kant = kantorovich_step(m, tables[n - 1]);
        for (StateId a = 0; a < m.state_count(); ++a) {
          for (StateId b = 0; b <= a; ++b) {
            CHECK(kant.at(a, b) == tables[n].at(a, b));
            CHECK(game_distance_oracle(m, a, b, n) == tables[n].at(a, b));
          }
        }
      }
    }
  }

  TEST_CASE("unbounded distance equals the stabilized oracle") {
    Rng rng(53);
    GenParams gen{4, 1, 6, rat(1, 2)};
    for (int i = 0; i < 12; ++i) {
      Model m = random_model(rng, gen);
      DistanceTable d = behavioural_distance(m);
      for (StateId a = 0; a < m.state_count(); ++a) {
        for (StateId b = 0; b <= a; ++b) {
          CHECK(game_distance_oracle(m, a, b, std::nullopt) == d.at(a, b));
        }
      }
    }
  }

  TEST_CASE("duplicate states have distance zero") {
    Model base = fork_model();
    auto u = disjoint_union(base, base);
    DistanceTable d = behavioural_distance(u.model);
    for (StateId s = 0; s < base.state_count(); ++s) {
      CHECK(d.at(u.left[s], u.right[s]).is_zero());
    }
  }

  TEST_CASE("a loop is indistinguishable from a long enough chain") {
    LoopChain lc = loop_chain_model(5);
    for (int n = 0; n <= 4; ++n) {
      CHECK(depth_distance(lc.model, n).at(lc.loop_state, lc.chain_head).is_zero());
      CHECK(game_distance_oracle(lc.model, lc.loop_state, lc.chain_head, n).is_zero());
    }
    // With the chain exhausted the loop becomes visible.
    LoopChain short_chain = loop_chain_model(2);
    CHECK(!depth_distance(short_chain.model, 3)
               .at(short_chain.loop_state, short_chain.chain_head)
               .is_zero());
  }

  TEST_CASE("logical lower bounds on the fork") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    auto w2 = logical_distance_lower(fork, s1, s4, 2, rat(1, 100));
    CHECK(w2.gap >= rat(19, 100));
    CHECK(w2.gap <= rat(1, 5));
    CHECK(w2.formula.rank() <= 2);
    // The handwritten witness attains the distance exactly.
    ModalFormula ideal = parse_modal("<>(p .- 1/2)");
    CHECK(abs_diff(eval_modal(fork, ideal, s1), eval_modal(fork, ideal, s4)) == rat(1, 5));

    auto w1 = logical_distance_lower(fork, s1, s4, 1, rat(1, 100));
    CHECK(w1.gap >= rat(9, 100));
    CHECK(w1.formula.rank() <= 1);

    auto self_pair = logical_distance_lower(fork, s1, s1, 3, rat(1, 100));
    CHECK(self_pair.gap.is_zero());
    CHECK(self_pair.formula == ModalFormula::constant(Truth::zero()));
  }

  TEST_CASE("the proof witness function is non-expansive") {
    Rng rng(54);
    GenParams gen{5, 2, 12, rat(1, 2)};
    for (int i = 0; i < 20; ++i) {
      Model m = random_model(rng, gen);
      auto tables = depth_distance_tables(m, 2);
      const DistanceTable& prev = tables[1];
      for (StateId a = 0; a < m.state_count(); ++a) {
        for (const auto& [succ, r] : m.successors(a)) {
          // f(x) = R(a, succ) (-) d_1(succ, x)
          for (StateId x = 0; x < m.state_count(); ++x) {
            for (StateId y = 0; y < m.state_count(); ++y) {
              Truth fx = truncated_sub(r, prev.at(succ, x));
              Truth fy = truncated_sub(r, prev.at(succ, y));
              CHECK(abs_diff(fx, fy) <= prev.at(x, y));
            }
          }
        }
      }
    }
  }

  TEST_CASE("grid cap guards the oracle") {
    Model m;
    m.add_state("a");
    m.add_state("b");
    m.set_relation(0, 1, rat(1, 999983));  // prime near the cap
    m.set_relation(1, 0, rat(1, 999979));
    CHECK_THROWS_AS(ValueGrid::for_model(m), GridError);
  }
}
