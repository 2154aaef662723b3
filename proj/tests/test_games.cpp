#include "doctest.h"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/semantics.hpp"

using namespace fzmod;

namespace {

Truth rat(std::int64_t n, std::int64_t d) { return Truth::from_fraction(n, d); }

Model aligned_partner(Rng& rng, const Model& a, const GenParams& base) {
  GenParams gb = base;
  gb.max_atoms = a.atom_count();
  Model b = random_model(rng, gb);
  while (b.atom_count() != a.atom_count()) b = random_model(rng, gb);
  return b;
}

}  // namespace

TEST_SUITE("games") {
  TEST_CASE("fork examples") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    CHECK(bisim_wins(fork, fork, s1, s4, rat(1, 5), 2).winner() == Player::Duplicator);

    auto lost = bisim_wins(fork, fork, s1, s4, rat(19, 100), 2);
    CHECK(lost.winner() == Player::Spoiler);
    auto witness = lost.spoiler_witness(s1, s4, 2);
    REQUIRE(witness.has_value());
    CHECK(witness->on_left);
    CHECK(witness->target == fork.state("s2"));
    auto reply = lost.duplicator_reply(s1, s4, *witness, 2);
    REQUIRE(reply.has_value());
    CHECK(*reply == fork.state("s5"));

    // Depth 0 is always a Duplicator win.
    CHECK(bisim_wins(fork, fork, s1, s4, Truth::zero(), 0).winner() == Player::Duplicator);
    CHECK_THROWS_AS(bisim_wins(fork, fork, "s1", "zz", Truth::zero(), 0), ModelError);
  }

  TEST_CASE("trace replay") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");

    auto won = bisim_wins(fork, fork, s1, s4, rat(1, 5), 2);
    Transcript t = game_trace(won, {BisimMove{true, fork.state("s2")}});
    REQUIRE(t.steps.size() == 1);
    CHECK(t.steps[0].spoiler_target == "s2");
    CHECK(t.steps[0].reply_target == "s5");

    // Moves along edges of value <= epsilon are rejected with a reason.
    auto high = bisim_wins(fork, fork, s1, s4, rat(1, 2), 2);
    CHECK_THROWS_WITH_AS(game_trace(high, {BisimMove{true, fork.state("s2")}}),
                         doctest::Contains("illegal spoiler move"), GameError);

    // A depth-0 replay is empty.
    auto zero = bisim_wins(fork, fork, s1, s4, rat(1, 5), 0);
    CHECK(game_trace(zero, {BisimMove{true, fork.state("s2")}}).steps.empty());

    // Replaying Spoiler's win: the scripted reply s5 is forced and loses.
    auto lost = bisim_wins(fork, fork, s1, s4, rat(19, 100), 2);
    Transcript st = game_trace(lost, {BisimMove{false, fork.state("s5")}});
    REQUIRE(st.steps.size() == 1);
    CHECK(st.steps[0].spoiler_target == "s2");
    CHECK(st.end.find("atom condition violated") != std::string::npos);

    // An illegal scripted reply is rejected: s6 has R(s4,s6) = 3/10 < 31/100.
    CHECK_THROWS_WITH_AS(game_trace(lost, {BisimMove{false, fork.state("s6")}}),
                         doctest::Contains("illegal duplicator reply"), GameError);
  }

  TEST_CASE("unbounded spoiler strategy forces a win down the chain") {
    // Loop vs a 2-edge chain: Spoiler wins the unbounded 0-game by looping
    // until the chain runs out; the witness strategy must actually get there.
    LoopChain lc = loop_chain_model(2);
    auto outcome =
        bisim_wins(lc.model, lc.model, lc.loop_state, lc.chain_head, Truth::zero(),
                   std::nullopt);
    CHECK(outcome.winner() == Player::Spoiler);
    // Script Duplicator's only sensible replies: walk the chain.
    std::vector<BisimMove> replies = {BisimMove{false, lc.model.state("c1")},
                                      BisimMove{false, lc.model.state("c2")},
                                      BisimMove{false, lc.model.state("c2")}};
    Transcript t = game_trace(outcome, replies);
    CHECK(t.steps.size() <= 3);
    CHECK(t.end.find("duplicator cannot reply") != std::string::npos);
  }

  TEST_CASE("monotonicity in epsilon") {
    Rng rng(41);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 40; ++i) {
      Model m = random_model(rng, gen);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      StateId b = static_cast<StateId>(rng.below(m.state_count()));
      int depth = static_cast<int>(rng.below(4));
      bool prev = false;
      for (const Truth& eps :
           {Truth::zero(), rat(1, 6), rat(1, 3), rat(1, 2), rat(2, 3), Truth::one()}) {
        bool wins = bisim_wins(m, m, a, b, eps, depth).winner() == Player::Duplicator;
        if (prev) CHECK(wins);  // winning persists as epsilon grows
        prev = wins;
      }
    }
  }

  TEST_CASE("composition of winning strategies") {
    Rng rng(42);
    GenParams gen{4, 1, 6, rat(1, 2)};
    int composed = 0;
    for (int i = 0; i < 60; ++i) {
      Model m = random_model(rng, gen);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      StateId b = static_cast<StateId>(rng.below(m.state_count()));
      StateId c = static_cast<StateId>(rng.below(m.state_count()));
      Truth eps = rat(1 + rng.below(3), 6);
      Truth delta = rat(1 + rng.below(3), 6);
      int depth = static_cast<int>(rng.below(4));
      bool ab = bisim_wins(m, m, a, b, eps, depth).winner() == Player::Duplicator;
      bool bc = bisim_wins(m, m, b, c, delta, depth).winner() == Player::Duplicator;
      if (ab && bc) {
        Truth sum = complement(truncated_sub(complement(eps), delta));  // min(eps+delta, 1)
        CHECK(bisim_wins(m, m, a, c, sum, depth).winner() == Player::Duplicator);
        ++composed;
      }
    }
    CHECK(composed > 10);
  }

  TEST_CASE("winning sets shrink with depth and stabilize") {
    Rng rng(43);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 25; ++i) {
      Model m = random_model(rng, gen);
      Truth eps = rat(rng.below(4), 6);
      int cap = m.state_count() * m.state_count();
      auto unbounded = bisim_wins(m, m, 0, 0, eps, std::nullopt);
      auto bounded = bisim_wins(m, m, 0, 0, eps, cap + 1);
      for (StateId a = 0; a < m.state_count(); ++a) {
        for (StateId b = 0; b < m.state_count(); ++b) {
          bool prev = true;
          for (int d = 0; d <= cap + 1; ++d) {
            bool wins = bounded.duplicator_wins(a, b, d);
            if (!prev) CHECK(!wins);  // decreasing in depth
            prev = wins;
          }
          // At depth |A|^2 the bounded sets have stabilized to the fixpoint.
          CHECK(bounded.duplicator_wins(a, b, cap) == unbounded.duplicator_wins(a, b, std::nullopt));
          CHECK(bounded.duplicator_wins(a, b, cap + 1) ==
                unbounded.duplicator_wins(a, b, std::nullopt));
        }
      }
    }
  }

  TEST_CASE("the disjoint-union reduction preserves winners") {
    Rng rng(44);
    GenParams gen{3, 1, 6, rat(1, 2)};
    for (int i = 0; i < 30; ++i) {
      Model m = random_model(rng, gen);
      auto u = disjoint_union(m, m);
      StateId a = static_cast<StateId>(rng.below(m.state_count()));
      StateId b = static_cast<StateId>(rng.below(m.state_count()));
      Truth eps = rat(rng.below(7), 6);
      for (std::optional<int> depth : {std::optional<int>(2), std::optional<int>()}) {
        auto direct = bisim_wins(m, m, a, b, eps, depth);
        auto via_union = bisim_wins(u.model, u.model, u.left[a], u.right[b], eps, depth);
        CHECK(direct.winner() == via_union.winner());
      }
    }
  }

  TEST_CASE("bounded morphisms are winning for duplicator") {
    Rng rng(45);
    GenParams gen{3, 2, 6, rat(1, 2)};
    for (int i = 0; i < 15; ++i) {
      Model ma = random_model(rng, gen);
      Model mb = aligned_partner(rng, ma, gen);
      auto u = disjoint_union(ma, mb);
      for (const Truth& eps : {rat(1, 100), rat(1, 1000)}) {
        for (StateId a = 0; a < ma.state_count(); ++a) {
          CHECK(bisim_wins(ma, u.model, a, u.left[a], eps, std::nullopt).winner() ==
                Player::Duplicator);
        }
      }
    }
  }

  TEST_CASE("ef game basics") {
    Model fork = fork_model();
    StateId s2 = fork.state("s2"), s5 = fork.state("s5");
    // Identity configurations win at epsilon 0.
    CHECK(ef_wins(fork, fork, {s2}, {s2}, Truth::zero(), 0).winner() == Player::Duplicator);
    // |p(s2) - p(s5)| = 1/5.
    CHECK(ef_wins(fork, fork, {s2}, {s5}, rat(1, 5), 0).winner() == Player::Duplicator);
    CHECK(ef_wins(fork, fork, {s2}, {s5}, rat(1, 10), 0).winner() == Player::Spoiler);
    CHECK_THROWS_AS(ef_wins(fork, fork, {s2}, {s2, s5}, Truth::zero(), 0), GameError);
    CHECK_THROWS_AS(ef_wins(fork, fork, {s2}, {s5}, Truth::zero(), 9), GameError);
    Model big;
    big.add_atom("p");
    for (int i = 0; i < 13; ++i) big.add_state("t" + std::to_string(i));
    CHECK_THROWS_AS(ef_wins(big, big, {0}, {1}, Truth::zero(), 1), GameError);
  }

  TEST_CASE("ef strategies answer queries") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    auto outcome = ef_wins(fork, fork, {s1}, {s1}, Truth::zero(), 2);
    CHECK(outcome.winner() == Player::Duplicator);
    auto reply = outcome.duplicator_reply({s1}, {s1}, EfMove{true, s4}, 2);
    REQUIRE(reply.has_value());
    CHECK(outcome.duplicator_wins({s1, s4}, {s1, *reply}, 1));

    // Spoiler separates s1 from s4 within one round at epsilon 0 by playing
    // the 1/2-successor.
    auto lost = ef_wins(fork, fork, {s1}, {s4}, Truth::zero(), 1);
    CHECK(lost.winner() == Player::Spoiler);
    auto witness = lost.spoiler_witness({s1}, {s4}, 1);
    CHECK(witness.has_value());
  }

  TEST_CASE("ef invariance with two pebbles") {
    Rng rng(46);
    GenParams gen{3, 1, 6, rat(1, 2)};
    auto pool = enumerate_fol_pool({"p"}, 2, 2, 120);
    int wins = 0;
    for (int i = 0; i < 6; ++i) {
      Model ma = random_model(rng, gen);
      while (ma.atom_count() != 1) ma = random_model(rng, gen);
      // Same-model pairs keep the win coverage up; cross-model pairs add
      // the genuinely fuzzy matches.
      Model mb = i % 2 == 0 ? ma : aligned_partner(rng, ma, gen);
      for (const Truth& eps : {Truth::zero(), rat(1, 6), rat(1, 2)}) {
        for (int rounds = 0; rounds <= 2; ++rounds) {
          for (StateId a1 = 0; a1 < ma.state_count(); ++a1) {
            for (StateId b1 = 0; b1 < mb.state_count(); ++b1) {
              StateVector as{a1, static_cast<StateId>((a1 + 1) % ma.state_count())};
              StateVector bs{b1, static_cast<StateId>((b1 + 1) % mb.state_count())};
              auto outcome = ef_wins(ma, mb, as, bs, eps, rounds);
              if (outcome.winner() != Player::Duplicator) continue;
              ++wins;
              for (const auto& phi : pool) {
                if (phi.qrank() > rounds) continue;
                Assignment ea{{"x1", as[0]}, {"x2", as[1]}};
                Assignment eb{{"x1", bs[0]}, {"x2", bs[1]}};
                CHECK(abs_diff(eval_fol(ma, phi, ea), eval_fol(mb, phi, eb)) <= eps);
              }
            }
          }
        }
      }
    }
    CHECK(wins > 20);
  }

  TEST_CASE("ef equality pattern matters") {
    // Two states with identical atoms; duplicates on one side must be
    // mirrored by duplicates on the other.
    Model m;
    m.add_state("a");
    m.add_state("b");
    auto outcome = ef_wins(m, m, {0, 0}, {0, 1}, Truth::one(), 0);
    CHECK(outcome.winner() == Player::Spoiler);
    CHECK(ef_wins(m, m, {0, 0}, {1, 1}, Truth::one(), 0).winner() == Player::Duplicator);
  }
}
