#include "doctest.h"
#include "fzmod/approx.hpp"
#include "fzmod/check.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/metrics.hpp"
#include "fzmod/parse.hpp"
#include "fzmod/print.hpp"
#include "fzmod/semantics.hpp"

using namespace fzmod;

namespace {
Truth rat(std::int64_t n, std::int64_t d) { return Truth::from_fraction(n, d); }
}  // namespace

TEST_SUITE("approx") {
  TEST_CASE("fork signatures") {
    Model fork = fork_model();
    CHECK(signature(fork, fork.state("s2"), 0) == Signature::unit());

    Signature s2 = signature(fork, fork.state("s2"), 1);
    CHECK(s2.depth() == 1);
    CHECK(s2.atom_values() == std::vector<Truth>{Truth::one()});
    CHECK(s2.successors().empty());

    Signature s1 = signature(fork, fork.state("s1"), 1);
    REQUIRE(s1.successors().size() == 1);
    CHECK(s1.successors()[0].first == Signature::unit());
    CHECK(s1.successors()[0].second == rat(1, 2));  // join of the two 1/2 edges

    // s3 and s6 share atom value 9/10 and have no successors.
    CHECK(signature(fork, fork.state("s3"), 1) == signature(fork, fork.state("s6"), 1));
    CHECK(signature(fork, fork.state("s3"), 2) == signature(fork, fork.state("s6"), 2));
    CHECK(!(signature(fork, fork.state("s1"), 1) == signature(fork, fork.state("s4"), 1)));
    // Signature order is total and consistent.
    CHECK(((s1 < s2) || (s2 < s1) || (s1 == s2)));
  }

  TEST_CASE("quotient by signature") {
    Model fork = fork_model();
    auto q1 = quotient_by_signature(fork, 1);
    CHECK(q1.model.state_count() == 5);  // s3 and s6 merge
    CHECK(q1.projection[fork.state("s3")] == q1.projection[fork.state("s6")]);

    // Two disjoint copies collapse back to the original size.
    auto dup = disjoint_union(fork, fork);
    for (int n = 1; n <= 3; ++n) {
      auto q = quotient_by_signature(dup.model, n);
      CHECK(q.model.state_count() == quotient_by_signature(fork, n).model.state_count());
    }
    // Depth 0 merges everything.
    CHECK(quotient_by_signature(fork, 0).model.state_count() == 1);
  }

  TEST_CASE("quotient projections stay at distance zero") {
    Rng rng(61);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 10; ++i) {
      Model m = random_model(rng, gen);
      for (int n = 0; n <= 2; ++n) {
        auto q = quotient_by_signature(m, n);
        auto u = disjoint_union(m, q.model);
        DistanceTable d = depth_distance(u.model, n);
        for (StateId s = 0; s < m.state_count(); ++s) {
          CHECK(d.at(u.left[s], u.right[q.projection[s]]).is_zero());
        }
      }
    }
  }

  TEST_CASE("quotient preserves evaluations up to the depth") {
    Rng rng(62);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 10; ++i) {
      Model m = random_model(rng, gen);
      for (int n = 1; n <= 2; ++n) {
        auto q = quotient_by_signature(m, n);
        for (int j = 0; j < 10; ++j) {
          ModalFormula phi = random_modal(rng, m.atoms(), n, 6);
          for (StateId s = 0; s < m.state_count(); ++s) {
            CHECK(eval_modal(m, phi, s) == eval_modal(q.model, phi, q.projection[s]));
          }
        }
      }
    }
  }

  TEST_CASE("signature equality implies distance zero") {
    Rng rng(63);
    GenParams gen{4, 2, 6, rat(1, 2)};
    int hits = 0;
    for (int i = 0; i < 10; ++i) {
      Model base = random_model(rng, gen);
      Model m = disjoint_union(base, base).model;
      for (int n = 0; n <= 3; ++n) {
        auto sigs = signatures_at_depth(m, n);
        DistanceTable d = depth_distance(m, n);
        for (StateId a = 0; a < m.state_count(); ++a) {
          for (StateId b = 0; b < a; ++b) {
            if (sigs[a] == sigs[b]) {
              CHECK(d.at(a, b).is_zero());
              ++hits;
            }
          }
        }
      }
    }
    CHECK(hits > 20);
  }

  TEST_CASE("witness synthesis on the fork") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    ModalFormula w = synth_witness(fork, s1, s4, 2, rat(1, 100));
    CHECK(w.rank() <= 2);
    Truth gap = abs_diff(eval_modal(fork, w, s1), eval_modal(fork, w, s4));
    CHECK(gap >= rat(19, 100));
    CHECK(gap <= rat(1, 5));

    // Atom-dominated pair: the witness is the atom itself, gap exactly 1/10.
    StateId s2 = fork.state("s2"), s3 = fork.state("s3");
    ModalFormula atom_witness = synth_witness(fork, s2, s3, 1, rat(1, 100));
    CHECK(atom_witness == ModalFormula::atom("p"));
    CHECK(abs_diff(eval_modal(fork, atom_witness, s2), eval_modal(fork, atom_witness, s3)) ==
          rat(1, 10));

    CHECK(synth_witness(fork, s1, s1, 2, rat(1, 100)) ==
          ModalFormula::constant(Truth::zero()));
    CHECK_THROWS_AS(synth_witness(fork, s1, s4, 2, Truth::zero()), ValueError);
  }

  TEST_CASE("witness soundness on random models") {
    Rng rng(64);
    GenParams gen{5, 2, 12, rat(1, 2)};
    Truth delta = rat(1, 100);
    for (int i = 0; i < 15; ++i) {
      Model m = random_model(rng, gen);
      auto tables = depth_distance_tables(m, 3);
      for (int n = 0; n <= 3; ++n) {
        for (StateId a = 0; a < m.state_count(); ++a) {
          for (StateId b = 0; b < a; ++b) {
            ModalFormula w = synth_witness(m, a, b, n, delta);
            CHECK(w.rank() <= n);
            Truth gap = abs_diff(eval_modal(m, w, a), eval_modal(m, w, b));
            CHECK(gap <= tables[n].at(a, b));
            CHECK(leq_sum(tables[n].at(a, b), gap, delta));
          }
        }
      }
    }
  }

  TEST_CASE("pairwise block algebra") {
    // With exact u = psi(b), v = f(a) - f(b), w = f(b), the block
    // phi = ~(~((psi (-) u) & v) (-) w) matches f at b exactly and at a up
    // to the witness gap deficit.
    Model fork = fork_model();
    ModalFormula source = parse_modal("<>(p .- 1/2)");
    StateFunction f = StateFunction::from_modal(fork, source);
    const int depth = 2;
    Truth delta = rat(1, 40);
    for (StateId a = 0; a < fork.state_count(); ++a) {
      for (StateId b = 0; b < fork.state_count(); ++b) {
        if (f.at(a) < f.at(b)) continue;
        ModalFormula psi = synth_witness(fork, a, b, depth, delta);
        if (eval_modal(fork, psi, a) < eval_modal(fork, psi, b)) psi = ModalFormula::neg(psi);
        Truth u = eval_modal(fork, psi, b);
        Truth v = truncated_sub(f.at(a), f.at(b));
        Truth w = f.at(b);
        ModalFormula block = ModalFormula::neg(ModalFormula::sub_const(
            ModalFormula::neg(ModalFormula::conj(ModalFormula::sub_const(psi, u),
                                                 ModalFormula::constant(v))),
            w));
        CHECK(eval_modal(fork, block, b) == f.at(b));  // exact at the low state
        Truth gap_psi = truncated_sub(eval_modal(fork, psi, a), u);
        Truth deficit = truncated_sub(v, min(gap_psi, v));
        CHECK(eval_modal(fork, block, a) == truncated_sub(f.at(a), deficit));
        CHECK(deficit <= delta);
      }
    }
    // And the combined approximant is sound at every state.
    ModalFormula approx = approximate_function(fork, f, depth, rat(1, 20));
    CHECK(approx.rank() <= depth);
    for (StateId s = 0; s < fork.state_count(); ++s) {
      CHECK(abs_diff(eval_modal(fork, approx, s), f.at(s)) <= rat(1, 20));
    }
  }

  TEST_CASE("synthesized formulas survive print/parse round trips") {
    Model fork = fork_model();
    StateId s1 = fork.state("s1"), s4 = fork.state("s4");
    ModalFormula w = synth_witness(fork, s1, s4, 2, rat(1, 100));
    ModalFormula reparsed = parse_modal(print_modal(w));
    CHECK(reparsed == w);
    CHECK(eval_modal(fork, reparsed, s1) == eval_modal(fork, w, s1));

    StateFunction f = StateFunction::from_modal(fork, parse_modal("<>(p .- 1/2)"));
    ModalFormula approx = approximate_function(fork, f, 2, rat(1, 20));
    CHECK(parse_modal(print_modal(approx)) == approx);
  }

  TEST_CASE("approximation of constants is exact") {
    Model fork = fork_model();
    StateFunction f = StateFunction::constant(fork, rat(1, 3));
    ModalFormula approx = approximate_function(fork, f, 1, rat(1, 20));
    CHECK(approx == ModalFormula::constant(rat(1, 3)));
  }

  TEST_CASE("approximation of distance cones") {
    Rng rng(65);
    GenParams gen{4, 2, 6, rat(1, 2)};
    for (int i = 0; i < 10; ++i) {
      Model m = random_model(rng, gen);
      for (int n = 0; n <= 2; ++n) {
        DistanceTable d = depth_distance(m, n);
        StateId x0 = static_cast<StateId>(rng.below(m.state_count()));
        Truth c = rng.truth_on_grid(6);
        std::vector<Truth> values(m.state_count());
        for (StateId s = 0; s < m.state_count(); ++s) values[s] = truncated_sub(c, d.at(x0, s));
        StateFunction f(m, values);
        ModalFormula approx = approximate_function(m, f, n, rat(1, 20));
        CHECK(approx.rank() <= n);
        for (StateId s = 0; s < m.state_count(); ++s) {
          CHECK(abs_diff(eval_modal(m, approx, s), f.at(s)) <= rat(1, 20));
        }
      }
    }
  }

  TEST_CASE("non-expansivity precondition is enforced with a pair") {
    Model fork = fork_model();
    // Separating s3 from s6 (distance 0 at every depth) is not non-expansive.
    std::vector<Truth> values(fork.state_count(), Truth::zero());
    values[fork.state("s3")] = Truth::one();
    StateFunction f(fork, values);
    DistanceTable d1 = depth_distance(fork, 1);
    try {
      approximate_function(fork, f, 1, rat(1, 20));
      FAIL("expected NonExpansiveError");
    } catch (const NonExpansiveError& e) {
      // The reported pair really does violate non-expansivity.
      StateId a = fork.state(e.state_a());
      StateId b = fork.state(e.state_b());
      CHECK(abs_diff(f.at(a), f.at(b)) > d1.at(a, b));
    }
  }
}
