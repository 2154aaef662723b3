#include "doctest.h"
#include "fzmod/check.hpp"
#include "fzmod/distance_table.hpp"
#include "fzmod/errors.hpp"
#include "fzmod/formula.hpp"
#include "fzmod/generator.hpp"
#include "fzmod/model.hpp"
#include "fzmod/parse.hpp"

using namespace fzmod;

namespace {
Truth rat(std::int64_t n, std::int64_t d) { return Truth::from_fraction(n, d); }
}  // namespace

TEST_SUITE("core") {
  TEST_CASE("modal rank") {
    CHECK(ModalFormula::constant(rat(1, 2)).rank() == 0);
    CHECK(ModalFormula::atom("p").rank() == 1);
    ModalFormula phi = parse_modal("<>(p .- 1/2)");
    CHECK(phi.rank() == 2);
    CHECK(parse_modal("~p & <>q").rank() == 2);
    CHECK(parse_modal("(p .- 1/4) & 1/2").rank() == 1);
  }

  TEST_CASE("rank is monotone under subformula inclusion") {
    Rng rng(11);
    for (int i = 0; i < 300; ++i) {
      ModalFormula f = random_modal(rng, {"p", "q"}, 3, 8);
      switch (f.kind()) {
        case ModalFormula::Kind::SubConst:
        case ModalFormula::Kind::Neg:
          CHECK(f.child().rank() == f.rank());
          break;
        case ModalFormula::Kind::And:
          CHECK(f.lhs().rank() <= f.rank());
          CHECK(f.rhs().rank() <= f.rank());
          break;
        case ModalFormula::Kind::Diamond:
          CHECK(f.child().rank() + 1 == f.rank());
          break;
        default:
          break;
      }
    }
  }

  TEST_CASE("quantifier rank") {
    CHECK(parse_fol("R(x,y)").qrank() == 0);
    CHECK(parse_fol("E y. (R(x,y) & p(y))").qrank() == 1);
    CHECK(parse_fol("E x. E y. R(x,y)").qrank() == 2);
    CHECK(parse_fol("~(x = y) .- 1/4").qrank() == 0);
  }

  TEST_CASE("free variables") {
    auto f = parse_fol("E y. (R(x,y) & p(y))");
    CHECK(f.free_variables() == std::set<std::string>{"x"});
    CHECK(parse_fol("x = y").free_variables() == std::set<std::string>{"x", "y"});
    CHECK(parse_fol("1/2").free_variables().empty());
  }

  TEST_CASE("disjoint union basics") {
    Model fork = fork_model();
    auto u = disjoint_union(fork, fork);
    CHECK(u.model.state_count() == 12);
    CHECK(u.model.edge_count() == 8);
    // No cross edges.
    for (StateId a = 0; a < fork.state_count(); ++a) {
      for (StateId b = 0; b < fork.state_count(); ++b) {
        CHECK(u.model.relation(u.left[a], u.right[b]).is_zero());
        CHECK(u.model.relation(u.right[a], u.left[b]).is_zero());
      }
    }

    Model single;
    single.add_atom("p");
    single.add_state("z");
    auto u2 = disjoint_union(fork, single);
    CHECK(u2.model.state_count() == 7);

    Model no_atoms;
    no_atoms.add_state("z");
    CHECK_THROWS_AS(disjoint_union(fork, no_atoms), ModelError);
  }

  TEST_CASE("disjoint union is symmetric up to relabeling") {
    Rng rng(13);
    for (int i = 0; i < 20; ++i) {
      GenParams gen;
      Model a = random_model(rng, gen);
      GenParams gb = gen;
      gb.max_atoms = a.atom_count();
      Model b = random_model(rng, gb);
      while (b.atom_count() != a.atom_count()) b = random_model(rng, gb);
      auto ab = disjoint_union(a, b);
      auto ba = disjoint_union(b, a);
      CHECK(ab.model.state_count() == ba.model.state_count());
      for (StateId x = 0; x < a.state_count(); ++x) {
        for (StateId y = 0; y < a.state_count(); ++y) {
          CHECK(ab.model.relation(ab.left[x], ab.left[y]) ==
                ba.model.relation(ba.right[x], ba.right[y]));
        }
        for (AtomId p = 0; p < a.atom_count(); ++p) {
          CHECK(ab.model.valuation(ab.left[x], p) == ba.model.valuation(ba.right[x], p));
        }
      }
    }
  }

  TEST_CASE("model lookups and sparsity") {
    Model fork = fork_model();
    CHECK(fork.relation(fork.state("s1"), fork.state("s2")) == rat(1, 2));
    CHECK(fork.relation(fork.state("s2"), fork.state("s1")).is_zero());
    CHECK_THROWS_AS(fork.state("nope"), ModelError);
    // Setting a value to 0 erases the sparse entry.
    Model m;
    m.add_atom("p");
    StateId s = m.add_state("a");
    m.set_valuation(s, 0, rat(1, 2));
    CHECK(m.atom_values(s).size() == 1);
    m.set_valuation(s, 0, Truth::zero());
    CHECK(m.atom_values(s).empty());
  }

  TEST_CASE("distance table verifies the pseudometric axioms") {
    Model fork = fork_model();
    const int n = fork.state_count();
    std::vector<std::vector<Truth>> ok(n, std::vector<Truth>(n, Truth::zero()));
    CHECK_NOTHROW(DistanceTable(fork, ok, Provenance{"test", 0}));

    auto bad_reflexive = ok;
    bad_reflexive[2][2] = rat(1, 4);
    CHECK_THROWS_AS(DistanceTable(fork, bad_reflexive, Provenance{"test", 0}),
                    PseudometricError);

    auto bad_symmetry = ok;
    bad_symmetry[0][1] = rat(1, 4);
    CHECK_THROWS_AS(DistanceTable(fork, bad_symmetry, Provenance{"test", 0}), PseudometricError);

    // d(0,2) = 1 > d(0,1) + d(1,2) = 1/4 + 1/4.
    auto bad_triangle = ok;
    bad_triangle[0][1] = bad_triangle[1][0] = rat(1, 4);
    bad_triangle[1][2] = bad_triangle[2][1] = rat(1, 4);
    bad_triangle[0][2] = bad_triangle[2][0] = Truth::one();
    CHECK_THROWS_AS(DistanceTable(fork, bad_triangle, Provenance{"test", 0}), PseudometricError);
  }
}
