#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "fzmod/distance_table.hpp"
#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// The grid {0, 1/L, ..., 1} spanned by the common denominator L of a model's
// truth values. Closed under min, max, truncated subtraction and complement,
// so every value the distance recurrences produce lies on it.
class ValueGrid {
public:
  static ValueGrid for_model(const Model& m);
  static ValueGrid common(const ValueGrid& a, const ValueGrid& b);

  std::int64_t denominator() const { return den_; }
  bool contains(const Truth& t) const { return den_ % t.den() == 0; }

  std::vector<Truth> points() const;
  // Grid points interleaved with midpoints (2k+1)/(2L), sorted ascending.
  // Midpoints are oracle candidates only: a correct infimum never lands on
  // one, and a midpoint result would expose a recurrence bug.
  std::vector<Truth> points_with_midpoints() const;

private:
  explicit ValueGrid(std::int64_t den) : den_(den) {}
  std::int64_t den_ = 1;
};

// Depth-n behavioural distance table d_n, by the closed-form recurrence
//   d_{n+1}(a,b) = max_p |p(a)-p(b)|
//                  v  max_{a'} min(R(a,a'), min_{b'} max(R(a,a') (-) R(b,b'), d_n(a',b')))
//                  v  (the same with a and b swapped)
// with d_0 = 0. The recurrence is cross-checked against the game oracle in
// the test suites.
DistanceTable depth_distance(const Model& m, int depth);

// d_0 .. d_n in one pass.
std::vector<DistanceTable> depth_distance_tables(const Model& m, int max_depth);

// Unbounded behavioural distance: the recurrence iterated to stationarity
// (monotone on the finite value grid, hence terminating).
DistanceTable behavioural_distance(const Model& m);

// Ground truth from the game: least epsilon (over grid points and midpoints)
// for which Duplicator wins, found by binary search; winning is monotone in
// epsilon. depth = nullopt solves the unbounded game.
Truth game_distance_oracle(const Model& m, StateId a, StateId b, std::optional<int> depth);

// Argument of the Kantorovich lifting: a state's atom vector together with
// its successor weight function over a carrier that the distance table
// lives on.
struct LiftInput {
  std::vector<Truth> atom_values;        // indexed by the carrier's atoms
  std::vector<Truth> successor_weights;  // indexed by the carrier's states

  static LiftInput of_state(const Model& m, StateId s);
};

// Supremum over the candidate family f(x) = c (-) d(x0, x), x0 a carrier
// state, c a grid constant. The family contains the witness functions from
// which the game reply is extracted, and on small carriers it provably
// exhausts the supremum (checked below).
Truth kantorovich_candidate_sup(const DistanceTable& d, const LiftInput& x, const LiftInput& y);

// Supremum over all grid-valued non-expansive functions, by pruned
// backtracking. Intended for carriers of size <= 6; throws GridError when
// the enumeration would exceed `node_budget`.
Truth kantorovich_exhaustive_sup(const DistanceTable& d, const LiftInput& x, const LiftInput& y,
                                 std::int64_t node_budget = 50'000'000);

// The Kantorovich lifting: atom term joined with the non-expansive-function
// supremum. Uses the candidate family; on carriers of size <= 6 whose grid
// is small enough the exhaustive supremum is joined in as a backstop.
Truth kantorovich_lift(const DistanceTable& d, const LiftInput& x, const LiftInput& y);

// One lifting step applied to a whole table: d -> d^K over the model.
DistanceTable kantorovich_step(const Model& m, const DistanceTable& d);

// Rank-<=depth witness formula together with its achieved gap
// |phi(a) - phi(b)| >= d_depth(a,b) - delta. Defined with the synthesis
// machinery in approx.cpp.
struct WitnessResult {
  Truth gap;
  ModalFormula formula;
};
WitnessResult logical_distance_lower(const Model& m, StateId a, StateId b, int depth,
                                     const Truth& delta);

}  // namespace fzmod
