#pragma once

#include <compare>
#include <string>
#include <utility>
#include <vector>

#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"
#include "fzmod/semantics.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// Canonical depth-n behaviour of a state (final-chain projection): depth 0
// is the unit marker; depth n+1 pairs the atom vector with a finite map
// from depth-n signatures to join weights. Successor entries are sorted and
// never hold weight 0, so structural equality decides behavioural equality.
class Signature {
public:
  static Signature unit();
  Signature(int depth, std::vector<Truth> atom_values,
            std::vector<std::pair<Signature, Truth>> successors);

  int depth() const { return depth_; }
  const std::vector<Truth>& atom_values() const { return atom_values_; }
  const std::vector<std::pair<Signature, Truth>>& successors() const { return successors_; }

  std::string str() const;

  // Total order: lexicographic on (depth, atom vector, successor entries).
  std::strong_ordering operator<=>(const Signature& other) const;
  bool operator==(const Signature& other) const { return (*this <=> other) == 0; }

private:
  int depth_ = 0;
  std::vector<Truth> atom_values_;
  std::vector<std::pair<Signature, Truth>> successors_;
};

// Depth-n signature of one state.
Signature signature(const Model& m, StateId s, int depth);

// Depth-n signatures of all states, computed bottom-up.
std::vector<Signature> signatures_at_depth(const Model& m, int depth);

// Merges states with equal depth-n signatures. Atom values are copied from
// the class representative (equal across the class for n >= 1); merged edge
// values take the join over both sources and targets.
struct QuotientResult {
  Model model;
  std::vector<StateId> projection;  // original state -> quotient state
};
QuotientResult quotient_by_signature(const Model& m, int depth);

// Rank-<=depth formula phi with |phi(a) - phi(b)| >= d_depth(a,b) - delta
// (and <= d_depth(a,b), by modal invariance). Recursive: a dominating atom
// is returned directly; otherwise the Spoiler-optimal successor move yields
// the witness function R(a,a') (-) d_{n-1}(a', .), which is approximated at
// rank n-1 and wrapped in a diamond. delta halves per recursion level.
ModalFormula synth_witness(const Model& m, StateId a, StateId b, int depth, const Truth& delta);

// Rank-<=depth formula within eps of f at every state. Requires f to be
// non-expansive w.r.t. d_depth (NonExpansiveError names a violating pair
// otherwise). Stone-Weierstrass: for each state pair a lattice building
// block  ~(~((psi (-) u) & v) (-) w)  matches f at both states, and the
// blocks are combined by a finite join of meets.
ModalFormula approximate_function(const Model& m, const StateFunction& f, int depth,
                                  const Truth& eps);

}  // namespace fzmod
