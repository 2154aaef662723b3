#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fzmod/truth.hpp"

namespace fzmod {

using StateId = int;
using AtomId = int;

// Finite fuzzy relational model: named states, named atoms, a fuzzy
// valuation and a fuzzy transition relation. Valuation and relation are
// stored sparsely; an absent entry is exactly 0 and entries never hold 0.
// Immutable in spirit: build once, then query.
class Model {
public:
  Model() = default;

  StateId add_state(std::string name);
  AtomId add_atom(std::string name);
  void set_valuation(StateId s, AtomId p, const Truth& value);
  void set_relation(StateId from, StateId to, const Truth& value);

  int state_count() const { return static_cast<int>(states_.size()); }
  int atom_count() const { return static_cast<int>(atoms_.size()); }

  const std::vector<std::string>& states() const { return states_; }
  const std::vector<std::string>& atoms() const { return atoms_; }
  const std::string& state_name(StateId s) const { return states_.at(s); }
  const std::string& atom_name(AtomId p) const { return atoms_.at(p); }

  std::optional<StateId> find_state(std::string_view name) const;
  std::optional<AtomId> find_atom(std::string_view name) const;
  // Throwing lookups for user-facing paths.
  StateId state(std::string_view name) const;
  AtomId atom(std::string_view name) const;

  Truth valuation(StateId s, AtomId p) const;
  Truth relation(StateId from, StateId to) const;

  // Positive outgoing edges of a state, keyed by target.
  const std::map<StateId, Truth>& successors(StateId s) const { return rel_.at(s); }
  // Nonzero atom values of a state, keyed by atom.
  const std::map<AtomId, Truth>& atom_values(StateId s) const { return val_.at(s); }

  int edge_count() const;
  bool same_atoms(const Model& other) const { return atoms_ == other.atoms_; }

private:
  void check_state(StateId s) const;

  std::vector<std::string> states_;
  std::vector<std::string> atoms_;
  std::map<std::string, StateId, std::less<>> state_index_;
  std::map<std::string, AtomId, std::less<>> atom_index_;
  std::vector<std::map<AtomId, Truth>> val_;
  std::vector<std::map<StateId, Truth>> rel_;
};

// Coproduct of two models over the same atom set. States are relabelled
// with "/L" and "/R" suffixes; cross-side relation values are 0.
struct DisjointUnion {
  Model model;
  std::vector<StateId> left;   // injection: state of A -> state of A+B
  std::vector<StateId> right;  // injection: state of B -> state of A+B
};

DisjointUnion disjoint_union(const Model& a, const Model& b);

}  // namespace fzmod
