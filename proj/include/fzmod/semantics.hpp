#pragma once

#include <map>
#include <string>
#include <vector>

#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"

namespace fzmod {

// Total map from a model's states to truth values (a fuzzy state predicate).
class StateFunction {
public:
  StateFunction(const Model& model, std::vector<Truth> values);

  static StateFunction constant(const Model& model, const Truth& value);
  static StateFunction from_atom(const Model& model, AtomId p);
  static StateFunction from_modal(const Model& model, const ModalFormula& f);

  // Format: one "fun <state> <truth>" line per state, total over the model.
  static StateFunction parse(const Model& model, std::string_view text);

  const Truth& at(StateId s) const { return values_.at(s); }
  int size() const { return static_cast<int>(values_.size()); }
  const std::vector<Truth>& values() const { return values_; }

private:
  std::vector<Truth> values_;
};

// Values for the free variables of a FOL formula.
using Assignment = std::map<std::string, StateId>;

// Inductive Zadeh semantics; the supremum over the finite state set is a
// maximum, and an empty supremum is 0.
Truth eval_modal(const Model& m, const ModalFormula& f, StateId state);
Truth eval_modal(const Model& m, const ModalFormula& f, std::string_view state);

Truth eval_fol(const Model& m, const FolFormula& f, const Assignment& assignment);

// The extended diamond on state functions:
// (<>f)(a) = max over a' of min(R(a,a'), f(a')).
Truth diamond_apply(const Model& m, const StateFunction& f, StateId state);

// Standard translation into FOL; 'var' names the current state, bound
// variables are v0, v1, ... in a deterministic left-to-right order.
FolFormula standard_translation(const ModalFormula& f, const std::string& var = "x");

}  // namespace fzmod
