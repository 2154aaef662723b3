#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// Undirected adjacency induced by positive transition values in either
// direction: {a,b} is an edge iff R(a,b) > 0 or R(b,a) > 0.
class GaifmanGraph {
public:
  explicit GaifmanGraph(const Model& m);

  const std::vector<std::vector<StateId>>& adjacency() const { return adj_; }

  // BFS distances from a set of sources; nullopt = unreachable.
  std::vector<std::optional<int>> distances_from(const std::vector<StateId>& sources) const;

private:
  std::vector<std::vector<StateId>> adj_;
};

// Shortest path length in the Gaifman graph; nullopt = infinity.
std::optional<int> gaifman_distance(const Model& m, StateId a, StateId b);

// Submodel on all states within Gaifman distance `radius` of some anchor.
Model neighbourhood_restrict(const Model& m, const std::vector<StateId>& anchors, int radius);

// Unravelling truncated to paths with at most `depth` edges. States are the
// paths from the root, named by joining the visited state names with '/'
// ('/' inside a name is doubled, keeping the encoding injective).
struct TreeModel {
  Model model;
  StateId root = 0;
  std::vector<std::optional<StateId>> parent;
};
TreeModel unravel(const Model& m, StateId root, int depth);

// Unravel to depth `depth`, then give each depth-`depth` leaf its own fresh
// copy of the full model, entered through the leaf state's original edges.
// Finite and behaviourally indistinguishable from the root at every depth.
struct RootedModel {
  Model model;
  StateId root = 0;
};
RootedModel partial_unravel(const Model& m, StateId root, int depth);

// Evaluates the formula at `state` on the model and on the radius-`radius`
// neighbourhood restriction, and reports exact equality. FOL formulas may
// have at most one free variable, which is bound to `state`.
struct LocalityReport {
  Truth on_model;
  Truth on_restriction;
  bool equal = false;
};
LocalityReport locality_check(const Model& m, const ModalFormula& f, StateId state, int radius);
LocalityReport locality_check(const Model& m, const FolFormula& f, StateId state, int radius);

}  // namespace fzmod
