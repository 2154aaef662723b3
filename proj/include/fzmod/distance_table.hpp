#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// Which method produced a table, at which depth (nullopt = unbounded).
struct Provenance {
  std::string method;
  std::optional<int> depth;
};

// A pseudometric on a model's state set. The constructor verifies
// reflexivity, symmetry and the triangle inequality exactly and throws
// PseudometricError on any violation.
class DistanceTable {
public:
  DistanceTable(const Model& model, std::vector<std::vector<Truth>> matrix, Provenance provenance);

  static DistanceTable zero(const Model& model, Provenance provenance);

  const Truth& at(StateId a, StateId b) const { return matrix_[a][b]; }
  Truth at(std::string_view a, std::string_view b) const;

  int size() const { return static_cast<int>(matrix_.size()); }
  const std::vector<std::string>& state_names() const { return states_; }
  const Provenance& provenance() const { return provenance_; }

  // Row-per-state text matrix of exact rationals.
  std::string to_text() const;

  // Matrix equality; provenance is ignored.
  friend bool operator==(const DistanceTable& a, const DistanceTable& b) {
    return a.states_ == b.states_ && a.matrix_ == b.matrix_;
  }

  // a <= b pointwise.
  static bool pointwise_leq(const DistanceTable& a, const DistanceTable& b);

private:
  std::vector<std::string> states_;
  std::vector<std::vector<Truth>> matrix_;
  Provenance provenance_;
};

}  // namespace fzmod
