#include "fzmod/distance_table.hpp"

#include <sstream>

#include "fzmod/errors.hpp"

namespace fzmod {

DistanceTable::DistanceTable(const Model& model, std::vector<std::vector<Truth>> matrix,
                             Provenance provenance)
    : states_(model.states()), matrix_(std::move(matrix)), provenance_(std::move(provenance)) {
  const int n = static_cast<int>(states_.size());
  if (static_cast<int>(matrix_.size()) != n) {
    throw PseudometricError("matrix size does not match state count");
  }
  for (const auto& row : matrix_) {
    if (static_cast<int>(row.size()) != n) {
      throw PseudometricError("matrix is not square");
    }
  }
  for (int a = 0; a < n; ++a) {
    if (!matrix_[a][a].is_zero()) {
      throw PseudometricError("reflexivity violated at " + states_[a]);
    }
    for (int b = 0; b < a; ++b) {
      if (matrix_[a][b] != matrix_[b][a]) {
        throw PseudometricError("symmetry violated at (" + states_[a] + "," + states_[b] + ")");
      }
    }
  }
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      for (int c = 0; c < n; ++c) {
        if (!leq_sum(matrix_[a][c], matrix_[a][b], matrix_[b][c])) {
          throw PseudometricError("triangle inequality violated at (" + states_[a] + "," +
                                  states_[b] + "," + states_[c] + ")");
        }
      }
    }
  }
}

DistanceTable DistanceTable::zero(const Model& model, Provenance provenance) {
  std::vector<std::vector<Truth>> m(model.state_count(),
                                    std::vector<Truth>(model.state_count(), Truth::zero()));
  return DistanceTable(model, std::move(m), std::move(provenance));
}

Truth DistanceTable::at(std::string_view a, std::string_view b) const {
  auto find = [&](std::string_view name) -> int {
    for (int i = 0; i < static_cast<int>(states_.size()); ++i) {
      if (states_[i] == name) return i;
    }
    throw ModelError("unknown state '" + std::string(name) + "'");
  };
  return matrix_[find(a)][find(b)];
}

std::string DistanceTable::to_text() const {
  std::ostringstream os;
  for (std::size_t a = 0; a < matrix_.size(); ++a) {
    os << states_[a] << ":";
    for (const auto& v : matrix_[a]) os << " " << v.str();
    os << "\n";
  }
  return os.str();
}

bool DistanceTable::pointwise_leq(const DistanceTable& a, const DistanceTable& b) {
  if (a.size() != b.size()) return false;
  for (int i = 0; i < a.size(); ++i) {
    for (int j = 0; j < a.size(); ++j) {
      if (a.at(i, j) > b.at(i, j)) return false;
    }
  }
  return true;
}

}  // namespace fzmod
