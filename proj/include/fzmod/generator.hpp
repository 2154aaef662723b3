#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fzmod/formula.hpp"
#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

// Deterministic pseudo-random source for models and formulas. Draws go
// through explicit helpers (not std distributions) so that seeded output is
// identical across standard library implementations.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0, bound).
  std::int64_t below(std::int64_t bound);
  bool chance(const Truth& probability);
  // Uniform grid value k/den, k in [0, den].
  Truth truth_on_grid(std::int64_t den);

private:
  std::mt19937_64 engine_;
};

struct GenParams {
  int max_states = 5;
  int max_atoms = 2;
  std::int64_t den = 12;              // values drawn from {0, 1/den, ..., 1}
  Truth edge_density = Truth::from_fraction(1, 2);
};

// Random model with 1..max_states states named s1.., 0..max_atoms atoms
// named p, q, r, ..; every potential edge exists with probability
// edge_density and carries a positive grid value.
Model random_model(Rng& rng, const GenParams& params);

// Random modal formula over the given atoms with rank at most max_rank;
// constants lie on the 1/den grid.
ModalFormula random_modal(Rng& rng, const std::vector<std::string>& atoms, int max_rank,
                          std::int64_t den);

// Bounded enumeration of FOL formulas with free variables among x1..xm and
// quantifier rank at most max_qr, capped at `limit` formulas per rank level.
std::vector<FolFormula> enumerate_fol_pool(const std::vector<std::string>& atoms, int free_vars,
                                           int max_qr, std::size_t limit);

}  // namespace fzmod
