#include "fzmod/generator.hpp"

#include <limits>

#include "fzmod/errors.hpp"

namespace fzmod {

std::int64_t Rng::below(std::int64_t bound) {
  if (bound <= 0) throw ValueError("empty range");
  // Rejection sampling keeps the draw unbiased and implementation-stable.
  std::uint64_t range = static_cast<std::uint64_t>(bound);
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return static_cast<std::int64_t>(draw % range);
}

bool Rng::chance(const Truth& probability) {
  return below(probability.den()) < probability.num();
}

Truth Rng::truth_on_grid(std::int64_t den) {
  return Truth::from_fraction(below(den + 1), den);
}

Model random_model(Rng& rng, const GenParams& params) {
  Model m;
  int atoms = static_cast<int>(rng.below(params.max_atoms + 1));
  for (int p = 0; p < atoms; ++p) m.add_atom(std::string(1, static_cast<char>('p' + p)));
  int states = 1 + static_cast<int>(rng.below(params.max_states));
  for (int s = 0; s < states; ++s) m.add_state("s" + std::to_string(s + 1));
  for (StateId s = 0; s < states; ++s) {
    for (AtomId p = 0; p < atoms; ++p) {
      m.set_valuation(s, p, rng.truth_on_grid(params.den));
    }
    for (StateId t = 0; t < states; ++t) {
      if (rng.chance(params.edge_density)) {
        Truth v = Truth::from_fraction(1 + rng.below(params.den), params.den);
        m.set_relation(s, t, v);
      }
    }
  }
  return m;
}

ModalFormula random_modal(Rng& rng, const std::vector<std::string>& atoms, int max_rank,
                          std::int64_t den) {
  // Weighted shape choice; ranks of subtrees respect the remaining budget.
  std::int64_t pick = rng.below(atoms.empty() || max_rank < 1 ? 2 : 10);
  switch (pick) {
    case 0:
    case 1:
      return ModalFormula::constant(rng.truth_on_grid(den));
    case 2:
    case 3:
    case 4:
      return ModalFormula::atom(atoms[rng.below(static_cast<std::int64_t>(atoms.size()))]);
    case 5:
      return ModalFormula::sub_const(random_modal(rng, atoms, max_rank, den),
                                     rng.truth_on_grid(den));
    case 6:
      return ModalFormula::neg(random_modal(rng, atoms, max_rank, den));
    case 7:
      return ModalFormula::conj(random_modal(rng, atoms, max_rank, den),
                                random_modal(rng, atoms, max_rank, den));
    default:
      return ModalFormula::diamond(random_modal(rng, atoms, max_rank - 1, den));
  }
}

std::vector<FolFormula> enumerate_fol_pool(const std::vector<std::string>& atoms, int free_vars,
                                           int max_qr, std::size_t limit) {
  // Variables in scope at quantifier nesting level d: x1..xm plus y1..yd.
  auto vars_at = [&](int extra) {
    std::vector<std::string> vars;
    for (int i = 1; i <= free_vars; ++i) vars.push_back("x" + std::to_string(i));
    for (int i = 1; i <= extra; ++i) vars.push_back("y" + std::to_string(i));
    return vars;
  };

  auto cap = [&](std::vector<FolFormula>& pool) {
    if (pool.size() > limit) {
      pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(limit), pool.end());
    }
  };

  // Quantifier-free building blocks over the given variables.
  auto atomic_level = [&](const std::vector<std::string>& vars) {
    std::vector<FolFormula> out;
    out.push_back(FolFormula::constant(Truth::from_fraction(1, 2)));
    for (const auto& p : atoms) {
      for (const auto& v : vars) out.push_back(FolFormula::atom_app(p, v));
    }
    for (const auto& v : vars) {
      for (const auto& w : vars) out.push_back(FolFormula::rel(v, w));
    }
    for (std::size_t i = 0; i < vars.size(); ++i) {
      for (std::size_t j = i + 1; j < vars.size(); ++j) {
        out.push_back(FolFormula::eq(vars[i], vars[j]));
      }
    }
    std::size_t base = out.size();
    for (std::size_t i = 0; i < base; ++i) {
      out.push_back(FolFormula::neg(out[i]));
      out.push_back(FolFormula::sub_const(out[i], Truth::from_fraction(1, 2)));
    }
    for (std::size_t i = 0; i < base; ++i) {
      for (std::size_t j = i + 1; j < base && out.size() < 4 * limit; ++j) {
        out.push_back(FolFormula::conj(out[i], out[j]));
      }
    }
    cap(out);
    return out;
  };

  // Formulas with qr <= r over x1..xm, y1..y_extra; each quantifier binds
  // the next y variable.
  auto build = [&](auto&& self, int extra, int r) -> std::vector<FolFormula> {
    std::vector<FolFormula> out = atomic_level(vars_at(extra));
    if (r > 0) {
      std::size_t atomics = out.size();
      std::string bound = "y" + std::to_string(extra + 1);
      for (const auto& f : self(self, extra + 1, r - 1)) {
        if (out.size() >= 3 * limit) break;
        out.push_back(FolFormula::exists(bound, f));
      }
      // A few closures mixing quantified and atomic parts.
      for (std::size_t i = 0; i < atomics && out.size() < 4 * limit; ++i) {
        std::size_t q_index = atomics + i;
        if (q_index < out.size()) {
          out.push_back(FolFormula::neg(out[q_index]));
          out.push_back(FolFormula::conj(out[i], out[q_index]));
        }
      }
    }
    cap(out);
    return out;
  };
  return build(build, 0, max_qr);
}

}  // namespace fzmod
