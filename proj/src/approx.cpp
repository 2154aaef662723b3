#include "fzmod/approx.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "fzmod/errors.hpp"
#include "fzmod/metrics.hpp"

namespace fzmod {

// -------------------------------------------------------------- Signature ---

Signature Signature::unit() { return Signature(0, {}, {}); }

Signature::Signature(int depth, std::vector<Truth> atom_values,
                     std::vector<std::pair<Signature, Truth>> successors)
    : depth_(depth), atom_values_(std::move(atom_values)), successors_(std::move(successors)) {
  if (depth_ == 0 && (!atom_values_.empty() || !successors_.empty())) {
    throw ValueError("depth-0 signature is the unit marker");
  }
  for (const auto& [sig, weight] : successors_) {
    if (sig.depth() != depth_ - 1) throw ValueError("successor signature depth mismatch");
    if (weight.is_zero()) throw ValueError("zero weight in canonical signature");
  }
  std::sort(successors_.begin(), successors_.end(),
            [](const auto& x, const auto& y) { return x.first < y.first; });
}

std::strong_ordering Signature::operator<=>(const Signature& other) const {
  if (auto c = depth_ <=> other.depth_; c != 0) return c;
  if (auto c = atom_values_ <=> other.atom_values_; c != 0) return c;
  if (auto c = successors_.size() <=> other.successors_.size(); c != 0) return c;
  for (std::size_t i = 0; i < successors_.size(); ++i) {
    if (auto c = successors_[i].first <=> other.successors_[i].first; c != 0) return c;
    if (auto c = successors_[i].second <=> other.successors_[i].second; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

std::string Signature::str() const {
  if (depth_ == 0) return "*";
  std::ostringstream os;
  os << "(";
  for (std::size_t p = 0; p < atom_values_.size(); ++p) {
    if (p) os << ",";
    os << atom_values_[p].str();
  }
  os << "|";
  for (std::size_t i = 0; i < successors_.size(); ++i) {
    if (i) os << ",";
    os << successors_[i].first.str() << ":" << successors_[i].second.str();
  }
  os << ")";
  return os.str();
}

std::vector<Signature> signatures_at_depth(const Model& m, int depth) {
  if (depth < 0) throw ValueError("signature depth must be non-negative");
  std::vector<Signature> level(m.state_count(), Signature::unit());
  for (int d = 1; d <= depth; ++d) {
    std::vector<Signature> next;
    next.reserve(m.state_count());
    for (StateId s = 0; s < m.state_count(); ++s) {
      std::vector<Truth> atoms(m.atom_count());
      for (AtomId p = 0; p < m.atom_count(); ++p) atoms[p] = m.valuation(s, p);
      // Join the weights of successors sharing a depth-(d-1) signature.
      std::map<Signature, Truth> joined;
      for (const auto& [t, r] : m.successors(s)) {
        auto [it, inserted] = joined.emplace(level[t], r);
        if (!inserted) it->second = max(it->second, r);
      }
      std::vector<std::pair<Signature, Truth>> succ(joined.begin(), joined.end());
      next.emplace_back(d, std::move(atoms), std::move(succ));
    }
    level = std::move(next);
  }
  return level;
}

Signature signature(const Model& m, StateId s, int depth) {
  if (s < 0 || s >= m.state_count()) throw ModelError("state id out of range");
  return signatures_at_depth(m, depth)[s];
}

QuotientResult quotient_by_signature(const Model& m, int depth) {
  auto sigs = signatures_at_depth(m, depth);
  std::map<Signature, StateId> classes;
  QuotientResult out;
  for (const auto& atom : m.atoms()) out.model.add_atom(atom);
  out.projection.resize(m.state_count());
  for (StateId s = 0; s < m.state_count(); ++s) {
    auto it = classes.find(sigs[s]);
    if (it == classes.end()) {
      StateId q = out.model.add_state(m.state_name(s));
      classes.emplace(sigs[s], q);
      out.projection[s] = q;
      for (const auto& [p, v] : m.atom_values(s)) out.model.set_valuation(q, p, v);
    } else {
      out.projection[s] = it->second;
    }
  }
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (const auto& [t, r] : m.successors(s)) {
      StateId qs = out.projection[s];
      StateId qt = out.projection[t];
      out.model.set_relation(qs, qt, max(out.model.relation(qs, qt), r));
    }
  }
  return out;
}

// -------------------------------------------------- witness synthesis ---

namespace {

// Shared state of one synthesis run: the distance tables up to the top
// depth plus a witness memo. Requested deltas repeat across branches of the
// recursion, so memoization keeps the recursion tree small.
struct SynthContext {
  const Model& m;
  std::vector<DistanceTable> tables;
  std::map<std::tuple<StateId, StateId, int, Truth>, ModalFormula> memo;

  explicit SynthContext(const Model& model, int max_depth)
      : m(model), tables(depth_distance_tables(model, max_depth)) {}
};

ModalFormula synth_witness_impl(SynthContext& ctx, StateId a, StateId b, int depth,
                                const Truth& delta);

// The pairwise Stone-Weierstrass block for states (hi, lo) with
// f(hi) >= f(lo):  ~(~((psi (-) u) & v) (-) w)  with exact
// u = psi(lo), v = f(hi) - f(lo), w = f(lo). It matches f at lo exactly and
// at hi up to the witness gap deficit.
ModalFormula pairwise_block(SynthContext& ctx, const StateFunction& f, StateId hi, StateId lo,
                            int depth, const Truth& delta) {
  ModalFormula psi = synth_witness_impl(ctx, hi, lo, depth, delta);
  if (eval_modal(ctx.m, psi, hi) < eval_modal(ctx.m, psi, lo)) {
    psi = ModalFormula::neg(psi);
  }
  Truth u = eval_modal(ctx.m, psi, lo);
  Truth v = truncated_sub(f.at(hi), f.at(lo));
  Truth w = f.at(lo);
  return ModalFormula::neg(ModalFormula::sub_const(
      ModalFormula::neg(ModalFormula::conj(ModalFormula::sub_const(std::move(psi), u),
                                           ModalFormula::constant(v))),
      w));
}

ModalFormula approximate_impl(SynthContext& ctx, const StateFunction& f, int depth,
                              const Truth& eps) {
  const Model& m = ctx.m;
  const DistanceTable& d = ctx.tables[depth];
  for (StateId a = 0; a < m.state_count(); ++a) {
    for (StateId b = 0; b < m.state_count(); ++b) {
      if (abs_diff(f.at(a), f.at(b)) > d.at(a, b)) {
        throw NonExpansiveError("function is not non-expansive w.r.t. d_" +
                                    std::to_string(depth) + " at (" + m.state_name(a) + "," +
                                    m.state_name(b) + ")",
                                m.state_name(a), m.state_name(b));
      }
    }
  }
  bool constant = true;
  for (StateId s = 1; s < m.state_count(); ++s) {
    if (f.at(s) != f.at(0)) constant = false;
  }
  if (constant) return ModalFormula::constant(f.at(0));

  Truth delta = halve(eps);

  // g[i][j]: approximates f at both x_i and x_j; f_eps = join_i meet_j g[i][j].
  ModalFormula result = ModalFormula::constant(Truth::zero());
  bool first_i = true;
  for (StateId i = 0; i < m.state_count(); ++i) {
    ModalFormula row = ModalFormula::constant(Truth::one());
    bool first_j = true;
    for (StateId j = 0; j < m.state_count(); ++j) {
      ModalFormula block = f.at(i) >= f.at(j) ? pairwise_block(ctx, f, i, j, depth, delta)
                                              : pairwise_block(ctx, f, j, i, depth, delta);
      row = first_j ? std::move(block) : ModalFormula::conj(std::move(row), std::move(block));
      first_j = false;
    }
    result = first_i ? std::move(row) : ModalFormula::disj(std::move(result), std::move(row));
    first_i = false;
  }
  return result;
}

ModalFormula synth_witness_impl(SynthContext& ctx, StateId a, StateId b, int depth,
                                const Truth& delta) {
  auto key = std::make_tuple(a, b, depth, delta);
  if (auto it = ctx.memo.find(key); it != ctx.memo.end()) return it->second;

  const Model& m = ctx.m;
  const Truth target = ctx.tables[depth].at(a, b);
  ModalFormula result = ModalFormula::constant(Truth::zero());
  if (!target.is_zero()) {
    // Atom-dominated case: the dominating atom is an exact witness.
    std::optional<AtomId> best_atom;
    Truth best_atom_gap = Truth::zero();
    for (AtomId p = 0; p < m.atom_count(); ++p) {
      Truth g = abs_diff(m.valuation(a, p), m.valuation(b, p));
      if (!best_atom || g > best_atom_gap) {
        best_atom = p;
        best_atom_gap = g;
      }
    }
    if (best_atom && best_atom_gap == target) {
      result = ModalFormula::atom(m.atom_name(*best_atom));
    } else {
      // Successor-dominated: find the Spoiler-optimal move realizing the
      // recurrence value, build f = R(src,succ) (-) d_{n-1}(succ, .), and
      // return the diamond of its rank-(n-1) approximant.
      const DistanceTable& prev = ctx.tables[depth - 1];
      std::optional<std::pair<StateId, StateId>> chosen;  // (source, successor)
      auto scan_side = [&](StateId src, StateId other) {
        for (const auto& [succ, r] : m.successors(src)) {
          Truth term = r;
          for (const auto& [reply, r2] : m.successors(other)) {
            term = min(term, max(truncated_sub(r, r2), prev.at(succ, reply)));
          }
          if (term == target && !chosen) chosen = std::make_pair(src, succ);
        }
      };
      scan_side(a, b);
      if (!chosen) scan_side(b, a);
      if (!chosen) {
        throw Error("internal: recurrence value without a realizing term");
      }
      auto [src, succ] = *chosen;
      Truth r = m.relation(src, succ);
      std::vector<Truth> values(m.state_count());
      for (StateId s = 0; s < m.state_count(); ++s) {
        values[s] = truncated_sub(r, prev.at(succ, s));
      }
      StateFunction f(m, std::move(values));
      Truth half = halve(delta);
      result = ModalFormula::diamond(approximate_impl(ctx, f, depth - 1, half));
    }
  }
  ctx.memo.emplace(std::move(key), result);
  return result;
}

}  // namespace

ModalFormula synth_witness(const Model& m, StateId a, StateId b, int depth, const Truth& delta) {
  if (depth < 0) throw ValueError("depth must be non-negative");
  if (delta.is_zero()) throw ValueError("delta must be positive");
  SynthContext ctx(m, depth);
  return synth_witness_impl(ctx, a, b, depth, delta);
}

ModalFormula approximate_function(const Model& m, const StateFunction& f, int depth,
                                  const Truth& eps) {
  if (depth < 0) throw ValueError("depth must be non-negative");
  if (eps.is_zero()) throw ValueError("eps must be positive");
  if (f.size() != m.state_count()) throw ModelError("function not defined on this model");
  SynthContext ctx(m, depth);
  return approximate_impl(ctx, f, depth, eps);
}

WitnessResult logical_distance_lower(const Model& m, StateId a, StateId b, int depth,
                                     const Truth& delta) {
  ModalFormula w = synth_witness(m, a, b, depth, delta);
  return WitnessResult{abs_diff(eval_modal(m, w, a), eval_modal(m, w, b)), std::move(w)};
}

}  // namespace fzmod
