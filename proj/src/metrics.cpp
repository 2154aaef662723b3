#include "fzmod/metrics.hpp"

#include <numeric>

#include "fzmod/errors.hpp"
#include "fzmod/games.hpp"

namespace fzmod {

namespace {

constexpr std::int64_t kMaxGridDenominator = 1'000'000;

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  std::int64_t g = std::gcd(a, b);
  __int128 l = (__int128)(a / g) * b;
  if (l > kMaxGridDenominator) {
    throw GridError("common denominator exceeds " + std::to_string(kMaxGridDenominator));
  }
  return static_cast<std::int64_t>(l);
}

}  // namespace

ValueGrid ValueGrid::for_model(const Model& m) {
  std::int64_t den = 1;
  for (StateId s = 0; s < m.state_count(); ++s) {
    for (const auto& [p, v] : m.atom_values(s)) den = lcm_checked(den, v.den());
    for (const auto& [t, v] : m.successors(s)) den = lcm_checked(den, v.den());
  }
  return ValueGrid(den);
}

ValueGrid ValueGrid::common(const ValueGrid& a, const ValueGrid& b) {
  return ValueGrid(lcm_checked(a.den_, b.den_));
}

std::vector<Truth> ValueGrid::points() const {
  std::vector<Truth> out;
  out.reserve(den_ + 1);
  for (std::int64_t k = 0; k <= den_; ++k) out.push_back(Truth::from_fraction(k, den_));
  return out;
}

std::vector<Truth> ValueGrid::points_with_midpoints() const {
  std::vector<Truth> out;
  out.reserve(2 * den_ + 1);
  for (std::int64_t k = 0; k < den_; ++k) {
    out.push_back(Truth::from_fraction(k, den_));
    out.push_back(Truth::from_fraction(2 * k + 1, 2 * den_));
  }
  out.push_back(Truth::one());
  return out;
}

namespace {

using Matrix = std::vector<std::vector<Truth>>;

Matrix zero_matrix(int n) { return Matrix(n, std::vector<Truth>(n, Truth::zero())); }

Truth atom_term(const Model& m, StateId a, StateId b) {
  Truth out = Truth::zero();
  for (AtomId p = 0; p < m.atom_count(); ++p) {
    out = max(out, abs_diff(m.valuation(a, p), m.valuation(b, p)));
  }
  return out;
}

// Spoiler's side of the recurrence: the least epsilon handling the move
// a -> a' is min(R(a,a'), min_{b'} max(R(a,a') (-) R(b,b'), prev(a',b'))),
// where b' ranges over positive successors of b (any other reply is
// dominated by the R(a,a') cap).
Truth move_term(const Model& m, const Matrix& prev, StateId a_succ, const Truth& r, StateId b) {
  Truth inner = r;
  for (const auto& [b_succ, r2] : m.successors(b)) {
    inner = min(inner, max(truncated_sub(r, r2), prev[a_succ][b_succ]));
  }
  return inner;
}

Matrix recurrence_step(const Model& m, const Matrix& prev) {
  const int n = m.state_count();
  Matrix next = zero_matrix(n);
  for (StateId a = 0; a < n; ++a) {
    for (StateId b = 0; b <= a; ++b) {
      Truth value = atom_term(m, a, b);
      for (const auto& [a_succ, r] : m.successors(a)) {
        value = max(value, move_term(m, prev, a_succ, r, b));
      }
      for (const auto& [b_succ, r] : m.successors(b)) {
        value = max(value, move_term(m, prev, b_succ, r, a));
      }
      next[a][b] = value;
      next[b][a] = value;
    }
  }
  return next;
}

}  // namespace

DistanceTable depth_distance(const Model& m, int depth) {
  if (depth < 0) throw ValueError("depth must be non-negative");
  Matrix cur = zero_matrix(m.state_count());
  for (int d = 0; d < depth; ++d) cur = recurrence_step(m, cur);
  return DistanceTable(m, std::move(cur), Provenance{"recurrence", depth});
}

std::vector<DistanceTable> depth_distance_tables(const Model& m, int max_depth) {
  if (max_depth < 0) throw ValueError("depth must be non-negative");
  std::vector<DistanceTable> out;
  Matrix cur = zero_matrix(m.state_count());
  out.push_back(DistanceTable(m, cur, Provenance{"recurrence", 0}));
  for (int d = 1; d <= max_depth; ++d) {
    cur = recurrence_step(m, cur);
    out.push_back(DistanceTable(m, cur, Provenance{"recurrence", d}));
  }
  return out;
}

DistanceTable behavioural_distance(const Model& m) {
  Matrix cur = zero_matrix(m.state_count());
  for (;;) {
    Matrix next = recurrence_step(m, cur);
    if (next == cur) break;
    cur = std::move(next);
  }
  return DistanceTable(m, std::move(cur), Provenance{"recurrence", std::nullopt});
}

Truth game_distance_oracle(const Model& m, StateId a, StateId b, std::optional<int> depth) {
  auto candidates = ValueGrid::for_model(m).points_with_midpoints();
  // Winning is monotone in epsilon, so the least winning candidate is found
  // by binary search; epsilon = 1 always wins.
  std::size_t lo = 0, hi = candidates.size() - 1;
  auto wins = [&](const Truth& eps) {
    return bisim_wins(m, m, a, b, eps, depth).winner() == Player::Duplicator;
  };
  if (wins(candidates[0])) return candidates[0];
  while (lo + 1 < hi) {
    std::size_t mid = (lo + hi) / 2;
    if (wins(candidates[mid])) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return candidates[hi];
}

LiftInput LiftInput::of_state(const Model& m, StateId s) {
  LiftInput out;
  out.atom_values.resize(m.atom_count());
  for (AtomId p = 0; p < m.atom_count(); ++p) out.atom_values[p] = m.valuation(s, p);
  out.successor_weights.resize(m.state_count());
  for (const auto& [t, v] : m.successors(s)) out.successor_weights[t] = v;
  return out;
}

namespace {

void check_carrier(const DistanceTable& d, const LiftInput& x, const LiftInput& y) {
  if (static_cast<int>(x.successor_weights.size()) != d.size() ||
      static_cast<int>(y.successor_weights.size()) != d.size()) {
    throw ModelError("lift inputs must live on the distance table's carrier");
  }
  if (x.atom_values.size() != y.atom_values.size()) {
    throw ModelError("lift inputs must share the atom set");
  }
}

Truth lift_atom_term(const LiftInput& x, const LiftInput& y) {
  Truth out = Truth::zero();
  for (std::size_t p = 0; p < x.atom_values.size(); ++p) {
    out = max(out, abs_diff(x.atom_values[p], y.atom_values[p]));
  }
  return out;
}

// |(<>f)(x) - (<>f)(y)| for the successor structures held in x and y.
Truth diamond_gap(const LiftInput& x, const LiftInput& y, const std::vector<Truth>& f) {
  Truth vx = Truth::zero(), vy = Truth::zero();
  for (std::size_t s = 0; s < f.size(); ++s) {
    vx = max(vx, min(x.successor_weights[s], f[s]));
    vy = max(vy, min(y.successor_weights[s], f[s]));
  }
  return abs_diff(vx, vy);
}

std::int64_t lift_grid_denominator(const DistanceTable& d, const LiftInput& x,
                                   const LiftInput& y) {
  std::int64_t den = 1;
  for (int i = 0; i < d.size(); ++i) {
    for (int j = 0; j < d.size(); ++j) den = lcm_checked(den, d.at(i, j).den());
  }
  for (const auto& v : x.atom_values) den = lcm_checked(den, v.den());
  for (const auto& v : y.atom_values) den = lcm_checked(den, v.den());
  for (const auto& v : x.successor_weights) den = lcm_checked(den, v.den());
  for (const auto& v : y.successor_weights) den = lcm_checked(den, v.den());
  return den;
}

}  // namespace

Truth kantorovich_candidate_sup(const DistanceTable& d, const LiftInput& x, const LiftInput& y) {
  check_carrier(d, x, y);
  const int n = d.size();
  std::int64_t den = lift_grid_denominator(d, x, y);
  Truth best = Truth::zero();
  std::vector<Truth> f(n);
  for (StateId x0 = 0; x0 < n; ++x0) {
    for (std::int64_t k = 1; k <= den; ++k) {
      Truth c = Truth::from_fraction(k, den);
      for (StateId s = 0; s < n; ++s) f[s] = truncated_sub(c, d.at(x0, s));
      best = max(best, diamond_gap(x, y, f));
    }
  }
  return best;
}

Truth kantorovich_exhaustive_sup(const DistanceTable& d, const LiftInput& x, const LiftInput& y,
                                 std::int64_t node_budget) {
  check_carrier(d, x, y);
  const int n = d.size();
  std::int64_t den = lift_grid_denominator(d, x, y);
  std::int64_t budget = node_budget;
  std::vector<std::int64_t> f(n, 0);  // numerators over den
  Truth best = Truth::zero();
  std::vector<Truth> fv(n);

  // Depth-first assignment of grid values, pruned by non-expansivity
  // against the already-assigned states.
  auto rec = [&](auto&& self, int next) -> void {
    if (--budget < 0) {
      throw GridError("exhaustive Kantorovich search exceeds the node budget");
    }
    if (next == n) {
      for (int s = 0; s < n; ++s) fv[s] = Truth::from_fraction(f[s], den);
      best = max(best, diamond_gap(x, y, fv));
      return;
    }
    std::int64_t lo = 0, hi = den;
    for (int s = 0; s < next; ++s) {
      // |f(next) - f(s)| <= d(next, s), scaled to numerators over den.
      const Truth& dist = d.at(next, s);
      std::int64_t slack = dist.num() * (den / dist.den());
      lo = std::max(lo, f[s] - slack);
      hi = std::min(hi, f[s] + slack);
    }
    for (std::int64_t v = lo; v <= hi; ++v) {
      f[next] = v;
      self(self, next + 1);
    }
  };
  rec(rec, 0);
  return best;
}

Truth kantorovich_lift(const DistanceTable& d, const LiftInput& x, const LiftInput& y) {
  check_carrier(d, x, y);
  Truth result = max(lift_atom_term(x, y), kantorovich_candidate_sup(d, x, y));
  if (d.size() <= 6) {
    // Backstop: join in the exhaustive supremum when the enumeration is
    // small enough to be worth it.
    std::int64_t den = lift_grid_denominator(d, x, y);
    double nodes = 1;
    for (int i = 0; i < d.size(); ++i) nodes *= static_cast<double>(den + 1);
    if (nodes <= 200'000.0) {
      result = max(result, kantorovich_exhaustive_sup(d, x, y));
    }
  }
  return result;
}

DistanceTable kantorovich_step(const Model& m, const DistanceTable& d) {
  if (d.size() != m.state_count()) throw ModelError("table does not match the model");
  const int n = m.state_count();
  Matrix next = zero_matrix(n);
  std::vector<LiftInput> inputs;
  inputs.reserve(n);
  for (StateId s = 0; s < n; ++s) inputs.push_back(LiftInput::of_state(m, s));
  for (StateId a = 0; a < n; ++a) {
    for (StateId b = 0; b <= a; ++b) {
      Truth v = kantorovich_lift(d, inputs[a], inputs[b]);
      next[a][b] = v;
      next[b][a] = v;
    }
  }
  int depth = d.provenance().depth ? *d.provenance().depth + 1 : 0;
  return DistanceTable(m, std::move(next),
                       Provenance{"kantorovich", d.provenance().depth ? std::optional<int>(depth)
                                                                      : std::nullopt});
}

}  // namespace fzmod
