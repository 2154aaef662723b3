#include "fzmod/games.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "fzmod/errors.hpp"

namespace fzmod {

std::string player_name(Player p) {
  return p == Player::Spoiler ? "Spoiler" : "Duplicator";
}

namespace {

// One-round survival check on the arena: from (x, y), every legal spoiler
// move on either side must have a reply into `win`.
bool survives_round(const Model& arena, const Truth& eps, StateId x, StateId y,
                    const std::vector<char>& win) {
  const int n = arena.state_count();
  auto answerable = [&](StateId from, StateId other, StateId target, const Truth& r,
                        bool left_moved) {
    // Required reply weight r - eps is strictly positive, so only positive
    // edges of `other` can qualify.
    for (const auto& [reply, r2] : arena.successors(other)) {
      if (leq_sum(r, r2, eps)) {  // r2 >= r - eps
        StateId cx = left_moved ? target : reply;
        StateId cy = left_moved ? reply : target;
        if (win[cx * n + cy]) return true;
      }
    }
    (void)from;
    return false;
  };
  for (const auto& [target, r] : arena.successors(x)) {
    if (r > eps && !answerable(x, y, target, r, true)) return false;
  }
  for (const auto& [target, r] : arena.successors(y)) {
    if (r > eps && !answerable(y, x, target, r, false)) return false;
  }
  return true;
}

std::vector<char> atoms_ok_table(const Model& arena, const Truth& eps) {
  const int n = arena.state_count();
  std::vector<char> ok(static_cast<std::size_t>(n) * n, 1);
  for (StateId x = 0; x < n; ++x) {
    for (StateId y = 0; y < n; ++y) {
      for (AtomId p = 0; p < arena.atom_count(); ++p) {
        if (abs_diff(arena.valuation(x, p), arena.valuation(y, p)) > eps) {
          ok[x * n + y] = 0;
          break;
        }
      }
    }
  }
  return ok;
}

}  // namespace

BisimOutcome bisim_wins(const Model& a, const Model& b, StateId sa, StateId sb,
                        const Truth& epsilon, std::optional<int> depth) {
  if (sa < 0 || sa >= a.state_count()) throw GameError("unknown state on the left side");
  if (sb < 0 || sb >= b.state_count()) throw GameError("unknown state on the right side");
  if (depth && *depth < 0) throw GameError("game depth must be non-negative");

  BisimOutcome out;
  out.model_a_ = std::make_shared<Model>(a);
  out.model_b_ = std::make_shared<Model>(b);
  if (&a == &b) {
    out.arena_ = out.model_a_;
    for (StateId s = 0; s < a.state_count(); ++s) out.to_arena_a_.push_back(s);
    out.to_arena_b_ = out.to_arena_a_;
  } else {
    auto u = disjoint_union(a, b);
    out.arena_ = std::make_shared<Model>(std::move(u.model));
    out.to_arena_a_ = std::move(u.left);
    out.to_arena_b_ = std::move(u.right);
  }
  out.init_a_ = sa;
  out.init_b_ = sb;
  out.epsilon_ = epsilon;
  out.depth_ = depth;

  const Model& arena = *out.arena_;
  const int n = arena.state_count();
  auto atoms_ok = atoms_ok_table(arena, epsilon);
  std::vector<char> all(static_cast<std::size_t>(n) * n, 1);

  auto step = [&](const std::vector<char>& prev) {
    std::vector<char> next(static_cast<std::size_t>(n) * n, 0);
    for (StateId x = 0; x < n; ++x) {
      for (StateId y = 0; y < n; ++y) {
        next[x * n + y] =
            atoms_ok[x * n + y] && survives_round(arena, epsilon, x, y, prev) ? 1 : 0;
      }
    }
    return next;
  };

  if (depth) {
    out.win_.push_back(all);  // depth 0: duplicator wins regardless
    for (int d = 1; d <= *depth; ++d) out.win_.push_back(step(out.win_.back()));
  } else {
    // Safety game: iterate the decreasing winning sets to their fixpoint.
    // The whole sequence is kept: Spoiler's strategy must descend along the
    // approximants, or it could cycle outside the fixpoint forever.
    out.win_.push_back(all);
    for (;;) {
      auto next = step(out.win_.back());
      if (next == out.win_.back()) break;
      out.win_.push_back(std::move(next));
    }
  }
  return out;
}

BisimOutcome bisim_wins(const Model& a, const Model& b, std::string_view sa, std::string_view sb,
                        const Truth& epsilon, std::optional<int> depth) {
  return bisim_wins(a, b, a.state(sa), b.state(sb), epsilon, depth);
}

const std::vector<char>& BisimOutcome::table_for(std::optional<int> rounds_left) const {
  if (!depth_) return win_.back();
  if (!rounds_left) throw GameError("depth-bounded outcome queried without rounds");
  if (*rounds_left < 0 || *rounds_left >= static_cast<int>(win_.size())) {
    throw GameError("rounds outside the solved depth");
  }
  return win_[*rounds_left];
}

bool BisimOutcome::duplicator_wins(StateId a, StateId b, std::optional<int> rounds_left) const {
  StateId x = to_arena_a_.at(a);
  StateId y = to_arena_b_.at(b);
  return table_for(depth_ ? rounds_left : std::nullopt)[x * arena_->state_count() + y] != 0;
}

Player BisimOutcome::winner() const {
  return duplicator_wins(init_a_, init_b_, depth_) ? Player::Duplicator : Player::Spoiler;
}

bool BisimOutcome::atom_condition_holds(StateId a, StateId b) const {
  StateId x = to_arena_a_.at(a);
  StateId y = to_arena_b_.at(b);
  for (AtomId p = 0; p < arena_->atom_count(); ++p) {
    if (abs_diff(arena_->valuation(x, p), arena_->valuation(y, p)) > epsilon_) return false;
  }
  return true;
}

bool BisimOutcome::legal_spoiler_move(StateId a, StateId b, const BisimMove& move) const {
  StateId from = move.on_left ? to_arena_a_.at(a) : to_arena_b_.at(b);
  StateId target = move.on_left ? to_arena_a_.at(move.target) : to_arena_b_.at(move.target);
  return arena_->relation(from, target) > epsilon_;
}

std::optional<StateId> BisimOutcome::duplicator_reply(StateId a, StateId b, const BisimMove& move,
                                                      std::optional<int> rounds_left) const {
  const int n = arena_->state_count();
  StateId x = to_arena_a_.at(a);
  StateId y = to_arena_b_.at(b);
  StateId moved_from = move.on_left ? x : y;
  StateId other = move.on_left ? y : x;
  StateId target = move.on_left ? to_arena_a_.at(move.target) : to_arena_b_.at(move.target);
  Truth r = arena_->relation(moved_from, target);

  const std::vector<char>* next_table = nullptr;
  if (!depth_) {
    next_table = &win_.back();
  } else if (rounds_left && *rounds_left >= 1) {
    next_table = &table_for(*rounds_left - 1);
  } else {
    throw GameError("no rounds left for a reply");
  }

  // The reply side is the opposite of the moved side; translate arena ids
  // back to that model's ids at the end.
  const std::vector<StateId>& back = move.on_left ? to_arena_b_ : to_arena_a_;
  auto original_of = [&](StateId arena_id) -> std::optional<StateId> {
    for (StateId s = 0; s < static_cast<StateId>(back.size()); ++s) {
      if (back[s] == arena_id) return s;
    }
    return std::nullopt;
  };

  std::optional<StateId> best_winning, best_legal;
  Truth best_winning_r, best_legal_r;
  for (const auto& [reply, r2] : arena_->successors(other)) {
    if (!leq_sum(r, r2, epsilon_)) continue;  // needs r2 >= r - eps
    StateId cx = move.on_left ? target : reply;
    StateId cy = move.on_left ? reply : target;
    bool winning = (*next_table)[cx * n + cy] != 0;
    if (!best_legal || r2 > best_legal_r) {
      best_legal = reply;
      best_legal_r = r2;
    }
    if (winning && (!best_winning || r2 > best_winning_r)) {
      best_winning = reply;
      best_winning_r = r2;
    }
  }
  std::optional<StateId> pick = best_winning ? best_winning : best_legal;
  if (!pick) return std::nullopt;
  return original_of(*pick);
}

std::optional<BisimMove> BisimOutcome::spoiler_witness(StateId a, StateId b,
                                                       std::optional<int> rounds_left) const {
  const int n = arena_->state_count();
  StateId x = to_arena_a_.at(a);
  StateId y = to_arena_b_.at(b);

  const std::vector<char>* next_table = nullptr;
  if (!depth_) {
    // Rank of the configuration: first approximant that excludes it. A move
    // whose replies all fall below the rank strictly decreases it, so the
    // witness strategy terminates in an actual win.
    std::size_t rank = win_.size();
    for (std::size_t k = 0; k < win_.size(); ++k) {
      if (!win_[k][x * n + y]) {
        rank = k;
        break;
      }
    }
    if (rank == win_.size() || rank == 0) return std::nullopt;  // duplicator wins here
    next_table = &win_[rank - 1];
  } else if (rounds_left && *rounds_left >= 1) {
    next_table = &table_for(*rounds_left - 1);
  } else {
    return std::nullopt;  // spoiler cannot move in a 0-round game
  }

  auto kills = [&](StateId from, StateId other, StateId target, const Truth& r, bool on_left) {
    for (const auto& [reply, r2] : arena_->successors(other)) {
      if (!leq_sum(r, r2, epsilon_)) continue;
      StateId cx = on_left ? target : reply;
      StateId cy = on_left ? reply : target;
      if ((*next_table)[cx * n + cy]) return false;
    }
    (void)from;
    return true;
  };

  auto original_of = [&](const std::vector<StateId>& map, StateId arena_id) -> StateId {
    for (StateId s = 0; s < static_cast<StateId>(map.size()); ++s) {
      if (map[s] == arena_id) return s;
    }
    throw GameError("arena state outside the moved side");
  };

  for (const auto& [target, r] : arena_->successors(x)) {
    if (r > epsilon_ && kills(x, y, target, r, true)) {
      return BisimMove{true, original_of(to_arena_a_, target)};
    }
  }
  for (const auto& [target, r] : arena_->successors(y)) {
    if (r > epsilon_ && kills(y, x, target, r, false)) {
      return BisimMove{false, original_of(to_arena_b_, target)};
    }
  }
  return std::nullopt;
}

Transcript game_trace(const BisimOutcome& outcome, const std::vector<BisimMove>& script) {
  Transcript t;
  StateId a = outcome.initial_a();
  StateId b = outcome.initial_b();
  std::optional<int> rounds = outcome.depth();
  auto name_a = [&](StateId s) { return outcome.model_a().state_name(s); };
  auto name_b = [&](StateId s) { return outcome.model_b().state_name(s); };

  std::size_t cursor = 0;
  for (;;) {
    if (rounds && *rounds == 0) {
      t.end = "round limit reached; duplicator wins";
      break;
    }
    if (!outcome.atom_condition_holds(a, b)) {
      t.end = "atom condition violated at (" + name_a(a) + "," + name_b(b) +
              "); spoiler wins";
      break;
    }
    BisimMove spoiler_move;
    if (outcome.winner() == Player::Duplicator) {
      // Adversary plays Spoiler.
      if (cursor >= script.size()) {
        t.end = "script exhausted";
        break;
      }
      spoiler_move = script[cursor++];
      if (!outcome.legal_spoiler_move(a, b, spoiler_move)) {
        const std::string from = spoiler_move.on_left ? name_a(a) : name_b(b);
        const std::string to = spoiler_move.on_left ? name_a(spoiler_move.target)
                                                    : name_b(spoiler_move.target);
        throw GameError("illegal spoiler move " + from + " -> " + to +
                        ": edge value must exceed epsilon");
      }
    } else {
      auto witness = outcome.spoiler_witness(a, b, rounds);
      if (!witness) {
        t.end = "spoiler has no winning move left";
        break;
      }
      spoiler_move = *witness;
    }

    StateId reply;
    if (outcome.winner() == Player::Duplicator) {
      auto r = outcome.duplicator_reply(a, b, spoiler_move, rounds);
      if (!r) {
        t.end = "duplicator cannot reply; spoiler wins";
        break;
      }
      reply = *r;
    } else if (!outcome.duplicator_reply(a, b, spoiler_move, rounds)) {
      // No legal reply exists; the scripted adversary has already lost.
      TraceStep stuck;
      stuck.config_a = name_a(a);
      stuck.config_b = name_b(b);
      stuck.spoiler_on_left = spoiler_move.on_left;
      stuck.spoiler_target =
          spoiler_move.on_left ? name_a(spoiler_move.target) : name_b(spoiler_move.target);
      stuck.reply_target = "-";
      t.steps.push_back(stuck);
      t.end = "duplicator cannot reply; spoiler wins";
      break;
    } else {
      // Adversary plays Duplicator's replies.
      if (cursor >= script.size()) {
        t.end = "script exhausted";
        break;
      }
      BisimMove reply_move = script[cursor++];
      reply = reply_move.target;
      // Legality: reply edge must carry at least the moved weight minus eps.
      const Model& arena_side_model = spoiler_move.on_left ? outcome.model_b()
                                                           : outcome.model_a();
      StateId reply_from = spoiler_move.on_left ? b : a;
      const Model& moved_model = spoiler_move.on_left ? outcome.model_a() : outcome.model_b();
      StateId moved_from = spoiler_move.on_left ? a : b;
      Truth needed = moved_model.relation(moved_from, spoiler_move.target);
      Truth got = arena_side_model.relation(reply_from, reply);
      if (!leq_sum(needed, got, outcome.epsilon())) {
        throw GameError("illegal duplicator reply " + arena_side_model.state_name(reply_from) +
                        " -> " + arena_side_model.state_name(reply) +
                        ": edge value below required slack");
      }
    }

    TraceStep step;
    step.config_a = name_a(a);
    step.config_b = name_b(b);
    step.spoiler_on_left = spoiler_move.on_left;
    step.spoiler_target =
        spoiler_move.on_left ? name_a(spoiler_move.target) : name_b(spoiler_move.target);
    step.reply_target = spoiler_move.on_left ? name_b(reply) : name_a(reply);
    t.steps.push_back(step);

    if (spoiler_move.on_left) {
      a = spoiler_move.target;
      b = reply;
    } else {
      b = spoiler_move.target;
      a = reply;
    }
    if (rounds) --*rounds;
  }
  return t;
}

// ------------------------------------------------------------------ EF ---

// Winning-ness of an EF configuration depends only on the *set* of pebble
// pairs, not on the order or multiplicity in which they were played, so the
// memo is keyed on the sorted deduplicated pair set.
struct EfOutcome::Solver {
  const Model* ma = nullptr;
  const Model* mb = nullptr;
  Truth eps;
  using Pairs = std::vector<std::pair<StateId, StateId>>;
  std::map<std::pair<Pairs, int>, bool> memo;

  static Pairs canonical(const StateVector& as, const StateVector& bs) {
    Pairs p;
    for (std::size_t i = 0; i < as.size(); ++i) p.emplace_back(as[i], bs[i]);
    std::sort(p.begin(), p.end());
    p.erase(std::unique(p.begin(), p.end()), p.end());
    return p;
  }

  static Pairs extended(Pairs p, StateId a, StateId b) {
    auto entry = std::make_pair(a, b);
    auto it = std::lower_bound(p.begin(), p.end(), entry);
    if (it == p.end() || *it != entry) p.insert(it, entry);
    return p;
  }

  bool partial_iso(const Pairs& pairs) const {
    for (const auto& [a1, b1] : pairs) {
      for (AtomId p = 0; p < ma->atom_count(); ++p) {
        if (abs_diff(ma->valuation(a1, p), mb->valuation(b1, p)) > eps) return false;
      }
      for (const auto& [a2, b2] : pairs) {
        if ((a1 == a2) != (b1 == b2)) return false;
        if (abs_diff(ma->relation(a1, a2), mb->relation(b1, b2)) > eps) return false;
      }
    }
    return true;
  }

  bool win(const Pairs& pairs, int rounds) {
    auto key = std::make_pair(pairs, rounds);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    bool result = partial_iso(pairs);
    if (result && rounds > 0) {
      for (StateId a = 0; a < ma->state_count() && result; ++a) {
        bool answered = false;
        for (StateId b = 0; b < mb->state_count() && !answered; ++b) {
          answered = win(extended(pairs, a, b), rounds - 1);
        }
        result = answered;
      }
      for (StateId b = 0; b < mb->state_count() && result; ++b) {
        bool answered = false;
        for (StateId a = 0; a < ma->state_count() && !answered; ++a) {
          answered = win(extended(pairs, a, b), rounds - 1);
        }
        result = answered;
      }
    }
    memo.emplace(std::move(key), result);
    return result;
  }
};

EfOutcome ef_wins(const Model& a, const Model& b, const StateVector& as, const StateVector& bs,
                  const Truth& epsilon, int rounds, const EfLimits& limits) {
  if (as.size() != bs.size()) throw GameError("EF vectors must have equal length");
  if (rounds < 0) throw GameError("EF rounds must be non-negative");
  if (rounds > limits.max_rounds) {
    throw GameError("EF game beyond the configured round cap (" +
                    std::to_string(limits.max_rounds) + ")");
  }
  if (a.state_count() + b.state_count() > limits.max_total_states) {
    throw GameError("EF game beyond the configured state cap (" +
                    std::to_string(limits.max_total_states) + ")");
  }
  if (!a.same_atoms(b)) throw GameError("EF game requires equal atom sets");
  for (StateId s : as) {
    if (s < 0 || s >= a.state_count()) throw GameError("unknown state on the left side");
  }
  for (StateId s : bs) {
    if (s < 0 || s >= b.state_count()) throw GameError("unknown state on the right side");
  }

  EfOutcome out;
  out.model_a_ = std::make_shared<Model>(a);
  out.model_b_ = std::make_shared<Model>(b);
  out.init_a_ = as;
  out.init_b_ = bs;
  out.epsilon_ = epsilon;
  out.rounds_ = rounds;
  out.solver_ = std::make_shared<EfOutcome::Solver>();
  out.solver_->ma = out.model_a_.get();
  out.solver_->mb = out.model_b_.get();
  out.solver_->eps = epsilon;
  bool d_wins = out.solver_->win(EfOutcome::Solver::canonical(as, bs), rounds);
  out.winner_ = d_wins ? Player::Duplicator : Player::Spoiler;
  return out;
}

bool EfOutcome::partial_isomorphism(const StateVector& as, const StateVector& bs) const {
  return solver_->partial_iso(Solver::canonical(as, bs));
}

bool EfOutcome::duplicator_wins(const StateVector& as, const StateVector& bs,
                                int rounds_left) const {
  return solver_->win(Solver::canonical(as, bs), rounds_left);
}

std::optional<StateId> EfOutcome::duplicator_reply(const StateVector& as, const StateVector& bs,
                                                   const EfMove& move, int rounds_left) const {
  if (rounds_left < 1) return std::nullopt;
  auto pairs = Solver::canonical(as, bs);
  const Model& other = move.on_left ? *model_b_ : *model_a_;
  for (StateId reply = 0; reply < other.state_count(); ++reply) {
    StateId na = move.on_left ? move.target : reply;
    StateId nb = move.on_left ? reply : move.target;
    if (solver_->win(Solver::extended(pairs, na, nb), rounds_left - 1)) return reply;
  }
  return std::nullopt;
}

std::optional<EfMove> EfOutcome::spoiler_witness(const StateVector& as, const StateVector& bs,
                                                 int rounds_left) const {
  if (rounds_left < 1) return std::nullopt;
  auto pairs = Solver::canonical(as, bs);
  auto kills = [&](bool on_left, StateId target) {
    const Model& other = on_left ? *model_b_ : *model_a_;
    for (StateId reply = 0; reply < other.state_count(); ++reply) {
      StateId na = on_left ? target : reply;
      StateId nb = on_left ? reply : target;
      if (solver_->win(Solver::extended(pairs, na, nb), rounds_left - 1)) return false;
    }
    return true;
  };
  for (StateId s = 0; s < model_a_->state_count(); ++s) {
    if (kills(true, s)) return EfMove{true, s};
  }
  for (StateId s = 0; s < model_b_->state_count(); ++s) {
    if (kills(false, s)) return EfMove{false, s};
  }
  return std::nullopt;
}

}  // namespace fzmod
