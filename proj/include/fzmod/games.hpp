#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "fzmod/model.hpp"
#include "fzmod/truth.hpp"

namespace fzmod {

enum class Player { Spoiler, Duplicator };

std::string player_name(Player p);

// A spoiler move in the bisimulation game: which side's pebble advances and
// to which state (ids refer to the original models, not the combined arena).
struct BisimMove {
  bool on_left = true;
  StateId target = 0;
};

// Solved epsilon-bisimulation game. Holds the winner together with the full
// winning-set tables, from which both players' strategies are answered:
// Duplicator replies pick a winning move when one exists (largest edge
// value, then smallest state id), otherwise the best legal move; Spoiler
// witnesses are the first legal move that defeats every legal reply.
class BisimOutcome {
public:
  Player winner() const;
  const Truth& epsilon() const { return epsilon_; }
  std::optional<int> depth() const { return depth_; }  // nullopt = unbounded

  StateId initial_a() const { return init_a_; }
  StateId initial_b() const { return init_b_; }
  const Model& model_a() const { return *model_a_; }
  const Model& model_b() const { return *model_b_; }

  // rounds_left is ignored for unbounded outcomes; for depth-solved
  // outcomes it must not exceed the solved depth.
  bool duplicator_wins(StateId a, StateId b, std::optional<int> rounds_left) const;
  bool atom_condition_holds(StateId a, StateId b) const;
  bool legal_spoiler_move(StateId a, StateId b, const BisimMove& move) const;

  std::optional<StateId> duplicator_reply(StateId a, StateId b, const BisimMove& move,
                                          std::optional<int> rounds_left) const;
  std::optional<BisimMove> spoiler_witness(StateId a, StateId b,
                                           std::optional<int> rounds_left) const;

private:
  friend BisimOutcome bisim_wins(const Model& a, const Model& b, StateId sa, StateId sb,
                                 const Truth& epsilon, std::optional<int> depth);

  const std::vector<char>& table_for(std::optional<int> rounds_left) const;

  std::shared_ptr<const Model> model_a_, model_b_;
  std::shared_ptr<const Model> arena_;
  std::vector<StateId> to_arena_a_, to_arena_b_;
  StateId init_a_ = 0, init_b_ = 0;
  Truth epsilon_;
  std::optional<int> depth_;
  // win_[d][x * n + y]: duplicator wins with d rounds left; for unbounded
  // games a single fixpoint table is stored.
  std::vector<std::vector<char>> win_;
};

// Solves the epsilon-bisimulation game between (a, sa) and (b, sb). Distinct
// models are combined into one arena via disjoint_union; a game on a single
// model is played on the model itself.
BisimOutcome bisim_wins(const Model& a, const Model& b, StateId sa, StateId sb,
                        const Truth& epsilon, std::optional<int> depth);
BisimOutcome bisim_wins(const Model& a, const Model& b, std::string_view sa, std::string_view sb,
                        const Truth& epsilon, std::optional<int> depth);

// One replayed round: configuration, spoiler's move and duplicator's reply,
// in original state names.
struct TraceStep {
  std::string config_a, config_b;
  bool spoiler_on_left = true;
  std::string spoiler_target;
  std::string reply_target;
};

struct Transcript {
  std::vector<TraceStep> steps;
  std::string end;  // why the replay stopped
};

// Replays the stored strategy against a scripted adversary. When Duplicator
// won, the script provides Spoiler moves; when Spoiler won, the script
// provides Duplicator's replies to the stored witness moves. Illegal script
// moves raise GameError naming the reason.
Transcript game_trace(const BisimOutcome& outcome, const std::vector<BisimMove>& script);

// ----------------------------------------------------------------- EF games

struct EfMove {
  bool on_left = true;
  StateId target = 0;
};

// Hard caps on the EF solver's configuration space.
struct EfLimits {
  int max_rounds = 4;
  int max_total_states = 12;
};

using StateVector = std::vector<StateId>;

// Solved n-round epsilon-Ehrenfeucht-Fraisse game.
class EfOutcome {
public:
  Player winner() const { return winner_; }
  const Truth& epsilon() const { return epsilon_; }
  int rounds() const { return rounds_; }
  const Model& model_a() const { return *model_a_; }
  const Model& model_b() const { return *model_b_; }
  const StateVector& initial_a() const { return init_a_; }
  const StateVector& initial_b() const { return init_b_; }

  bool partial_isomorphism(const StateVector& as, const StateVector& bs) const;
  bool duplicator_wins(const StateVector& as, const StateVector& bs, int rounds_left) const;
  std::optional<StateId> duplicator_reply(const StateVector& as, const StateVector& bs,
                                          const EfMove& move, int rounds_left) const;
  std::optional<EfMove> spoiler_witness(const StateVector& as, const StateVector& bs,
                                        int rounds_left) const;

private:
  friend EfOutcome ef_wins(const Model& a, const Model& b, const StateVector& as,
                           const StateVector& bs, const Truth& epsilon, int rounds,
                           const EfLimits& limits);

  struct Solver;
  std::shared_ptr<const Model> model_a_, model_b_;
  StateVector init_a_, init_b_;
  Truth epsilon_;
  int rounds_ = 0;
  Player winner_ = Player::Duplicator;
  std::shared_ptr<Solver> solver_;
};

EfOutcome ef_wins(const Model& a, const Model& b, const StateVector& as, const StateVector& bs,
                  const Truth& epsilon, int rounds, const EfLimits& limits = {});

}  // namespace fzmod
