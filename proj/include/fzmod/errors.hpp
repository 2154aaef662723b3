#pragma once

#include <stdexcept>
#include <string>

namespace fzmod {

// Base class for all library errors.
class Error : public std::runtime_error {
public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Value outside [0,1], zero denominator, or arithmetic overflow.
class ValueError : public Error {
public:
  using Error::Error;
};

// Undeclared states/atoms, duplicate declarations, atom-set mismatches.
class ModelError : public Error {
public:
  using Error::Error;
};

// Formula evaluation errors (unbound variables, undeclared atoms).
class EvalError : public Error {
public:
  using Error::Error;
};

// Game solver errors (unknown states, configuration caps, illegal moves).
class GameError : public Error {
public:
  using Error::Error;
};

// A matrix handed to DistanceTable violates a pseudometric axiom.
class PseudometricError : public Error {
public:
  using Error::Error;
};

// Common-denominator grid too large for exact enumeration.
class GridError : public Error {
public:
  using Error::Error;
};

// Input function fails a non-expansivity precondition; carries the pair.
class NonExpansiveError : public Error {
public:
  NonExpansiveError(const std::string& what, std::string state_a, std::string state_b)
      : Error(what), state_a_(std::move(state_a)), state_b_(std::move(state_b)) {}

  const std::string& state_a() const { return state_a_; }
  const std::string& state_b() const { return state_b_; }

private:
  std::string state_a_;
  std::string state_b_;
};

}  // namespace fzmod
