#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fzmod/errors.hpp"

namespace fzmod {

// Exact rational truth value in [0,1].
//
// Always stored in canonical reduced form: gcd(num, den) = 1, den > 0,
// 0 <= num <= den (zero is 0/1). All connectives of the logic are lattice
// operations, complement and truncated subtraction, so denominators never
// grow beyond the lcm of the input denominators; intermediates are computed
// in 128-bit to rule out overflow.
class Truth {
public:
  constexpr Truth() = default;  // 0/1

  static Truth from_fraction(std::int64_t num, std::int64_t den);
  static Truth zero() { return Truth(); }
  static Truth one() { return Truth(1, 1); }

  // Parses "p/q", an integer, or a finite decimal ("0.25"), exactly.
  static Truth parse(std::string_view text);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == den_; }

  // "p/q", or just "p" when the denominator is 1.
  std::string str() const;

  friend bool operator==(const Truth& a, const Truth& b) = default;
  friend std::strong_ordering operator<=>(const Truth& a, const Truth& b);

private:
  constexpr Truth(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Truth& t);

// Lattice meet and join.
Truth min(const Truth& a, const Truth& b);
Truth max(const Truth& a, const Truth& b);

// 1 - a.
Truth complement(const Truth& a);

// max(a - b, 0).
Truth truncated_sub(const Truth& a, const Truth& b);

// |a - b|.
Truth abs_diff(const Truth& a, const Truth& b);

// x <= y + z, computed exactly (the sum may exceed 1).
bool leq_sum(const Truth& x, const Truth& y, const Truth& z);

// a / 2, exact.
Truth halve(const Truth& a);

// Shortest exact decimal when the denominator is of the form 2^a 5^b,
// otherwise a "~"-prefixed 6-digit approximation. Display only.
std::string decimal_string(const Truth& t);

}  // namespace fzmod
