#include "fzmod/truth.hpp"

#include <cctype>
#include <limits>
#include <numeric>
#include <ostream>

namespace fzmod {

namespace {

using Wide = __int128;

std::int64_t narrow(Wide v, const char* what) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw ValueError(std::string("rational overflow in ") + what);
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a < 0 ? -a : a;
}

// Builds a canonical Truth from a wide fraction known to be in [0,1].
Truth reduce_unit(Wide num, Wide den, const char* what) {
  Wide g = wide_gcd(num, den);
  if (g == 0) return Truth::zero();
  return Truth::from_fraction(narrow(num / g, what), narrow(den / g, what));
}

}  // namespace

Truth Truth::from_fraction(std::int64_t num, std::int64_t den) {
  if (den == 0) throw ValueError("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  if (num < 0 || num > den) {
    throw ValueError("truth value outside [0,1]");
  }
  std::int64_t g = std::gcd(num, den);
  return Truth(num / g, den / g);
}

std::strong_ordering operator<=>(const Truth& a, const Truth& b) {
  Wide lhs = Wide(a.num_) * b.den_;
  Wide rhs = Wide(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Truth min(const Truth& a, const Truth& b) { return a <= b ? a : b; }

Truth max(const Truth& a, const Truth& b) { return a >= b ? a : b; }

Truth complement(const Truth& a) {
  return Truth::from_fraction(a.den() - a.num(), a.den());
}

Truth truncated_sub(const Truth& a, const Truth& b) {
  Wide num = Wide(a.num()) * b.den() - Wide(b.num()) * a.den();
  if (num <= 0) return Truth::zero();
  return reduce_unit(num, Wide(a.den()) * b.den(), "truncated_sub");
}

Truth abs_diff(const Truth& a, const Truth& b) {
  Wide num = Wide(a.num()) * b.den() - Wide(b.num()) * a.den();
  if (num < 0) num = -num;
  return reduce_unit(num, Wide(a.den()) * b.den(), "abs_diff");
}

bool leq_sum(const Truth& x, const Truth& y, const Truth& z) {
  // x <= y + z  <=>  x*yd*zd <= (yn*zd + zn*yd) * xd
  Wide lhs = Wide(x.num()) * y.den() * z.den();
  Wide rhs = (Wide(y.num()) * z.den() + Wide(z.num()) * y.den()) * x.den();
  return lhs <= rhs;
}

Truth halve(const Truth& a) {
  if (a.num() % 2 == 0) return Truth::from_fraction(a.num() / 2, a.den());
  return reduce_unit(a.num(), Wide(a.den()) * 2, "halve");
}

std::string Truth::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::ostream& operator<<(std::ostream& os, const Truth& t) { return os << t.str(); }

Truth Truth::parse(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
    negative = text[pos] == '-';
    ++pos;
  }
  auto read_digits = [&](std::int64_t& out, int* count = nullptr) {
    int n = 0;
    out = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      if (out > (std::numeric_limits<std::int64_t>::max() - 9) / 10) {
        throw ValueError("numeric literal too large");
      }
      out = out * 10 + (text[pos] - '0');
      ++pos;
      ++n;
    }
    if (count) *count = n;
    return n > 0;
  };

  std::int64_t whole = 0;
  if (!read_digits(whole)) throw ValueError("malformed rational literal '" + std::string(text) + "'");

  std::int64_t num = whole;
  std::int64_t den = 1;
  if (pos < text.size() && text[pos] == '/') {
    ++pos;
    if (!read_digits(den)) throw ValueError("malformed rational literal '" + std::string(text) + "'");
    if (den == 0) throw ValueError("zero denominator");
  } else if (pos < text.size() && text[pos] == '.') {
    ++pos;
    std::int64_t frac = 0;
    int digits = 0;
    if (!read_digits(frac, &digits)) {
      throw ValueError("malformed rational literal '" + std::string(text) + "'");
    }
    if (digits > 17) throw ValueError("decimal literal too long");
    for (int i = 0; i < digits; ++i) {
      if (num > std::numeric_limits<std::int64_t>::max() / 10) {
        throw ValueError("numeric literal too large");
      }
      num *= 10;
      den *= 10;
    }
    num += frac;
  }
  if (pos != text.size()) throw ValueError("malformed rational literal '" + std::string(text) + "'");
  if (negative && num != 0) throw ValueError("truth value outside [0,1]");
  return Truth::from_fraction(num, den);
}

std::string decimal_string(const Truth& t) {
  std::int64_t den = t.den();
  // Strip factors of 2 and 5; a terminating decimal exists iff nothing remains.
  std::int64_t rest = den;
  while (rest % 2 == 0) rest /= 2;
  while (rest % 5 == 0) rest /= 5;
  if (rest == 1) {
    if (den == 1) return std::to_string(t.num());
    Wide num = t.num();
    Wide scale = 1;
    std::int64_t d = den;
    int digits = 0;
    while (d > 1) {
      // Multiply up to a power of 10 by matching the 2s and 5s.
      if (d % 10 == 0) {
        d /= 10;
      } else if (d % 2 == 0) {
        d /= 2;
        num *= 5;
      } else {
        d /= 5;
        num *= 2;
      }
      scale *= 10;
      ++digits;
    }
    Wide whole = num / scale;
    Wide frac = num % scale;
    std::string fs;
    for (int i = 0; i < digits; ++i) {
      fs.insert(fs.begin(), static_cast<char>('0' + static_cast<int>(frac % 10)));
      frac /= 10;
    }
    while (fs.size() > 1 && fs.back() == '0') fs.pop_back();
    if (fs == "0") return std::to_string(static_cast<std::int64_t>(whole));
    return std::to_string(static_cast<std::int64_t>(whole)) + "." + fs;
  }
  // Non-terminating: 6-digit approximation, marked as such.
  Wide scaled = (Wide(t.num()) * 1000000 + den / 2) / den;
  std::string digits = std::to_string(static_cast<std::int64_t>(scaled));
  while (digits.size() < 7) digits.insert(digits.begin(), '0');
  std::string out = "~" + digits.substr(0, digits.size() - 6) + "." + digits.substr(digits.size() - 6);
  while (out.back() == '0') out.pop_back();
  return out;
}

}  // namespace fzmod
