#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kmroot {

// All lattice arithmetic is exact. Overflow is a hard error, never wraparound.
using Int = std::int64_t;

struct OverflowError : std::runtime_error {
  OverflowError() : std::runtime_error("integer overflow in exact arithmetic") {}
};

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) throw OverflowError{};
  return r;
}

inline Int checked_neg(Int a) { return checked_sub(0, a); }

// Division known to be exact; a remainder means a broken invariant upstream.
inline Int exact_div(Int a, Int b) {
  if (b == 0) throw std::logic_error("exact_div by zero");
  if (a == INT64_MIN && b == -1) throw OverflowError{};
  if (a % b != 0) throw std::logic_error("exact_div with remainder");
  return a / b;
}

// Reduced rational with positive denominator.
struct Rat {
  Int num = 0;
  Int den = 1;

  Rat() = default;
  Rat(Int n) : num(n), den(1) {}  // NOLINT: implicit by design
  Rat(Int n, Int d) {
    if (d == 0) throw std::logic_error("rational with zero denominator");
    if (d < 0) { n = checked_neg(n); d = checked_neg(d); }
    Int g = std::gcd(n, d);
    if (g > 1) { n /= g; d /= g; }
    num = n;
    den = d;
  }

  bool is_integer() const { return den == 1; }
  bool is_zero() const { return num == 0; }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return Rat(checked_add(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return Rat(checked_sub(checked_mul(a.num, b.den), checked_mul(b.num, a.den)),
               checked_mul(a.den, b.den));
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return Rat(checked_mul(a.num, b.num), checked_mul(a.den, b.den));
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num == 0) throw std::logic_error("rational division by zero");
    return Rat(checked_mul(a.num, b.den), checked_mul(a.den, b.num));
  }
  Rat operator-() const { return Rat(checked_neg(num), den); }
  friend bool operator==(const Rat& a, const Rat& b) { return a.num == b.num && a.den == b.den; }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
  }

  std::string str() const {
    return is_integer() ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

}  // namespace kmroot
