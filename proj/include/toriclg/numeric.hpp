#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <deque>
#include <limits>
#include <mutex>
#include <numeric>
#include <string>
#include <vector>

#include "toriclg/error.hpp"

namespace toriclg {

using Int = std::int64_t;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Int checked_add(Int a, Int b) {
  Int r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer addition overflow");
  return r;
}

inline Int checked_sub(Int a, Int b) {
  Int r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer subtraction overflow");
  return r;
}

inline Int checked_mul(Int a, Int b) {
  Int r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "integer multiplication overflow");
  return r;
}

inline Int to_int(const BigInt& v) {
  if (v > std::numeric_limits<Int>::max() || v < std::numeric_limits<Int>::min())
    fail(ErrorKind::Overflow, "value does not fit in 64 bits: " + v.str());
  return static_cast<Int>(v);
}

/// Non-negative remainder.
inline Int mod(Int a, Int n) {
  Int r = a % n;
  return r < 0 ? r + n : r;
}

inline Int floor_div(Int a, Int b) {
  Int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline Int gcd(Int a, Int b) { return std::gcd(a, b); }

inline Int lcm(Int a, Int b) {
  if (a == 0 || b == 0) return 0;
  return checked_mul(a / gcd(a, b), b < 0 ? -b : b);
}

/// Extended gcd: returns g = gcd(a, b) >= 0 and x, y with a*x + b*y = g.
struct Bezout {
  Int g, x, y;
};

inline Bezout extended_gcd(Int a, Int b) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

inline Int floor_rational(const Rational& q) {
  BigInt n = boost::multiprecision::numerator(q);
  BigInt d = boost::multiprecision::denominator(q);
  BigInt f = n / d;
  if (n % d != 0 && n < 0) f -= 1;
  return to_int(f);
}

inline Int ceil_rational(const Rational& q) { return -floor_rational(-q); }

/// Fractional part in [0, 1).
inline Rational frac(const Rational& q) { return q - Rational(floor_rational(q)); }

inline std::string to_string(const Rational& q) {
  if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
  return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

/// Parses "p" or "p/q".
inline Rational parse_rational(const std::string& s) {
  try {
    auto slash = s.find('/');
    if (slash == std::string::npos) return Rational(BigInt(s));
    BigInt num(s.substr(0, slash));
    BigInt den(s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::ParseError, "zero denominator in '" + s + "'");
    return Rational(num, den);
  } catch (const std::runtime_error& e) {
    if (dynamic_cast<const Error*>(&e)) throw;
    fail(ErrorKind::ParseError, "not a rational: '" + s + "'");
  }
}

/// Memoized factorials; thread safe (deque keeps references stable).
inline const BigInt& factorial(std::size_t n) {
  static std::deque<BigInt> table{BigInt(1)};
  static std::mutex m;
  std::lock_guard lock(m);
  while (table.size() <= n) table.push_back(table.back() * BigInt(table.size()));
  return table[n];
}

}  // namespace toriclg
