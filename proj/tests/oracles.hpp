#pragma once

// Slow, independent reference computations for the test suites. Nothing here
// reuses the library's pruning, relation lattices or LP enumeration.

#include <functional>
#include <vector>

#include "toriclg/laurent.hpp"

namespace oracle {

using toriclg::BigInt;
using toriclg::Int;
using toriclg::Rational;

inline BigInt fact(Int n) {
  BigInt r = 1;
  for (Int i = 2; i <= n; ++i) r *= i;
  return r;
}

inline Rational binomial(Int n, Int k) { return Rational(fact(n), fact(k) * fact(n - k)); }

/// (m d)! / (d!)^m as a product of binomials.
inline Rational multinomial_equal(Int m, Int d) {
  Rational r = 1;
  for (Int j = 1; j <= m; ++j) r *= binomial(j * d, d);
  return r;
}

/// Constant terms of f^k, k = 0..N, by summing the multinomial expansion over
/// every composition of k into the terms of f. f must be parameter-free.
inline std::vector<Rational> brute_periods(const toriclg::LaurentPoly& f, std::size_t N) {
  std::vector<std::vector<Int>> exps;
  std::vector<Rational> coeffs;
  for (const auto& [e, c] : f.terms()) {
    exps.push_back(e);
    coeffs.push_back(c.constant_value());
  }
  const std::size_t t = exps.size(), dim = f.dim();
  std::vector<Rational> out;
  for (std::size_t k = 0; k <= N; ++k) {
    Rational total = 0;
    std::vector<Int> n(t, 0);
    // walk all n with sum k
    auto visit = [&]() {
      std::vector<Int> s(dim, 0);
      for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = 0; j < dim; ++j) s[j] += n[i] * exps[i][j];
      for (Int v : s)
        if (v != 0) return;
      Rational term = Rational(fact(static_cast<Int>(k)));
      for (std::size_t i = 0; i < t; ++i) {
        term /= Rational(fact(n[i]));
        for (Int r = 0; r < n[i]; ++r) term *= coeffs[i];
      }
      total += term;
    };
    std::function<void(std::size_t, Int)> rec = [&](std::size_t i, Int left) {
      if (t == 0) return;
      if (i + 1 == t) {
        n[i] = left;
        visit();
        return;
      }
      for (Int v = 0; v <= left; ++v) {
        n[i] = v;
        rec(i + 1, left - v);
      }
    };
    if (t == 0)
      total = k == 0 ? 1 : 0;
    else
      rec(0, static_cast<Int>(k));
    out.push_back(total);
  }
  return out;
}

/// P^n: ((n+1)d)! / (d!)^(n+1) in degree (n+1)d.
inline Rational projective_period(Int n, Int k) {
  if (k % (n + 1)) return 0;
  return multinomial_equal(n + 1, k / (n + 1));
}

/// (P^1)^3: sum over a + b + c = d of (2d)! / (a! b! c!)^2 in degree 2d.
inline Rational cube_of_lines_period(Int k) {
  if (k % 2) return 0;
  Int d = k / 2;
  Rational s = 0;
  for (Int a = 0; a <= d; ++a)
    for (Int b = 0; a + b <= d; ++b) {
      Int c = d - a - b;
      BigInt den = fact(a) * fact(b) * fact(c);
      s += Rational(fact(k), den * den);
    }
  return s;
}

/// Blow-up of P^3 at a point, with the relation basis worked out by hand:
/// rays e1, e2, e3, -(1,1,1), (1,1,1); a class p*l + q*f pairs to (p, p, p, p + q, q)
/// with degree 4p + 2q. `power` weights each class by s^(E . beta) = s^q.
inline std::vector<Rational> blowup_point_p3_series(Int k) {
  std::vector<Rational> by_q(k / 2 + 1, 0);
  for (Int p = 0; 4 * p <= k; ++p) {
    if ((k - 4 * p) % 2) continue;
    Int q = (k - 4 * p) / 2;
    BigInt den = fact(p) * fact(p) * fact(p) * fact(p + q) * fact(q);
    by_q[q] += Rational(fact(k), den);
  }
  return by_q;
}

}  // namespace oracle
