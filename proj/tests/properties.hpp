#pragma once

// Randomized and exhaustive property checks, shared by the unit suite and the
// acceptance binary. Each returns an empty string on success, else a witness.

#include <algorithm>
#include <random>
#include <string>

#include "toriclg/verify.hpp"

namespace props {

using namespace toriclg;

/// Product of random elementary row operations and sign flips.
inline IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::vector<Int>> m(n, std::vector<Int>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  std::uniform_int_distribution<std::size_t> pick(0, n - 1);
  std::uniform_int_distribution<Int> coef(-2, 2);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = pick(rng), j = pick(rng);
    if (i == j) {
      for (auto& v : m[i]) v = -v;
      continue;
    }
    Int c = coef(rng);
    for (std::size_t k = 0; k < n; ++k) m[i][k] += c * m[j][k];
  }
  return IntMatrix::from_rows(m);
}

inline LaurentPoly random_laurent(std::size_t dim, std::mt19937_64& rng, bool with_param) {
  std::uniform_int_distribution<Int> e(-1, 1), c(1, 3);
  std::vector<std::string> params;
  if (with_param) params.push_back("a");
  LaurentPoly f(dim, params);
  // a simplex through the origin's interior keeps the series nontrivial
  for (std::size_t i = 0; i < dim; ++i) {
    Exponent x(dim, 0);
    x[i] = 1;
    f.add_term(x, ParamPoly::constant(params.size(), 1));
  }
  f.add_term(Exponent(dim, -1), ParamPoly::constant(params.size(), 1));
  for (int t = 0; t < 2; ++t) {
    Exponent x(dim);
    for (auto& v : x) v = e(rng);
    ParamPoly coeff = ParamPoly::constant(params.size(), c(rng));
    if (with_param && t == 0) coeff = coeff * ParamPoly::variable(1, 0);
    f.add_term(x, coeff);
  }
  return f;
}

/// Periods are invariant under x -> x^M for M in GL(n, Z).
inline std::string gl_invariance(int matrices, std::size_t N, std::uint64_t seed = 7) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < matrices; ++i) {
    std::size_t dim = 2 + static_cast<std::size_t>(i % 3);  // 2, 3, 4
    auto f = random_laurent(dim, rng, false);
    auto m = random_unimodular(dim, rng);
    auto g = unimodular_substitution(f, m);
    if (!(period_coefficients(f, N) == period_coefficients(g, N))) return "matrix #" + std::to_string(i) + " on " + f.str();
  }
  return {};
}

/// age(g^j) + age(g^(n-j)) = k when every weight is coprime to n.
inline std::string age_pairing(Int max_n, std::size_t samples, std::uint64_t seed = 11) {
  std::mt19937_64 rng(seed);
  for (Int n = 2; n <= max_n; ++n) {
    std::vector<Int> units;
    for (Int a = 1; a < n; ++a)
      if (std::gcd(a, n) == 1) units.push_back(a);
    std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
    for (std::size_t k = 1; k <= 6; ++k)
      for (std::size_t s = 0; s < samples; ++s) {
        std::vector<Int> w(k);
        for (auto& v : w) v = units[pick(rng)];
        CyclicQuotient q(n, w);
        for (Int j = 1; j < n; ++j)
          if (age(q, j, 1) + age(q, n - j, 1) != Rational(static_cast<Int>(k))) return q.str() + " at j = " + std::to_string(j);
      }
  }
  return {};
}

/// Inserting the collinear rays (0, r, r, 1), r = 1..R, into the orthant of Z^4 in any order gives one fan.
inline std::string collinear_order_independence(Int R) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < 4; ++i) {
    std::vector<Int> e(4, 0);
    e[i] = 1;
    rays.emplace_back(e);
  }
  Fan orthant(4, rays, {{0, 1, 2, 3}});
  std::vector<Int> order;
  for (Int r = 1; r <= R; ++r) order.push_back(r);
  std::optional<Fan> first;
  do {
    Fan f = orthant;
    for (Int r : order) {
      LatticeVector w({0, r, r, 1});
      f = star_subdivide(f, *minimal_face_containing(f, w), w);
    }
    if (!validate_fan(f).valid()) return "not a fan after order starting with r = " + std::to_string(order[0]);
    if (!first)
      first = f;
    else if (!first->equivalent(f)) {
      std::string s;
      for (Int r : order) s += std::to_string(r) + " ";
      return "order " + s + "differs";
    }
  } while (std::next_permutation(order.begin(), order.end()));
  return {};
}

/// period_coefficients then a -> 0 equals a -> 0 then period_coefficients.
inline std::string limit_commutes(int polys, std::size_t N, std::uint64_t seed = 13) {
  std::mt19937_64 rng(seed);
  for (int i = 0; i < polys; ++i) {
    auto f = random_laurent(2 + static_cast<std::size_t>(i % 2), rng, true);
    auto lhs = substitute_params(period_coefficients(f, N), {{"a", Rational(0)}});
    auto rhs = period_coefficients(limit_drop(f, "a"), N);
    if (!(lhs == rhs)) return f.str();
  }
  for (const auto& fx : standard_fixtures()) {
    auto f = fan_polynomial(fx.fan_y, fx.exceptional, "a");
    if (!(substitute_params(period_coefficients(f, N), {{"a", Rational(0)}}) == period_coefficients(limit_drop(f, "a"), N)))
      return fx.name;
  }
  return {};
}

/// The quotient group of a simplicial cone does not change under GL(n, Z).
inline std::string classify_conjugation_invariance(int trials, std::uint64_t seed = 17) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Int> c(-3, 3);
  for (int i = 0; i < trials; ++i) {
    std::vector<LatticeVector> g;
    while (true) {
      g.clear();
      for (int r = 0; r < 3; ++r) g.push_back(LatticeVector({c(rng), c(rng), c(rng)}));
      bool ok = std::none_of(g.begin(), g.end(), [](const LatticeVector& v) { return v.is_zero() || !v.is_primitive(); });
      if (ok && linear_rank(g) == 3) break;
    }
    auto m = random_unimodular(3, rng);
    std::vector<LatticeVector> h;
    for (const auto& v : g) {
      std::vector<Int> w(3, 0);
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t s = 0; s < 3; ++s) w[r] += m(r, s) * v[s];
      h.emplace_back(w);
    }
    // generators are primitive and distinct, so Cone keeps them in this order
    auto a = quotient_from_cone(Cone(g)), b = quotient_from_cone(Cone(h));
    if (!same_group(a, b)) return Cone(g).str();
  }
  return {};
}

}  // namespace props
