#pragma once

#include <optional>
#include <string>
#include <vector>

#include "toriclg/laurent.hpp"

namespace toriclg {

/// Integer kernel of the ray matrix: each column b is a relation sum_i b_i rho_i = 0,
/// so b_i is the pairing D_i . beta. The basis comes from the Smith form and is saturated.
inline std::vector<std::vector<Int>> relation_lattice(const std::vector<LatticeVector>& rays) {
  if (rays.empty()) fail(ErrorKind::DegenerateInput, "no rays");
  const std::size_t d = rays.front().dim();
  if (linear_rank(rays) != d) fail(ErrorKind::DegenerateInput, "rays do not span the lattice");
  std::vector<std::vector<Int>> cols;
  for (const auto& r : rays) cols.push_back(r.coords());
  return integer_kernel(IntMatrix::from_columns(cols));
}

/// Ray data of a toric variety, optionally with a nef partition cutting out a complete intersection.
struct ToricCIData {
  std::vector<LatticeVector> rays;
  std::vector<std::vector<std::size_t>> nef_partition;
  /// Coefficients of a divisor sum_i c_i D_i; its pairing with beta is sum_i c_i (D_i . beta).
  std::optional<std::vector<Int>> divisor_of_interest;

  ToricCIData() = default;
  ToricCIData(std::vector<LatticeVector> r, std::vector<std::vector<std::size_t>> partition = {},
              std::optional<std::vector<Int>> divisor = std::nullopt)
      : rays(std::move(r)), nef_partition(std::move(partition)), divisor_of_interest(std::move(divisor)) {
    validate();
    relations_ = relation_lattice(rays);
  }

  std::size_t num_rays() const { return rays.size(); }
  std::size_t rank() const { return relations_.size(); }
  /// Relation basis, one vector of length num_rays() per generator.
  const std::vector<std::vector<Int>>& relations() const { return relations_; }

  /// D_i . beta for beta = sum_k n_k (basis vector k).
  std::vector<Int> pairings(const std::vector<Int>& n) const {
    std::vector<Int> p(num_rays(), 0);
    for (std::size_t k = 0; k < relations_.size(); ++k)
      for (std::size_t i = 0; i < p.size(); ++i) p[i] = checked_add(p[i], checked_mul(n[k], relations_[k][i]));
    return p;
  }

  std::vector<Int> partition_pairings(const std::vector<Int>& p) const {
    std::vector<Int> out;
    for (const auto& part : nef_partition) {
      Int s = 0;
      for (auto i : part) s = checked_add(s, p[i]);
      out.push_back(s);
    }
    return out;
  }

  /// -K . beta for the complete intersection: sum of D_i . beta minus sum of L_j . beta.
  Int degree(const std::vector<Int>& p) const {
    Int d = 0;
    for (Int v : p) d = checked_add(d, v);
    for (Int l : partition_pairings(p)) d = checked_sub(d, l);
    return d;
  }

  /// Linear form on pairings whose value is the degree.
  std::vector<Int> degree_form() const {
    std::vector<Int> f(num_rays(), 1);
    for (const auto& part : nef_partition)
      for (auto i : part) f[i] -= 1;
    return f;
  }

 private:
  void validate() const {
    if (rays.empty()) fail(ErrorKind::DegenerateInput, "no rays");
    std::vector<bool> used(rays.size(), false);
    for (const auto& part : nef_partition)
      for (auto i : part) {
        if (i >= rays.size()) fail(ErrorKind::InvalidParameters, "nef partition refers to ray " + std::to_string(i));
        if (used[i]) fail(ErrorKind::InvalidParameters, "nef partition subsets are not disjoint");
        used[i] = true;
      }
    if (divisor_of_interest && divisor_of_interest->size() != rays.size())
      fail(ErrorKind::DimMismatch, "divisor of interest needs one coefficient per ray");
  }

  std::vector<std::vector<Int>> relations_;
};

/// The divisor D_i as a coefficient vector.
inline std::vector<Int> ray_divisor(std::size_t num_rays, std::size_t i) {
  std::vector<Int> e(num_rays, 0);
  e.at(i) = 1;
  return e;
}

inline Int pair(const std::vector<Int>& divisor, const std::vector<Int>& pairings) {
  Int s = 0;
  for (std::size_t i = 0; i < divisor.size(); ++i) s = checked_add(s, checked_mul(divisor[i], pairings[i]));
  return s;
}

struct CurveClass {
  std::vector<Int> beta;      // coordinates in the relation basis
  std::vector<Int> pairings;  // D_i . beta
  Int degree = 0;
};

/// Extra linear conditions on classes: each divisor must pair to zero.
struct ClassRestriction {
  std::vector<std::vector<Int>> vanishing;
};

namespace detail {

inline lp::Problem slice_problem(const ToricCIData& data, const ClassRestriction& restrict) {
  const std::size_t r = data.rank(), m = data.num_rays();
  lp::Problem p(r);
  auto pairing_row = [&](const std::vector<Int>& divisor) {
    std::vector<Rational> row(r, 0);
    for (std::size_t k = 0; k < r; ++k)
      for (std::size_t i = 0; i < m; ++i) row[k] += Rational(divisor[i]) * data.relations()[k][i];
    return row;
  };
  for (std::size_t i = 0; i < m; ++i) p.add_ge(pairing_row(ray_divisor(m, i)), 0);
  for (const auto& part : data.nef_partition) {
    std::vector<Int> l(m, 0);
    for (auto i : part) l[i] = 1;
    p.add_ge(pairing_row(l), 0);
  }
  for (const auto& v : restrict.vanishing) {
    if (v.size() != m) fail(ErrorKind::DimMismatch, "restriction divisor needs one coefficient per ray");
    p.add_eq(pairing_row(v), 0);
  }
  return p;
}

inline std::vector<Rational> degree_row(const ToricCIData& data) {
  auto f = data.degree_form();
  std::vector<Rational> row(data.rank(), 0);
  for (std::size_t k = 0; k < data.rank(); ++k)
    for (std::size_t i = 0; i < data.num_rays(); ++i) row[k] += Rational(f[i]) * data.relations()[k][i];
  return row;
}

}  // namespace detail

/// A nonzero class with all pairings >= 0 and degree 0, if one exists (the slices are then unbounded).
inline std::optional<std::vector<Int>> recession_witness(const ToricCIData& data, const ClassRestriction& restrict = {}) {
  if (data.rank() == 0) return std::nullopt;
  auto p = detail::slice_problem(data, restrict);
  p.add_eq(detail::degree_row(data), 0);
  // total pairing sum is positive on every nonzero class of the cone, since the relation map is injective
  std::vector<Rational> total(data.rank(), 0);
  for (std::size_t k = 0; k < data.rank(); ++k)
    for (Int v : data.relations()[k]) total[k] += v;
  p.add_le(total, 1);
  p.objective = total;
  auto res = lp::maximize(p);
  if (res.status != lp::Status::Optimal || res.value <= 0) return std::nullopt;
  return primitive_direction(res.x).coords();
}

/// All classes of degree d with every D_i . beta >= 0 and L_j . beta >= 0.
inline std::vector<CurveClass> enumerate_classes(const ToricCIData& data, Int d, const ClassRestriction& restrict = {}) {
  if (d < 0) fail(ErrorKind::InvalidParameters, "negative degree");
  if (auto w = recession_witness(data, restrict)) {
    std::string s;
    for (Int v : *w) s += (s.empty() ? "" : ",") + std::to_string(v);
    fail(ErrorKind::UnboundedSlice, "degree-0 class (" + s + ") with nonnegative pairings: the slice is unbounded");
  }
  const std::size_t r = data.rank();
  std::vector<CurveClass> out;
  if (r == 0) {
    if (d == 0) out.push_back({{}, std::vector<Int>(data.num_rays(), 0), 0});
    return out;
  }
  auto base = detail::slice_problem(data, restrict);
  base.add_eq(detail::degree_row(data), d);
  if (!lp::feasible(base)) return out;
  std::vector<Int> lo(r), hi(r);
  for (std::size_t k = 0; k < r; ++k) {
    auto p = base;
    p.objective.assign(r, 0);
    p.objective[k] = 1;
    auto up = lp::maximize(p);
    p.objective[k] = -1;
    auto down = lp::maximize(p);
    if (up.status != lp::Status::Optimal || down.status != lp::Status::Optimal)
      fail(ErrorKind::UnboundedSlice, "degree slice is unbounded");
    hi[k] = floor_rational(up.value);
    lo[k] = ceil_rational(-down.value);
    if (lo[k] > hi[k]) return out;  // no integer point in the box
  }
  std::vector<Int> n = lo;
  for (;;) {
    auto p = data.pairings(n);
    bool ok = std::all_of(p.begin(), p.end(), [](Int v) { return v >= 0; }) && data.degree(p) == d;
    if (ok)
      for (Int l : data.partition_pairings(p)) ok = ok && l >= 0;
    if (ok)
      for (const auto& v : restrict.vanishing) ok = ok && pair(v, p) == 0;
    if (ok) out.push_back({n, p, d});
    std::size_t k = 0;
    while (k < r && n[k] == hi[k]) n[k] = lo[k], ++k;
    if (k == r) break;
    ++n[k];
  }
  return out;
}

/// d! prod_j (L_j . beta)! / prod_i (D_i . beta)!
inline Rational givental_term(const ToricCIData& data, const CurveClass& c) {
  BigInt num = factorial(static_cast<std::size_t>(c.degree));
  for (Int l : data.partition_pairings(c.pairings)) num *= factorial(static_cast<std::size_t>(l));
  BigInt den = 1;
  for (Int v : c.pairings) den *= factorial(static_cast<std::size_t>(v));
  return Rational(num, den);
}

/// Degree-d coefficient of the regularized quantum period from the Givental constant term.
inline Rational regularized_coefficient(const ToricCIData& data, Int d, const ClassRestriction& restrict = {}) {
  if (d == 0) return 1;
  Rational s = 0;
  for (const auto& c : enumerate_classes(data, d, restrict)) s += givental_term(data, c);
  return s;
}

/// sum_beta s^(E . beta) d! prod (L_j . beta)! / prod (D_i . beta)!, a polynomial in one parameter "s".
/// E is a divisor given by coefficients on the D_i.
inline ParamPoly restricted_coefficient(const ToricCIData& data, const std::vector<Int>& divisor, Int d) {
  if (divisor.size() != data.num_rays()) fail(ErrorKind::DimMismatch, "divisor needs one coefficient per ray");
  ParamPoly out(1);
  if (d == 0) return ParamPoly::constant(1, 1);
  for (const auto& c : enumerate_classes(data, d)) {
    Int e = pair(divisor, c.pairings);
    if (e < 0) {
      std::string s;
      for (Int v : c.beta) s += (s.empty() ? "" : ",") + std::to_string(v);
      fail(ErrorKind::NegativePairing, "E . beta = " + std::to_string(e) + " < 0 for beta = (" + s + ")");
    }
    out.add_term({e}, givental_term(data, c));
  }
  return out;
}

inline ParamPoly restricted_coefficient(const ToricCIData& data, Int d) {
  if (!data.divisor_of_interest) fail(ErrorKind::IncompleteSpec, "no divisor of interest given");
  return restricted_coefficient(data, *data.divisor_of_interest, d);
}

}  // namespace toriclg
