#pragma once

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toriclg/lattice.hpp"

namespace toriclg {

/// 1/n(a_1, ..., a_k). `weights` are reduced into [0, n); `original` keeps the
/// residues as written so charts can be printed in the source's own form.
class CyclicQuotient {
 public:
  CyclicQuotient() = default;
  CyclicQuotient(Int n, std::vector<Int> weights) : n_(n), original_(std::move(weights)) {
    if (n_ < 1) fail(ErrorKind::InvalidParameters, "quotient order must be positive");
    if (original_.empty()) fail(ErrorKind::InvalidParameters, "quotient with no coordinates");
    for (Int a : original_) weights_.push_back(mod(a, n_));
  }

  Int order() const { return n_; }
  std::size_t size() const { return weights_.size(); }
  const std::vector<Int>& weights() const { return weights_; }
  const std::vector<Int>& original() const { return original_; }

  std::vector<Int> sorted_weights() const {
    auto w = weights_;
    std::sort(w.begin(), w.end());
    return w;
  }

  /// Actual order of the generator (n divided by the common content).
  Int generator_order() const {
    Int g = n_;
    for (Int a : weights_) g = gcd(g, a);
    return n_ / g;
  }

  bool operator==(const CyclicQuotient& o) const { return n_ == o.n_ && weights_ == o.weights_; }

  std::string str() const { return render(weights_); }
  std::string original_str() const { return render(original_); }

 private:
  std::string render(const std::vector<Int>& w) const {
    std::string s = "1/" + std::to_string(n_) + "(";
    for (std::size_t i = 0; i < w.size(); ++i) s += (i ? "," : "") + std::to_string(w[i]);
    return s + ")";
  }

  Int n_ = 1;
  std::vector<Int> weights_;
  std::vector<Int> original_;
};

/// Parses "1/n(a1,...,ak)"; negative residues are allowed and reduced mod n.
inline CyclicQuotient parse_quotient(std::string_view text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  auto bad = [&]() -> CyclicQuotient { fail(ErrorKind::ParseError, "not a quotient type: '" + std::string(text) + "'"); };
  if (s.rfind("1/", 0) != 0) return bad();
  auto open = s.find('(');
  if (open == std::string::npos || s.back() != ')') return bad();
  auto int_of = [&](const std::string& t) -> Int {
    if (t.empty()) bad();
    std::size_t pos = 0;
    Int v = 0;
    try {
      v = std::stoll(t, &pos);
    } catch (...) {
      bad();
    }
    if (pos != t.size()) bad();
    return v;
  };
  Int n = int_of(s.substr(2, open - 2));
  std::vector<Int> w;
  std::string body = s.substr(open + 1, s.size() - open - 2);
  std::size_t start = 0;
  while (start <= body.size()) {
    auto comma = body.find(',', start);
    if (comma == std::string::npos) comma = body.size();
    w.push_back(int_of(body.substr(start, comma - start)));
    start = comma + 1;
  }
  if (n < 1) fail(ErrorKind::ParseError, "quotient order must be positive in '" + std::string(text) + "'");
  return CyclicQuotient(n, w);
}

/// N / (sublattice) as a product of cyclic factors acting on the chart coordinates.
struct QuotientDecomposition {
  std::size_t num_coords = 0;
  std::vector<CyclicQuotient> factors;

  Int total_order() const {
    Int t = 1;
    for (const auto& f : factors) t = checked_mul(t, f.order());
    return t;
  }
  bool is_trivial() const { return factors.empty(); }

  std::string str() const {
    if (factors.empty()) return "smooth";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) s += (i ? " x " : "") + factors[i].str();
    return s;
  }
};

inline QuotientDecomposition as_decomposition(const CyclicQuotient& q) {
  QuotientDecomposition d{q.size(), {}};
  if (q.order() > 1) d.factors.push_back(q);
  return d;
}

/// Toric dictionary: for a simplicial full-dimensional cone with generators
/// v_1..v_k (in the order stored), an element sum lambda_i v_i of N acts on the
/// i-th chart coordinate with weight lambda_i. With L G R = D (G has the v_i
/// as columns), factor j has weights R[:, j] mod d_j.
inline QuotientDecomposition quotient_from_cone(const Cone& c) {
  if (!c.is_simplicial() || !c.is_full_dimensional())
    fail(ErrorKind::NotSimplicial, "quotient needs a simplicial full-dimensional cone: " + c.str());
  const std::size_t k = c.dim();
  std::vector<std::vector<Int>> cols;
  for (const auto& g : c.generators()) cols.push_back(g.coords());
  auto snf = smith_decomposition(IntMatrix::from_columns(cols));
  QuotientDecomposition out{k, {}};
  for (std::size_t j = 0; j < snf.diag.size(); ++j) {
    Int d = snf.diag[j];
    if (d <= 1) continue;
    out.factors.emplace_back(d, snf.right.column(j));
  }
  return out;
}

namespace detail {

/// Every element of the group as a numerator vector over the common order.
inline std::set<std::vector<Int>> group_elements(const QuotientDecomposition& d, Int& denom) {
  denom = 1;
  for (const auto& f : d.factors) denom = lcm(denom, f.order());
  std::set<std::vector<Int>> elems{std::vector<Int>(d.num_coords, 0)};
  for (const auto& f : d.factors) {
    if (f.size() != d.num_coords) fail(ErrorKind::DimMismatch, "factor " + f.str() + " has the wrong length");
    std::vector<Int> step(d.num_coords);
    for (std::size_t i = 0; i < d.num_coords; ++i) step[i] = checked_mul(f.weights()[i], denom / f.order());
    std::set<std::vector<Int>> next;
    for (const auto& e : elems) {
      auto cur = e;
      for (Int c = 0; c < f.order(); ++c) {
        next.insert(cur);
        for (std::size_t i = 0; i < d.num_coords; ++i) cur[i] = mod(cur[i] + step[i], denom);
      }
    }
    elems = std::move(next);
  }
  return elems;
}

}  // namespace detail

/// Normalized element sets: two presentations describe the same action iff equal.
inline std::set<std::vector<Rational>> group_element_set(const QuotientDecomposition& d) {
  Int denom = 1;
  auto elems = detail::group_elements(d, denom);
  std::set<std::vector<Rational>> out;
  for (const auto& e : elems) {
    std::vector<Rational> r;
    for (Int v : e) r.emplace_back(v, denom);
    out.insert(std::move(r));
  }
  return out;
}

inline bool same_group(const QuotientDecomposition& a, const QuotientDecomposition& b) {
  if (a.num_coords != b.num_coords) return false;
  Int da = 1, db = 1;
  auto ea = detail::group_elements(a, da), eb = detail::group_elements(b, db);
  if (ea.size() != eb.size()) return false;
  // numerators over the common denominator
  const Int l = lcm(da, db);
  for (const auto& e : eb) {
    std::vector<Int> v(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) v[i] = e[i] * (l / db);
    std::vector<Int> u(v.size());
    bool ok = true;
    for (std::size_t i = 0; i < v.size() && ok; ++i) {
      ok = v[i] % (l / da) == 0;
      if (ok) u[i] = v[i] / (l / da);
    }
    if (!ok || !ea.count(u)) return false;
  }
  return true;
}

/// If the group is cyclic, a single generator rewritten so that it is as close as
/// possible to `preferred` (exactly equal when `preferred` generates the group).
inline std::optional<CyclicQuotient> cyclic_presentation(const QuotientDecomposition& d,
                                                         const std::optional<CyclicQuotient>& preferred = std::nullopt) {
  if (d.factors.empty()) return CyclicQuotient(1, std::vector<Int>(d.num_coords, 0));
  if (preferred && same_group(d, as_decomposition(*preferred))) return preferred;
  Int denom = 1;
  auto elems = detail::group_elements(d, denom);
  const Int total = static_cast<Int>(elems.size());
  for (const auto& e : elems) {
    Int g = denom;
    for (Int v : e) g = gcd(g, v);
    Int ord = denom / g;
    if (ord != total) continue;
    std::vector<Int> w;
    for (Int v : e) w.push_back(v / g);
    return CyclicQuotient(ord, w);
  }
  return std::nullopt;
}

struct SingularityClass {
  bool is_smooth = true;
  bool is_terminal = true;
  bool is_canonical = true;
  bool is_gorenstein = true;
  std::optional<Rational> min_age;
  std::size_t group_order = 1;

  std::string str() const {
    if (is_smooth) return "smooth";
    std::string s = is_terminal ? "terminal" : (is_canonical ? "canonical" : "non-canonical");
    s += is_gorenstein ? ", Gorenstein" : ", non-Gorenstein";
    s += ", min age " + to_string(*min_age);
    return s;
  }
};

/// Age criterion over the full product group. Every e(g, zeta) for a primitive
/// root is the plain age of some power of g, so the minimum over all nontrivial
/// elements covers every choice of root.
inline SingularityClass classify(const QuotientDecomposition& d) {
  SingularityClass out;
  Int denom = 1;
  auto elems = detail::group_elements(d, denom);
  out.group_order = elems.size();
  if (elems.size() == 1) return out;
  out.is_smooth = false;
  const std::size_t k = d.num_coords;
  for (const auto& e : elems) {
    std::size_t zeros = static_cast<std::size_t>(std::count(e.begin(), e.end(), 0));
    if (zeros == k) continue;
    if (zeros + 1 >= k) {
      std::string s;
      for (Int v : e) s += (s.empty() ? "" : ",") + to_string(Rational(v, denom));
      fail(ErrorKind::NonSmallGroup, "element (" + s + ") of " + d.str() + " is a quasi-reflection");
    }
    Int sum = 0;
    for (Int v : e) sum = checked_add(sum, v);
    Rational a(sum, denom);
    if (!out.min_age || a < *out.min_age) out.min_age = a;
    if (sum % denom != 0) out.is_gorenstein = false;
  }
  out.is_terminal = *out.min_age > 1;
  out.is_canonical = *out.min_age >= 1;
  return out;
}

inline SingularityClass classify(const CyclicQuotient& q) { return classify(as_decomposition(q)); }

/// e(g^j, zeta^u): sum of frac(u j a_i / n).
inline Rational age(const CyclicQuotient& q, Int j, Int u) {
  const Int n = q.order();
  if (mod(j, n) == 0) fail(ErrorKind::IdentityElement, "element j = " + std::to_string(j) + " is trivial in Z/" + std::to_string(n));
  const Int order = n / gcd(n, mod(j, n));
  if (gcd(mod(u, order), order) != 1)
    fail(ErrorKind::InvalidParameters, "u = " + std::to_string(u) + " is not coprime to the element order " + std::to_string(order));
  Rational s = 0;
  for (Int a : q.weights()) s += Rational(mod(checked_mul(checked_mul(mod(u, n), mod(j, n)), a), n), n);
  return s;
}

/// Source point of a Kawamata blow-up: 1/n(s, n - s, 1).
inline CyclicQuotient kawamata_type(Int n, Int s) {
  if (n < 2 || s <= 0 || s >= n || gcd(s, n) != 1)
    fail(ErrorKind::InvalidParameters, "need 0 < s < n with gcd(s, n) = 1, got n = " + std::to_string(n) + ", s = " + std::to_string(s));
  return CyclicQuotient(n, {s, n - s, 1});
}

/// Hypersurface terminal types, carried as metadata only.
enum class HypersurfaceType { cA_m, cAx_4, cAx_2, cD_3_1, cD_3_2, cD_3_3, cD_2_1, cD_2_2, cE_2 };

inline std::string_view to_string(HypersurfaceType t) {
  switch (t) {
    case HypersurfaceType::cA_m: return "cA/m";
    case HypersurfaceType::cAx_4: return "cAx/4";
    case HypersurfaceType::cAx_2: return "cAx/2";
    case HypersurfaceType::cD_3_1: return "cD/3-1";
    case HypersurfaceType::cD_3_2: return "cD/3-2";
    case HypersurfaceType::cD_3_3: return "cD/3-3";
    case HypersurfaceType::cD_2_1: return "cD/2-1";
    case HypersurfaceType::cD_2_2: return "cD/2-2";
    case HypersurfaceType::cE_2: return "cE/2";
  }
  return "?";
}

inline std::optional<HypersurfaceType> parse_hypersurface_type(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(HypersurfaceType::cE_2); ++i) {
    auto t = static_cast<HypersurfaceType>(i);
    if (to_string(t) == s) return t;
  }
  return std::nullopt;
}

}  // namespace toriclg
