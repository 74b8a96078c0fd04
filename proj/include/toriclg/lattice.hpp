#pragma once

#include <algorithm>
#include <compare>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <sstream>
#include <string>
#include <vector>

#include "toriclg/lp.hpp"
#include "toriclg/matrix.hpp"
#include "toriclg/report.hpp"

namespace toriclg {

// ---------------------------------------------------------------------------
// LatticeVector

class LatticeVector {
 public:
  LatticeVector() = default;
  explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
    if (coords_.empty()) fail(ErrorKind::DegenerateInput, "lattice vector of dimension 0");
  }
  LatticeVector(std::initializer_list<Int> coords) : LatticeVector(std::vector<Int>(coords)) {}

  std::size_t dim() const { return coords_.size(); }
  const std::vector<Int>& coords() const { return coords_; }
  Int operator[](std::size_t i) const { return coords_[i]; }
  auto begin() const { return coords_.begin(); }
  auto end() const { return coords_.end(); }

  bool is_zero() const {
    return std::all_of(coords_.begin(), coords_.end(), [](Int c) { return c == 0; });
  }

  Int content() const {
    Int g = 0;
    for (Int c : coords_) g = gcd(g, c);
    return g;
  }

  bool is_primitive() const { return content() == 1; }

  friend LatticeVector operator+(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_add(a[i], b[i]);
    return LatticeVector(std::move(r));
  }
  friend LatticeVector operator-(const LatticeVector& a, const LatticeVector& b) {
    check_same_dim(a, b);
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_sub(a[i], b[i]);
    return LatticeVector(std::move(r));
  }
  friend LatticeVector operator*(Int k, const LatticeVector& a) {
    std::vector<Int> r(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) r[i] = checked_mul(k, a[i]);
    return LatticeVector(std::move(r));
  }
  LatticeVector operator-() const { return (-1) * (*this); }

  friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;
  friend bool operator==(const LatticeVector&, const LatticeVector&) = default;

  std::string str() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < coords_.size(); ++i) os << (i ? "," : "") << coords_[i];
    os << ')';
    return os.str();
  }

  std::vector<long long> witness() const { return {coords_.begin(), coords_.end()}; }

  static void check_same_dim(const LatticeVector& a, const LatticeVector& b) {
    if (a.dim() != b.dim()) fail(ErrorKind::DimMismatch, a.str() + " vs " + b.str());
  }

 private:
  std::vector<Int> coords_;
};

inline Int dot(const LatticeVector& a, const LatticeVector& b) {
  LatticeVector::check_same_dim(a, b);
  Int s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s = checked_add(s, checked_mul(a[i], b[i]));
  return s;
}

inline Rational dot(const LatticeVector& a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += Rational(a[i]) * b[i];
  return s;
}

struct Primitivized {
  LatticeVector vector;
  Int multiplier = 1;
};

inline Primitivized primitivize(const LatticeVector& v) {
  if (v.is_zero()) fail(ErrorKind::DegenerateInput, "cannot primitivize the zero vector");
  Int g = v.content();
  std::vector<Int> r(v.dim());
  for (std::size_t i = 0; i < v.dim(); ++i) r[i] = v[i] / g;
  return {LatticeVector(std::move(r)), g};
}

/// Smallest integer multiple of a rational vector, made primitive.
inline LatticeVector primitive_direction(std::span<const Rational> v) {
  BigInt l = 1;
  for (const auto& q : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(q));
  std::vector<Int> c;
  for (const auto& q : v) c.push_back(to_int(boost::multiprecision::numerator(q) * (l / boost::multiprecision::denominator(q))));
  return primitivize(LatticeVector(std::move(c))).vector;
}

inline IntMatrix rows_of(std::span<const LatticeVector> vs) {
  std::vector<std::vector<Int>> rows;
  for (const auto& v : vs) rows.push_back(v.coords());
  return IntMatrix::from_rows(rows);
}

inline std::size_t linear_rank(std::span<const LatticeVector> vs) {
  if (vs.empty()) return 0;
  return rank(rows_of(vs));
}

// ---------------------------------------------------------------------------
// Cone

/// A facet: an inward primitive normal (>= 0 on the cone) and the generators on it.
struct Facet {
  LatticeVector normal;
  std::vector<std::size_t> generators;
};

/// Strongly convex rational polyhedral cone given by generators.
/// Generators are stored primitive, in the order supplied (duplicates dropped).
class Cone {
 public:
  Cone() = default;

  explicit Cone(const std::vector<LatticeVector>& generators) {
    if (generators.empty()) fail(ErrorKind::DegenerateInput, "cone with no generators");
    dim_ = generators.front().dim();
    for (const auto& g : generators) {
      if (g.dim() != dim_) fail(ErrorKind::DimMismatch, "cone generators of different dimensions");
      if (g.is_zero()) fail(ErrorKind::DegenerateInput, "zero cone generator");
      auto p = primitivize(g).vector;
      if (std::find(gens_.begin(), gens_.end(), p) == gens_.end()) gens_.push_back(std::move(p));
    }
    // independent generators always span a pointed cone; skip the LP then
    if (toriclg::rank(rows_of(gens_)) < gens_.size() && !pointed(gens_))
      fail(ErrorKind::DegenerateInput, "cone is not strongly convex: " + str());
    compute_faces();
  }

  Cone(std::initializer_list<LatticeVector> generators) : Cone(std::vector<LatticeVector>(generators)) {}

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return rank_; }
  std::size_t size() const { return gens_.size(); }
  const std::vector<LatticeVector>& generators() const { return gens_; }
  const LatticeVector& generator(std::size_t i) const { return gens_[i]; }

  bool is_simplicial() const { return rank_ == gens_.size(); }
  bool is_full_dimensional() const { return rank_ == dim_; }

  /// Functionals vanishing on the linear span.
  const std::vector<LatticeVector>& equations() const { return equations_; }
  const std::vector<Facet>& facets() const { return facets_; }

  bool in_span(const LatticeVector& v) const {
    return std::all_of(equations_.begin(), equations_.end(), [&](const auto& e) { return dot(e, v) == 0; });
  }

  bool contains(const LatticeVector& v) const {
    LatticeVector::check_same_dim(v, gens_.front());
    return in_span(v) &&
           std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, v) >= 0; });
  }

  bool contains_in_relative_interior(const LatticeVector& v) const {
    LatticeVector::check_same_dim(v, gens_.front());
    return in_span(v) && !v.is_zero() &&
           std::all_of(facets_.begin(), facets_.end(), [&](const Facet& f) { return dot(f.normal, v) > 0; });
  }

  bool contains_cone(const Cone& other) const {
    return std::all_of(other.gens_.begin(), other.gens_.end(), [&](const auto& g) { return contains(g); });
  }

  /// Same cone as a set (generator lists may differ in order).
  bool same_set(const Cone& other) const { return contains_cone(other) && other.contains_cone(*this); }

  /// Generators in lexicographic order.
  std::vector<LatticeVector> sorted_generators() const {
    auto g = gens_;
    std::sort(g.begin(), g.end());
    return g;
  }

  std::string str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < gens_.size(); ++i) s += (i ? "," : "") + gens_[i].str();
    return s + ">";
  }

  /// No nonnegative nontrivial combination of generators vanishes.
  static bool pointed(const std::vector<LatticeVector>& gens) {
    const std::size_t k = gens.size(), d = gens.front().dim();
    lp::Problem p(k);
    std::vector<Rational> ones(k, 1);
    p.add_eq(ones, 1);
    for (std::size_t i = 0; i < d; ++i) {
      std::vector<Rational> row(k);
      for (std::size_t j = 0; j < k; ++j) row[j] = gens[j][i];
      p.add_eq(row, 0);
    }
    for (std::size_t j = 0; j < k; ++j) {
      std::vector<Rational> row(k, 0);
      row[j] = 1;
      p.add_ge(row, 0);
    }
    return !lp::feasible(p);
  }

 private:
  void compute_faces() {
    auto g = rows_of(gens_);
    rank_ = toriclg::rank(g);
    for (auto& e : integer_kernel(g)) equations_.emplace_back(std::move(e));

    // a coordinate projection that is injective on the span
    std::vector<std::size_t> coords;
    for (std::size_t c = 0; c < dim_ && coords.size() < rank_; ++c) {
      auto trial = coords;
      trial.push_back(c);
      if (toriclg::rank(project(trial)) == trial.size()) coords = std::move(trial);
    }
    const IntMatrix proj = project(coords);
    const std::size_t r = rank_, k = gens_.size();

    auto lift = [&](const std::vector<Int>& n) {
      std::vector<Int> full(dim_, 0);
      for (std::size_t i = 0; i < coords.size(); ++i) full[coords[i]] = n[i];
      return LatticeVector(std::move(full));
    };

    if (r == 1) {
      // a ray: the only facet is the apex
      std::vector<Int> n(1, proj(0, 0) > 0 ? 1 : -1);
      facets_.push_back({lift(n), {}});
      return;
    }

    std::set<std::vector<Int>> seen;
    std::vector<std::size_t> pick(r - 1);
    // enumerate (r-1)-subsets of generators
    std::vector<bool> mask(k, false);
    std::fill(mask.end() - static_cast<std::ptrdiff_t>(r - 1), mask.end(), true);
    do {
      std::vector<std::vector<Int>> sub;
      for (std::size_t i = 0; i < k; ++i)
        if (mask[i]) sub.push_back(proj.row(i));
      auto ker = integer_kernel(IntMatrix::from_rows(sub));
      if (ker.size() != 1) continue;
      auto n = ker.front();
      bool pos = false, neg = false;
      std::vector<Int> vals(k);
      for (std::size_t i = 0; i < k; ++i) {
        Int v = 0;
        for (std::size_t j = 0; j < r; ++j) v = checked_add(v, checked_mul(n[j], proj(i, j)));
        vals[i] = v;
        pos |= v > 0;
        neg |= v < 0;
      }
      if (pos && neg) continue;
      if (neg)
        for (auto& c : n) c = -c;
      if (!seen.insert(n).second) continue;
      Facet f{lift(n), {}};
      for (std::size_t i = 0; i < k; ++i)
        if (vals[i] == 0) f.generators.push_back(i);
      facets_.push_back(std::move(f));
    } while (std::next_permutation(mask.begin(), mask.end()));
    std::sort(facets_.begin(), facets_.end(), [](const Facet& a, const Facet& b) { return a.normal < b.normal; });
  }

  IntMatrix project(const std::vector<std::size_t>& coords) const {
    IntMatrix m(gens_.size(), coords.size());
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = 0; j < coords.size(); ++j) m(i, j) = gens_[i][coords[j]];
    return m;
  }

  std::size_t dim_ = 0, rank_ = 0;
  std::vector<LatticeVector> gens_;
  std::vector<LatticeVector> equations_;
  std::vector<Facet> facets_;
};

/// Multiplicity of a simplicial full-dimensional cone.
inline Int cone_index(const Cone& c) {
  if (!c.is_simplicial() || !c.is_full_dimensional())
    fail(ErrorKind::NotSimplicial, "cone_index needs a simplicial full-dimensional cone: " + c.str());
  auto det = determinant(rows_of(c.generators()));
  return to_int(det < 0 ? BigInt(-det) : det);
}

inline bool is_smooth_cone(const Cone& c) {
  if (!c.is_simplicial()) fail(ErrorKind::NotSimplicial, "smoothness needs a simplicial cone: " + c.str());
  auto snf = smith_decomposition(rows_of(c.generators()));
  return std::all_of(snf.diag.begin(), snf.diag.end(), [](Int d) { return d == 1; });
}

/// Some m in the dual lattice with <m, v_i> = 1 for all primitive generators.
inline std::optional<LatticeVector> gorenstein_functional(const Cone& c) {
  std::vector<Int> ones(c.size(), 1);
  auto sol = solve_integer(rows_of(c.generators()), ones);
  if (!sol) return std::nullopt;
  return LatticeVector(std::move(*sol));
}

inline bool is_gorenstein_cone(const Cone& c) { return gorenstein_functional(c).has_value(); }

// ---------------------------------------------------------------------------
// Fan

/// Maximal cones as index sets into a shared ray list.
class Fan {
 public:
  Fan() = default;

  Fan(std::size_t dim, std::vector<LatticeVector> rays, std::vector<std::vector<std::size_t>> cones)
      : dim_(dim), rays_(std::move(rays)), cones_(std::move(cones)) {
    if (dim_ == 0) fail(ErrorKind::DegenerateInput, "fan of dimension 0");
    for (const auto& r : rays_) {
      if (r.dim() != dim_) fail(ErrorKind::DimMismatch, "ray " + r.str() + " in a fan of dimension " + std::to_string(dim_));
      if (r.is_zero() || !r.is_primitive()) fail(ErrorKind::NonPrimitiveRay, "fan ray " + r.str() + " is not primitive");
    }
    if (std::set<LatticeVector>(rays_.begin(), rays_.end()).size() != rays_.size())
      fail(ErrorKind::DegenerateInput, "duplicate fan rays");
    for (const auto& c : cones_) {
      if (c.empty()) fail(ErrorKind::DegenerateInput, "empty cone in fan");
      for (auto i : c)
        if (i >= rays_.size()) fail(ErrorKind::DegenerateInput, "cone refers to ray index " + std::to_string(i));
      (void)cone(c);  // strong convexity
    }
  }

  std::size_t dim() const { return dim_; }
  const std::vector<LatticeVector>& rays() const { return rays_; }
  const std::vector<std::vector<std::size_t>>& cones() const { return cones_; }

  Cone cone(std::size_t i) const { return cone(cones_.at(i)); }
  Cone cone(const std::vector<std::size_t>& idx) const {
    std::vector<LatticeVector> g;
    for (auto i : idx) g.push_back(rays_.at(i));
    return Cone(g);
  }

  std::optional<std::size_t> ray_index(const LatticeVector& v) const {
    auto it = std::find(rays_.begin(), rays_.end(), v);
    if (it == rays_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - rays_.begin());
  }

  /// Rays and cone index lists sorted lexicographically.
  Fan canonical() const {
    std::vector<std::size_t> order(rays_.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return rays_[a] < rays_[b]; });
    std::vector<std::size_t> remap(rays_.size());
    std::vector<LatticeVector> rays;
    for (std::size_t i = 0; i < order.size(); ++i) {
      remap[order[i]] = i;
      rays.push_back(rays_[order[i]]);
    }
    std::vector<std::vector<std::size_t>> cones;
    for (const auto& c : cones_) {
      std::vector<std::size_t> n;
      for (auto i : c) n.push_back(remap[i]);
      std::sort(n.begin(), n.end());
      cones.push_back(std::move(n));
    }
    std::sort(cones.begin(), cones.end());
    cones.erase(std::unique(cones.begin(), cones.end()), cones.end());
    Fan f;
    f.dim_ = dim_;
    f.rays_ = std::move(rays);
    f.cones_ = std::move(cones);
    return f;
  }

  /// Same rays and same cones, irrespective of ordering.
  bool equivalent(const Fan& other) const {
    auto a = canonical(), b = other.canonical();
    return a.dim_ == b.dim_ && a.rays_ == b.rays_ && a.cones_ == b.cones_;
  }

 private:
  std::size_t dim_ = 0;
  std::vector<LatticeVector> rays_;
  std::vector<std::vector<std::size_t>> cones_;
};

/// Pairwise check that cones meet along common faces: for each pair a
/// functional separates them and cuts out exactly the shared rays.
inline ValidationReport validate_fan(const Fan& f) {
  ValidationReport rep;
  for (std::size_t a = 0; a < f.cones().size(); ++a) {
    for (std::size_t b = a + 1; b < f.cones().size(); ++b) {
      const auto& ca = f.cones()[a];
      const auto& cb = f.cones()[b];
      std::set<std::size_t> sa(ca.begin(), ca.end()), sb(cb.begin(), cb.end());
      lp::Problem p(f.dim());
      auto row = [&](std::size_t ray) {
        std::vector<Rational> r;
        for (Int c : f.rays()[ray]) r.emplace_back(c);
        return r;
      };
      for (auto i : sa) {
        if (sb.count(i))
          p.add_eq(row(i), 0);
        else
          p.add_ge(row(i), 1);
      }
      for (auto i : sb)
        if (!sa.count(i)) p.add_le(row(i), -1);
      std::string name = "cones " + std::to_string(a) + "," + std::to_string(b) + " meet in a common face";
      if (lp::feasible(p))
        rep.pass(name);
      else
        rep.fail(name, f.cone(a).str() + " and " + f.cone(b).str() + " overlap improperly");
    }
  }
  if (rep.checks.empty()) rep.pass("fan has at most one cone");
  return rep;
}

/// Index set of the smallest cone of the fan (a face of some maximal cone) containing v.
inline std::optional<std::vector<std::size_t>> minimal_face_containing(const Fan& f, const LatticeVector& v) {
  for (std::size_t c = 0; c < f.cones().size(); ++c) {
    Cone cone = f.cone(c);
    if (!cone.contains(v)) continue;
    const auto& idx = f.cones()[c];
    std::vector<std::size_t> face;
    for (std::size_t g = 0; g < cone.size(); ++g) {
      bool on_all = true;
      for (const auto& fac : cone.facets())
        if (dot(fac.normal, v) == 0 && dot(fac.normal, cone.generator(g)) != 0) on_all = false;
      if (on_all) {
        auto ri = f.ray_index(cone.generator(g));
        face.push_back(ri ? *ri : idx[g]);
      }
    }
    std::sort(face.begin(), face.end());
    return face;
  }
  return std::nullopt;
}

/// Star subdivision at w, which must lie in the relative interior of the cone `cone_rays`.
/// Every maximal cone containing w is replaced by the joins of w with its facets not containing w.
inline Fan star_subdivide(const Fan& f, const std::vector<std::size_t>& cone_rays, const LatticeVector& w) {
  if (w.dim() != f.dim()) fail(ErrorKind::DimMismatch, "subdivision ray " + w.str());
  if (w.is_zero() || !w.is_primitive()) fail(ErrorKind::NonPrimitiveRay, w.str() + " is not primitive");
  Cone target = f.cone(cone_rays);
  if (!target.contains_in_relative_interior(w))
    fail(ErrorKind::NotInterior, w.str() + " is not in the relative interior of " + target.str());
  if (f.ray_index(w)) fail(ErrorKind::NotInterior, w.str() + " is already a ray of the fan");

  std::vector<LatticeVector> rays = f.rays();
  rays.push_back(w);
  const std::size_t wi = rays.size() - 1;
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t c = 0; c < f.cones().size(); ++c) {
    Cone cone = f.cone(c);
    if (!cone.contains(w)) {
      cones.push_back(f.cones()[c]);
      continue;
    }
    for (const auto& fac : cone.facets()) {
      if (dot(fac.normal, w) == 0) continue;
      std::vector<std::size_t> piece;
      for (auto g : fac.generators) piece.push_back(*f.ray_index(cone.generator(g)));
      piece.push_back(wi);
      cones.push_back(std::move(piece));
    }
  }
  return Fan(f.dim(), std::move(rays), std::move(cones)).canonical();
}

// ---------------------------------------------------------------------------
// Subdivision validation

namespace detail {

inline std::vector<long long> integer_witness(std::span<const Rational> x) {
  bool zero = std::all_of(x.begin(), x.end(), [](const Rational& q) { return q == 0; });
  if (zero) return std::vector<long long>(x.size(), 0);
  return primitive_direction(x).witness();
}

/// A point in the interiors of both cones, if their interiors meet.
inline std::optional<std::vector<Rational>> interior_overlap(const Cone& a, const Cone& b) {
  const std::size_t d = a.dim();
  lp::Problem p(d + 1);  // x, eps
  auto add_cone = [&](const Cone& c) {
    for (const auto& e : c.equations()) {
      std::vector<Rational> row(e.begin(), e.end());
      row.emplace_back(0);
      p.add_eq(row, 0);
    }
    for (const auto& f : c.facets()) {
      std::vector<Rational> row(f.normal.begin(), f.normal.end());
      row.emplace_back(-1);  // <n, x> - eps >= 0
      p.add_ge(row, 0);
    }
  };
  add_cone(a);
  add_cone(b);
  std::vector<Rational> eps(d + 1, 0);
  eps[d] = 1;
  p.add_le(eps, 1);
  p.objective = eps;
  auto r = lp::maximize(p);
  if (r.status != lp::Status::Optimal || r.value <= 0) return std::nullopt;
  r.x.pop_back();
  return r.x;
}

}  // namespace detail

/// Checks that `pieces` subdivide `parent`: containment, facet pairing, disjoint interiors, coverage.
inline ValidationReport validate_subdivision(const Cone& parent, const std::vector<Cone>& pieces) {
  ValidationReport rep;
  for (const auto& p : pieces)
    if (p.dim() != parent.dim()) fail(ErrorKind::DimMismatch, "piece " + p.str() + " vs parent " + parent.str());
  if (pieces.empty()) {
    rep.fail("coverage", "no pieces");
    return rep;
  }

  // (a) containment
  bool contained = true;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (const auto& g : pieces[i].generators())
      if (!parent.contains(g)) {
        contained = false;
        rep.fail("piece " + std::to_string(i) + " inside parent", "generator " + g.str() + " lies outside " + parent.str(),
                 g.witness());
      }
  for (std::size_t i = 0; i < pieces.size(); ++i)
    if (pieces[i].rank() != parent.rank()) {
      contained = false;
      rep.fail("piece " + std::to_string(i) + " full rank", pieces[i].str() + " has lower rank than the parent");
    }
  if (contained) rep.pass("pieces inside parent");
  if (!contained) return rep;

  auto facet_cone = [](const Cone& c, const Facet& f) {
    std::vector<LatticeVector> g;
    for (auto i : f.generators) g.push_back(c.generator(i));
    return g;
  };
  auto on_parent_boundary = [&](const std::vector<LatticeVector>& gens) {
    return std::any_of(parent.facets().begin(), parent.facets().end(), [&](const Facet& pf) {
      return std::all_of(gens.begin(), gens.end(), [&](const auto& g) { return dot(pf.normal, g) == 0; });
    });
  };
  auto in_any_piece = [&](const LatticeVector& v) {
    return std::any_of(pieces.begin(), pieces.end(), [&](const Cone& c) { return c.contains(v); });
  };
  auto gap_witness = [&](const std::vector<LatticeVector>& gens, const LatticeVector& inward) -> std::optional<LatticeVector> {
    if (!parent.is_full_dimensional() || gens.empty()) return std::nullopt;
    LatticeVector centre = gens.front();
    for (std::size_t i = 1; i < gens.size(); ++i) centre = centre + gens[i];
    for (Int m = 1; m <= (Int(1) << 20); m *= 2) {
      LatticeVector q = m * centre - inward;
      if (parent.contains_in_relative_interior(q) && !in_any_piece(q)) return primitivize(q).vector;
    }
    return std::nullopt;
  };

  // (b) facet pairing
  bool paired = true;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (const auto& fac : pieces[i].facets()) {
      auto gens = facet_cone(pieces[i], fac);
      if (gens.empty() || on_parent_boundary(gens)) continue;
      std::size_t partners = 0;
      for (std::size_t j = 0; j < pieces.size(); ++j) {
        if (j == i) continue;
        for (const auto& other : pieces[j].facets()) {
          auto ogens = facet_cone(pieces[j], other);
          if (ogens.empty() || ogens.size() != gens.size()) continue;
          if (!Cone(gens).same_set(Cone(ogens))) continue;
          bool opposite = std::any_of(pieces[j].generators().begin(), pieces[j].generators().end(),
                                      [&](const auto& g) { return dot(fac.normal, g) < 0; });
          if (opposite) ++partners;
        }
      }
      if (partners != 1) {
        paired = false;
        auto w = gap_witness(gens, fac.normal);
        rep.fail("facet pairing", "interior facet " + Cone(gens).str() + " of piece " + std::to_string(i) + " has " +
                                      std::to_string(partners) + " neighbours",
                 w ? std::optional(w->witness()) : std::nullopt);
      }
    }
  }
  if (paired) rep.pass("facet pairing", "every interior facet is shared by exactly one neighbour");

  // (c) disjoint relative interiors
  bool disjoint = true;
  for (std::size_t i = 0; i < pieces.size(); ++i)
    for (std::size_t j = i + 1; j < pieces.size(); ++j)
      if (auto x = detail::interior_overlap(pieces[i], pieces[j])) {
        disjoint = false;
        rep.fail("disjoint interiors",
                 "pieces " + std::to_string(i) + " and " + std::to_string(j) + " overlap", detail::integer_witness(*x));
      }
  if (disjoint) rep.pass("disjoint interiors");

  // (d) a generic interior point is covered exactly once
  if (parent.is_full_dimensional()) {
    std::optional<LatticeVector> probe;
    for (Int salt = 0; salt < 64 && !probe; ++salt) {
      LatticeVector q = (1000 + salt) * parent.generator(0);
      for (std::size_t g = 1; g < parent.size(); ++g) q = q + (1000 + 7 * Int(g) + salt * Int(g * g)) * parent.generator(g);
      bool generic = true;
      for (const auto& pc : pieces)
        for (const auto& fac : pc.facets())
          if (dot(fac.normal, q) == 0) generic = false;
      if (generic) probe = q;
    }
    if (probe) {
      std::size_t hits = static_cast<std::size_t>(
          std::count_if(pieces.begin(), pieces.end(), [&](const Cone& c) { return c.contains(*probe); }));
      if (hits == 1)
        rep.pass("coverage multiplicity", "generic point " + probe->str() + " covered once");
      else
        rep.fail("coverage multiplicity", "generic point covered " + std::to_string(hits) + " times", probe->witness());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Convex hulls

/// Is p in the convex hull of pts?
inline bool in_convex_hull(const LatticeVector& p, const std::vector<LatticeVector>& pts) {
  if (pts.empty()) return false;
  const std::size_t k = pts.size(), d = p.dim();
  lp::Problem prob(k);
  prob.add_eq(std::vector<Rational>(k, 1), 1);
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<Rational> row(k);
    for (std::size_t j = 0; j < k; ++j) row[j] = pts[j][i];
    prob.add_eq(row, p[i]);
  }
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Rational> row(k, 0);
    row[j] = 1;
    prob.add_ge(row, 0);
  }
  return lp::feasible(prob);
}

/// Vertices of conv(points), lexicographically sorted; duplicates ignored.
inline std::vector<LatticeVector> hull_vertices(const std::vector<LatticeVector>& points) {
  std::set<LatticeVector> uniq(points.begin(), points.end());
  std::vector<LatticeVector> pts(uniq.begin(), uniq.end());
  std::vector<LatticeVector> verts;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<LatticeVector> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (!in_convex_hull(pts[i], others)) verts.push_back(pts[i]);
  }
  return verts;
}

/// H-description of a lattice polytope via its homogenised cone over (v, 1).
class Polytope {
 public:
  explicit Polytope(const std::vector<LatticeVector>& points) {
    if (points.empty()) fail(ErrorKind::DegenerateInput, "empty point set");
    vertices_ = hull_vertices(points);
    std::vector<LatticeVector> lifted;
    for (const auto& v : vertices_) {
      auto c = v.coords();
      c.push_back(1);
      lifted.emplace_back(std::move(c));
    }
    cone_ = Cone(lifted);
  }

  std::size_t dim() const { return vertices_.front().dim(); }
  const std::vector<LatticeVector>& vertices() const { return vertices_; }

  /// Is v in the dilate m * P?
  bool contains_dilate(const LatticeVector& v, Int m) const {
    auto c = v.coords();
    c.push_back(m);
    LatticeVector lv(std::move(c));
    return cone_.contains(lv);
  }

  /// Facets as (normal a, offset b) with <a, x> + b >= 0 on P, with the vertex indices on each.
  std::vector<std::pair<Facet, Int>> facets() const {
    std::vector<std::pair<Facet, Int>> out;
    for (const auto& f : cone_.facets()) {
      std::vector<Int> a(f.normal.begin(), f.normal.end() - 1);
      out.push_back({Facet{LatticeVector(std::move(a)), f.generators}, f.normal[dim()]});
    }
    return out;
  }

  const Cone& homogenized() const { return cone_; }

 private:
  std::vector<LatticeVector> vertices_;
  Cone cone_;
};

struct FanPolytope {
  std::vector<LatticeVector> vertices;
  std::vector<LatticeVector> non_vertex_rays;
};

/// Convex hull of the primitive ray generators of a fan.
inline FanPolytope fan_polytope(const Fan& f) {
  if (f.rays().size() < f.dim() + 1 || linear_rank(f.rays()) != f.dim())
    fail(ErrorKind::DegenerateInput, "fan rays do not span the lattice");
  FanPolytope out;
  out.vertices = hull_vertices(f.rays());
  for (const auto& r : f.rays())
    if (!std::binary_search(out.vertices.begin(), out.vertices.end(), r)) out.non_vertex_rays.push_back(r);
  std::sort(out.non_vertex_rays.begin(), out.non_vertex_rays.end());
  return out;
}

/// The face fan of a polytope containing the origin in its interior: cones over its facets.
inline Fan face_fan(const std::vector<LatticeVector>& points) {
  Polytope poly(points);
  const auto& verts = poly.vertices();
  std::vector<std::vector<std::size_t>> cones;
  for (const auto& [facet, offset] : poly.facets()) {
    if (offset <= 0) fail(ErrorKind::DegenerateInput, "origin is not in the interior of the polytope");
    std::vector<std::size_t> cone;
    for (std::size_t i = 0; i < verts.size(); ++i)
      if (dot(facet.normal, verts[i]) + offset == 0) cone.push_back(i);
    cones.push_back(std::move(cone));
  }
  return Fan(verts.front().dim(), verts, std::move(cones)).canonical();
}

}  // namespace toriclg
