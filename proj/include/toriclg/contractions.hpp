#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toriclg/quotsing.hpp"

namespace toriclg {

enum class ContractionKind { SmoothPoint, QuotientPoint, CAnPoint, CurveCase1, CurveCase2, CurveCase3, CurveCase4 };

inline std::string_view to_string(ContractionKind k) {
  switch (k) {
    case ContractionKind::SmoothPoint: return "SmoothPoint";
    case ContractionKind::QuotientPoint: return "QuotientPoint";
    case ContractionKind::CAnPoint: return "CAnPoint";
    case ContractionKind::CurveCase1: return "CurveCase1";
    case ContractionKind::CurveCase2: return "CurveCase2";
    case ContractionKind::CurveCase3: return "CurveCase3";
    case ContractionKind::CurveCase4: return "CurveCase4";
  }
  return "?";
}

/// Accepts the kind names above; hypersurface tags outside the ordinary types
/// (cAx/4, cAx/2, cD/..., cE/2, and cA/m as a bare tag) are rejected explicitly.
inline ContractionKind parse_contraction_kind(std::string_view s) {
  for (int i = 0; i <= static_cast<int>(ContractionKind::CurveCase4); ++i) {
    auto k = static_cast<ContractionKind>(i);
    if (to_string(k) == s) return k;
  }
  if (parse_hypersurface_type(s))
    fail(ErrorKind::UnsupportedKind,
         std::string(s) + ": only smooth, terminal quotient and cA/n points and the four curve cases are supported");
  fail(ErrorKind::UnsupportedKind, "unknown contraction kind '" + std::string(s) + "'");
}

inline constexpr std::string_view kWeightedOrderFlag = "g_weighted_order_ok";
inline constexpr std::string_view kLeadingMonomialFlag = "g_leading_monomial_present";
inline constexpr std::string_view kHPlusFlag = "h_plus_ok";

struct ContractionSpec {
  ContractionKind kind = ContractionKind::SmoothPoint;
  std::map<std::string, Int> params;
  std::set<std::string> assume;

  bool assumed(std::string_view flag) const { return assume.count(std::string(flag)) > 0; }
};

namespace detail {

struct ParamAlias {
  std::string_view name;
  std::vector<std::string_view> aliases;
};

inline std::optional<std::pair<std::string, Int>> lookup(const ContractionSpec& s, const ParamAlias& p) {
  if (auto it = s.params.find(std::string(p.name)); it != s.params.end()) return std::pair{it->first, it->second};
  for (auto a : p.aliases)
    if (auto it = s.params.find(std::string(a)); it != s.params.end()) return std::pair{it->first, it->second};
  return std::nullopt;
}

inline Int require(const ContractionSpec& s, const ParamAlias& p) {
  if (auto v = lookup(s, p)) return v->second;
  fail(ErrorKind::IncompleteSpec, std::string(to_string(s.kind)) + " needs parameter '" + std::string(p.name) + "'");
}

inline const ParamAlias kA{"a", {}}, kB{"b", {}}, kN{"n", {}}, kS{"s", {}}, kW1{"w1", {}}, kW2{"w2", {}},
    kM{"m", {}}, kMp{"m'", {"mp", "m_prime"}}, kK{"k", {}}, kR{"r", {"n"}}, kAlpha{"alpha", {"b"}},
    kVariant{"variant", {}};

}  // namespace detail

/// Checks the numeric conditions of the classification for the given kind.
/// Conditions on power series are caller-asserted flags: "assumed" when
/// present, "unasserted" otherwise (neither counts as a failure).
inline ValidationReport validate_contraction(const ContractionSpec& spec) {
  using namespace detail;
  ValidationReport rep;
  auto cond = [&](const std::string& name, bool ok, const std::string& detail) {
    if (ok)
      rep.pass(name, detail);
    else
      rep.fail(name, detail);
  };
  auto flag = [&](std::string_view f, const std::string& what) {
    rep.add(std::string(f), spec.assumed(f) ? CheckStatus::Assumed : CheckStatus::Unasserted, what);
  };
  auto alias_note = [&](const ParamAlias& p) {
    auto v = lookup(spec, p);
    if (v && v->first != p.name) rep.pass("alias " + v->first + " -> " + std::string(p.name), "treated as the same parameter");
  };

  switch (spec.kind) {
    case ContractionKind::SmoothPoint: {
      Int a = require(spec, kA), b = require(spec, kB);
      cond("coprime positive integers", a >= 1 && b >= 1 && gcd(a, b) == 1,
           "a = " + std::to_string(a) + ", b = " + std::to_string(b));
      break;
    }
    case ContractionKind::QuotientPoint: {
      Int n = require(spec, kN), s = require(spec, kS);
      cond("0 < s < n", 0 < s && s < n, "n = " + std::to_string(n) + ", s = " + std::to_string(s));
      cond("gcd(s, n) = 1", gcd(s, n) == 1, "gcd = " + std::to_string(gcd(s, n)));
      break;
    }
    case ContractionKind::CAnPoint: {
      Int n = require(spec, kN), b = require(spec, kB), w1 = require(spec, kW1), w2 = require(spec, kW2),
          a = require(spec, kA);
      cond("positive parameters", n >= 2 && w1 >= 1 && w2 >= 1 && a >= 1, "need n >= 2 and w1, w2, a >= 1");
      cond("gcd(b, n) = 1", gcd(b, n) == 1, "gcd = " + std::to_string(gcd(b, n)));
      bool c1a = n > 0 && mod(checked_sub(a, checked_mul(b, w1)), n) == 0;
      bool c1b = n > 0 && a > 0 && mod(checked_add(w1, w2), checked_mul(a, n)) == 0;
      cond("condition (1): a = b*w1 mod n", c1a, std::to_string(a) + " vs " + std::to_string(checked_mul(b, w1)) + " mod " + std::to_string(n));
      cond("condition (1): w1 + w2 = 0 mod a*n", c1b, std::to_string(w1 + w2) + " mod " + std::to_string(a * n));
      if (c1a) {
        Int q = (a - b * w1) / n;
        cond("condition (2): (a - b*w1)/n coprime to w1", gcd(q, w1) == 1,
             "gcd(" + std::to_string(q) + ", " + std::to_string(w1) + ") = " + std::to_string(gcd(q, w1)));
      } else {
        rep.fail("condition (2): (a - b*w1)/n coprime to w1", "a - b*w1 is not divisible by n");
      }
      flag(kWeightedOrderFlag, "condition (3): g has weighted order (w1+w2)/n");
      flag(kLeadingMonomialFlag, "condition (4): z^((w1+w2)/a) appears in g");
      break;
    }
    case ContractionKind::CurveCase1: {
      Int m = require(spec, kM);
      cond("m >= 1", m >= 1, "m = " + std::to_string(m));
      flag(kHPlusFlag, "h_+ and g as in the normal form");
      flag(kWeightedOrderFlag, "h_+ y + g has weighted order m");
      break;
    }
    case ContractionKind::CurveCase2: {
      Int mp = require(spec, kMp), k = require(spec, kK);
      alias_note(kMp);
      cond("m' >= 2", mp >= 2, "m' = " + std::to_string(mp) + " (the y-weight m' - 1 must be positive)");
      cond("k >= 1", k >= 1, "k = " + std::to_string(k));
      flag(kHPlusFlag, "h_+ and g_{>1} as in the normal form");
      flag(kWeightedOrderFlag, "h_+ y + g has weighted order m'");
      break;
    }
    case ContractionKind::CurveCase3: {
      Int m = require(spec, kM), r = require(spec, kR), al = require(spec, kAlpha);
      alias_note(kR);
      alias_note(kAlpha);
      cond("m >= 1", m >= 1, "m = " + std::to_string(m));
      cond("r >= 1", r >= 1, "r = " + std::to_string(r));
      cond("gcd(alpha, r) = 1", r >= 1 && gcd(al, r) == 1, "gcd = " + std::to_string(gcd(al, r)));
      flag(kHPlusFlag, "h_+ and g as in the normal form");
      flag(kWeightedOrderFlag, "h_+ y + g has weighted order m");
      break;
    }
    case ContractionKind::CurveCase4: {
      Int mp = require(spec, kMp), r = require(spec, kR), al = require(spec, kAlpha), k = require(spec, kK);
      alias_note(kMp);
      alias_note(kR);
      alias_note(kAlpha);
      cond("m' >= 1", mp >= 1, "m' = " + std::to_string(mp));
      cond("r >= 1", r >= 1, "r = " + std::to_string(r));
      cond("gcd(alpha, r) = 1", r >= 1 && gcd(al, r) == 1, "gcd = " + std::to_string(gcd(al, r)));
      cond("k >= 1", k >= 1, "k = " + std::to_string(k));
      if (auto v = lookup(spec, kVariant))
        cond("variant in {1, 2}", v->second == 1 || v->second == 2, "variant = " + std::to_string(v->second));
      flag(kHPlusFlag, "h_+ and g_{>1} as in the normal form");
      flag(kWeightedOrderFlag, "h_+ y + g has weighted order m'");
      break;
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Ambient lattices of weighted blow-ups

/// N = Z^k + sum_j Z q_j / n_j with a weight vector w = num / den in N.
struct WeightedBlowupModel {
  std::vector<std::string> coords;
  std::vector<CyclicQuotient> ambient;
  std::vector<Int> weight_num;
  Int weight_den = 1;

  std::size_t dim() const { return coords.size(); }

  /// Common denominator D; everything is computed inside the integer lattice D N.
  Int scale() const {
    Int d = weight_den;
    for (const auto& q : ambient) d = lcm(d, q.order());
    return d;
  }

  /// Columns form a basis of D N.
  IntMatrix basis() const {
    const std::size_t k = dim();
    const Int d = scale();
    std::vector<std::vector<Int>> gens;
    for (std::size_t i = 0; i < k; ++i) {
      std::vector<Int> e(k, 0);
      e[i] = d;
      gens.push_back(e);
    }
    for (const auto& q : ambient) {
      if (q.size() != k) fail(ErrorKind::DimMismatch, "ambient quotient " + q.str() + " has the wrong length");
      std::vector<Int> g;
      for (Int a : q.weights()) g.push_back(checked_mul(a, d / q.order()));
      gens.push_back(g);
    }
    auto snf = smith_decomposition(IntMatrix::from_columns(gens));
    IntMatrix b = unimodular_inverse(snf.left);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t i = 0; i < k; ++i) b(i, j) = checked_mul(b(i, j), snf.diag[j]);
    return b;
  }

  /// Coordinates of num / den (a vector of N) in the basis of N.
  LatticeVector to_basis(const IntMatrix& b, const std::vector<Int>& num, Int den) const {
    const Int d = scale();
    std::vector<Int> x;
    for (Int v : num) {
      Int t = checked_mul(v, d);
      if (t % den != 0) fail(ErrorKind::InvalidParameters, "vector is not in the ambient lattice");
      x.push_back(t / den);
    }
    auto sol = solve_integer(b, x);
    if (!sol) {
      std::string s;
      for (Int v : num) s += (s.empty() ? "" : ",") + std::to_string(v);
      fail(ErrorKind::InvalidParameters, "(" + s + ")/" + std::to_string(den) + " is not in the ambient lattice");
    }
    return LatticeVector(*sol);
  }

  LatticeVector weight_in_basis(const IntMatrix& b) const { return to_basis(b, weight_num, weight_den); }

  /// Chart cone for coordinate i: the standard rays with e_i replaced by the weight vector, in chart order.
  Cone chart_cone(const IntMatrix& b, std::size_t i) const {
    std::vector<LatticeVector> gens;
    for (std::size_t j = 0; j < dim(); ++j) {
      if (j == i) {
        gens.push_back(weight_in_basis(b));
      } else {
        std::vector<Int> e(dim(), 0);
        e[j] = 1;
        gens.push_back(to_basis(b, e, 1));
      }
    }
    return Cone(gens);
  }

  std::size_t coord_index(std::string_view name) const {
    for (std::size_t i = 0; i < coords.size(); ++i)
      if (coords[i] == name) return i;
    fail(ErrorKind::InvalidParameters, "no coordinate named " + std::string(name));
  }
};

enum class FibreShape { TransversalBinomial, Irreducible, MissesOrigin };

inline std::string_view to_string(FibreShape s) {
  switch (s) {
    case FibreShape::TransversalBinomial: return "TransversalBinomial";
    case FibreShape::Irreducible: return "Irreducible";
    case FibreShape::MissesOrigin: return "MissesOrigin";
  }
  return "?";
}

struct ChartReport {
  std::string chart;
  std::size_t ambient_dim = 0;
  QuotientDecomposition quotient;              // from the lattice
  std::optional<CyclicQuotient> presentation;  // cyclic generator, in the printed form when it matches
  std::optional<CyclicQuotient> paper;         // the printed chart quotient, when one is printed
  std::optional<bool> matches_paper;
  FibreShape shape = FibreShape::Irreducible;
  std::optional<std::string> marker;  // the two coordinates cutting out a transversal central fibre
  std::optional<std::string> hypersurface_note;

  /// Sorted residues of the cyclic presentation.
  std::vector<Int> normalized() const { return presentation ? presentation->sorted_weights() : std::vector<Int>{}; }

  std::string quotient_str() const {
    if (quotient.is_trivial()) return "A^" + std::to_string(ambient_dim);
    if (presentation) return "A^" + std::to_string(ambient_dim) + "/" + presentation->original_str();
    return "A^" + std::to_string(ambient_dim) + "/(" + quotient.str() + ")";
  }
};

namespace detail {

struct ChartPlan {
  std::string coord;
  FibreShape shape;
  std::optional<CyclicQuotient> paper;
  std::optional<std::string> note;
};

struct DegenerationPlan {
  WeightedBlowupModel model;
  std::vector<ChartPlan> charts;
};

inline CyclicQuotient trivial(std::size_t k) { return CyclicQuotient(1, std::vector<Int>(k, 0)); }

inline DegenerationPlan degeneration_plan(const ContractionSpec& spec) {
  DegenerationPlan p;
  auto& m = p.model;
  using FS = FibreShape;
  switch (spec.kind) {
    case ContractionKind::SmoothPoint: {
      Int a = require(spec, kA), b = require(spec, kB);
      m.coords = {"x", "y", "z", "t"};
      m.weight_num = {1, a, b, 1};
      p.charts = {{"x", FS::TransversalBinomial, trivial(4), {}},
                  {"y", FS::TransversalBinomial, CyclicQuotient(a, {1, -1, b, 1}), {}},
                  {"z", FS::TransversalBinomial, CyclicQuotient(b, {1, a, -1, 1}), {}},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::QuotientPoint: {
      Int n = require(spec, kN), s = require(spec, kS);
      m.coords = {"x", "y", "z", "t"};
      m.ambient = {CyclicQuotient(n, {s, -s, 1, 0})};
      m.weight_num = {s, n - s, 1, n};
      m.weight_den = n;
      p.charts = {{"x", FS::TransversalBinomial, CyclicQuotient(s, {-n, n - s, 1, n}), {}},
                  {"y", FS::TransversalBinomial, CyclicQuotient(n - s, {s, -n, 1, n}), {}},
                  {"z", FS::TransversalBinomial, trivial(4), {}},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::CAnPoint: {
      Int n = require(spec, kN), b = require(spec, kB), w1 = require(spec, kW1), w2 = require(spec, kW2),
          a = require(spec, kA);
      m.coords = {"x", "y", "z", "w", "t"};
      m.ambient = {CyclicQuotient(n, {1, -1, b, 0, 0})};
      m.weight_num = {w1, w2, a, n, n};
      m.weight_den = n;
      std::string e = std::to_string((w1 + w2) / n);
      p.charts = {{"x", FS::TransversalBinomial, CyclicQuotient(w1, {-n, w2, a, n, n}),
                   "y + g(z^n x^" + std::to_string(a) + ", w x)/x^" + e + " + t^" + e + " = 0"},
                  {"y", FS::TransversalBinomial, {}, "x + g(z^n y^" + std::to_string(a) + ", w y)/y^" + e + " + t^" + e + " = 0"},
                  {"z", FS::MissesOrigin, {}, {}},
                  {"w", FS::MissesOrigin, {}, {}},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::CurveCase1: {
      Int mm = require(spec, kM);
      m.coords = {"x", "y", "z", "w", "t"};
      m.weight_num = {0, mm, 1, 1, 1};
      p.charts = {{"y", FS::TransversalBinomial, CyclicQuotient(mm, {0, -1, 1, 1, 1}),
                   "x + h_+(x, y^m, yz, yw) + g(x, yz, yw)/y^m + t^m = 0"},
                  {"z", FS::MissesOrigin, {}, {}},
                  {"w", FS::MissesOrigin, {}, {}},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::CurveCase2: {
      Int mp = require(spec, kMp);
      m.coords = {"x", "y", "z", "w", "u", "t"};
      m.weight_num = {0, mp - 1, 1, 1, mp, 1};
      p.charts = {{"y", FS::MissesOrigin, {}, {}},
                  {"z", FS::MissesOrigin, {}, {}},
                  {"w", FS::MissesOrigin, {}, {}},
                  {"u", FS::TransversalBinomial, CyclicQuotient(mp, {0, -1, 1, 1, -1, 1}),
                   "x + h_+(x, y u^(m'-1), zu, wu)/u^m' + g_{>1}(x, zu, wu)/u^m' + t^m' = 0, "
                   "u^(m'-1) - (x^(k-1) y u^(m'-2) + z) = 0"},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::CurveCase3: {
      Int mm = require(spec, kM), r = require(spec, kR), al = require(spec, kAlpha);
      m.coords = {"x", "y", "z", "w", "t"};
      m.ambient = {CyclicQuotient(r, {-1, 1, al, 0, 0})};
      m.weight_num = {0, mm, 1, 1, 1};
      p.charts = {{"y", FS::TransversalBinomial, CyclicQuotient(mm * r, {-mm, 1, mm * al - 1, -1, -1}),
                   "x + h_+(x, y^m, yz, yw) + g(x, yz, yw)/y^m + t^m = 0"},
                  {"z", FS::MissesOrigin, {}, {}},
                  {"w", FS::MissesOrigin, {}, {}},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
    case ContractionKind::CurveCase4: {
      Int mp = require(spec, kMp), r = require(spec, kR), al = require(spec, kAlpha);
      Int variant = lookup(spec, kVariant) ? lookup(spec, kVariant)->second : 1;
      m.coords = {"x", "y", "z", "w", "u", "t"};
      m.ambient = {variant == 2 ? CyclicQuotient(r, {-1, 0, 1, al, 1, 0}) : CyclicQuotient(r, {-1, al, 1, 0, 1, 0})};
      m.weight_num = {0, 1, 1, 1, mp, 1};
      // the printed u-chart quotient is stated for the first ambient only
      std::optional<CyclicQuotient> printed;
      if (variant != 2) printed = CyclicQuotient(mp * r, {-mp, mp * al - 1, 1, -1, -1, 1});
      p.charts = {{"y", FS::MissesOrigin, {}, {}},
                  {"z", FS::MissesOrigin, {}, {}},
                  {"w", FS::MissesOrigin, {}, {}},
                  {"u", FS::TransversalBinomial, printed,
                   "x + h_+(x, yu, zu, wu)/u^m' + g_{>1}(x, zu, wu)/u^m' + t^m' = 0, "
                   "u^(m'-1) - (x^(k-1) y + z) = 0"},
                  {"t", FS::Irreducible, {}, {}}};
      break;
    }
  }
  return p;
}

}  // namespace detail

/// The ambient model (coordinates, ambient quotient, blow-up weight) of a spec's degeneration family.
inline WeightedBlowupModel degeneration_model(const ContractionSpec& spec) { return detail::degeneration_plan(spec).model; }

/// Chart data of the degeneration family. Each chart quotient is computed from
/// the lattice (chart cone in the ambient overlattice, then Smith form) and compared
/// with the printed quotient as a group: two presentations agree iff they generate
/// the same set of group elements.
inline std::vector<ChartReport> build_degeneration_charts(const ContractionSpec& spec) {
  auto rep = validate_contraction(spec);
  if (!rep.valid()) {
    std::string why;
    for (const auto* c : rep.failures()) why += (why.empty() ? "" : "; ") + c->name;
    fail(ErrorKind::InvalidParameters, std::string(to_string(spec.kind)) + " fails: " + why);
  }
  auto plan = detail::degeneration_plan(spec);
  const auto& model = plan.model;
  const IntMatrix basis = model.basis();
  std::vector<ChartReport> out;
  for (const auto& c : plan.charts) {
    ChartReport r;
    r.chart = c.coord;
    r.ambient_dim = model.dim();
    r.quotient = quotient_from_cone(model.chart_cone(basis, model.coord_index(c.coord)));
    r.paper = c.paper;
    r.presentation = cyclic_presentation(r.quotient, c.paper);
    if (c.paper) r.matches_paper = same_group(r.quotient, as_decomposition(*c.paper));
    r.shape = c.shape;
    if (c.shape == FibreShape::TransversalBinomial) r.marker = c.coord + "t";
    r.hypersurface_note = c.note;
    out.push_back(std::move(r));
  }
  return out;
}

/// Independent route for the point kinds: star-subdivide the positive orthant of the
/// ambient lattice at the weight ray and read each chart quotient off the resulting cones.
inline std::map<std::string, QuotientDecomposition> charts_by_star_subdivision(const ContractionSpec& spec) {
  if (spec.kind != ContractionKind::SmoothPoint && spec.kind != ContractionKind::QuotientPoint)
    fail(ErrorKind::UnsupportedKind, "star subdivision route is for point kinds");
  auto model = degeneration_model(spec);
  const IntMatrix basis = model.basis();
  const std::size_t k = model.dim();
  std::vector<LatticeVector> rays;
  std::vector<std::size_t> all;
  for (std::size_t j = 0; j < k; ++j) {
    std::vector<Int> e(k, 0);
    e[j] = 1;
    rays.push_back(primitivize(model.to_basis(basis, e, 1)).vector);
    all.push_back(j);
  }
  Fan orthant(k, rays, {all});
  auto w = primitivize(model.weight_in_basis(basis)).vector;
  Fan sub = star_subdivide(orthant, all, w);
  std::map<std::string, QuotientDecomposition> out;
  for (std::size_t c = 0; c < sub.cones().size(); ++c) {
    Cone cone = sub.cone(c);
    // the chart is named after the standard ray that was dropped; list generators in chart order
    std::optional<std::size_t> missing;
    for (std::size_t j = 0; j < k; ++j)
      if (std::find(cone.generators().begin(), cone.generators().end(), rays[j]) == cone.generators().end()) missing = j;
    if (!missing) fail(ErrorKind::InvalidParameters, "subdivided cone keeps every standard ray");
    std::vector<LatticeVector> ordered;
    for (std::size_t j = 0; j < k; ++j) ordered.push_back(j == *missing ? w : rays[j]);
    out[model.coords[*missing]] = quotient_from_cone(Cone(ordered));
  }
  return out;
}

/// Insertion ray of the weighted blow-up, in a basis of the ambient lattice of the
/// threefold germ (the standard basis for smooth points).
inline LatticeVector exceptional_ray(const ContractionSpec& spec) {
  using namespace detail;
  WeightedBlowupModel m;
  switch (spec.kind) {
    case ContractionKind::SmoothPoint: {
      Int a = require(spec, kA), b = require(spec, kB);
      return LatticeVector({1, a, b});
    }
    case ContractionKind::QuotientPoint: {
      Int n = require(spec, kN), s = require(spec, kS);
      m.coords = {"x", "y", "z"};
      m.ambient = {CyclicQuotient(n, {s, -s, 1})};
      m.weight_num = {s, n - s, 1};
      m.weight_den = n;
      return primitivize(m.weight_in_basis(m.basis())).vector;
    }
    default:
      fail(ErrorKind::UnsupportedKind, std::string(to_string(spec.kind)) + " has no toric insertion ray here");
  }
}

}  // namespace toriclg
