#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "toriclg/contractions.hpp"
#include "toriclg/iseries.hpp"

namespace toriclg {

// ---------------------------------------------------------------------------
// Standard fans

/// P^n: rays e_1..e_n and -(e_1 + ... + e_n); cones omit one ray each.
inline Fan projective_fan(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Int> e(n, 0);
    e[i] = 1;
    rays.emplace_back(e);
  }
  rays.emplace_back(std::vector<Int>(n, -1));
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t skip = 0; skip <= n; ++skip) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i <= n; ++i)
      if (i != skip) c.push_back(i);
    cones.push_back(c);
  }
  return Fan(n, rays, cones).canonical();
}

/// (P^1)^n: rays +-e_i, one cone per sign pattern.
inline Fan product_of_lines_fan(std::size_t n) {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < n; ++i)
    for (Int s : {1, -1}) {
      std::vector<Int> e(n, 0);
      e[i] = s;
      rays.emplace_back(e);
    }
  std::vector<std::vector<std::size_t>> cones;
  for (std::size_t mask = 0; mask < (std::size_t(1) << n); ++mask) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i) c.push_back(2 * i + ((mask >> i) & 1));
    cones.push_back(c);
  }
  return Fan(n, rays, cones).canonical();
}

/// sum over rays of x^rho; the marked ray (if any) carries the coefficient `param`.
inline LaurentPoly fan_polynomial(const Fan& f, std::optional<std::size_t> marked = std::nullopt,
                                  const std::string& param = "a") {
  std::vector<std::string> params;
  if (marked) params.push_back(param);
  LaurentPoly p(f.dim(), params);
  for (std::size_t i = 0; i < f.rays().size(); ++i) {
    if (marked && i == *marked)
      p.add_term(f.rays()[i].coords(), ParamPoly::variable(1, 0));
    else
      p.add_term(f.rays()[i].coords(), ParamPoly::constant(params.size(), 1));
  }
  return p;
}

// ---------------------------------------------------------------------------
// Contraction fixtures

struct ContractionFixture {
  std::string name;
  Fan fan_y;
  std::size_t exceptional = 0;  // index into fan_y.rays()
  Fan fan_x;

  const LatticeVector& exceptional_ray() const { return fan_y.rays().at(exceptional); }
};

/// Y as the star subdivision of X at w, inserted in the smallest cone containing w.
inline ContractionFixture make_fixture(std::string name, const Fan& fan_x, const LatticeVector& w) {
  auto face = minimal_face_containing(fan_x, w);
  if (!face) fail(ErrorKind::InvalidFixture, w.str() + " lies in no cone of X");
  Fan y = star_subdivide(fan_x, *face, w);
  return {std::move(name), y, *y.ray_index(w), fan_x.canonical()};
}

/// The fixture invariant: X's rays are Y's rays minus the exceptional one, and
/// star-subdividing X at the exceptional ray gives Y back.
inline void check_fixture(const ContractionFixture& fx) {
  if (fx.exceptional >= fx.fan_y.rays().size()) fail(ErrorKind::InvalidFixture, fx.name + ": exceptional index out of range");
  const auto& w = fx.exceptional_ray();
  std::set<LatticeVector> ry(fx.fan_y.rays().begin(), fx.fan_y.rays().end());
  ry.erase(w);
  std::set<LatticeVector> rx(fx.fan_x.rays().begin(), fx.fan_x.rays().end());
  if (ry != rx) fail(ErrorKind::InvalidFixture, fx.name + ": removing " + w.str() + " from Y does not give the rays of X");
  auto face = minimal_face_containing(fx.fan_x, w);
  if (!face) fail(ErrorKind::InvalidFixture, fx.name + ": " + w.str() + " lies in no cone of X");
  try {
    Fan rebuilt = star_subdivide(fx.fan_x, *face, w);
    if (!rebuilt.equivalent(fx.fan_y))
      fail(ErrorKind::InvalidFixture, fx.name + ": Y is not the star subdivision of X at " + w.str());
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::InvalidFixture) throw;
    fail(ErrorKind::InvalidFixture, fx.name + ": " + e.what());
  }
}

/// The toric contraction fixtures used for the limit identity.
inline std::vector<ContractionFixture> standard_fixtures() {
  std::vector<ContractionFixture> out;
  Fan p3 = projective_fan(3);
  out.push_back(make_fixture("Bl_pt P3 -> P3", p3, LatticeVector({1, 1, 1})));
  out.push_back(make_fixture("Bl_line P3 -> P3", p3, LatticeVector({1, 1, 0})));
  ContractionSpec weighted{ContractionKind::SmoothPoint, {{"a", 1}, {"b", 2}}, {}};
  out.push_back(make_fixture("(1,1,2) blow-up of P3 -> P3", p3, toriclg::exceptional_ray(weighted)));
  // P(1,1,2,1) has a 1/2(1,1,1) point on the cone <e1, e2, (-1,-1,-2)>; its Kawamata blow-up inserts (0,0,-1)
  Fan p1121(3, {LatticeVector({1, 0, 0}), LatticeVector({0, 1, 0}), LatticeVector({0, 0, 1}), LatticeVector({-1, -1, -2})},
            {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}});
  out.push_back(make_fixture("Kawamata blow-up of P(1,1,2,1)", p1121, LatticeVector({0, 0, -1})));
  out.push_back(make_fixture("Bl_pt P2 -> P2", projective_fan(2), LatticeVector({1, 1})));
  return out;
}

// ---------------------------------------------------------------------------
// Reports

struct DegreeRow {
  Int degree = 0;
  Rational laurent_y_limit, laurent_x, givental_y_s0, givental_x;
  bool agree() const { return laurent_y_limit == laurent_x && givental_y_s0 == givental_x && laurent_x == givental_x; }
};

struct CensusEntry {
  std::vector<LatticeVector> generators;
  bool simplicial = false;
  std::optional<Int> index;
  std::optional<QuotientDecomposition> quotient;
  std::optional<SingularityClass> singularity;
  std::optional<bool> gorenstein;

  std::string cone_str() const {
    std::string s = "<";
    for (std::size_t i = 0; i < generators.size(); ++i) s += (i ? "," : "") + generators[i].str();
    return s + ">";
  }

  std::string str() const {
    std::string s = cone_str() + ": ";
    if (simplicial) {
      s += "simplicial, index " + std::to_string(*index);
      if (quotient && !quotient->is_trivial()) s += ", " + quotient->str() + " " + singularity->str();
    } else {
      s += "non-simplicial, " + std::string(*gorenstein ? "Gorenstein" : "not Gorenstein");
    }
    return s;
  }
};

/// Per-cone singularity data for every maximal cone of a fan.
inline std::vector<CensusEntry> singularity_census(const Fan& f) {
  std::vector<CensusEntry> out;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    Cone c = f.cone(i);
    CensusEntry e;
    e.generators = c.sorted_generators();
    e.simplicial = c.is_simplicial() && c.is_full_dimensional();
    if (e.simplicial) {
      Cone ordered(e.generators);
      e.index = cone_index(ordered);
      e.quotient = quotient_from_cone(ordered);
      e.singularity = classify(*e.quotient);
    } else {
      e.gorenstein = is_gorenstein_cone(c);
    }
    out.push_back(std::move(e));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.generators < b.generators; });
  return out;
}

struct VerificationReport {
  std::string name;
  ValidationReport checks;
  std::vector<DegreeRow> table;
  std::vector<CensusEntry> census;
  std::optional<PeriodSeries> series;
  std::vector<std::string> notes;  // reported, not asserted
  std::optional<std::string> aborted_stage;
  double seconds = 0;

  bool verdict() const { return !aborted_stage && checks.valid(); }

  /// Human-readable report; without timing the text is deterministic.
  std::string render(bool with_timing = true) const {
    std::ostringstream os;
    os << "== " << name << " ==\n";
    for (const auto& c : checks.checks) {
      os << "[" << to_string(c.status) << "] " << c.name;
      if (!c.detail.empty()) os << ": " << c.detail;
      if (c.witness) {
        os << " (witness ";
        for (std::size_t i = 0; i < c.witness->size(); ++i) os << (i ? "," : "") << (*c.witness)[i];
        os << ")";
      }
      os << "\n";
    }
    if (!census.empty()) {
      os << "census:\n";
      for (const auto& e : census) os << "  " << e.str() << "\n";
    }
    if (!table.empty()) {
      os << "degree | Laurent Y limit | Laurent X | Givental Y (s=0) | Givental X\n";
      for (const auto& r : table)
        os << "  " << r.degree << " | " << to_string(r.laurent_y_limit) << " | " << to_string(r.laurent_x) << " | "
           << to_string(r.givental_y_s0) << " | " << to_string(r.givental_x) << (r.agree() ? "" : "  MISMATCH") << "\n";
    }
    if (series) os << "period coefficients:\n" << series->str();
    for (const auto& n : notes) os << "note: " << n << "\n";
    if (aborted_stage) os << "aborted at stage: " << *aborted_stage << "\n";
    os << "verdict: " << (verdict() ? "pass" : "fail") << "\n";
    if (with_timing) os << "time: " << seconds << " s\n";
    return os.str();
  }
};

namespace detail {

inline std::vector<Cone> pieces_inside(const Fan& f, const Cone& parent) {
  std::vector<Cone> out;
  for (std::size_t i = 0; i < f.cones().size(); ++i) {
    Cone c = f.cone(i);
    if (parent.contains_cone(c) && c.rank() == parent.rank()) out.push_back(c);
  }
  return out;
}

inline void merge_checks(ValidationReport& into, const ValidationReport& from, const std::string& prefix) {
  for (auto c : from.checks) {
    c.name = prefix + c.name;
    into.checks.push_back(std::move(c));
  }
}

}  // namespace detail

/// Limit identity on a toric contraction Y -> X, along two independent paths:
/// Laurent periods of the fan polynomials (exceptional coefficient a -> 0) and
/// Givental sums (classes with E . beta = 0 on Y against all classes on X).
inline VerificationReport verify_toric_contraction(const ContractionFixture& fx, std::size_t N) {
  auto start = std::chrono::steady_clock::now();
  check_fixture(fx);
  VerificationReport rep;
  rep.name = fx.name;

  // subdivision of every cone of X that contains the exceptional ray
  const auto& w = fx.exceptional_ray();
  for (std::size_t i = 0; i < fx.fan_x.cones().size(); ++i) {
    Cone parent = fx.fan_x.cone(i);
    if (!parent.contains(w)) continue;
    auto sub = validate_subdivision(parent, detail::pieces_inside(fx.fan_y, parent));
    rep.checks.add("subdivision of " + parent.str(), sub.valid() ? CheckStatus::Pass : CheckStatus::Fail,
                   std::to_string(sub.checks.size()) + " checks");
    if (!sub.valid()) detail::merge_checks(rep.checks, sub, "  ");
  }

  // Laurent side
  LaurentPoly f_y = fan_polynomial(fx.fan_y, fx.exceptional, "a");
  LaurentPoly f_x = fan_polynomial(fx.fan_x);
  LaurentPoly limit = limit_drop(f_y, "a");
  rep.checks.add("limit of f_Y is f_X", limit == f_x ? CheckStatus::Pass : CheckStatus::Fail, limit.str());
  auto py = period_coefficients(f_y, N);
  auto plim = period_coefficients(limit, N);
  auto px = period_coefficients(f_x, N);
  bool positive = std::all_of(py.coefficients.begin(), py.coefficients.end(), [](const ParamPoly& c) { return c.nonnegative_exponents(); });
  rep.checks.add("exceptional parameter exponents are nonnegative", positive ? CheckStatus::Pass : CheckStatus::Fail);
  bool commute = substitute_params(py, {{"a", Rational(0)}}) == plim;
  rep.checks.add("limit commutes with the period series", commute ? CheckStatus::Pass : CheckStatus::Fail);

  // Givental side
  ToricCIData data_y(fx.fan_y.rays());
  ToricCIData data_x(fx.fan_x.rays());
  auto e = ray_divisor(fx.fan_y.rays().size(), fx.exceptional);
  bool all_agree = true;
  for (std::size_t d = 0; d <= N; ++d) {
    DegreeRow row;
    row.degree = static_cast<Int>(d);
    row.laurent_y_limit = plim.value(d);
    row.laurent_x = px.value(d);
    auto restricted = restricted_coefficient(data_y, e, row.degree);
    row.givental_y_s0 = restricted.substitute({{0, Rational(0)}}).constant_value();
    row.givental_x = regularized_coefficient(data_x, row.degree);
    all_agree = all_agree && row.agree();
    rep.table.push_back(row);
  }
  rep.checks.add("Laurent and Givental paths agree in every degree <= " + std::to_string(N),
                 all_agree ? CheckStatus::Pass : CheckStatus::Fail);
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

// ---------------------------------------------------------------------------
// The GRDB #40836 example

namespace example40836 {

inline LatticeVector v(Int a, Int b, Int c) { return LatticeVector({a, b, c}); }

struct Subdivision {
  std::string label;
  Cone parent;
  std::vector<Cone> pieces;
};

inline std::vector<Subdivision> listed_subdivisions() {
  return {
      {"item (1)",
       Cone{v(1, 0, 0), v(0, 1, 0), v(0, 0, 1)},
       {Cone{v(1, 0, 0), v(1, 1, 0), v(1, 0, 1)}, Cone{v(0, 1, 0), v(1, 1, 0), v(0, 1, 1)},
        Cone{v(0, 0, 1), v(1, 0, 1), v(0, 1, 1)}, Cone{v(1, 1, 0), v(1, 0, 1), v(0, 1, 1)}}},
      {"item (2)",
       Cone{v(0, 1, 0), v(0, 0, 1), v(-1, -1, -1)},
       {Cone{v(0, 1, 0), v(0, 1, 1), v(-1, 0, 0), v(-1, 0, -1)}, Cone{v(0, 0, 1), v(0, 1, 1), v(-1, 0, 0), v(-1, -1, 0)},
        Cone{v(-1, -1, -1), v(-1, -1, 0), v(-1, 0, 0), v(-1, 0, -1)}}},
      {"item (3a)",
       Cone{v(0, 1, 0), v(0, 1, 1), v(-1, 0, 0), v(-1, 0, -1)},
       {Cone{v(0, 1, 0), v(-1, 1, -1), v(-1, 1, 1), v(0, 1, 1)}, Cone{v(-1, 1, -1), v(-1, 0, -1), v(-1, 0, 0), v(-1, 1, 1)}}},
      {"item (3b)",
       Cone{v(0, 0, 1), v(0, 1, 1), v(-1, 0, 0), v(-1, -1, 0)},
       {Cone{v(0, 0, 1), v(-1, -1, 1), v(-1, 1, 1), v(0, 1, 1)}, Cone{v(-1, -1, 1), v(-1, -1, 0), v(-1, 0, 0), v(-1, 1, 1)}}},
  };
}

/// Rays of the degenerate fan after the three stages.
inline std::vector<LatticeVector> degenerate_rays() {
  return {v(1, 0, 0),  v(0, 1, 0),  v(0, 0, 1),   v(-1, -1, -1), v(1, 1, 0),  v(1, 0, 1),  v(0, 1, 1),
          v(-1, 0, 0), v(-1, -1, 0), v(-1, 0, -1), v(-1, 1, -1), v(-1, 1, 1), v(-1, -1, 1)};
}

/// The listed final cones, plus a completion of the two P3 cones <e1,e2,e4>,
/// <e1,e3,e4> whose edges acquire new rays.
inline Fan degenerate_fan() {
  auto subs = listed_subdivisions();
  std::vector<Cone> cones = subs[0].pieces;
  cones.push_back(subs[1].pieces[2]);
  for (std::size_t i : {2u, 3u})
    for (const auto& c : subs[i].pieces) cones.push_back(c);
  cones.push_back(Cone{v(1, 1, 0), v(0, 1, 0), v(-1, 1, -1)});
  cones.push_back(Cone{v(1, 1, 0), v(-1, 1, -1), v(-1, 0, -1)});
  cones.push_back(Cone{v(1, 1, 0), v(-1, 0, -1), v(-1, -1, -1), v(1, 0, 0)});
  cones.push_back(Cone{v(1, 0, 1), v(0, 0, 1), v(-1, -1, 1)});
  cones.push_back(Cone{v(1, 0, 1), v(-1, -1, 1), v(-1, -1, 0)});
  cones.push_back(Cone{v(1, 0, 1), v(-1, -1, 0), v(-1, -1, -1), v(1, 0, 0)});
  auto rays = degenerate_rays();
  std::vector<std::vector<std::size_t>> idx;
  for (const auto& c : cones) {
    std::vector<std::size_t> ci;
    for (const auto& g : c.generators()) ci.push_back(std::find(rays.begin(), rays.end(), g) - rays.begin());
    idx.push_back(ci);
  }
  return Fan(3, rays, idx).canonical();
}

inline const LatticeVector kPiPrimeRay = v(1, 1, 1);

inline std::vector<Cone> pi_prime_cones() {
  return {Cone{v(1, 1, 0), v(1, 0, 1), v(1, 1, 1)}, Cone{v(1, 1, 0), v(0, 1, 1), v(1, 1, 1)},
          Cone{v(1, 0, 1), v(0, 1, 1), v(1, 1, 1)}};
}

inline const char* const kFYPrime =
    "x + a1*(y+z) + a2*(x*y+x*z+a1*y*z) + (1+a2*y)^2*(1+a2*z)^2/(x*y*z) + a3*x*y*z";
inline const char* const kFY = "x + a1*(y+z) + a2*(x*y+x*z+a1*y*z) + (1+a2*y)^2*(1+a2*z)^2/(x*y*z)";
inline const char* const kFX = "x + x*y + x*z + (1+y)^2*(1+z)^2/(x*y*z)";

/// Rays rho_1..rho_9 of the ambient toric variety of Y' and the nef partition {D1+D2, D3+D4, D5+D6}.
inline ToricCIData y_prime_data() {
  std::vector<LatticeVector> rays;
  for (std::size_t i = 0; i < 6; ++i) {
    std::vector<Int> e(6, 0);
    e[i] = 1;
    rays.emplace_back(e);
  }
  rays.push_back(LatticeVector({0, -1, 0, -1, 0, -1}));
  rays.push_back(LatticeVector({0, 0, 0, -1, 0, -1}));
  rays.push_back(LatticeVector({-1, 1, -1, -1, -1, -1}));
  return ToricCIData(rays, {{0, 1}, {2, 3}, {4, 5}});
}

}  // namespace example40836

/// The Example 5.1 pipeline, stage by stage. A failed stage stops the run.
inline VerificationReport run_example_40836(std::size_t N) {
  using namespace example40836;
  auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.name = "GRDB #40836";
  auto& checks = rep.checks;

  auto stage = [&](const std::string& label, const std::function<void()>& body) {
    if (rep.aborted_stage) return;
    std::size_t before = checks.checks.size();
    try {
      body();
    } catch (const Error& e) {
      checks.fail(label, e.what());
    }
    for (std::size_t i = before; i < checks.checks.size(); ++i)
      if (checks.checks[i].status == CheckStatus::Fail) {
        rep.aborted_stage = label;
        break;
      }
  };

  Fan p3;
  stage("P3 fan", [&] {
    p3 = projective_fan(3);
    auto r = validate_fan(p3);
    checks.add("P3 fan is a fan", r.valid() ? CheckStatus::Pass : CheckStatus::Fail);
  });

  stage("listed subdivisions", [&] {
    for (const auto& s : listed_subdivisions()) {
      auto r = validate_subdivision(s.parent, s.pieces);
      checks.add(s.label + " subdivides " + s.parent.str() + " into " + std::to_string(s.pieces.size()) + " cones",
                 r.valid() ? CheckStatus::Pass : CheckStatus::Fail);
      if (!r.valid()) detail::merge_checks(checks, r, "  ");
    }
  });

  Fan degenerate;
  stage("degenerate fan", [&] {
    degenerate = degenerate_fan();
    checks.add("degenerate fan assembled", CheckStatus::Pass,
               std::to_string(degenerate.rays().size()) + " rays, " + std::to_string(degenerate.cones().size()) +
                   " maximal cones (two P3 cones completed, see notes)");
    auto vf = validate_fan(degenerate);
    checks.add("degenerate fan is a fan", vf.valid() ? CheckStatus::Pass : CheckStatus::Fail);
    for (std::size_t i = 0; i < p3.cones().size(); ++i) {
      Cone parent = p3.cone(i);
      auto r = validate_subdivision(parent, detail::pieces_inside(degenerate, parent));
      checks.add("it subdivides " + parent.str(), r.valid() ? CheckStatus::Pass : CheckStatus::Fail);
      if (!r.valid()) detail::merge_checks(checks, r, "  ");
    }
    rep.notes.push_back("(-1,0,0) is the midpoint of (-1,1,-1) and (-1,-1,1), so the degenerate fan is not the face fan of its rays");
    rep.notes.push_back("cones over <e1,e2,e4> and <e1,e3,e4> are not described; completed with apex (1,1,0) and (1,0,1)");
  });

  stage("census", [&] {
    rep.census = singularity_census(degenerate);
    std::vector<const CensusEntry*> singular;
    for (const auto& e : rep.census)
      if (e.simplicial && *e.index != 1) singular.push_back(&e);
    bool one = singular.size() == 1;
    checks.add("exactly one simplicial singular cone", one ? CheckStatus::Pass : CheckStatus::Fail,
               std::to_string(singular.size()) + " found");
    if (!one) return;
    const auto& s = *singular.front();
    Cone target{v(1, 1, 0), v(1, 0, 1), v(0, 1, 1)};
    bool same = Cone(s.generators).same_set(target);
    checks.add("the singular cone is <(1,1,0),(1,0,1),(0,1,1)>", same ? CheckStatus::Pass : CheckStatus::Fail, s.cone_str());
    bool type = same_group(*s.quotient, as_decomposition(CyclicQuotient(2, {1, 1, 1})));
    checks.add("its quotient is 1/2(1,1,1), terminal", type && s.singularity->is_terminal ? CheckStatus::Pass : CheckStatus::Fail,
               s.quotient->str() + ", " + s.singularity->str());
  });

  stage("pi' subdivision", [&] {
    auto idx = minimal_face_containing(degenerate, kPiPrimeRay);
    Fan after = star_subdivide(degenerate, *idx, kPiPrimeRay);
    auto pieces = detail::pieces_inside(after, Cone{v(1, 1, 0), v(1, 0, 1), v(0, 1, 1)});
    bool three = pieces.size() == 3;
    std::size_t listed = 0;
    for (const auto& c : pi_prime_cones())
      for (const auto& p : pieces)
        if (p.same_set(c)) ++listed;
    checks.add("pi' gives the three listed cones", three && listed == 3 ? CheckStatus::Pass : CheckStatus::Fail,
               std::to_string(pieces.size()) + " pieces, " + std::to_string(listed) + " listed");
    bool smooth = std::all_of(pieces.begin(), pieces.end(), [](const Cone& c) { return is_smooth_cone(c); });
    checks.add("all three are smooth", smooth ? CheckStatus::Pass : CheckStatus::Fail);
    std::size_t simplicial_singular = 0;
    for (const auto& e : singularity_census(after))
      if (e.simplicial && *e.index != 1) ++simplicial_singular;
    checks.add("no simplicial singular cone remains after pi'", simplicial_singular == 0 ? CheckStatus::Pass : CheckStatus::Fail);

    // reported only: the Newton polytope of f_X against the rays of this fan
    auto verts = newton_polytope(parse_laurent(kFX));
    std::size_t hits = 0;
    for (const auto& nv : verts)
      if (after.ray_index(nv)) ++hits;
    rep.notes.push_back("Newton(f_X) has " + std::to_string(verts.size()) + " vertices; " + std::to_string(hits) +
                        " are rays of the fan after pi' (not asserted: the lattice identification is not given)");
  });

  LaurentPoly fx;
  stage("substitutions", [&] {
    auto fyp = parse_laurent(kFYPrime);
    auto fy = substitute_params(fyp, {{"a3", Rational(0)}});
    checks.add("f~_Y' with a3 -> 0 is f~_Y", fy == parse_laurent(kFY) ? CheckStatus::Pass : CheckStatus::Fail, fy.str());
    fx = substitute_params(fy, {{"a1", Rational(0)}, {"a2", Rational(1)}});
    checks.add("f~_Y with a1 -> 0, a2 -> 1 is f_X", fx == parse_laurent(kFX) ? CheckStatus::Pass : CheckStatus::Fail, fx.str());
  });

  stage("periods", [&] {
    rep.series = period_coefficients(fx, N);
    bool start_ok = rep.series->value(0) == 1 && (N < 1 || rep.series->value(1) == 0);
    checks.add("c0 = 1, c1 = 0", start_ok ? CheckStatus::Pass : CheckStatus::Fail);
  });

  stage("Givental cross-check (reported)", [&] {
    // soft comparison, never gating: classes of Y' with E' . beta = 0 for each candidate E' = D_i
    auto data = y_prime_data();
    auto fy = substitute_params(parse_laurent(kFY), {{"a1", Rational(1)}, {"a2", Rational(1)}});
    const std::size_t M = std::min<std::size_t>(N, 6);
    auto target = period_coefficients(fy, M);
    std::string laurent;
    for (std::size_t d = 0; d <= M; ++d) laurent += (d ? "," : "") + to_string(target.value(d));
    rep.notes.push_back("periods of f~_Y at a1 = a2 = 1: " + laurent);
    for (std::size_t i = 0; i < data.num_rays(); ++i) {
      ClassRestriction r{{ray_divisor(data.num_rays(), i)}};
      std::string seq;
      bool match = true;
      try {
        for (std::size_t d = 0; d <= M; ++d) {
          auto c = regularized_coefficient(data, static_cast<Int>(d), r);
          match = match && c == target.value(d);
          seq += (d ? "," : "") + to_string(c);
        }
      } catch (const Error& e) {
        seq = e.what();
        match = false;
      }
      rep.notes.push_back("Givental with D" + std::to_string(i + 1) + " . beta = 0: " + seq + (match ? " (matches)" : " (differs)"));
    }
  });

  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace toriclg
