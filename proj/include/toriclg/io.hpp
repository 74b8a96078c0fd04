#pragma once

// JSON input and output for the CLI. Malformed documents raise LoadError.

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "toriclg/verify.hpp"

namespace toriclg::io {

using json = nlohmann::json;

/// `arg` is a path to a JSON file, or inline JSON text.
inline json load_json(const std::string& arg) {
  std::string text = arg;
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    fail(ErrorKind::LoadError, "cannot read JSON from '" + arg + "': " + e.what());
  }
}

/// As load_json, but text that is not JSON comes back as a JSON string.
inline json load_json_or_text(const std::string& arg) {
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) return load_json(arg);
  auto j = json::parse(arg, nullptr, false);
  return j.is_discarded() ? json(arg) : j;
}

template <class F>
auto guarded(const std::string& what, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const json::exception& e) {
    fail(ErrorKind::LoadError, what + ": " + e.what());
  }
}

inline LatticeVector vector_from_json(const json& j) { return LatticeVector(j.get<std::vector<Int>>()); }

inline std::vector<LatticeVector> vectors_from_json(const json& j) {
  std::vector<LatticeVector> out;
  for (const auto& v : j) out.push_back(vector_from_json(v));
  return out;
}

inline json to_json(const LatticeVector& v) { return v.coords(); }

inline json to_json(const std::vector<LatticeVector>& vs) {
  json a = json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

/// {"rays": [[..], ..], "cones": [[i, j, ..], ..]}; "dim" is optional.
inline Fan fan_from_json(const json& j) {
  return guarded("fan", [&] {
    auto rays = vectors_from_json(j.at("rays"));
    if (rays.empty()) fail(ErrorKind::LoadError, "fan without rays");
    std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : rays.front().dim();
    return Fan(dim, rays, j.at("cones").get<std::vector<std::vector<std::size_t>>>());
  });
}

inline json to_json(const Fan& f) { return {{"dim", f.dim()}, {"rays", to_json(f.rays())}, {"cones", f.cones()}}; }

inline json to_json(const ValidationReport& r) {
  json checks = json::array();
  for (const auto& c : r.checks) {
    json jc{{"name", c.name}, {"status", std::string(to_string(c.status))}};
    if (!c.detail.empty()) jc["detail"] = c.detail;
    if (c.witness) jc["witness"] = *c.witness;
    checks.push_back(jc);
  }
  return {{"valid", r.valid()}, {"checks", checks}};
}

/// {"kind": "CAnPoint", "params": {"n": 2, ...}, "assume": ["h_plus_ok"]}
inline ContractionSpec contraction_from_json(const json& j) {
  return guarded("contraction", [&] {
    ContractionSpec s;
    s.kind = parse_contraction_kind(j.at("kind").get<std::string>());
    if (j.contains("params")) s.params = j.at("params").get<std::map<std::string, Int>>();
    if (j.contains("assume")) s.assume = j.at("assume").get<std::set<std::string>>();
    return s;
  });
}

inline json to_json(const QuotientDecomposition& q) {
  json factors = json::array();
  for (const auto& f : q.factors) factors.push_back({{"order", f.order()}, {"weights", f.weights()}});
  return {{"coords", q.num_coords}, {"factors", factors}, {"text", q.str()}};
}

inline json to_json(const SingularityClass& c) {
  json j{{"smooth", c.is_smooth},     {"terminal", c.is_terminal},   {"canonical", c.is_canonical},
         {"gorenstein", c.is_gorenstein}, {"group_order", c.group_order}, {"text", c.str()}};
  if (c.min_age) j["min_age"] = to_string(*c.min_age);
  return j;
}

inline json to_json(const ChartReport& c) {
  json j{{"chart", c.chart}, {"quotient", c.quotient_str()}, {"shape", std::string(to_string(c.shape))}};
  if (c.paper) j["printed"] = c.paper->original_str();
  if (c.matches_paper) j["matches_printed"] = *c.matches_paper;
  if (c.marker) j["marker"] = *c.marker;
  if (c.hypersurface_note) j["note"] = *c.hypersurface_note;
  return j;
}

/// {"polynomial": "x + y + 1/(x*y)", "dim": 2, "substitute": {"a": "1/2"}}; a bare string also works.
struct LaurentInput {
  LaurentPoly poly;
  std::map<std::string, Rational> substitutions;
};

inline LaurentInput laurent_from_json(const json& j) {
  return guarded("polynomial", [&] {
    if (j.is_string()) return LaurentInput{parse_laurent(j.get<std::string>()), {}};
    std::size_t dim = j.contains("dim") ? j.at("dim").get<std::size_t>() : 0;
    LaurentInput in{parse_laurent(j.at("polynomial").get<std::string>(), dim), {}};
    if (j.contains("substitute"))
      for (const auto& [k, v] : j.at("substitute").items())
        in.substitutions[k] = v.is_string() ? parse_rational(v.get<std::string>()) : Rational(v.get<Int>());
    return in;
  });
}

inline json to_json(const PeriodSeries& s) {
  json coeffs = json::array();
  for (const auto& c : s.coefficients) coeffs.push_back(c.str(s.params));
  return {{"params", s.params}, {"coefficients", coeffs}};
}

/// {"rays": [...], "nef_partition": [[0, 1], ...], "divisor": [c_1, ..., c_m]}
inline ToricCIData ci_from_json(const json& j) {
  return guarded("toric data", [&] {
    std::vector<std::vector<std::size_t>> partition;
    if (j.contains("nef_partition")) partition = j.at("nef_partition").get<std::vector<std::vector<std::size_t>>>();
    std::optional<std::vector<Int>> divisor;
    if (j.contains("divisor")) divisor = j.at("divisor").get<std::vector<Int>>();
    return ToricCIData(vectors_from_json(j.at("rays")), partition, divisor);
  });
}

/// Either {"name", "fan_x", "exceptional_ray"} (Y is built by star subdivision)
/// or {"name", "fan_y", "exceptional", "fan_x"} (checked as given).
inline ContractionFixture fixture_from_json(const json& j) {
  return guarded("fixture", [&] {
    std::string name = j.value("name", std::string("fixture"));
    Fan x = fan_from_json(j.at("fan_x"));
    if (j.contains("exceptional_ray")) return make_fixture(name, x, vector_from_json(j.at("exceptional_ray")));
    return ContractionFixture{name, fan_from_json(j.at("fan_y")).canonical(), j.at("exceptional").get<std::size_t>(), x.canonical()};
  });
}

inline json to_json(const VerificationReport& r, bool with_timing = true) {
  json j{{"name", r.name}, {"verdict", r.verdict() ? "pass" : "fail"}, {"checks", to_json(r.checks)}};
  if (!r.table.empty()) {
    json rows = json::array();
    for (const auto& row : r.table)
      rows.push_back({{"degree", row.degree},
                      {"laurent_y_limit", to_string(row.laurent_y_limit)},
                      {"laurent_x", to_string(row.laurent_x)},
                      {"givental_y_s0", to_string(row.givental_y_s0)},
                      {"givental_x", to_string(row.givental_x)}});
    j["table"] = rows;
  }
  if (!r.census.empty()) {
    json c = json::array();
    for (const auto& e : r.census) c.push_back(e.str());
    j["census"] = c;
  }
  if (r.series) j["periods"] = to_json(*r.series);
  if (!r.notes.empty()) j["notes"] = r.notes;
  if (r.aborted_stage) j["aborted_stage"] = *r.aborted_stage;
  if (with_timing) j["seconds"] = r.seconds;
  return j;
}

}  // namespace toriclg::io
