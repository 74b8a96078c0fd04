// toriclg: command-line front end.
// Exit codes: 0 pass, 1 verification failure, 2 input error.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "toriclg/io.hpp"

using namespace toriclg;
using io::json;

namespace {

struct Options {
  std::size_t order = 8;
  bool json_out = false;
  std::string input;
  std::string ray;
  std::string golden;
  std::string write_golden;
};

constexpr int kPass = 0, kFail = 1, kInputError = 2;

void emit(const Options& o, const json& j, const std::string& text) {
  if (o.json_out)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

std::string render(const ValidationReport& r) {
  std::string s;
  for (const auto& c : r.checks) {
    s += "[" + std::string(to_string(c.status)) + "] " + c.name;
    if (!c.detail.empty()) s += ": " + c.detail;
    s += "\n";
  }
  return s + "valid: " + (r.valid() ? "yes" : "no") + "\n";
}

LatticeVector parse_ray(const std::string& s) {
  std::vector<Int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoll(tok));
    } catch (...) {
      fail(ErrorKind::ParseError, "bad ray '" + s + "'");
    }
  }
  return LatticeVector(v);
}

int fan_check(const Options& o) {
  Fan f = io::fan_from_json(io::load_json(o.input));
  auto r = validate_fan(f);
  emit(o, io::to_json(r), render(r));
  return r.valid() ? kPass : kFail;
}

int fan_blowup(const Options& o) {
  Fan f = io::fan_from_json(io::load_json(o.input));
  auto w = parse_ray(o.ray);
  auto face = minimal_face_containing(f, w);
  if (!face) fail(ErrorKind::NotInterior, w.str() + " lies in no cone of the fan");
  Fan g = star_subdivide(f, *face, w);
  std::string text;
  for (std::size_t i = 0; i < g.cones().size(); ++i) text += g.cone(i).str() + "\n";
  emit(o, io::to_json(g), text);
  return kPass;
}

int fan_polytope_cmd(const Options& o) {
  auto p = fan_polytope(io::fan_from_json(io::load_json(o.input)));
  std::string text = "vertices:";
  for (const auto& v : p.vertices) text += " " + v.str();
  text += "\nnon-vertex rays:";
  for (const auto& v : p.non_vertex_rays) text += " " + v.str();
  emit(o, {{"vertices", io::to_json(p.vertices)}, {"non_vertex_rays", io::to_json(p.non_vertex_rays)}}, text + "\n");
  return kPass;
}

int sing_classify(const Options& o) {
  auto q = parse_quotient(o.input);
  auto c = classify(q);
  emit(o, io::to_json(c), q.str() + ": " + c.str() + "\n");
  return kPass;
}

int sing_from_cone(const Options& o) {
  Cone c(io::vectors_from_json(io::load_json(o.input)));
  auto q = quotient_from_cone(c);
  auto s = classify(q);
  json j{{"quotient", io::to_json(q)}, {"class", io::to_json(s)}, {"index", cone_index(c)}};
  emit(o, j, c.str() + ": " + q.str() + (q.is_trivial() ? "" : ", " + s.str()) + "\n");
  return kPass;
}

int contraction_validate(const Options& o) {
  auto r = validate_contraction(io::contraction_from_json(io::load_json(o.input)));
  emit(o, io::to_json(r), render(r));
  return r.valid() ? kPass : kFail;
}

int contraction_charts(const Options& o) {
  auto charts = build_degeneration_charts(io::contraction_from_json(io::load_json(o.input)));
  json arr = json::array();
  std::string text;
  bool ok = true;
  for (const auto& c : charts) {
    arr.push_back(io::to_json(c));
    text += c.chart + "-chart: " + c.quotient_str() + ", " + std::string(to_string(c.shape));
    if (c.marker) text += " (" + *c.marker + ")";
    if (c.paper) text += (*c.matches_paper ? ", matches printed " : ", DIFFERS from printed ") + c.paper->original_str();
    if (c.hypersurface_note) text += "; " + *c.hypersurface_note;
    text += "\n";
    if (c.matches_paper && !*c.matches_paper) ok = false;
  }
  emit(o, arr, text);
  return ok ? kPass : kFail;
}

int period_laurent(const Options& o) {
  auto in = io::laurent_from_json(io::load_json_or_text(o.input));
  LaurentPoly f = in.substitutions.empty() ? in.poly : substitute_params(in.poly, in.substitutions);
  auto s = period_coefficients(f, o.order);
  emit(o, io::to_json(s), s.str());
  return kPass;
}

int period_givental(const Options& o) {
  auto data = io::ci_from_json(io::load_json(o.input));
  json arr = json::array();
  std::string text;
  for (std::size_t d = 0; d <= o.order; ++d) {
    auto c = to_string(regularized_coefficient(data, static_cast<Int>(d)));
    arr.push_back(c);
    text += std::to_string(d) + ": " + c + "\n";
  }
  emit(o, arr, text);
  return kPass;
}

int period_restricted(const Options& o) {
  auto data = io::ci_from_json(io::load_json(o.input));
  json arr = json::array();
  std::string text;
  for (std::size_t d = 0; d <= o.order; ++d) {
    auto c = restricted_coefficient(data, static_cast<Int>(d)).str({"s"});
    arr.push_back(c);
    text += std::to_string(d) + ": " + c + "\n";
  }
  emit(o, arr, text);
  return kPass;
}

int verify_contraction(const Options& o) {
  std::vector<ContractionFixture> fixtures;
  if (o.input.empty())
    fixtures = standard_fixtures();
  else
    fixtures.push_back(io::fixture_from_json(io::load_json(o.input)));
  json arr = json::array();
  std::string text;
  bool ok = true;
  for (const auto& fx : fixtures) {
    auto r = verify_toric_contraction(fx, o.order);
    arr.push_back(io::to_json(r));
    text += r.render() + "\n";
    ok = ok && r.verdict();
  }
  emit(o, arr, text);
  return ok ? kPass : kFail;
}

int verify_example(const Options& o) {
  auto r = run_example_40836(o.order);
  const std::string stable = r.render(false);
  if (!o.write_golden.empty()) {
    std::ofstream out(o.write_golden);
    if (!out) fail(ErrorKind::LoadError, "cannot write " + o.write_golden);
    out << stable;
  }
  bool ok = r.verdict();
  std::string text = r.render();
  if (!o.golden.empty()) {
    std::ifstream in(o.golden);
    if (!in) fail(ErrorKind::LoadError, "cannot read golden file " + o.golden);
    std::stringstream ss;
    ss << in.rdbuf();
    bool same = ss.str() == stable;
    text += std::string("golden: ") + (same ? "identical" : "DIFFERS") + "\n";
    ok = ok && same;
  }
  emit(o, io::to_json(r), text);
  return ok ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"toric weighted blow-ups, quotient singularities and period identities"};
  app.require_subcommand(1);
  Options o;
  std::function<int(const Options&)> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& desc, int (*fn)(const Options&),
                  const std::string& input_desc, bool input_required = true) {
    auto* sub = parent->add_subcommand(name, desc);
    auto* opt = sub->add_option("input", o.input, input_desc);
    if (input_required) opt->required();
    sub->add_option("--order", o.order, "maximal degree (default 8)");
    sub->add_flag("--json", o.json_out, "machine-readable output");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };

  auto* fan = app.add_subcommand("fan", "fan utilities")->require_subcommand(1);
  leaf(fan, "check", "validate a fan", fan_check, "fan JSON (file or text)");
  leaf(fan, "blowup", "star subdivision at a ray", fan_blowup, "fan JSON (file or text)")
      ->add_option("--ray", o.ray, "ray to insert, e.g. 1,1,1")
      ->required();
  leaf(fan, "polytope", "fan polytope of the rays", fan_polytope_cmd, "fan JSON (file or text)");

  auto* sing = app.add_subcommand("sing", "quotient singularities")->require_subcommand(1);
  leaf(sing, "classify", "classify 1/n(a1,...,ak)", sing_classify, "quotient type, e.g. 1/2(1,1,1)");
  leaf(sing, "from-cone", "quotient of a simplicial cone", sing_from_cone, "generators as JSON, e.g. [[1,0],[1,2]]");

  auto* con = app.add_subcommand("contraction", "divisorial contraction data")->require_subcommand(1);
  leaf(con, "validate", "check the numerical conditions", contraction_validate, "contraction JSON");
  leaf(con, "charts", "chart quotients of the degeneration", contraction_charts, "contraction JSON");

  auto* per = app.add_subcommand("period", "period sequences")->require_subcommand(1);
  leaf(per, "laurent", "constant terms of powers", period_laurent, "polynomial text or JSON");
  leaf(per, "givental", "regularized Givental coefficients", period_givental, "toric data JSON");
  leaf(per, "restricted", "coefficients graded by the divisor of interest", period_restricted, "toric data JSON");

  auto* ver = app.add_subcommand("verify", "end-to-end verifiers")->require_subcommand(1);
  leaf(ver, "contraction", "limit identity on a toric contraction", verify_contraction,
       "fixture JSON (omit for the built-in fixtures)", false);
  auto* ex = leaf(ver, "example-40836", "the GRDB #40836 pipeline", verify_example, "unused", false);
  ex->add_option("--golden", o.golden, "compare against a stored report");
  ex->add_option("--write-golden", o.write_golden, "store the timing-free report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kPass : kInputError;
  }
  try {
    return action(o);
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return kInputError;
  }
}
