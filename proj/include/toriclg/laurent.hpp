#pragma once

#include <algorithm>
#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "toriclg/lattice.hpp"

namespace toriclg {

using Exponent = std::vector<Int>;

/// Polynomial in formal parameters with rational coefficients. The number of
/// parameters is the length of every exponent key; names live on the owner.
class ParamPoly {
 public:
  ParamPoly() = default;
  explicit ParamPoly(std::size_t nparams) : nparams_(nparams) {}
  static ParamPoly constant(std::size_t nparams, const Rational& c) {
    ParamPoly p(nparams);
    if (c != 0) p.terms_[Exponent(nparams, 0)] = c;
    return p;
  }
  static ParamPoly variable(std::size_t nparams, std::size_t i) {
    ParamPoly p(nparams);
    Exponent e(nparams, 0);
    e[i] = 1;
    p.terms_[e] = 1;
    return p;
  }

  std::size_t num_params() const { return nparams_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && is_zero_exp(terms_.begin()->first)); }
  Rational constant_value() const {
    auto it = terms_.find(Exponent(nparams_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  void add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  ParamPoly& operator+=(const ParamPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  friend ParamPoly operator+(ParamPoly a, const ParamPoly& b) { return a += b; }
  friend ParamPoly operator-(const ParamPoly& a) {
    ParamPoly r(a.nparams_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend ParamPoly operator-(const ParamPoly& a, const ParamPoly& b) { return a + (-b); }

  friend ParamPoly operator*(const ParamPoly& a, const ParamPoly& b) {
    ParamPoly r(a.nparams_);
    if (a.is_constant() && b.is_constant()) {
      if (!a.is_zero() && !b.is_zero()) r.add_term(Exponent(a.nparams_, 0), a.constant_value() * b.constant_value());
      return r;
    }
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponent e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  /// Multiply-accumulate: *this += a * b.
  void add_product(const ParamPoly& a, const ParamPoly& b) {
    if (a.is_constant() && b.is_constant()) {
      if (!a.is_zero() && !b.is_zero()) add_term(Exponent(nparams_, 0), a.constant_value() * b.constant_value());
      return;
    }
    *this += a * b;
  }

  bool operator==(const ParamPoly& o) const { return terms_ == o.terms_; }

  /// Substitutes values for some parameters; the result keeps the same parameter slots.
  ParamPoly substitute(const std::map<std::size_t, Rational>& values) const {
    ParamPoly r(nparams_);
    for (const auto& [e, c] : terms_) {
      Rational v = c;
      Exponent ne = e;
      for (const auto& [i, q] : values) {
        if (e[i] == 0) continue;
        v *= pow_rational(q, e[i]);
        ne[i] = 0;
      }
      r.add_term(ne, v);
    }
    return r;
  }

  /// Re-indexes parameter slots: slot i moves to map[i] in a space of `n` parameters.
  ParamPoly reindex(const std::vector<std::size_t>& map, std::size_t n) const {
    ParamPoly r(n);
    for (const auto& [e, c] : terms_) {
      Exponent ne(n, 0);
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i] != 0) ne[map[i]] = e[i];
      r.add_term(ne, c);
    }
    return r;
  }

  /// Every parameter exponent is >= 0.
  bool nonnegative_exponents() const {
    for (const auto& [e, c] : terms_)
      for (Int v : e)
        if (v < 0) return false;
    return true;
  }

  std::string str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // higher parameter degree first reads better; keep it deterministic
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      std::string mono;
      for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        mono += (mono.empty() ? "" : "*") + names.at(i);
        if (e[i] != 1) mono += "^" + std::to_string(e[i]);
      }
      Rational mag = c < 0 ? Rational(-c) : c;
      std::string piece;
      if (mono.empty())
        piece = to_string(mag);
      else if (mag == 1)
        piece = mono;
      else
        piece = to_string(mag) + "*" + mono;
      if (first)
        s = (c < 0 ? "-" : "") + piece;
      else
        s += (c < 0 ? " - " : " + ") + piece;
      first = false;
    }
    return s;
  }

 private:
  static bool is_zero_exp(const Exponent& e) {
    return std::all_of(e.begin(), e.end(), [](Int v) { return v == 0; });
  }
  static Rational pow_rational(const Rational& q, Int k) {
    Rational r = 1;
    for (Int i = 0; i < k; ++i) r *= q;
    return r;
  }

  std::size_t nparams_ = 0;
  std::map<Exponent, Rational> terms_;
};

/// Sparse Laurent polynomial in x_1..x_dim with ParamPoly coefficients.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(std::size_t dim, std::vector<std::string> params) : dim_(dim), params_(std::move(params)) {
    if (!std::is_sorted(params_.begin(), params_.end()) ||
        std::adjacent_find(params_.begin(), params_.end()) != params_.end())
      fail(ErrorKind::InvalidParameters, "parameter names must be sorted and distinct");
  }

  std::size_t dim() const { return dim_; }
  const std::vector<std::string>& params() const { return params_; }
  const std::map<Exponent, ParamPoly>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  std::optional<std::size_t> param_index(std::string_view name) const {
    auto it = std::lower_bound(params_.begin(), params_.end(), name);
    if (it == params_.end() || *it != name) return std::nullopt;
    return static_cast<std::size_t>(it - params_.begin());
  }

  void add_term(const Exponent& e, const ParamPoly& c) {
    if (e.size() != dim_) fail(ErrorKind::DimMismatch, "exponent of the wrong length");
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
  void add_term(const Exponent& e, const Rational& c) { add_term(e, ParamPoly::constant(params_.size(), c)); }

  ParamPoly coefficient(const Exponent& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? ParamPoly(params_.size()) : it->second;
  }
  ParamPoly constant_term() const { return coefficient(Exponent(dim_, 0)); }

  /// Same polynomial over a larger sorted parameter list (a superset of the current one).
  LaurentPoly with_params(const std::vector<std::string>& names) const {
    std::vector<std::size_t> map;
    for (const auto& p : params_) {
      auto it = std::lower_bound(names.begin(), names.end(), p);
      if (it == names.end() || *it != p) fail(ErrorKind::InvalidParameters, "parameter list does not contain " + p);
      map.push_back(static_cast<std::size_t>(it - names.begin()));
    }
    LaurentPoly r(dim_, names);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.reindex(map, names.size());
    return r;
  }

  friend std::vector<std::string> merged_params(const LaurentPoly& a, const LaurentPoly& b) {
    std::vector<std::string> m;
    std::set_union(a.params_.begin(), a.params_.end(), b.params_.begin(), b.params_.end(), std::back_inserter(m));
    return m;
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    check_dims(a, b);
    auto names = merged_params(a, b);
    LaurentPoly r = a.with_params(names);
    for (const auto& [e, c] : b.with_params(names).terms_) r.add_term(e, c);
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    LaurentPoly r(a.dim_, a.params_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    check_dims(a, b);
    auto names = merged_params(a, b);
    LaurentPoly x = a.with_params(names), y = b.with_params(names);
    LaurentPoly r(a.dim_, names);
    for (const auto& [ea, ca] : x.terms_)
      for (const auto& [eb, cb] : y.terms_) {
        Exponent e(a.dim_);
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = checked_add(ea[i], eb[i]);
        r.add_term(e, ca * cb);
      }
    return r;
  }

  LaurentPoly pow(Int k) const {
    if (k < 0) fail(ErrorKind::InvalidParameters, "negative power of a Laurent polynomial");
    LaurentPoly r(dim_, params_);
    r.add_term(Exponent(dim_, 0), 1);
    for (Int i = 0; i < k; ++i) r = r * (*this);
    return r;
  }

  /// Drops parameters that no longer occur.
  LaurentPoly compact() const {
    std::vector<bool> used(params_.size(), false);
    for (const auto& [e, c] : terms_)
      for (const auto& [pe, q] : c.terms())
        for (std::size_t i = 0; i < pe.size(); ++i)
          if (pe[i] != 0) used[i] = true;
    std::vector<std::string> names;
    std::vector<std::size_t> map(params_.size(), 0);
    for (std::size_t i = 0; i < params_.size(); ++i)
      if (used[i]) {
        map[i] = names.size();
        names.push_back(params_[i]);
      }
    LaurentPoly r(dim_, names);
    for (const auto& [e, c] : terms_) r.terms_[e] = c.reindex(map, names.size());
    return r;
  }

  /// Equal as polynomials (parameters that do not occur are ignored).
  bool operator==(const LaurentPoly& o) const {
    if (dim_ != o.dim_) return false;
    auto a = compact(), b = o.compact();
    return a.params_ == b.params_ && a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  static void check_dims(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.dim_ != b.dim_) fail(ErrorKind::DimMismatch, "Laurent polynomials in different dimensions");
  }

  std::size_t dim_ = 0;
  std::vector<std::string> params_;
  std::map<Exponent, ParamPoly> terms_;
};

inline std::string variable_name(std::size_t i, std::size_t dim) {
  static const char* const short_names[] = {"x", "y", "z", "w"};
  if (dim <= 4) return short_names[i];
  return "x" + std::to_string(i + 1);
}

/// Canonical text: terms in lexicographic exponent order, x^-1 for inverses.
inline std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      mono += (mono.empty() ? "" : "*") + variable_name(i, dim_);
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    bool negative = false;
    std::string coeff;
    if (c.terms().size() == 1) {
      const auto& [pe, q] = *c.terms().begin();
      negative = q < 0;
      coeff = (negative ? -c : c).str(params_);
    } else {
      coeff = "(" + c.str(params_) + ")";
    }
    std::string piece;
    if (mono.empty())
      piece = coeff;
    else if (coeff == "1")
      piece = mono;
    else
      piece = coeff + "*" + mono;
    if (first)
      s = (negative ? "-" : "") + piece;
    else
      s += (negative ? " - " : " + ") + piece;
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------------------
// Parsing

namespace detail {

class LaurentParser {
 public:
  LaurentParser(std::string_view text, std::size_t min_dim) : text_(text) {
    tokenize();
    // first pass: collect variables and parameter names
    std::size_t dim = min_dim;
    std::set<std::string> params;
    for (const auto& t : toks_) {
      if (t.kind != Tok::Ident) continue;
      if (auto v = variable_index(t.text))
        dim = std::max(dim, *v + 1);
      else
        params.insert(t.text);
    }
    if (dim == 0) dim = 1;
    dim_ = dim;
    params_.assign(params.begin(), params.end());
  }

  LaurentPoly parse() {
    auto r = expr();
    if (peek().kind != Tok::End) error("unexpected '" + peek().text + "'");
    return r;
  }

 private:
  enum class Tok { Num, Ident, Op, End };
  struct Token {
    Tok kind;
    std::string text;
  };

  static std::optional<std::size_t> variable_index(const std::string& s) {
    if (s == "x") return 0;
    if (s == "y") return 1;
    if (s == "z") return 2;
    if (s == "w") return 3;
    if (s.size() >= 2 && s[0] == 'x' && std::all_of(s.begin() + 1, s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      std::size_t i = std::stoul(s.substr(1));
      if (i == 0) return std::nullopt;
      return i - 1;
    }
    return std::nullopt;
  }

  [[noreturn]] void error(const std::string& msg) const {
    fail(ErrorKind::ParseError, msg + " in '" + std::string(text_) + "'");
  }

  void tokenize() {
    std::size_t i = 0;
    while (i < text_.size()) {
      char c = text_[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++i;
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        std::size_t j = i;
        while (j < text_.size() && std::isdigit(static_cast<unsigned char>(text_[j]))) ++j;
        toks_.push_back({Tok::Num, std::string(text_.substr(i, j - i))});
        i = j;
      } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
        std::size_t j = i;
        while (j < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[j])) || text_[j] == '_')) ++j;
        toks_.push_back({Tok::Ident, std::string(text_.substr(i, j - i))});
        i = j;
      } else if (std::string_view("+-*/^()").find(c) != std::string_view::npos) {
        toks_.push_back({Tok::Op, std::string(1, c)});
        ++i;
      } else {
        error(std::string("unexpected character '") + c + "'");
      }
    }
    toks_.push_back({Tok::End, ""});
  }

  const Token& peek() const { return toks_[pos_]; }
  bool accept(const char* op) {
    if (peek().kind == Tok::Op && peek().text == op) {
      ++pos_;
      return true;
    }
    return false;
  }

  LaurentPoly constant(const Rational& q) const {
    LaurentPoly p(dim_, params_);
    p.add_term(Exponent(dim_, 0), q);
    return p;
  }

  // a single term with a parameter-free coefficient
  static bool is_monomial(const LaurentPoly& p) {
    return p.size() == 1 && p.terms().begin()->second.is_constant();
  }

  LaurentPoly invert_monomial(const LaurentPoly& p) const {
    if (!is_monomial(p)) error("only monomials may be inverted");
    const auto& [e, c] = *p.terms().begin();
    Exponent ne(e.size());
    for (std::size_t i = 0; i < e.size(); ++i) ne[i] = -e[i];
    LaurentPoly r(dim_, params_);
    r.add_term(ne, 1 / c.constant_value());
    return r;
  }

  LaurentPoly expr() {
    LaurentPoly acc = term();
    for (;;) {
      if (accept("+"))
        acc = acc + term();
      else if (accept("-"))
        acc = acc - term();
      else
        return acc;
    }
  }

  LaurentPoly term() {
    LaurentPoly acc = unary();
    for (;;) {
      if (accept("*"))
        acc = acc * unary();
      else if (accept("/"))
        acc = acc * invert_monomial(unary());
      else
        return acc;
    }
  }

  LaurentPoly unary() {
    if (accept("-")) return -unary();
    if (accept("+")) return unary();
    return power();
  }

  LaurentPoly power() {
    LaurentPoly base = atom();
    if (!accept("^")) return base;
    bool neg = false;
    if (accept("-"))
      neg = true;
    else
      accept("+");
    if (peek().kind != Tok::Num) error("exponent must be an integer");
    Int k = 0;
    try {
      k = std::stoll(toks_[pos_++].text);
    } catch (...) {
      error("exponent out of range");
    }
    if (neg) return invert_monomial(base).pow(k);
    return base.pow(k);
  }

  LaurentPoly atom() {
    const Token t = peek();
    if (t.kind == Tok::Num) {
      ++pos_;
      return constant(Rational(BigInt(t.text)));
    }
    if (t.kind == Tok::Ident) {
      ++pos_;
      LaurentPoly p(dim_, params_);
      if (auto v = variable_index(t.text)) {
        Exponent e(dim_, 0);
        e[*v] = 1;
        p.add_term(e, 1);
      } else {
        auto i = static_cast<std::size_t>(std::lower_bound(params_.begin(), params_.end(), t.text) - params_.begin());
        p.add_term(Exponent(dim_, 0), ParamPoly::variable(params_.size(), i));
      }
      return p;
    }
    if (accept("(")) {
      auto r = expr();
      if (!accept(")")) error("missing ')'");
      return r;
    }
    error(t.kind == Tok::End ? "unexpected end of input" : "unexpected '" + t.text + "'");
  }

  std::string_view text_;
  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  std::size_t dim_ = 0;
  std::vector<std::string> params_;
};

}  // namespace detail

/// Parses a Laurent polynomial. Variables are x, y, z, w (= x1..x4) or xN;
/// any other identifier is a formal parameter. Division is only by monomials.
inline LaurentPoly parse_laurent(std::string_view text, std::size_t dim = 0) {
  return detail::LaurentParser(text, dim).parse().compact();
}

// ---------------------------------------------------------------------------
// Geometry and periods

inline std::vector<LatticeVector> exponent_points(const LaurentPoly& f) {
  std::vector<LatticeVector> pts;
  for (const auto& [e, c] : f.terms()) pts.emplace_back(e);
  return pts;
}

inline std::vector<LatticeVector> newton_polytope(const LaurentPoly& f) {
  if (f.is_zero()) fail(ErrorKind::DegenerateInput, "Newton polytope of the zero polynomial");
  return hull_vertices(exponent_points(f));
}

struct PeriodSeries {
  std::vector<std::string> params;
  std::vector<ParamPoly> coefficients;  // c_0 .. c_N
  bool regularized = true;              // c_k is the constant term of f^k

  std::size_t size() const { return coefficients.size(); }
  const ParamPoly& operator[](std::size_t k) const { return coefficients[k]; }

  /// Parameter-free coefficient as a rational; throws if a parameter survives.
  Rational value(std::size_t k) const {
    if (!coefficients[k].is_constant()) fail(ErrorKind::InvalidParameters, "coefficient depends on parameters");
    return coefficients[k].constant_value();
  }

  /// Lines "k: value".
  std::string str() const {
    std::string s;
    for (std::size_t k = 0; k < coefficients.size(); ++k) s += std::to_string(k) + ": " + coefficients[k].str(params) + "\n";
    return s;
  }

  bool operator==(const PeriodSeries& o) const { return params == o.params && coefficients == o.coefficients; }
};

/// c_k = constant term of f^k for k = 0..N.
///
/// The partial product f^j is pruned to exponents e with -e in (N - j) Newton(f):
/// any later contribution to a constant term adds at most N - j exponents of f.
/// When 0 lies outside Newton(f) every c_k with k >= 1 vanishes; otherwise the
/// dilates are nested, so one bound covers every k <= N.
inline PeriodSeries period_coefficients(const LaurentPoly& f, std::size_t N) {
  PeriodSeries out;
  out.params = f.params();
  const std::size_t np = f.params().size();
  out.coefficients.push_back(ParamPoly::constant(np, 1));
  if (N == 0) return out;
  if (f.is_zero()) {
    for (std::size_t k = 1; k <= N; ++k) out.coefficients.emplace_back(np);
    return out;
  }
  Polytope newton(exponent_points(f));
  const std::size_t d = f.dim();
  if (!newton.contains_dilate(LatticeVector(std::vector<Int>(d, 0)), 1)) {
    for (std::size_t k = 1; k <= N; ++k) out.coefficients.emplace_back(np);
    return out;
  }
  std::vector<std::pair<Exponent, ParamPoly>> fterms(f.terms().begin(), f.terms().end());
  std::map<Exponent, ParamPoly> cur;
  cur[Exponent(d, 0)] = ParamPoly::constant(np, 1);
  for (std::size_t j = 1; j <= N; ++j) {
    const Int remaining = static_cast<Int>(N - j);
    std::map<Exponent, ParamPoly> next;
    std::map<Exponent, bool> keep;
    for (const auto& [e, c] : cur) {
      for (const auto& [fe, fc] : fterms) {
        Exponent s(d);
        for (std::size_t i = 0; i < d; ++i) s[i] = checked_add(e[i], fe[i]);
        auto k = keep.find(s);
        if (k == keep.end()) {
          Exponent neg(d);
          for (std::size_t i = 0; i < d; ++i) neg[i] = -s[i];
          k = keep.emplace(s, newton.contains_dilate(LatticeVector(neg), remaining)).first;
        }
        if (!k->second) continue;
        auto [it, inserted] = next.try_emplace(s, np);
        it->second.add_product(c, fc);
      }
    }
    for (auto it = next.begin(); it != next.end();)
      it = it->second.is_zero() ? next.erase(it) : std::next(it);
    cur = std::move(next);
    auto c0 = cur.find(Exponent(d, 0));
    out.coefficients.push_back(c0 == cur.end() ? ParamPoly(np) : c0->second);
  }
  return out;
}

/// Exact substitution of parameter values; substituted parameters are removed.
inline LaurentPoly substitute_params(const LaurentPoly& f, const std::map<std::string, Rational>& values) {
  std::map<std::size_t, Rational> idx;
  for (const auto& [name, q] : values) {
    auto i = f.param_index(name);
    if (!i) fail(ErrorKind::UnknownParam, "no parameter named '" + name + "'");
    idx[*i] = q;
  }
  std::vector<std::string> rest;
  std::vector<std::size_t> map(f.params().size(), 0);
  for (std::size_t i = 0; i < f.params().size(); ++i)
    if (!idx.count(i)) {
      map[i] = rest.size();
      rest.push_back(f.params()[i]);
    }
  LaurentPoly r(f.dim(), rest);
  for (const auto& [e, c] : f.terms()) r.add_term(e, c.substitute(idx).reindex(map, rest.size()));
  return r;
}

/// The parameter -> 0 limit (the exceptional marker vanishing as r -> infinity).
inline LaurentPoly limit_drop(const LaurentPoly& f, const std::string& param) {
  return substitute_params(f, {{param, Rational(0)}});
}

/// Evaluates parameters in every coefficient of a series.
inline PeriodSeries substitute_params(const PeriodSeries& s, const std::map<std::string, Rational>& values) {
  std::map<std::size_t, Rational> idx;
  for (const auto& [name, q] : values) {
    auto it = std::lower_bound(s.params.begin(), s.params.end(), name);
    if (it == s.params.end() || *it != name) fail(ErrorKind::UnknownParam, "no parameter named '" + name + "'");
    idx[static_cast<std::size_t>(it - s.params.begin())] = q;
  }
  PeriodSeries out;
  std::vector<std::size_t> map(s.params.size(), 0);
  for (std::size_t i = 0; i < s.params.size(); ++i)
    if (!idx.count(i)) {
      map[i] = out.params.size();
      out.params.push_back(s.params[i]);
    }
  out.regularized = s.regularized;
  for (const auto& c : s.coefficients) out.coefficients.push_back(c.substitute(idx).reindex(map, out.params.size()));
  return out;
}

/// Monomial change of variables e -> M e.
inline LaurentPoly unimodular_substitution(const LaurentPoly& f, const IntMatrix& m) {
  if (m.rows() != f.dim() || m.cols() != f.dim()) fail(ErrorKind::InvalidMatrix, "matrix size does not match the dimension");
  auto det = determinant(m);
  if (det != 1 && det != -1) fail(ErrorKind::InvalidMatrix, "matrix is not unimodular (det " + det.str() + ")");
  LaurentPoly r(f.dim(), f.params());
  for (const auto& [e, c] : f.terms()) r.add_term(m.apply(e), c);
  return r;
}

}  // namespace toriclg
