#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "json.hpp"

#include "hermsos/polynomial.hpp"
#include "hermsos/sos.hpp"
#include "hermsos/verify.hpp"

namespace hermsos {

/// Malformed document. `position` is a byte offset into the input for text
/// and JSON syntax errors; schema errors carry a JSON path in the message.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& what)
      : std::runtime_error("at position " + std::to_string(position) + ": " + what), position_(position) {}
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}

  std::optional<std::size_t> position() const { return position_; }

 private:
  std::optional<std::size_t> position_;
};

using Json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON

namespace detail {

inline Json integer_to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(v.get_si());
  return Json(v.get_str());
}

inline Integer integer_from_json(const Json& j, const std::string& path) {
  if (j.is_number_integer()) return Integer(std::to_string(j.get<long long>()));
  if (j.is_number_unsigned()) return Integer(std::to_string(j.get<unsigned long long>()));
  if (j.is_string()) {
    const auto& s = j.get_ref<const std::string&>();
    Integer v;
    if (s.empty() || v.set_str(s, 10) != 0) throw ParseError(path + ": not an integer string");
    return v;
  }
  throw ParseError(path + ": expected an integer");
}

inline Json rational_to_json(const Rational& q) {
  return Json::array({integer_to_json(q.get_num()), integer_to_json(q.get_den())});
}

inline Rational rational_from_json(const Json& j, const std::string& path, bool strict) {
  if (!j.is_array() || j.size() != 2) throw ParseError(path + ": expected [num, den]");
  const Integer num = integer_from_json(j[0], path + "[0]");
  const Integer den = integer_from_json(j[1], path + "[1]");
  if (den == 0) throw ParseError(path + ": zero denominator");
  Rational q = make_rational(num, den);
  if (strict && (den < 0 || q.get_num() != num || q.get_den() != den)) {
    throw ParseError(path + ": fraction not in lowest terms with positive denominator");
  }
  return q;
}

inline Json index_to_json(const MultiIndex& m) { return Json(m.exponents()); }

inline MultiIndex index_from_json(const Json& j, std::size_t len, const std::string& path) {
  if (!j.is_array() || j.size() != len) {
    throw ParseError(path + ": expected an array of " + std::to_string(len) + " exponents");
  }
  std::vector<int> e;
  for (std::size_t i = 0; i < len; ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 0 || j[i].get<long long>() > 1'000'000) {
      throw ParseError(path + "[" + std::to_string(i) + "]: expected a non-negative integer");
    }
    e.push_back(static_cast<int>(j[i].get<long long>()));
  }
  return MultiIndex(std::move(e));
}

}  // namespace detail

/// Canonical JSON: terms sorted lex by key, reduced fractions, no zero terms.
template <class Kind>
Json to_json(const Polynomial<Kind>& p) {
  const std::size_t n = p.nvars();
  Json terms = Json::array();
  for (const auto& [k, c] : p.terms()) {
    Json t;
    if constexpr (Kind::slots == 2) {
      t["alpha"] = detail::index_to_json(alpha_of(k, n));
      t["beta"] = detail::index_to_json(beta_of(k, n));
    } else {
      t["alpha"] = detail::index_to_json(k);
    }
    t["re"] = detail::rational_to_json(c.re());
    t["im"] = detail::rational_to_json(c.im());
    terms.push_back(std::move(t));
  }
  return Json{{"nvars", n}, {"terms", std::move(terms)}};
}

/// Read a polynomial from its JSON object. In strict mode the document must
/// already be canonical; otherwise duplicate keys are summed and zeros dropped.
template <class Kind>
Polynomial<Kind> polynomial_from_json(const Json& j, bool strict = false) {
  if (!j.is_object()) throw ParseError("document: expected a JSON object");
  if (!j.contains("nvars") || !j["nvars"].is_number_integer() || j["nvars"].get<long long>() < 1) {
    throw ParseError("nvars: expected a positive integer");
  }
  const auto n = static_cast<std::size_t>(j["nvars"].get<long long>());
  if (!j.contains("terms") || !j["terms"].is_array()) throw ParseError("terms: expected an array");
  Polynomial<Kind> p(n);
  std::optional<MultiIndex> prev;
  for (std::size_t t = 0; t < j["terms"].size(); ++t) {
    const Json& term = j["terms"][t];
    const std::string path = "terms[" + std::to_string(t) + "]";
    if (!term.is_object()) throw ParseError(path + ": expected an object");
    if (!term.contains("alpha")) throw ParseError(path + ": missing alpha");
    MultiIndex key = detail::index_from_json(term["alpha"], n, path + ".alpha");
    if constexpr (Kind::slots == 2) {
      if (!term.contains("beta")) throw ParseError(path + ": missing beta");
      key = concat(key, detail::index_from_json(term["beta"], n, path + ".beta"));
    }
    const Rational re = term.contains("re") ? detail::rational_from_json(term["re"], path + ".re", strict) : Rational(0);
    const Rational im = term.contains("im") ? detail::rational_from_json(term["im"], path + ".im", strict) : Rational(0);
    const GaussianRational c(re, im);
    if (strict) {
      if (c.is_zero()) throw ParseError(path + ": zero coefficient");
      if (prev && !(*prev < key)) throw ParseError(path + ": terms not strictly increasing (duplicate or unsorted)");
      prev = key;
    }
    if constexpr (Kind::real_only) {
      if (!c.is_real()) throw ParseError(path + ": non-real coefficient");
    }
    p.add_term(key, c);
  }
  return p;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.byte, e.what());
  }
}

inline Json to_json(const SquaredNormCert& cert) {
  Json weights = Json::array(), polys = Json::array();
  for (const auto& w : cert.weights) weights.push_back(detail::rational_to_json(w));
  for (const auto& p : cert.polys) polys.push_back(to_json(p));
  return Json{{"weights", std::move(weights)}, {"polys", std::move(polys)}};
}

inline SquaredNormCert certificate_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("weights") || !j.contains("polys") || !j["weights"].is_array() ||
      !j["polys"].is_array() || j["weights"].size() != j["polys"].size()) {
    throw ParseError("certificate: expected {\"weights\": [...], \"polys\": [...]} of equal length");
  }
  SquaredNormCert cert;
  for (std::size_t i = 0; i < j["weights"].size(); ++i) {
    Rational w = detail::rational_from_json(j["weights"][i], "weights[" + std::to_string(i) + "]", false);
    if (w <= 0) throw ParseError("weights[" + std::to_string(i) + "]: weight must be positive");
    cert.weights.push_back(std::move(w));
    cert.polys.push_back(polynomial_from_json<HolomorphicKind>(j["polys"][i]));
  }
  return cert;
}

inline Json to_json(const TrialReport& r) {
  Json j{{"theorem", theorem_name(r.theorem)},
         {"n", r.n},
         {"d", r.d},
         {"seed", r.seed},
         {"multiplier_degree", r.multiplier_degree},
         {"observed", r.observed},
         {"bound", r.bound},
         {"skipped", r.skipped},
         {"pass", r.pass}};
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

// ---------------------------------------------------------------------------
// Human text form:  3/2 z1^2 zb1 - (1/2+3 i) z2 zb2 + 4
// Variables z<k> and zb<k> (x<k> for real diagonal polynomials), 1-based.

namespace detail {

class TextParser {
 public:
  explicit TextParser(std::string_view s) : s_(s) {}

  struct RawTerm {
    GaussianRational coef;
    std::vector<std::pair<std::size_t, int>> z, zb;  // (variable index, power)
  };

  std::vector<RawTerm> parse() {
    std::vector<RawTerm> out;
    skip();
    if (at_end()) fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+' or '-' between terms");
      }
      first = false;
      RawTerm t = term();
      if (sign < 0) t.coef = -t.coef;
      out.push_back(std::move(t));
      skip();
    }
    return out;
  }

  std::size_t max_index() const { return max_index_; }

 private:
  RawTerm term() {
    const std::size_t start = pos_;
    RawTerm t;
    t.coef = GaussianRational(1);
    bool any = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      t.coef = GaussianRational(rational());
      any = true;
    } else if (peek() == '(') {
      t.coef = complex();
      any = true;
    }
    for (;;) {
      skip();
      if (peek() == '*') {
        get();
        skip();
      }
      if (peek() == 'z' || peek() == 'x') {
        const bool holo_name = get() == 'z';
        bool bar = false;
        if (holo_name && peek() == 'b') {
          get();
          bar = true;
        }
        const std::size_t start = pos_;
        const long idx = integer();
        if (idx < 1) fail("variable index must be at least 1", start);
        int power = 1;
        if (peek() == '^') {
          get();
          const std::size_t ps = pos_;
          const long e = integer();
          if (e < 0 || e > 1'000'000) fail("bad exponent", ps);
          power = static_cast<int>(e);
        }
        max_index_ = std::max(max_index_, static_cast<std::size_t>(idx));
        (bar ? t.zb : t.z).emplace_back(static_cast<std::size_t>(idx - 1), power);
        any = true;
        continue;
      }
      break;
    }
    if (!any) fail("expected a coefficient or a variable", start);
    return t;
  }

  GaussianRational complex() {
    get();  // '('
    GaussianRational v;
    bool first = true;
    for (;;) {
      skip();
      if (peek() == ')') {
        if (first) fail("empty parentheses");
        get();
        return v;
      }
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = get() == '-' ? -1 : 1;
        skip();
      } else if (!first) {
        fail("expected '+', '-' or ')'");
      }
      first = false;
      Rational part(1);
      bool have_number = false;
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        part = rational();
        have_number = true;
        skip();
      }
      if (peek() == 'i') {
        get();
        v += GaussianRational(Rational(0), sign * part);
      } else {
        if (!have_number) fail("expected a number or 'i'");
        v += GaussianRational(sign * part);
      }
    }
  }

  Rational rational() {
    const std::size_t start = pos_;
    Integer num = digits();
    Integer den = 1;
    skip();
    if (peek() == '/') {
      get();
      skip();
      den = digits();
      if (den == 0) fail("zero denominator", start);
    }
    return make_rational(num, den);
  }

  long integer() {
    const std::size_t start = pos_;
    Integer v = digits();
    if (!v.fits_slong_p()) fail("integer too large", start);
    return v.get_si();
  }

  Integer digits() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected digits");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return at_end() ? '\0' : s_[pos_]; }
  char get() { return s_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const { fail(what, pos_); }
  [[noreturn]] void fail(const std::string& what, std::size_t at) const { throw ParseError(at, what); }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t max_index_ = 0;
};

}  // namespace detail

/// Parse the text form. `nvars` = 0 infers the count from the largest index.
template <class Kind>
Polynomial<Kind> parse_text(std::string_view text, std::size_t nvars = 0) {
  detail::TextParser parser(text);
  auto raw = parser.parse();
  const std::size_t n = nvars ? nvars : std::max<std::size_t>(1, parser.max_index());
  if (parser.max_index() > n) throw ParseError("variable index exceeds nvars = " + std::to_string(n));
  Polynomial<Kind> p(n);
  for (const auto& t : raw) {
    std::vector<int> e(n * Kind::slots, 0);
    for (const auto& [i, pw] : t.z) e[i] += pw;
    if (!t.zb.empty()) {
      if constexpr (Kind::slots == 2) {
        for (const auto& [i, pw] : t.zb) e[n + i] += pw;
      } else {
        throw ParseError("conjugate variable in a holomorphic polynomial");
      }
    }
    if constexpr (Kind::real_only) {
      if (!t.coef.is_real()) throw ParseError("non-real coefficient in a real polynomial");
    }
    p.add_term(MultiIndex(std::move(e)), t.coef);
  }
  return p;
}

template <class Kind>
std::string to_text(const Polynomial<Kind>& p, const char* var = nullptr) {
  std::ostringstream os;
  write_text(os, p, var);
  return os.str();
}

/// Accept either form: a document starting with '{' is JSON.
inline HermPoly parse_document(const std::string& text, std::size_t nvars = 0, bool strict = false) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    HermPoly p = polynomial_from_json<HermitianKind>(parse_json_text(text), strict);
    if (nvars && p.nvars() != nvars) throw ParseError("nvars mismatch with --nvars");
    return p;
  }
  return parse_text<HermitianKind>(text, nvars);
}

}  // namespace hermsos
