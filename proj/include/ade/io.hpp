#ifndef ADE_IO_HPP
#define ADE_IO_HPP

// Serialization and rendering.
//
//   Polynomial        JSON array of decimal strings, ascending degree
//   RationalFunction  {"num": [...], "den": [...]}, canonical
//   Resolution        {"divisors": [{"label", "discrepancy"}],
//                      "strata": [{"divisors": [label...], "hodge": [...]}]}
//   StringyReport     {"source", "contribution", "euler", "is_polynomial",
//                      "hodge_numbers", "checks"}
//
// Text rendering uses descending powers of w with explicit signs, e.g.
// "w^3 + 5w^2 - w - 2"; a non-polynomial value prints as "(num)/(den)".

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "catalog.hpp"
#include "exactalg.hpp"
#include "stringy.hpp"

namespace ade {

using Json = nlohmann::ordered_json;

// Input rejected with one or more located diagnostics.
class InputError : public std::runtime_error {
public:
  explicit InputError(std::vector<Diagnostic> diags)
      : std::runtime_error(join(diags)), diagnostics_(std::move(diags))
  {
  }

  InputError(std::string path, std::string message)
      : InputError(std::vector<Diagnostic>{{std::move(path), std::move(message)}})
  {
  }

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

  // Same diagnostics with JSON pointers anchored at `origin`, e.g. "f.json#/strata/0".
  InputError located_in(const std::string& origin) const
  {
    std::vector<Diagnostic> d = diagnostics_;
    for (auto& x : d)
      x.path = origin + "#" + x.path;
    return InputError(std::move(d));
  }

private:
  static std::string join(const std::vector<Diagnostic>& diags)
  {
    std::string s;
    for (const auto& d : diags) {
      if (!s.empty())
        s += "\n";
      s += (d.path.empty() ? std::string("(root)") : d.path) + ": " + d.message;
    }
    return s;
  }

  std::vector<Diagnostic> diagnostics_;
};

// ---------------------------------------------------------------- rendering

inline std::string to_string(const Integer& x) { return x.str(); }
inline std::string to_string(const Rational& x) { return x.str(); }

inline std::string render_text(const Polynomial& p)
{
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (std::size_t e = p.size(); e-- > 0;) {
    const Integer& c = p.coeffs()[e];
    if (c == 0)
      continue;
    const Integer mag = boost::multiprecision::abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0 || mag != 1)
      out += mag.str();
    if (e >= 1)
      out += "w";
    if (e >= 2)
      out += "^" + std::to_string(e);
  }
  return out;
}

inline std::string render_text(const RationalFunction& f)
{
  if (f.den() == Polynomial::constant(1))
    return render_text(f.num());
  return "(" + render_text(f.num()) + ")/(" + render_text(f.den()) + ")";
}

inline std::string render_latex(const Polynomial& p)
{
  if (p.is_zero())
    return "0";
  std::string out;
  bool first = true;
  for (std::size_t e = p.size(); e-- > 0;) {
    const Integer& c = p.coeffs()[e];
    if (c == 0)
      continue;
    const Integer mag = boost::multiprecision::abs(c);
    if (first)
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    first = false;
    if (e == 0 || mag != 1)
      out += mag.str();
    if (e >= 1)
      out += "w";
    if (e >= 2)
      out += "^{" + std::to_string(e) + "}";
  }
  return out;
}

inline std::string render_latex(const RationalFunction& f)
{
  if (f.den() == Polynomial::constant(1))
    return render_latex(f.num());
  return "\\frac{" + render_latex(f.num()) + "}{" + render_latex(f.den()) + "}";
}

inline std::string render_latex(const Rational& q)
{
  using boost::multiprecision::denominator;
  using boost::multiprecision::numerator;
  if (denominator(q) == 1)
    return numerator(q).str();
  return "\\frac{" + numerator(q).str() + "}{" + denominator(q).str() + "}";
}

// ------------------------------------------------------------------ JSON

inline Json to_json(const Polynomial& p)
{
  Json a = Json::array();
  for (const auto& c : p.coeffs())
    a.push_back(c.str());
  return a;
}

inline Json to_json(const RationalFunction& f)
{
  return Json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

namespace detail {

inline bool is_integer_literal(std::string_view s)
{
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '-' || s[i] == '+'))
    ++i;
  if (i == s.size())
    return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i])))
      return false;
  return true;
}

inline Integer integer_from_json(const Json& j, const std::string& path)
{
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!is_integer_literal(s))
      throw InputError(path, "not a decimal integer: \"" + s + "\"");
    return Integer(s[0] == '+' ? s.substr(1) : s);
  }
  if (j.is_number_integer())
    return Integer(j.get<long long>());
  throw InputError(path, "expected an integer (decimal string)");
}

} // namespace detail

inline Polynomial polynomial_from_json(const Json& j, const std::string& path = "")
{
  if (!j.is_array())
    throw InputError(path, "expected an array of coefficients");
  std::vector<Integer> c;
  for (std::size_t i = 0; i < j.size(); ++i)
    c.push_back(detail::integer_from_json(j[i], path + "/" + std::to_string(i)));
  return Polynomial(std::move(c));
}

inline RationalFunction rational_function_from_json(const Json& j, const std::string& path = "")
{
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw InputError(path, "expected an object with \"num\" and \"den\"");
  Polynomial den = polynomial_from_json(j["den"], path + "/den");
  if (den.is_zero())
    throw InputError(path + "/den", "zero denominator");
  return rf_make(polynomial_from_json(j["num"], path + "/num"), std::move(den));
}

inline Json to_json(const StratifiedResolution& res)
{
  Json divs = Json::array();
  for (const auto& d : res.divisors)
    divs.push_back(Json{{"label", d.label}, {"discrepancy", d.discrepancy}});
  Json strata = Json::array();
  for (const auto& s : res.strata) {
    Json labels = Json::array();
    for (int id : s.divisor_ids) {
      const Divisor* d = res.find(id);
      labels.push_back(d ? d->label : std::to_string(id));
    }
    strata.push_back(Json{{"divisors", labels}, {"hodge", to_json(s.hodge)}});
  }
  return Json{{"divisors", divs}, {"strata", strata}};
}

// Parses and validates a resolution document. All problems found are
// reported together, each with a JSON-pointer path.
inline StratifiedResolution resolution_from_json(const Json& j)
{
  std::vector<Diagnostic> diags;
  StratifiedResolution res;
  if (!j.is_object())
    throw InputError("", "expected an object with \"divisors\" and \"strata\"");
  if (!j.contains("divisors") || !j["divisors"].is_array())
    diags.push_back({"/divisors", "missing or not an array"});
  if (!j.contains("strata") || !j["strata"].is_array())
    diags.push_back({"/strata", "missing or not an array"});
  if (!diags.empty())
    throw InputError(std::move(diags));

  std::map<std::string, int> ids;
  const Json& divs = j["divisors"];
  for (std::size_t i = 0; i < divs.size(); ++i) {
    const std::string at = "/divisors/" + std::to_string(i);
    const Json& d = divs[i];
    if (!d.is_object()) {
      diags.push_back({at, "expected an object"});
      continue;
    }
    if (!d.contains("label") || !d["label"].is_string() || d["label"].get<std::string>().empty()) {
      diags.push_back({at + "/label", "missing or not a nonempty string"});
      continue;
    }
    const auto label = d["label"].get<std::string>();
    if (ids.contains(label)) {
      diags.push_back({at + "/label", "duplicate divisor label '" + label + "'"});
      continue;
    }
    long long disc = 0;
    if (!d.contains("discrepancy") || !d["discrepancy"].is_number_integer())
      diags.push_back({at + "/discrepancy", "missing or not an integer"});
    else if ((disc = d["discrepancy"].get<long long>()) < 0)
      diags.push_back({at + "/discrepancy", "discrepancy must be an integer >= 0, got " + std::to_string(disc)});
    // registered even when rejected, so strata naming it are still checked
    const int id = static_cast<int>(res.divisors.size());
    ids[label] = id;
    res.divisors.push_back({id, label, static_cast<long>(std::max(disc, 0LL))});
  }

  std::set<std::vector<int>> seen;
  const Json& strata = j["strata"];
  for (std::size_t i = 0; i < strata.size(); ++i) {
    const std::string at = "/strata/" + std::to_string(i);
    const Json& s = strata[i];
    if (!s.is_object() || !s.contains("divisors") || !s["divisors"].is_array() || !s.contains("hodge")) {
      diags.push_back({at, "expected an object with \"divisors\" (array) and \"hodge\""});
      continue;
    }
    Stratum st;
    bool ok = true;
    const Json& labels = s["divisors"];
    if (labels.empty()) {
      diags.push_back({at + "/divisors", "stratum has no divisors"});
      ok = false;
    }
    for (std::size_t k = 0; k < labels.size(); ++k) {
      const std::string lat = at + "/divisors/" + std::to_string(k);
      if (!labels[k].is_string()) {
        diags.push_back({lat, "expected a divisor label"});
        ok = false;
        continue;
      }
      auto it = ids.find(labels[k].get<std::string>());
      if (it == ids.end()) {
        diags.push_back({lat, "unknown divisor label '" + labels[k].get<std::string>() + "'"});
        ok = false;
        continue;
      }
      st.divisor_ids.push_back(it->second);
    }
    std::sort(st.divisor_ids.begin(), st.divisor_ids.end());
    if (std::adjacent_find(st.divisor_ids.begin(), st.divisor_ids.end()) != st.divisor_ids.end()) {
      diags.push_back({at + "/divisors", "divisor repeated within a stratum"});
      ok = false;
    }
    try {
      st.hodge = polynomial_from_json(s["hodge"], at + "/hodge");
    } catch (const InputError& e) {
      diags.insert(diags.end(), e.diagnostics().begin(), e.diagnostics().end());
      ok = false;
    }
    if (!ok)
      continue;
    if (!seen.insert(st.divisor_ids).second) {
      diags.push_back({at + "/divisors", "duplicate stratum"});
      continue;
    }
    res.strata.push_back(std::move(st));
  }
  if (!diags.empty())
    throw InputError(std::move(diags));

  auto remaining = validate_resolution(res);
  if (!remaining.empty())
    throw InputError(std::move(remaining));
  return res;
}

inline std::string read_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw InputError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Json parse_json_text(const std::string& text, const std::string& origin)
{
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(origin, e.what());
  }
}

inline StratifiedResolution ingest_resolution(const std::string& path)
{
  const Json j = parse_json_text(read_file(path), path);
  try {
    return resolution_from_json(j);
  } catch (const InputError& e) {
    throw e.located_in(path);
  }
}

inline Json hodge_numbers_json(const std::vector<Integer>& h)
{
  Json a = Json::array();
  for (const auto& x : h) {
    if (x >= std::numeric_limits<long long>::min() && x <= std::numeric_limits<long long>::max())
      a.push_back(static_cast<long long>(x));
    else
      a.push_back(x.str());
  }
  return a;
}

inline Json to_json(const StringyReport& r)
{
  Json checks = Json::object();
  for (const auto& [name, c] : r.checks)
    checks[name] = check_name(c);
  return Json{{"source", r.source},
              {"contribution", to_json(r.contribution)},
              {"euler", to_string(r.euler)},
              {"is_polynomial", r.is_polynomial},
              {"hodge_numbers", r.hodge_numbers ? hodge_numbers_json(*r.hodge_numbers) : Json(nullptr)},
              {"checks", checks}};
}

// ------------------------------------------------- polynomial text parsing

// Parses "w^3 + 5w^2 - w - 2" style text (also "5*w^2", "w**2"). Errors
// carry line:column positions.
class PolynomialParser {
public:
  PolynomialParser(std::string_view text, std::string origin) : text_(text), origin_(std::move(origin)) {}

  Polynomial parse()
  {
    Polynomial result;
    skip_space();
    if (at_end())
      fail("empty polynomial");
    bool first = true;
    while (!at_end()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        advance();
        skip_space();
      } else if (!first) {
        fail(std::string("expected '+' or '-', found '") + peek() + "'");
      }
      result += parse_term(sign);
      first = false;
      skip_space();
    }
    return result;
  }

private:
  Polynomial parse_term(int sign)
  {
    Integer coeff = 1;
    bool have_coeff = false;
    if (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_integer();
      have_coeff = true;
      skip_space();
      if (!at_end() && peek() == '*' && !(pos_ + 1 < text_.size() && text_[pos_ + 1] == '*')) {
        advance();
        skip_space();
        if (at_end() || peek() != 'w')
          fail("expected 'w' after '*'");
      }
    }
    std::size_t exponent = 0;
    if (!at_end() && peek() == 'w') {
      advance();
      exponent = 1;
      skip_space();
      if (!at_end() && (peek() == '^' || peek() == '*')) {
        if (peek() == '*') {
          advance();
          if (at_end() || peek() != '*')
            fail("expected '**' or '^'");
        }
        advance();
        skip_space();
        if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
          fail("expected an exponent");
        const Integer e = parse_integer();
        if (e > 100000)
          fail("exponent too large");
        exponent = static_cast<std::size_t>(e);
      }
    } else if (!have_coeff) {
      if (at_end())
        fail("expected a term");
      fail(std::string("unexpected character '") + peek() + "'");
    }
    return Polynomial::monomial(sign * coeff, exponent);
  }

  Integer parse_integer()
  {
    std::string digits;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      digits += peek();
      advance();
    }
    return Integer(digits);
  }

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }

  void advance()
  {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  void skip_space()
  {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      advance();
  }

  [[noreturn]] void fail(const std::string& msg) const
  {
    throw InputError(origin_ + ":" + std::to_string(line_) + ":" + std::to_string(col_), msg);
  }

  std::string_view text_;
  std::string origin_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

// A polynomial given either as a JSON coefficient array or as text.
inline Polynomial parse_polynomial(std::string_view text, const std::string& origin = "<input>")
{
  std::size_t i = 0;
  while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i])))
    ++i;
  if (i < text.size() && text[i] == '[')
  {
    const Json j = parse_json_text(std::string(text), origin);
    try {
      return polynomial_from_json(j);
    } catch (const InputError& e) {
      throw e.located_in(origin);
    }
  }
  return PolynomialParser(text, origin).parse();
}

} // namespace ade

#endif // ADE_IO_HPP
