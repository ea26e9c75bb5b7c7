#ifndef ADE_CATALOG_HPP
#define ADE_CATALOG_HPP

// Log resolutions of A-D-E hypersurface singularities in A^m (dimension m-1),
// encoded as data: exceptional divisors with their discrepancies and the
// nonempty strata D_J° (J nonempty) with Hodge-Deligne polynomials in w.
//
// One model covers every m >= 3. The higher-dimensional intersection
// diagrams are used verbatim at m = 4 and m = 3; the quadric conventions
// a_1 = w + 1, b_1 = 1, c_1 = 0 make the pieces of divisors that only exist
// for m >= 5 evaluate to 0 at m = 3. Such zero strata are kept so that the
// stratum list has the same shape for every m.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "exactalg.hpp"
#include "quadrics.hpp"

namespace ade {

enum class Family { A, D, E6, E7, E8 };

inline std::string_view family_name(Family f)
{
  switch (f) {
  case Family::A:
    return "A";
  case Family::D:
    return "D";
  case Family::E6:
    return "E6";
  case Family::E7:
    return "E7";
  case Family::E8:
    return "E8";
  }
  return "?";
}

inline std::optional<Family> parse_family(std::string_view s)
{
  for (Family f : {Family::A, Family::D, Family::E6, Family::E7, Family::E8})
    if (s == family_name(f))
      return f;
  return std::nullopt;
}

// (family, n, m): the singularity of type family_n in m variables.
class SingularitySpec {
public:
  static SingularitySpec make(Family family, long n, long m)
  {
    if (m < 3)
      throw std::invalid_argument("m must be >= 3 (dimension >= 2), got " + std::to_string(m));
    switch (family) {
    case Family::A:
      if (n < 1)
        throw std::invalid_argument("A_n requires n >= 1, got " + std::to_string(n));
      break;
    case Family::D:
      if (n < 4)
        throw std::invalid_argument("D_n requires n >= 4, got " + std::to_string(n));
      break;
    case Family::E6:
    case Family::E7:
    case Family::E8:
      if (n != forced_index(family))
        throw std::invalid_argument(std::string(family_name(family)) + " has fixed index " +
                                    std::to_string(forced_index(family)) + ", got " +
                                    std::to_string(n));
      break;
    }
    return SingularitySpec(family, n, m);
  }

  // E-families, whose index is implied.
  static SingularitySpec make(Family family, long m)
  {
    if (family == Family::A || family == Family::D)
      throw std::invalid_argument("A and D families need an explicit index");
    return make(family, forced_index(family), m);
  }

  static long forced_index(Family f)
  {
    switch (f) {
    case Family::E6:
      return 6;
    case Family::E7:
      return 7;
    case Family::E8:
      return 8;
    default:
      return 0;
    }
  }

  Family family() const { return family_; }
  long n() const { return n_; }
  long m() const { return m_; }
  long dimension() const { return m_ - 1; }

  // A odd n = 2k-1, A even n = 2k, D even n = 2k, D odd n = 2k+1; 0 for E.
  long k() const
  {
    switch (family_) {
    case Family::A:
      return n_ % 2 == 1 ? (n_ + 1) / 2 : n_ / 2;
    case Family::D:
      return n_ % 2 == 0 ? n_ / 2 : (n_ - 1) / 2;
    default:
      return 0;
    }
  }

  bool n_odd() const { return n_ % 2 == 1; }

  std::string name() const
  {
    if (family_ == Family::A || family_ == Family::D)
      return std::string(family_name(family_)) + std::to_string(n_) + ",m=" + std::to_string(m_);
    return std::string(family_name(family_)) + ",m=" + std::to_string(m_);
  }

  friend bool operator==(const SingularitySpec&, const SingularitySpec&) = default;

private:
  SingularitySpec(Family family, long n, long m) : family_(family), n_(n), m_(m) {}

  Family family_;
  long n_;
  long m_;
};

struct Divisor {
  int id = 0;
  std::string label;
  long discrepancy = 0;
};

struct Stratum {
  std::vector<int> divisor_ids; // sorted, duplicate-free
  Polynomial hodge;
};

struct StratifiedResolution {
  std::vector<Divisor> divisors;
  std::vector<Stratum> strata;

  const Divisor* find(int id) const
  {
    for (const auto& d : divisors)
      if (d.id == id)
        return &d;
    return nullptr;
  }

  const Divisor* find(std::string_view label) const
  {
    for (const auto& d : divisors)
      if (d.label == label)
        return &d;
    return nullptr;
  }

  // Stratum with exactly these labels, if stored.
  const Stratum* stratum(std::initializer_list<std::string_view> labels) const
  {
    std::vector<int> ids;
    for (auto l : labels) {
      const Divisor* d = find(l);
      if (d == nullptr)
        return nullptr;
      ids.push_back(d->id);
    }
    std::sort(ids.begin(), ids.end());
    for (const auto& s : strata)
      if (s.divisor_ids == ids)
        return &s;
    return nullptr;
  }
};

namespace detail {

inline std::string lab(char letter, long i) { return std::string(1, letter) + std::to_string(i); }

// How a divisor's discrepancy arises. Point blow-up divisors scale their
// threefold coefficient by (m - 3); a blow-up along the singular line of
// another divisor D gets 2 * disc(D) + (m - 3).
struct DivisorRule {
  std::string label;
  long threefold_coefficient = 0;
  std::string line_over; // nonempty for line blow-up divisors
  bool a_even_last = false;
};

inline std::vector<DivisorRule> divisor_rules(const SingularitySpec& spec)
{
  std::vector<DivisorRule> rules;
  const auto point = [&](std::string l, long c) { rules.push_back({std::move(l), c, {}, false}); };
  const auto line = [&](std::string l, std::string over) {
    rules.push_back({std::move(l), 0, std::move(over), false});
  };
  const long k = spec.k();

  switch (spec.family()) {
  case Family::A:
    for (long i = 1; i <= k; ++i)
      point(lab('D', i), i);
    if (!spec.n_odd())
      rules.push_back({lab('D', k + 1), 0, {}, true});
    break;
  case Family::D:
    for (long i = 1; i < k; ++i)
      point(lab('D', i), i);
    for (long i = 1; i < k; ++i)
      point(lab('E', i), 2 * i);
    point("F1", k);
    point("F2", spec.n_odd() ? 2 * k : k);
    for (long i = 1; i < k; ++i)
      line(lab('G', i), lab('D', i));
    break;
  case Family::E6:
    point("D1", 1);
    point("D2", 2);
    point("D3", 4);
    point("D4", 6);
    line("D5", "D1");
    break;
  case Family::E7:
    point("C1", 1);
    point("D1", 2);
    point("D2", 4);
    point("E1", 3);
    point("E2", 7);
    point("F1", 6);
    point("F2", 5);
    line("G1", "D1");
    line("G2", "D2");
    line("H1", "C1");
    break;
  case Family::E8:
    point("B1", 1);
    point("C1", 2);
    point("D1", 4);
    point("D2", 7);
    point("E1", 6);
    point("E2", 12);
    point("F1", 10);
    point("F2", 8);
    line("G1", "D1");
    line("G2", "D2");
    line("H1", "C1");
    line("I1", "B1");
    break;
  }
  return rules;
}

// Quadric values used by the stratum tables at a fixed m.
struct QuadricValues {
  explicit QuadricValues(long m)
      : a2(quadric_a(m - 2)), b2(quadric_b(m - 2)), c2(quadric_c(m - 2)), b1(quadric_b(m - 1)),
        c1(quadric_c(m - 1)), c0(quadric_c(m)), g2(geom_sum(m - 2)), g1(geom_sum(m - 1)),
        w(Polynomial::w()), one(Polynomial::constant(1)), top(Polynomial::monomial(1, m - 2))
  {
  }

  Polynomial a2, b2, c2; // a_{m-2}, b_{m-2}, c_{m-2}
  Polynomial b1, c1;     // b_{m-1}, c_{m-1}
  Polynomial c0;         // c_m
  Polynomial g2;         // w^{m-3} + ... + 1
  Polynomial g1;         // w^{m-2} + ... + 1
  Polynomial w, one, top;
};

struct LabeledStratum {
  std::vector<std::string> labels;
  Polynomial hodge;
};

using Pieces = std::vector<LabeledStratum>;

inline Pieces a_family_pieces(long k, bool odd, const QuadricValues& q)
{
  Pieces s;
  if (odd) {
    if (k == 1) {
      s.push_back({{"D1"}, q.c0});
    } else {
      s.push_back({{"D1"}, q.b1 - q.one});
      for (long i = 2; i < k; ++i)
        s.push_back({{lab('D', i)}, q.b1 - q.c1 - q.one});
      s.push_back({{lab('D', k)}, q.c0 - q.c1});
    }
    for (long i = 1; i < k; ++i)
      s.push_back({{lab('D', i), lab('D', i + 1)}, q.c1});
  } else {
    s.push_back({{"D1"}, q.b1 - q.one});
    for (long i = 2; i <= k; ++i)
      s.push_back({{lab('D', i)}, q.b1 - q.c1 - q.one});
    s.push_back({{lab('D', k + 1)}, q.g1 - q.c1});
    for (long i = 1; i <= k; ++i)
      s.push_back({{lab('D', i), lab('D', i + 1)}, q.c1});
  }
  return s;
}

// D_{2k} (odd = false) or D_{2k+1} (odd = true), k >= 2. The chain is
// D_1 .. D_{k-1} with E_i, G_i attached and F_1, F_2 at the D_{k-1} end.
inline Pieces d_family_pieces(long k, bool odd, const QuadricValues& q)
{
  Pieces s;
  const auto D = [](long i) { return lab('D', i); };
  const auto E = [](long i) { return lab('E', i); };
  const auto G = [](long i) { return lab('G', i); };
  const Polynomial fibre = q.g2 - q.c2; // (E ∩ G)°, (F ∩ G)°
  const Polynomial inner_g = q.top - q.one - (q.w - q.one) * q.c2;

  s.push_back({{D(1)}, q.a2 - q.w - q.one});
  for (long i = 2; i < k; ++i)
    s.push_back({{D(i)}, q.a2 - q.w - q.one - q.b2 + q.one});
  s.push_back({{E(1)}, q.c0 - q.b2});
  for (long i = 2; i < k; ++i)
    s.push_back({{E(i)}, q.c0 - q.b2 - q.b2 + q.c2});
  if (odd) {
    s.push_back({{"F1"}, q.b1 - q.b2});
    s.push_back({{"F2"}, q.c0 - q.c1 - q.b2 + q.c2});
  } else {
    s.push_back({{"F1"}, q.c0 - q.b2});
    s.push_back({{"F2"}, q.c0 - q.b2});
  }
  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{G(i)}, inner_g});
  if (odd)
    s.push_back({{G(k - 1)}, inner_g});
  else
    s.push_back({{G(k - 1)}, q.w * q.g2 - q.g2 - q.g2 - (q.w - q.one - q.one) * q.c2});

  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{D(i), D(i + 1)}, q.b2 - q.one});
  s.push_back({{D(1), E(1)}, q.b2 - q.one});
  for (long i = 2; i < k; ++i) {
    s.push_back({{D(i - 1), E(i)}, q.b2 - q.c2 - q.one});
    s.push_back({{D(i), E(i)}, q.b2 - q.c2 - q.one});
  }
  s.push_back({{D(k - 1), "F1"}, q.b2 - q.one});
  s.push_back({{D(k - 1), "F2"}, odd ? q.b2 - q.c2 - q.one : q.b2 - q.one});
  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{D(i), G(i)}, (q.w - q.one) * q.c2});
  s.push_back({{D(k - 1), G(k - 1)}, odd ? (q.w - q.one) * q.c2 : (q.w - q.one - q.one) * q.c2});
  for (long i = 1; i < k; ++i)
    s.push_back({{E(i), G(i)}, fibre});
  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{E(i + 1), G(i)}, fibre});
  if (odd) {
    s.push_back({{"F1", "F2"}, q.c1 - q.c2});
    s.push_back({{"F2", G(k - 1)}, fibre});
  } else {
    s.push_back({{"F1", G(k - 1)}, fibre});
    s.push_back({{"F2", G(k - 1)}, fibre});
  }

  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{D(i), D(i + 1), E(i + 1)}, q.c2});
  for (long i = 1; i < k; ++i)
    s.push_back({{D(i), E(i), G(i)}, q.c2});
  for (long i = 1; i + 1 < k; ++i)
    s.push_back({{D(i), E(i + 1), G(i)}, q.c2});
  if (odd) {
    s.push_back({{D(k - 1), "F1", "F2"}, q.c2});
    s.push_back({{D(k - 1), "F2", G(k - 1)}, q.c2});
  } else {
    s.push_back({{D(k - 1), "F1", G(k - 1)}, q.c2});
    s.push_back({{D(k - 1), "F2", G(k - 1)}, q.c2});
  }
  return s;
}

inline Pieces e6_pieces(const QuadricValues& q)
{
  const Polynomial generic_pair = q.b2 - q.c2 - q.one;
  return {
      {{"D1"}, q.a2 - q.w - q.one},
      {{"D2"}, q.b1 - q.b2},
      {{"D3"}, q.b1 - q.b2 - q.c1 + q.c2},
      {{"D4"}, q.c0 - q.b2 - q.c1 + q.c2},
      {{"D5"}, q.w * q.g2 - q.w * q.c2},
      {{"D1", "D2"}, q.b2 - q.one},
      {{"D1", "D3"}, generic_pair},
      {{"D1", "D4"}, generic_pair},
      {{"D1", "D5"}, q.w * q.c2},
      {{"D2", "D3"}, q.c1 - q.c2},
      {{"D3", "D4"}, q.c1 - q.c2},
      {{"D4", "D5"}, q.g2 - q.c2},
      {{"D1", "D2", "D3"}, q.c2},
      {{"D1", "D3", "D4"}, q.c2},
      {{"D1", "D4", "D5"}, q.c2},
  };
}

// E7 and E8 share the strata of the embedded D6 resolution that do not meet
// the extra divisors (C1, H1 and, for E8, B1, I1).
inline Pieces e78_pieces(bool e8, const QuadricValues& q)
{
  const std::set<std::vector<std::string>> replaced = {
      {"D1"}, {"D2"}, {"E1"}, {"F1"}, {"D1", "D2"}, {"D1", "E1"}, {"D2", "F1"},
  };
  Pieces s;
  for (auto& piece : d_family_pieces(3, false, q))
    if (!replaced.contains(piece.labels))
      s.push_back(std::move(piece));

  const Polynomial generic_pair = q.b2 - q.c2 - q.one;
  const Polynomial inner_d = q.a2 - q.b2 - q.b2 + q.c2 - q.w + q.one;
  const Polynomial line_div = q.w * q.g2 - q.w * q.c2;
  const Polynomial inner_e = q.c0 - q.b2 - q.b2 + q.c2;

  if (e8) {
    s.push_back({{"B1"}, q.a2 - q.w - q.one});
    s.push_back({{"C1"}, q.a2 - q.b2 - q.w});
    s.push_back({{"D1"}, inner_d});
    s.push_back({{"D2"}, inner_d});
    s.push_back({{"E1"}, inner_e});
    s.push_back({{"F1"}, inner_e});
    s.push_back({{"H1"}, line_div});
    s.push_back({{"I1"}, line_div});
    for (auto p : {std::vector<std::string>{"B1", "C1"}, {"B1", "I1"}, {"C1", "H1"}})
      s.push_back({p, q.w * q.c2});
    for (auto p : {std::vector<std::string>{"B1", "D1"},
                   {"B1", "E1"},
                   {"C1", "D1"},
                   {"C1", "D2"},
                   {"C1", "F1"},
                   {"D1", "D2"},
                   {"D1", "E1"},
                   {"D2", "F1"}})
      s.push_back({p, generic_pair});
    for (auto p : {std::vector<std::string>{"E1", "I1"}, {"F1", "H1"}})
      s.push_back({p, q.g2 - q.c2});
    for (auto p : {std::vector<std::string>{"B1", "C1", "D1"},
                   {"B1", "D1", "E1"},
                   {"B1", "E1", "I1"},
                   {"C1", "D1", "D2"},
                   {"C1", "D2", "F1"},
                   {"C1", "F1", "H1"}})
      s.push_back({p, q.c2});
  } else {
    s.push_back({{"C1"}, q.a2 - q.w - q.one});
    s.push_back({{"D1"}, q.a2 - q.b2 - q.w});
    s.push_back({{"D2"}, inner_d});
    s.push_back({{"E1"}, q.c0 - q.b2});
    s.push_back({{"F1"}, inner_e});
    s.push_back({{"H1"}, line_div});
    s.push_back({{"C1", "H1"}, q.w * q.c2});
    s.push_back({{"C1", "D1"}, q.b2 - q.one});
    s.push_back({{"D1", "E1"}, q.b2 - q.one});
    for (auto p : {std::vector<std::string>{"C1", "D2"}, {"C1", "F1"}, {"D1", "D2"}, {"D2", "F1"}})
      s.push_back({p, generic_pair});
    s.push_back({{"F1", "H1"}, q.g2 - q.c2});
    for (auto p : {std::vector<std::string>{"C1", "D1", "D2"}, {"C1", "D2", "F1"}, {"C1", "F1", "H1"}})
      s.push_back({p, q.c2});
  }
  return s;
}

} // namespace detail

// Discrepancy coefficient of the divisor `label` in the resolution of spec.
inline long discrepancy_of(const SingularitySpec& spec, std::string_view label)
{
  const auto rules = detail::divisor_rules(spec);
  const long t = spec.m() - 3;
  const auto find = [&](std::string_view l) -> const detail::DivisorRule& {
    for (const auto& r : rules)
      if (r.label == l)
        return r;
    throw std::invalid_argument("no divisor '" + std::string(l) + "' in the resolution of " +
                                spec.name());
  };
  const detail::DivisorRule& rule = find(label);
  if (rule.a_even_last)
    return (spec.n() + 1) * t + 1;
  if (!rule.line_over.empty())
    return 2 * find(rule.line_over).threefold_coefficient * t + t;
  return rule.threefold_coefficient * t;
}

inline StratifiedResolution build_resolution(const SingularitySpec& spec)
{
  StratifiedResolution res;
  std::map<std::string, int, std::less<>> ids;
  int next = 0;
  for (const auto& rule : detail::divisor_rules(spec)) {
    ids.emplace(rule.label, next);
    res.divisors.push_back({next, rule.label, discrepancy_of(spec, rule.label)});
    ++next;
  }

  const detail::QuadricValues q(spec.m());
  detail::Pieces pieces;
  switch (spec.family()) {
  case Family::A:
    pieces = detail::a_family_pieces(spec.k(), spec.n_odd(), q);
    break;
  case Family::D:
    pieces = detail::d_family_pieces(spec.k(), spec.n_odd(), q);
    break;
  case Family::E6:
    pieces = detail::e6_pieces(q);
    break;
  case Family::E7:
    pieces = detail::e78_pieces(false, q);
    break;
  case Family::E8:
    pieces = detail::e78_pieces(true, q);
    break;
  }

  for (auto& piece : pieces) {
    Stratum s;
    for (const auto& l : piece.labels)
      s.divisor_ids.push_back(ids.at(l));
    std::sort(s.divisor_ids.begin(), s.divisor_ids.end());
    s.hodge = std::move(piece.hodge);
    res.strata.push_back(std::move(s));
  }
  return res;
}

struct Diagnostic {
  std::string path; // JSON-pointer style location
  std::string message;
};

struct ValidationOptions {
  std::optional<std::size_t> max_stratum_size;
};

// Catalog outputs have no quadruple intersections.
inline constexpr ValidationOptions kCatalogValidation{3};

inline std::vector<Diagnostic> validate_resolution(const StratifiedResolution& res,
                                                   const ValidationOptions& opts = {})
{
  std::vector<Diagnostic> out;
  std::set<int> ids;
  std::set<std::string> labels;
  for (std::size_t i = 0; i < res.divisors.size(); ++i) {
    const auto& d = res.divisors[i];
    const std::string at = "/divisors/" + std::to_string(i);
    if (!ids.insert(d.id).second)
      out.push_back({at + "/id", "duplicate divisor id " + std::to_string(d.id)});
    if (d.label.empty())
      out.push_back({at + "/label", "empty label"});
    else if (!labels.insert(d.label).second)
      out.push_back({at + "/label", "duplicate divisor label '" + d.label + "'"});
    if (d.discrepancy < 0)
      out.push_back({at + "/discrepancy", "discrepancy must be >= 0, got " + std::to_string(d.discrepancy)});
  }

  std::set<std::vector<int>> seen;
  for (std::size_t i = 0; i < res.strata.size(); ++i) {
    const auto& s = res.strata[i];
    const std::string at = "/strata/" + std::to_string(i) + "/divisors";
    if (s.divisor_ids.empty()) {
      out.push_back({at, "stratum has no divisors"});
      continue;
    }
    for (std::size_t j = 0; j < s.divisor_ids.size(); ++j)
      if (!ids.contains(s.divisor_ids[j]))
        out.push_back({at + "/" + std::to_string(j),
                       "unknown divisor id " + std::to_string(s.divisor_ids[j])});
    std::vector<int> sorted = s.divisor_ids;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      out.push_back({at, "divisor repeated within a stratum"});
    else if (sorted != s.divisor_ids)
      out.push_back({at, "divisor ids not sorted"});
    if (!seen.insert(sorted).second)
      out.push_back({at, "duplicate stratum"});
    if (opts.max_stratum_size && s.divisor_ids.size() > *opts.max_stratum_size)
      out.push_back({at, "stratum of size " + std::to_string(s.divisor_ids.size()) +
                             " exceeds the limit " + std::to_string(*opts.max_stratum_size)});
  }
  return out;
}

} // namespace ade

#endif // ADE_CATALOG_HPP
