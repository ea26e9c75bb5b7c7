#ifndef ADE_STRINGY_HPP
#define ADE_STRINGY_HPP

// Evaluation of the stringy E-function sum over a stratified resolution and
// the invariants derived from it.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "exactalg.hpp"

namespace ade {

namespace detail {

// Cyclotomic polynomials Phi_d, built on demand and kept for one evaluation.
class CyclotomicTable {
public:
  const Polynomial& get(long d)
  {
    auto it = cache_.find(d);
    if (it != cache_.end())
      return it->second;
    // w^d - 1 = prod_{e | d} Phi_e
    Polynomial p = Polynomial::monomial(1, static_cast<std::size_t>(d)) - Polynomial::constant(1);
    for (long e = 1; e < d; ++e)
      if (d % e == 0)
        p = exact_quotient(p, get(e));
    return cache_.emplace(d, std::move(p)).first->second;
  }

private:
  std::map<long, Polynomial> cache_;
};

// Cyclotomic orders d > 1 with d | n; geom_sum(n) = prod Phi_d over them.
inline std::vector<long> geom_sum_orders(long n)
{
  std::vector<long> out;
  for (long d = 2; d <= n; ++d)
    if (n % d == 0)
      out.push_back(d);
  return out;
}

// p * (w - 1)
inline Polynomial times_w_minus_1(const Polynomial& p)
{
  if (p.is_zero())
    return p;
  std::vector<Integer> c(p.size() + 1);
  for (std::size_t i = 0; i < p.size(); ++i) {
    c[i] -= p.coeff(i);
    c[i + 1] += p.coeff(i);
  }
  return Polynomial(std::move(c));
}

// p / (w^a - 1), which must be exact
inline Polynomial over_binomial(const Polynomial& p, std::size_t a)
{
  if (a == 0)
    throw std::domain_error("division by zero polynomial");
  if (p.is_zero())
    return p;
  if (p.size() <= a)
    throw std::domain_error("inexact polynomial division");
  // p_j = q_{j-a} - q_j, so q_i = p_{i+a} + q_{i+a} from the top down
  std::vector<Integer> q(p.size() - a);
  for (std::size_t i = q.size(); i-- > 0;)
    q[i] = p.coeff(i + a) + (i + a < q.size() ? q[i + a] : Integer(0));
  for (std::size_t i = 0; i < a; ++i)
    if (-(i < q.size() ? q[i] : Integer(0)) != p.coeff(i))
      throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(q));
}

} // namespace detail

// Sum over the stored strata of H(D_J°) * prod_{j in J} (w-1)/(w^{a_j+1}-1).
// The empty stratum J = {} is not part of the sum.
//
// Every factor (w-1)/(w^{a+1}-1) is 1/geom_sum(a+1), a product of cyclotomic
// polynomials. The terms are put over the least common multiple of their
// denominators and common cyclotomic factors are then divided out, so the
// result is canonical without a general polynomial gcd.
inline RationalFunction contribution_from_strata(const StratifiedResolution& res)
{
  std::map<int, long> disc;
  for (const auto& d : res.divisors) {
    if (d.discrepancy < 0)
      throw std::invalid_argument("negative discrepancy on divisor '" + d.label + "'");
    disc[d.id] = d.discrepancy;
  }

  using Multiset = std::map<long, long>; // cyclotomic order -> multiplicity
  Multiset lcm;
  for (const auto& s : res.strata) {
    Multiset m;
    for (int id : s.divisor_ids) {
      auto it = disc.find(id);
      if (it == disc.end())
        throw std::invalid_argument("stratum refers to unknown divisor id " + std::to_string(id));
      for (long d : detail::geom_sum_orders(it->second + 1))
        ++m[d];
    }
    for (const auto& [d, e] : m)
      lcm[d] = std::max(lcm[d], e);
  }

  detail::CyclotomicTable phi;
  Polynomial lcm_poly = Polynomial::constant(1);
  for (const auto& [d, e] : lcm)
    for (long r = 0; r < e; ++r)
      lcm_poly *= phi.get(d);

  // L / prod geom_sum(a_j + 1) = L * prod (w - 1) / (w^{a_j+1} - 1)
  std::map<std::vector<long>, Polynomial> by_weights;
  for (const auto& st : res.strata) {
    if (st.hodge.is_zero())
      continue;
    std::vector<long> a;
    for (int id : st.divisor_ids)
      a.push_back(disc.at(id) + 1);
    std::sort(a.begin(), a.end());
    by_weights[a] += st.hodge;
  }
  Polynomial num;
  for (const auto& [a, hodge] : by_weights) {
    Polynomial cofactor = lcm_poly;
    for (long x : a)
      cofactor = detail::over_binomial(detail::times_w_minus_1(cofactor), static_cast<std::size_t>(x));
    num += hodge * cofactor;
  }
  if (num.is_zero())
    return {};

  Polynomial den = Polynomial::constant(1);
  for (auto& [d, e] : lcm) {
    while (e > 0 && monic_remainder(num, phi.get(d)).is_zero()) {
      num = exact_quotient(num, phi.get(d));
      --e;
    }
    for (long r = 0; r < e; ++r)
      den *= phi.get(d);
  }
  return RationalFunction::from_coprime(std::move(num), std::move(den));
}

// Sum over the stored strata of chi(D_J°) * prod 1/(a_j + 1).
inline Rational stringy_euler_direct(const StratifiedResolution& res)
{
  std::map<int, long> disc;
  for (const auto& d : res.divisors)
    disc[d.id] = d.discrepancy;
  Rational total = 0;
  for (const auto& s : res.strata) {
    Rational term = s.hodge.eval(1);
    for (int id : s.divisor_ids) {
      auto it = disc.find(id);
      if (it == disc.end())
        throw std::invalid_argument("stratum refers to unknown divisor id " + std::to_string(id));
      term /= Rational(it->second + 1);
    }
    total += term;
  }
  return total;
}

// E_st(X) = H(X \ Sing X) + sum of the local contributions.
inline RationalFunction assemble_global(const Polynomial& smooth_part,
                                        std::span<const RationalFunction> contributions)
{
  RationalFunction total(smooth_part);
  for (const auto& c : contributions)
    total = total + c;
  return total;
}

struct HodgeVerdict {
  std::vector<Integer> numbers; // h^{p,p} for p = 0..d
  std::vector<std::size_t> negative_at;
  bool ends_are_one = false; // h^{0,0} = h^{d,d} = 1
  bool palindromic = false;  // h^{p,p} = h^{d-p,d-p}

  bool nonnegative() const { return negative_at.empty(); }
};

// Stringy Hodge numbers of a polynomial E_st of a d-dimensional variety. In
// the univariate model only h^{p,p} can be nonzero and its sign factor is +1.
inline HodgeVerdict hodge_numbers(const Polynomial& e, std::size_t d)
{
  if (e.degree() && *e.degree() > d)
    throw std::invalid_argument("E_st of degree " + std::to_string(*e.degree()) +
                                " exceeds the dimension " + std::to_string(d));
  HodgeVerdict v;
  for (std::size_t p = 0; p <= d; ++p) {
    v.numbers.push_back(e.coeff(p));
    if (v.numbers.back() < 0)
      v.negative_at.push_back(p);
  }
  v.ends_are_one = v.numbers.front() == 1 && v.numbers.back() == 1;
  v.palindromic = true;
  for (std::size_t p = 0; p <= d; ++p)
    if (v.numbers[p] != v.numbers[d - p])
      v.palindromic = false;
  return v;
}

// E(w) == w^d E(1/w)
inline bool duality_check(const RationalFunction& e, std::size_t d) { return rf_dual(e, d) == e; }

enum class Check { pass, fail, not_applicable };

inline const char* check_name(Check c)
{
  switch (c) {
  case Check::pass:
    return "pass";
  case Check::fail:
    return "fail";
  case Check::not_applicable:
    return "n/a";
  }
  return "?";
}

inline Check check_of(bool ok) { return ok ? Check::pass : Check::fail; }

struct StringyReport {
  std::string source;
  RationalFunction contribution;
  Rational euler;
  bool is_polynomial = false;
  std::optional<std::vector<Integer>> hodge_numbers; // present iff is_polynomial
  std::map<std::string, Check> checks;

  bool all_pass() const
  {
    for (const auto& [name, c] : checks)
      if (c == Check::fail)
        return false;
    return true;
  }
};

// Report for a value E. With a dimension, E is treated as a full E_st of a
// d-dimensional variety: Hodge numbers run over 0..d and the nonnegativity,
// normalization and symmetry verdicts are filled in. Duality is only judged
// when the variety is declared projective.
inline StringyReport make_report(std::string source, const RationalFunction& e,
                                 std::optional<std::size_t> dimension = std::nullopt,
                                 bool projective = false)
{
  StringyReport r;
  r.source = std::move(source);
  r.contribution = e;
  r.euler = rf_limit_at_one(e);
  const auto poly = rf_as_polynomial(e);
  r.is_polynomial = poly.has_value();
  r.checks["duality"] = Check::not_applicable;
  r.checks["nonnegativity"] = Check::not_applicable;
  if (poly) {
    const std::size_t d = dimension.value_or(poly->degree().value_or(0));
    HodgeVerdict v = hodge_numbers(*poly, d);
    r.hodge_numbers = v.numbers;
    r.checks["nonnegativity"] = check_of(v.nonnegative());
    if (dimension && projective) {
      r.checks["hodge_ends"] = check_of(v.ends_are_one);
      r.checks["palindrome"] = check_of(v.palindromic);
    }
  }
  if (dimension && projective)
    r.checks["duality"] = check_of(duality_check(e, *dimension));
  return r;
}

} // namespace ade

#endif // ADE_STRINGY_HPP
