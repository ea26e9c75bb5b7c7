#ifndef ADE_TESTS_SUPPORT_HPP
#define ADE_TESTS_SUPPORT_HPP

#include <map>
#include <optional>
#include <vector>

#include "ade/catalog.hpp"
#include "ade/exactalg.hpp"

namespace ade::testing {

// A 1..20, D 4..20, E6, E7, E8 at each m in [m_lo, m_hi].
inline std::vector<SingularitySpec> acceptance_grid(long m_lo = 3, long m_hi = 10)
{
  std::vector<SingularitySpec> out;
  for (long m = m_lo; m <= m_hi; ++m) {
    for (long n = 1; n <= 20; ++n)
      out.push_back(SingularitySpec::make(Family::A, n, m));
    for (long n = 4; n <= 20; ++n)
      out.push_back(SingularitySpec::make(Family::D, n, m));
    for (Family f : {Family::E6, Family::E7, Family::E8})
      out.push_back(SingularitySpec::make(f, m));
  }
  return out;
}

// The defining sum term by term with generic rational-function arithmetic.
inline RationalFunction naive_strata_sum(const StratifiedResolution& res)
{
  const Polynomial w_minus_1{-1, 1};
  RationalFunction total;
  for (const auto& s : res.strata) {
    Polynomial num = s.hodge;
    Polynomial den = Polynomial::constant(1);
    for (int id : s.divisor_ids) {
      num *= w_minus_1;
      den *= Polynomial::monomial(1, static_cast<std::size_t>(res.find(id)->discrepancy + 1)) -
             Polynomial::constant(1);
    }
    total = total + rf_make(num, den);
  }
  return total;
}

// Looks for f = 1 + w^2 P / Q with Q = 1 + w + ... + w^{alpha+1} and
// P = w^alpha + (nonnegative lower terms); returns the number of terms of Q.
inline std::optional<long> structural_form(const RationalFunction& f, long max_terms = 4000)
{
  const RationalFunction g = f - RationalFunction(Polynomial::constant(1));
  if (g.is_zero() || g.den().leading() != 1)
    return std::nullopt;
  const long dd = static_cast<long>(*g.den().degree());
  for (long terms = dd + 1; terms <= max_terms; ++terms) {
    const Polynomial q = geom_sum(terms);
    if (!monic_remainder(q, g.den()).is_zero())
      continue;
    const Polynomial s = g.num() * exact_quotient(q, g.den());
    if (s.low_order() < 2)
      continue;
    bool nonneg = true;
    for (const auto& c : s.coeffs())
      nonneg = nonneg && c >= 0;
    if (nonneg && *s.degree() == static_cast<std::size_t>(terms) && s.leading() == 1)
      return terms;
  }
  return std::nullopt;
}

inline const Polynomial& w_var()
{
  static const Polynomial w = Polynomial::w();
  return w;
}

inline Polynomial wpow(std::size_t e) { return Polynomial::monomial(1, e); }

// d_r = w d_{r-2} + (w - 1) w^{r-2}, d_2 = w - 1, d_3 = w^2 + w
inline std::map<long, Polynomial> d_by_recursion(long max_r)
{
  std::map<long, Polynomial> d{{2, w_var() - Polynomial::constant(1)}, {3, wpow(2) + w_var()}};
  for (long r = 4; r <= max_r; ++r)
    d[r] = w_var() * d[r - 2] + (w_var() - Polynomial::constant(1)) * wpow(static_cast<std::size_t>(r - 2));
  return d;
}

// Split the quadric by the last variable of the form: x_r != 0 gives the
// affine quadric d_{r-1} times a cone factor, x_r = 0 the quadric one size down.
struct Ladders {
  std::map<long, Polynomial> a, b, c;
};

inline Ladders ladders(long max_r)
{
  const auto d = d_by_recursion(max_r);
  Ladders l;
  l.a[2] = Polynomial{1, 1, 2};
  l.b[2] = Polynomial{1, 2};
  l.c[2] = Polynomial{2};
  for (long r = 3; r <= max_r; ++r) {
    l.a[r] = l.a[r - 1] + wpow(2) * d.at(r - 1);
    l.b[r] = l.b[r - 1] + w_var() * d.at(r - 1);
    l.c[r] = l.c[r - 1] + d.at(r - 1);
  }
  return l;
}

} // namespace ade::testing

#endif
