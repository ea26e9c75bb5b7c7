#ifndef ADE_CLOSEDFORM_HPP
#define ADE_CLOSEDFORM_HPP

// Closed-form contributions of A-D-E singularities, transcribed row by row:
// the general tables (odd and even m, valid for every m >= 3) and the
// separate m = 4 table. Independent of the catalog and of the stratum sum.

#include <stdexcept>
#include <string>
#include <vector>

#include "catalog.hpp"
#include "exactalg.hpp"

namespace ade {

enum class ClosedFormTable { general, m4_table, automatic };

namespace detail {

// Exponent with a halved numerator; the numerator must be even for the row.
inline long half_exponent(long numerator)
{
  if (numerator % 2 != 0)
    throw std::logic_error("half-integer exponent " + std::to_string(numerator) + "/2");
  return numerator / 2;
}

class ExponentSum {
public:
  void add(long e)
  {
    if (e < 0)
      throw std::logic_error("negative exponent " + std::to_string(e));
    exps_.push_back(e);
  }

  // sum_{i=lo}^{hi} w^{f(i)}; empty when hi < lo.
  template <class F>
  void add_range(long lo, long hi, F f)
  {
    for (long i = lo; i <= hi; ++i)
      add(f(i));
  }

  const std::vector<long>& exponents() const { return exps_; }

  Polynomial polynomial() const
  {
    Polynomial p;
    for (long e : exps_)
      p += Polynomial::monomial(1, static_cast<std::size_t>(e));
    return p;
  }

private:
  std::vector<long> exps_;
};

// 1 + (w - 1) * S / (w^N - 1)
inline RationalFunction one_plus(long n, const ExponentSum& s)
{
  const Polynomial w_minus_1{-1, 1};
  const Polynomial wn_minus_1 = Polynomial::monomial(1, static_cast<std::size_t>(n)) - Polynomial::constant(1);
  return rf_make(wn_minus_1 + w_minus_1 * s.polynomial(), wn_minus_1);
}

inline RationalFunction general_table(const SingularitySpec& spec)
{
  const long m = spec.m();
  const long t = m - 3;
  const long k = spec.k();
  const bool odd_m = m % 2 == 1;
  ExponentSum s;

  switch (spec.family()) {
  case Family::A:
    if (!spec.n_odd()) {
      s.add_range(2, k + 1, [&](long i) { return (k + i) * t + 2; });
      if (odd_m) {
        s.add_range(1, k, [&](long i) { return (k + i) * t + half_exponent(m + 1); });
        s.add_range(1, k, [&](long i) { return i * t + half_exponent(m - 1); });
      }
      s.add_range(1, k, [&](long i) { return i * t + 1; });
      return one_plus((2 * k + 1) * t + 2, s);
    }
    s.add_range(1, k, [&](long i) { return i * t + 1; });
    if (odd_m)
      s.add_range(1, k - 1, [&](long i) { return i * t + half_exponent(m - 1); });
    else
      s.add(half_exponent(m) - 1);
    return one_plus(k * t + 1, s);

  case Family::D:
    if (!spec.n_odd()) {
      s.add_range(1, 2 * k - 1, [&](long i) { return i * t + 1; });
      s.add(k * t + 1);
      if (!odd_m) {
        s.add_range(0, k - 2, [&](long i) { return (k + i) * t + half_exponent(m); });
        s.add_range(0, k - 1, [&](long i) { return i * t + half_exponent(m) - 1; });
        s.add(half_exponent(m) - 1);
      }
      return one_plus((2 * k - 1) * t + 1, s);
    }
    s.add_range(1, 2 * k, [&](long i) { return i * t + 1; });
    if (odd_m) {
      s.add(k * t + half_exponent(m - 1));
    } else {
      s.add_range(1, k - 1, [&](long i) { return (k + i) * t + half_exponent(m); });
      s.add_range(0, k - 1, [&](long i) { return i * t + half_exponent(m) - 1; });
    }
    return one_plus(2 * k * t + 1, s);

  case Family::E6:
    for (long e : {6 * m - 17, 4 * m - 11, 3 * m - 8, m - 2})
      s.add(e);
    if (odd_m) {
      s.add(half_exponent(9 * m - 25));
      s.add(half_exponent(5 * m - 13));
    } else {
      s.add(half_exponent(11 * m - 30));
      s.add(half_exponent(3 * m - 8));
    }
    return one_plus(6 * m - 17, s);

  case Family::E7:
    for (long e : {9 * m - 26, 7 * m - 20, 6 * m - 17, 5 * m - 14, 4 * m - 11, 3 * m - 8, m - 2})
      s.add(e);
    if (!odd_m)
      for (long e : {17 * m - 48, 15 * m - 42, 11 * m - 30, 9 * m - 26, 5 * m - 14, 3 * m - 8, m - 2})
        s.add(half_exponent(e));
    return one_plus(9 * m - 26, s);

  case Family::E8:
    for (long e : {15 * m - 44, 12 * m - 35, 10 * m - 29, 9 * m - 26, 7 * m - 20, 6 * m - 17, 4 * m - 11, m - 2})
      s.add(e);
    if (!odd_m)
      for (long e : {29 * m - 84, 27 * m - 78, 23 * m - 66, 17 * m - 48, 15 * m - 44, 9 * m - 26,
                     5 * m - 14, 3 * m - 8})
        s.add(half_exponent(e));
    return one_plus(15 * m - 44, s);
  }
  throw std::invalid_argument("unknown family");
}

// base + w^2 * p / q
inline RationalFunction w2_fraction(const Polynomial& base, const Polynomial& p, const Polynomial& q)
{
  return RationalFunction(base) + rf_make(p.shifted(2), q);
}

inline Polynomial wp(long e) { return Polynomial::monomial(1, static_cast<std::size_t>(e)); }

inline RationalFunction m4_table(const SingularitySpec& spec)
{
  if (spec.m() != 4)
    throw std::invalid_argument("the m = 4 table requires m = 4, got m = " + std::to_string(spec.m()));
  const long k = spec.k();
  const Polynomial one = Polynomial::constant(1);
  const Polynomial one_plus_w{1, 1};
  switch (spec.family()) {
  case Family::A:
    if (spec.n_odd())
      return one_plus_w;
    return w2_fraction(one, wp(2 * k + 2) - wp(k + 2) + wp(k) - one, wp(2 * k + 3) - one);
  case Family::D:
    if (!spec.n_odd())
      return Polynomial{1, 2};
    return w2_fraction(one_plus_w, wp(2 * k) - wp(k + 1) + wp(k - 1) - one, wp(2 * k + 1) - one);
  case Family::E6:
    return w2_fraction(one, Polynomial{-2, 2, -1, 0, 1, -2, 2}, wp(7) - one);
  case Family::E7:
    return w2_fraction(one_plus_w, Polynomial{-1, 1, 0, -1, 1}, wp(5) - one);
  case Family::E8:
    return w2_fraction(one, Polynomial{-2, 1, 1, -2, 2, -1, -1, 2}, wp(8) - one);
  }
  throw std::invalid_argument("unknown family");
}

} // namespace detail

// Closed-form contribution of the singular point. `automatic` uses the
// general table and, at m = 4, also requires agreement with the m = 4 table.
inline RationalFunction contribution_closed(const SingularitySpec& spec,
                                            ClosedFormTable table = ClosedFormTable::automatic)
{
  switch (table) {
  case ClosedFormTable::general:
    return detail::general_table(spec);
  case ClosedFormTable::m4_table:
    return detail::m4_table(spec);
  case ClosedFormTable::automatic: {
    RationalFunction f = detail::general_table(spec);
    if (spec.m() == 4 && !(f == detail::m4_table(spec)))
      throw std::logic_error("general and m = 4 tables disagree for " + spec.name());
    return f;
  }
  }
  throw std::invalid_argument("unknown table selector");
}

// The contribution is a polynomial exactly for A_n (n odd) and D_n (n even)
// in dimension 3. The statement concerns dimension >= 3; surfaces (m = 3),
// whose contributions are the polynomials 1 + n w, are answered false.
inline bool classify_polynomiality(const SingularitySpec& spec)
{
  if (spec.m() != 4)
    return false;
  return (spec.family() == Family::A && spec.n_odd()) ||
         (spec.family() == Family::D && !spec.n_odd());
}

} // namespace ade

#endif // ADE_CLOSEDFORM_HPP
