#ifndef ADE_EXACTALG_HPP
#define ADE_EXACTALG_HPP

// Exact univariate arithmetic over Z in the variable w = uv.
//
// Polynomial holds a dense coefficient vector with no trailing zeros, so the
// zero polynomial is the empty vector. RationalFunction is always stored in
// canonical form: gcd(num, den) = 1 over Q, the pair is jointly primitive
// over Z and den has a positive leading coefficient. Two canonical values are
// equal iff their coefficient vectors are identical.

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ade {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

class Polynomial {
public:
  Polynomial() = default;

  explicit Polynomial(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs))
  {
    trim();
  }

  Polynomial(std::initializer_list<long> coeffs)
  {
    coeffs_.reserve(coeffs.size());
    for (long c : coeffs)
      coeffs_.emplace_back(c);
    trim();
  }

  static Polynomial constant(const Integer& c) { return Polynomial(std::vector<Integer>{c}); }

  // c * w^exponent
  static Polynomial monomial(const Integer& c, std::size_t exponent)
  {
    std::vector<Integer> v(exponent + 1);
    v[exponent] = c;
    return Polynomial(std::move(v));
  }

  static Polynomial w() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }

  // Degree of a nonzero polynomial; std::nullopt for zero.
  std::optional<std::size_t> degree() const
  {
    if (coeffs_.empty())
      return std::nullopt;
    return coeffs_.size() - 1;
  }

  std::span<const Integer> coeffs() const { return coeffs_; }
  std::size_t size() const { return coeffs_.size(); }

  Integer coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }

  const Integer& leading() const
  {
    if (coeffs_.empty())
      throw std::domain_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  Integer eval(const Integer& x) const
  {
    Integer acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
      acc = acc * x + *it;
    return acc;
  }

  // gcd of the coefficients, nonnegative; 0 for the zero polynomial.
  Integer content() const
  {
    Integer g = 0;
    for (const auto& c : coeffs_) {
      g = boost::multiprecision::gcd(g, c);
      if (g == 1)
        break;
    }
    return boost::multiprecision::abs(g);
  }

  // Divides every coefficient by c, which must divide all of them.
  Polynomial divided_exactly(const Integer& c) const
  {
    if (c == 0)
      throw std::domain_error("division of a polynomial by zero");
    std::vector<Integer> v(coeffs_);
    for (auto& x : v) {
      if (x % c != 0)
        throw std::domain_error("inexact coefficient division");
      x /= c;
    }
    return Polynomial(std::move(v));
  }

  Polynomial primitive_part() const
  {
    if (is_zero())
      return {};
    return divided_exactly(content());
  }

  // Multiply by w^k.
  Polynomial shifted(std::size_t k) const
  {
    if (is_zero() || k == 0)
      return *this;
    std::vector<Integer> v(k);
    v.insert(v.end(), coeffs_.begin(), coeffs_.end());
    return Polynomial(std::move(v));
  }

  // w^deg * p(1/w); drops the low-order zero run of p.
  Polynomial reversed() const
  {
    std::vector<Integer> v(coeffs_.rbegin(), coeffs_.rend());
    return Polynomial(std::move(v));
  }

  // Multiplicity of w as a factor (0 for the zero polynomial).
  std::size_t low_order() const
  {
    std::size_t i = 0;
    while (i < coeffs_.size() && coeffs_[i] == 0)
      ++i;
    return i == coeffs_.size() ? 0 : i;
  }

  Polynomial operator-() const
  {
    std::vector<Integer> v(coeffs_);
    for (auto& x : v)
      x = -x;
    return Polynomial(std::move(v));
  }

  friend Polynomial operator+(const Polynomial& p, const Polynomial& q)
  {
    std::vector<Integer> v(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      v[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      v[i] += q.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator-(const Polynomial& p, const Polynomial& q)
  {
    std::vector<Integer> v(std::max(p.size(), q.size()));
    for (std::size_t i = 0; i < p.size(); ++i)
      v[i] += p.coeffs_[i];
    for (std::size_t i = 0; i < q.size(); ++i)
      v[i] -= q.coeffs_[i];
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Polynomial& p, const Polynomial& q)
  {
    if (p.is_zero() || q.is_zero())
      return {};
    std::vector<Integer> v(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p.coeffs_[i] == 0)
        continue;
      for (std::size_t j = 0; j < q.size(); ++j)
        v[i + j] += p.coeffs_[i] * q.coeffs_[j];
    }
    return Polynomial(std::move(v));
  }

  friend Polynomial operator*(const Integer& c, const Polynomial& p)
  {
    if (c == 0)
      return {};
    std::vector<Integer> v(p.coeffs_);
    for (auto& x : v)
      x *= c;
    return Polynomial(std::move(v));
  }

  Polynomial& operator+=(const Polynomial& q) { return *this = *this + q; }
  Polynomial& operator-=(const Polynomial& q) { return *this = *this - q; }
  Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
  void trim()
  {
    while (!coeffs_.empty() && coeffs_.back() == 0)
      coeffs_.pop_back();
  }

  std::vector<Integer> coeffs_;
};

enum class PolyOp { add, sub, mul };

inline Polynomial poly_arith(const Polynomial& p, const Polynomial& q, PolyOp op)
{
  switch (op) {
  case PolyOp::add:
    return p + q;
  case PolyOp::sub:
    return p - q;
  case PolyOp::mul:
    return p * q;
  }
  throw std::invalid_argument("unknown polynomial operation");
}

// 1 + w + ... + w^(a-1) = (w^a - 1)/(w - 1)
inline Polynomial geom_sum(long a)
{
  if (a < 1)
    throw std::invalid_argument("geom_sum requires a >= 1, got " + std::to_string(a));
  return Polynomial(std::vector<Integer>(static_cast<std::size_t>(a), Integer(1)));
}

// Pseudo-remainder: lc(q)^(deg p - deg q + 1) * p mod q, computed without
// fractions.
inline Polynomial pseudo_remainder(const Polynomial& p, const Polynomial& q)
{
  if (q.is_zero())
    throw std::domain_error("pseudo-remainder by the zero polynomial");
  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dq = *q.degree();
  const Integer& lq = q.leading();
  auto qc = q.coeffs();
  while (r.size() > dq && !r.empty()) {
    const std::size_t dr = r.size() - 1;
    const Integer lr = r.back();
    const std::size_t shift = dr - dq;
    for (auto& x : r)
      x *= lq;
    for (std::size_t j = 0; j <= dq; ++j)
      r[shift + j] -= lr * qc[j];
    while (!r.empty() && r.back() == 0)
      r.pop_back();
  }
  return Polynomial(std::move(r));
}

// Exact quotient p / q over Z. Throws if q does not divide p with integer
// coefficients.
inline Polynomial exact_quotient(const Polynomial& p, const Polynomial& q)
{
  if (q.is_zero())
    throw std::domain_error("division by the zero polynomial");
  if (p.is_zero())
    return {};
  const std::size_t dq = *q.degree();
  if (*p.degree() < dq)
    throw std::domain_error("inexact polynomial division");
  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  std::vector<Integer> quot(r.size() - dq);
  const Integer& lq = q.leading();
  auto qc = q.coeffs();
  for (std::size_t s = quot.size(); s-- > 0;) {
    const Integer& top = r[s + dq];
    if (top == 0)
      continue;
    if (top % lq != 0)
      throw std::domain_error("inexact polynomial division");
    Integer t = top / lq;
    for (std::size_t j = 0; j <= dq; ++j)
      r[s + j] -= t * qc[j];
    quot[s] = std::move(t);
  }
  for (const auto& x : r)
    if (x != 0)
      throw std::domain_error("inexact polynomial division");
  return Polynomial(std::move(quot));
}

// Remainder of p modulo a monic q; exact over Z.
inline Polynomial monic_remainder(const Polynomial& p, const Polynomial& q)
{
  if (q.is_zero() || q.leading() != 1)
    throw std::domain_error("monic_remainder requires a monic divisor");
  std::vector<Integer> r(p.coeffs().begin(), p.coeffs().end());
  const std::size_t dq = *q.degree();
  auto qc = q.coeffs();
  while (r.size() > dq && !r.empty()) {
    const std::size_t shift = r.size() - 1 - dq;
    const Integer t = r.back();
    for (std::size_t j = 0; j <= dq; ++j)
      r[shift + j] -= t * qc[j];
    while (!r.empty() && r.back() == 0)
      r.pop_back();
  }
  return Polynomial(std::move(r));
}

// Primitive gcd over Z[w] via the primitive pseudo-remainder sequence. The
// result is primitive with positive leading coefficient (content ignored);
// gcd(0, 0) = 0.
inline Polynomial primitive_gcd(const Polynomial& p, const Polynomial& q)
{
  Polynomial a = p.primitive_part();
  Polynomial b = q.primitive_part();
  if (a.is_zero())
    std::swap(a, b);
  if (a.is_zero())
    return {};
  if (!b.is_zero() && *b.degree() > *a.degree())
    std::swap(a, b);
  while (!b.is_zero()) {
    Polynomial r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0)
    a = -a;
  return a;
}

class RationalFunction {
public:
  RationalFunction() : den_(Polynomial::constant(1)) {}

  // NOLINTNEXTLINE(google-explicit-constructor)
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Polynomial::constant(1))
  {
    normalize_content();
  }

  RationalFunction(Polynomial num, Polynomial den) : num_(std::move(num)), den_(std::move(den))
  {
    if (den_.is_zero())
      throw std::domain_error("rational function with zero denominator");
    const Polynomial g = primitive_gcd(num_, den_);
    if (!g.is_zero() && *g.degree() > 0) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
    normalize_content();
  }

  // Builds from a pair already known to be coprime over Q (content and sign
  // are still normalized). Used by routes that cancel factors themselves.
  static RationalFunction from_coprime(Polynomial num, Polynomial den)
  {
    if (den.is_zero())
      throw std::domain_error("rational function with zero denominator");
    RationalFunction f;
    f.num_ = std::move(num);
    f.den_ = std::move(den);
    f.normalize_content();
    return f;
  }

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  friend RationalFunction operator+(const RationalFunction& f, const RationalFunction& g)
  {
    if (f.den_ == g.den_)
      return {f.num_ + g.num_, f.den_};
    return {f.num_ * g.den_ + g.num_ * f.den_, f.den_ * g.den_};
  }

  friend RationalFunction operator-(const RationalFunction& f, const RationalFunction& g)
  {
    return f + RationalFunction::from_coprime(-g.num_, g.den_);
  }

  friend RationalFunction operator*(const RationalFunction& f, const RationalFunction& g)
  {
    return {f.num_ * g.num_, f.den_ * g.den_};
  }

  friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
  void normalize_content()
  {
    if (num_.is_zero()) {
      den_ = Polynomial::constant(1);
      return;
    }
    Integer c = boost::multiprecision::gcd(num_.content(), den_.content());
    if (den_.leading() < 0)
      c = -c;
    if (c != 1) {
      num_ = num_.divided_exactly(c);
      den_ = den_.divided_exactly(c);
    }
  }

  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction rf_make(Polynomial num, Polynomial den)
{
  return {std::move(num), std::move(den)};
}

enum class RfOp { add, mul };

inline RationalFunction rf_arith(const RationalFunction& f, const RationalFunction& g, RfOp op)
{
  return op == RfOp::add ? f + g : f * g;
}

// The polynomial f, when its reduced denominator is the constant 1.
inline std::optional<Polynomial> rf_as_polynomial(const RationalFunction& f)
{
  if (f.den() == Polynomial::constant(1))
    return f.num();
  return std::nullopt;
}

// Limit of f as w -> 1 after cancelling every common factor (w - 1).
inline Rational rf_limit_at_one(const RationalFunction& f)
{
  const Polynomial w_minus_1{-1, 1};
  Polynomial num = f.num();
  Polynomial den = f.den();
  while (!num.is_zero() && num.eval(1) == 0 && den.eval(1) == 0) {
    num = exact_quotient(num, w_minus_1);
    den = exact_quotient(den, w_minus_1);
  }
  const Integer d = den.eval(1);
  if (d == 0)
    throw std::domain_error("rational function has a pole at w = 1");
  return Rational(num.eval(1), d);
}

// w^d * f(1/w)
inline RationalFunction rf_dual(const RationalFunction& f, std::size_t d)
{
  if (f.is_zero())
    return f;
  // f(1/w) = w^(deg den - deg num) * rev(num) / rev(den)
  const long shift = static_cast<long>(d) + static_cast<long>(*f.den().degree()) -
                     static_cast<long>(*f.num().degree());
  Polynomial num = f.num().reversed();
  Polynomial den = f.den().reversed();
  if (shift >= 0)
    num = num.shifted(static_cast<std::size_t>(shift));
  else
    den = den.shifted(static_cast<std::size_t>(-shift));
  return rf_make(std::move(num), std::move(den));
}

} // namespace ade

#endif // ADE_EXACTALG_HPP
