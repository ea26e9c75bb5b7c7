#include <random>

#include <gtest/gtest.h>

#include "ade/exactalg.hpp"

using namespace ade;

namespace {

const Polynomial w = Polynomial::w();
const Polynomial one = Polynomial::constant(1);

Polynomial wpow(std::size_t e) { return Polynomial::monomial(1, e); }

Polynomial random_poly(std::mt19937& rng, int max_deg, int bound)
{
  std::uniform_int_distribution<int> deg(0, max_deg), c(-bound, bound);
  std::vector<Integer> v(deg(rng) + 1);
  for (auto& x : v)
    x = c(rng);
  return Polynomial(std::move(v));
}

Polynomial random_nonzero(std::mt19937& rng, int max_deg, int bound)
{
  Polynomial p;
  while (p.is_zero())
    p = random_poly(rng, max_deg, bound);
  return p;
}

} // namespace

TEST(Polynomial, TrailingZerosTrimmed)
{
  Polynomial p(std::vector<Integer>{1, 2, 0, 0});
  EXPECT_EQ(p.size(), 2u);
  EXPECT_EQ(p.degree(), 1u);
  EXPECT_TRUE(Polynomial(std::vector<Integer>{0, 0}).is_zero());
}

TEST(Polynomial, ZeroHasNoDegree)
{
  EXPECT_FALSE(Polynomial().degree().has_value());
  EXPECT_EQ(Polynomial().size(), 0u);
  EXPECT_EQ(Polynomial::constant(0), Polynomial());
  EXPECT_EQ(Polynomial::monomial(0, 7), Polynomial());
}

TEST(Polynomial, Arithmetic)
{
  EXPECT_EQ(poly_arith({-1, 1}, {1, 1}, PolyOp::mul), (Polynomial{-1, 0, 1}));
  const Polynomial p{3, 0, -2, 5};
  EXPECT_EQ(poly_arith(p, Polynomial(), PolyOp::add), p);
  EXPECT_TRUE(poly_arith({0, 1, 1}, {0, 1, 1}, PolyOp::sub).is_zero());
  EXPECT_EQ(poly_arith(p, Polynomial(), PolyOp::mul), Polynomial());
}

TEST(Polynomial, EvalContentShift)
{
  const Polynomial p{6, -4, 10};
  EXPECT_EQ(p.eval(2), 6 - 8 + 40);
  EXPECT_EQ(p.content(), 2);
  EXPECT_EQ(p.primitive_part(), (Polynomial{3, -2, 5}));
  EXPECT_EQ(p.shifted(2), (Polynomial{0, 0, 6, -4, 10}));
  EXPECT_EQ(p.reversed(), (Polynomial{10, -4, 6}));
  EXPECT_EQ((Polynomial{0, 0, 1, 1}).low_order(), 2u);
  EXPECT_EQ((Polynomial{0, 0, 1, 1}).reversed(), (Polynomial{1, 1}));
  EXPECT_THROW(p.divided_exactly(4), std::domain_error);
}

TEST(Polynomial, BigCoefficients)
{
  Polynomial p = one + w;
  for (int i = 0; i < 7; ++i)
    p = p * p;
  EXPECT_EQ(p.degree(), 128u);
  Integer binom = 1;
  for (int i = 0; i < 64; ++i)
    binom = binom * (128 - i) / (i + 1);
  EXPECT_EQ(p.coeff(64), binom);
  EXPECT_GT(binom, Integer(std::numeric_limits<long long>::max()));
}

TEST(GeomSum, Examples)
{
  EXPECT_EQ(geom_sum(1), one);
  EXPECT_EQ(geom_sum(3), (Polynomial{1, 1, 1}));
  EXPECT_EQ(geom_sum(4).eval(1), 4);
  EXPECT_THROW(geom_sum(0), std::invalid_argument);
  EXPECT_THROW(geom_sum(-3), std::invalid_argument);
}

TEST(GeomSum, TelescopesForSmallA)
{
  for (long a = 1; a <= 64; ++a)
    EXPECT_TRUE((geom_sum(a) * (w - one) + one - wpow(a)).is_zero()) << a;
}

TEST(Division, ExactQuotientAndRemainders)
{
  const Polynomial p = (w - one) * (w * w + 2 * w + one);
  EXPECT_EQ(exact_quotient(p, w - one), w * w + 2 * w + one);
  EXPECT_THROW(exact_quotient(p, w + 2 * one), std::domain_error);
  EXPECT_TRUE(monic_remainder(p, w - one).is_zero());
  EXPECT_EQ(monic_remainder(wpow(3), w - one), one);
  EXPECT_EQ(pseudo_remainder(Polynomial{1, 0, 1}, Polynomial{1, 2}), Polynomial::constant(5));
}

TEST(Gcd, PrimitivePositive)
{
  const Polynomial g{-1, 1};
  EXPECT_EQ(primitive_gcd(g * Polynomial{2, 3}, g * Polynomial{5, 0, 7}), g);
  EXPECT_EQ(primitive_gcd(-2 * g * Polynomial{1, 1}, 4 * g), g);
  EXPECT_EQ(primitive_gcd(wpow(4) - one, wpow(6) - one), wpow(2) - one);
  EXPECT_EQ(primitive_gcd(Polynomial{1, 1}, Polynomial{2, 1}), one);
  EXPECT_EQ(primitive_gcd(Polynomial(), Polynomial{4, 6}), (Polynomial{2, 3}));
}

TEST(RationalFunction, MakeExamples)
{
  const auto f = rf_make(wpow(2) - one, w - one);
  EXPECT_EQ(f.num(), w + one);
  EXPECT_EQ(f.den(), one);

  const auto g = rf_make(Polynomial{-2, 2}, Polynomial{2});
  EXPECT_EQ(g.num(), w - one);
  EXPECT_EQ(g.den(), one);

  const Polynomial s = wpow(3) + 2 * wpow(5) + wpow(7);
  const auto h = rf_make(s * (w - one), wpow(7) - one);
  EXPECT_EQ(h.num(), s);
  EXPECT_EQ(h.den(), geom_sum(7));
  EXPECT_TRUE(monic_remainder(wpow(7) - one, h.den()).is_zero());

  EXPECT_THROW(rf_make(one, Polynomial()), std::domain_error);
}

TEST(RationalFunction, CanonicalSignAndContent)
{
  const auto f = rf_make(Polynomial{2, 4}, Polynomial{-6});
  EXPECT_EQ(f.num(), (Polynomial{-1, -2}));
  EXPECT_EQ(f.den(), (Polynomial{3}));
  const auto z = rf_make(Polynomial(), Polynomial{-4, 7});
  EXPECT_TRUE(z.is_zero());
  EXPECT_EQ(z.den(), one);
}

TEST(RationalFunction, ArithExamples)
{
  const auto f = rf_make(Polynomial{1, 1}, Polynomial{3, 0, 1});
  EXPECT_EQ(rf_arith(f, RationalFunction(), RfOp::add), f);
  EXPECT_EQ(rf_arith(rf_make(w - one, wpow(3) - one), rf_make(wpow(3) - one, w - one), RfOp::mul),
            RationalFunction(one));

  const Polynomial s = wpow(3) + 2 * wpow(5) + wpow(7);
  const auto d4 = rf_arith(RationalFunction(one), rf_make((w - one) * s, wpow(7) - one), RfOp::add);
  EXPECT_EQ(d4.den(), geom_sum(7));
  EXPECT_EQ(d4.num(), geom_sum(7) + s);
  EXPECT_EQ(rf_limit_at_one(d4), Rational(11, 7));
}

TEST(RationalFunction, AsPolynomial)
{
  EXPECT_EQ(rf_as_polynomial(rf_make(Polynomial{1, 2}, one)), (Polynomial{1, 2}));
  EXPECT_FALSE(rf_as_polynomial(rf_make(wpow(4) - one, wpow(3) - one)).has_value());
  EXPECT_EQ(rf_as_polynomial(RationalFunction()), Polynomial());
}

TEST(RationalFunction, LimitAtOne)
{
  EXPECT_EQ(rf_limit_at_one(rf_make(wpow(4) - one, wpow(3) - one)), Rational(4, 3));
  EXPECT_EQ(rf_limit_at_one(RationalFunction(Polynomial{1, 2})), Rational(3));
  EXPECT_EQ(rf_limit_at_one(rf_make((w - one) * (w - one), (w - one) * (w + one))), Rational(0));
  EXPECT_THROW(rf_limit_at_one(rf_make(one, w - one)), std::domain_error);
}

TEST(RationalFunction, Dual)
{
  const Polynomial e{1, 5, 5, 1};
  EXPECT_EQ(rf_dual(e, 3), RationalFunction(e));
  EXPECT_EQ(rf_dual(one, 5), RationalFunction(wpow(5)));
  EXPECT_EQ(rf_dual(Polynomial{1, 1}, 3), RationalFunction(Polynomial{0, 0, 1, 1}));
  EXPECT_EQ(rf_dual(RationalFunction(), 4), RationalFunction());
  // w^2 * (1/w) / (1 + 1/w) = w^2 / (w + 1)
  EXPECT_EQ(rf_dual(rf_make(w, w + one), 2), rf_make(wpow(2), w + one));
}

TEST(Properties, RingAxioms)
{
  std::mt19937 rng(20261019);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial p = random_poly(rng, 6, 9), q = random_poly(rng, 6, 9), r = random_poly(rng, 6, 9);
    EXPECT_EQ((p + q) + r, p + (q + r));
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_EQ(p + q, q + p);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ(p * (q + r), p * q + p * r);
    EXPECT_TRUE((p - p).is_zero());
    EXPECT_EQ(p * one, p);
    EXPECT_TRUE((p * Polynomial()).is_zero());
    if (!q.is_zero())
      EXPECT_EQ(exact_quotient(p * q, q), p);
  }
}

TEST(Properties, FieldAxioms)
{
  std::mt19937 rng(7);
  for (int iter = 0; iter < 80; ++iter) {
    const auto f = rf_make(random_poly(rng, 4, 5), random_nonzero(rng, 4, 5));
    const auto g = rf_make(random_poly(rng, 4, 5), random_nonzero(rng, 4, 5));
    const auto h = rf_make(random_poly(rng, 3, 5), random_nonzero(rng, 3, 5));
    EXPECT_EQ((f + g) + h, f + (g + h));
    EXPECT_EQ((f * g) * h, f * (g * h));
    EXPECT_EQ(f + g, g + f);
    EXPECT_EQ(f * g, g * f);
    EXPECT_EQ(f * (g + h), f * g + f * h);
    EXPECT_TRUE((f - f).is_zero());
    if (!g.is_zero())
      EXPECT_EQ(f * g * rf_make(g.den(), g.num()), f);
  }
}

TEST(Properties, CanonicalFormInvariants)
{
  std::mt19937 rng(11);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial common = random_nonzero(rng, 2, 3);
    const auto f = rf_make(random_poly(rng, 4, 6) * common, random_nonzero(rng, 4, 6) * common);
    ASSERT_FALSE(f.den().is_zero());
    EXPECT_GT(f.den().leading(), 0);
    EXPECT_EQ(primitive_gcd(f.num(), f.den()), one);
    // joint content is 1
    Integer c = f.den().content();
    if (!f.num().is_zero())
      c = boost::multiprecision::gcd(c, f.num().content());
    EXPECT_EQ(c, 1);
    if (f.num().is_zero())
      EXPECT_EQ(f.den(), one);
  }
}

TEST(Properties, ScalingInvariance)
{
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> scale(-50, 50);
  for (int iter = 0; iter < 200; ++iter) {
    const Polynomial p = random_poly(rng, 5, 7), q = random_nonzero(rng, 5, 7);
    int a = 0;
    while (a == 0)
      a = scale(rng);
    EXPECT_EQ(rf_make(Integer(a) * p, Integer(a) * q), rf_make(p, q));
  }
}

TEST(Properties, DualIsInvolution)
{
  std::mt19937 rng(5);
  for (int iter = 0; iter < 200; ++iter) {
    const auto f = rf_make(random_poly(rng, 5, 6), random_nonzero(rng, 5, 6));
    for (std::size_t d : {5u, 6u, 9u})
      EXPECT_EQ(rf_dual(rf_dual(f, d), d), f);
  }
}

TEST(Properties, LimitOfGeometricRatios)
{
  for (long a = 1; a <= 32; ++a)
    for (long b = 1; b <= 32; ++b)
      EXPECT_EQ(rf_limit_at_one(rf_make(geom_sum(a), geom_sum(b))), Rational(a, b)) << a << "/" << b;
}
