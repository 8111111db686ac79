#include <gtest/gtest.h>

#include "oracles.hpp"
#include "spheregreen/closedform/expression.hpp"
#include "spheregreen/closedform/poly.hpp"

using namespace spheregreen::closedform;

TEST(Poly, Arithmetic) {
  const Poly x = Poly::x();
  const Poly p = (x + 1) * (x - 1);
  EXPECT_EQ(p, Poly(std::vector<Rational>{-1, 0, 1}));
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.derivative(), Poly(std::vector<Rational>{0, 2}));
  EXPECT_EQ((x + 1).pow(3), Poly(std::vector<Rational>{1, 3, 3, 1}));
  EXPECT_EQ(p.compose(x + 1), Poly(std::vector<Rational>{0, 2, 1}));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((-p)[0], Rational(1));
  EXPECT_EQ(p.eval(Rational(1, 2)), Rational(-3, 4));
  EXPECT_NEAR(static_cast<double>(p.eval(0.5L)), -0.75, 1e-18);
  Rational rem;
  EXPECT_EQ(p.divide_linear(1, &rem), x + 1);
  EXPECT_EQ(rem, 0);
  (x * x + 3).divide_linear(2, &rem);
  EXPECT_EQ(rem, 7);
}

TEST(Poly, Frac) {
  EXPECT_EQ(frac(1, -3), Rational(-1, 3));
  EXPECT_EQ(frac(-2, -4), Rational(1, 2));
  EXPECT_EQ(frac(5, 1), Rational(5));
}

TEST(Poly, Text) {
  const Poly p(std::vector<Rational>{3, -7, 1});
  EXPECT_EQ(p.to_string("t"), "3 - 7t + t^2");
  EXPECT_EQ(p.to_string("t", true), "3 - 7t + t^{2}");
  EXPECT_EQ(Poly().to_string("t"), "0");
  EXPECT_EQ(rational_text(Rational(-5, 3)), "-5/3");
}

TEST(Poly, GegenbauerMatchesExactRecurrence) {
  for (const Rational& mu : {Rational(1, 2), Rational(3, 2), Rational(2), Rational(-1, 2), Rational(7, 3)}) {
    const auto polys = gegenbauer_polys(mu, 12);
    ASSERT_EQ(polys.size(), 13u);
    for (int k = 0; k <= 12; ++k)
      for (const Rational& t : {Rational(-1), Rational(1, 3), Rational(9, 10)})
        EXPECT_EQ(polys[k].eval(t), oracle::gegenbauer_exact(mu, k, t)) << k;
  }
}

TEST(TCoef, NormalizesFactors) {
  // (1 - t^2) / (1 - t) = 1 + t
  const TCoef c(Poly(std::vector<Rational>{1, 0, -1}), 1, 0);
  EXPECT_EQ(c, TCoef(Poly(std::vector<Rational>{1, 1})));
  const TCoef d = TCoef(1).times_factors(-2, 1);
  EXPECT_EQ(d.pow_one_minus(), 2);
  EXPECT_EQ(d.pow_one_plus(), 0);
  EXPECT_NEAR(static_cast<double>(d.eval(0.5L)), 1.5 / 0.25, 1e-15);
  const TCoef s = TCoef(1).times_factors(-1, 0) + TCoef(1).times_factors(0, -1);  // 2/(1-t^2)
  EXPECT_NEAR(static_cast<double>(s.eval(0.3L)), 2 / (1 - 0.09), 1e-15);
  EXPECT_TRUE((s - s).is_zero());
}

TEST(RPoly, Products) {
  const RPoly d = RPoly::d_power(1);
  EXPECT_NEAR(static_cast<double>(d.eval(0.3L, 2.0L)), 1 - 1.2 + 4, 1e-15);
  const RPoly sh = RPoly::shifted_power(3);
  EXPECT_NEAR(static_cast<double>(sh.eval(0.3L, 2.0L)), 1.7 * 1.7 * 1.7, 1e-14);
  const RPoly prod = d * sh;
  EXPECT_NEAR(static_cast<double>(prod.eval(-0.4L, 1.5L)),
              static_cast<double>(d.eval(-0.4L, 1.5L) * sh.eval(-0.4L, 1.5L)), 1e-14);
  EXPECT_EQ(RPoly::monomial(-2).shifted(3), RPoly::monomial(1));
  EXPECT_EQ(d.min_power(), 0);
  EXPECT_EQ(d.max_power(), 2);
}

TEST(RationalLogExpression, EvaluatesTerms) {
  RationalLogExpression e;
  e.add(1, LogKind::kNone, RPoly::monomial(1));         // R sqrt D
  e.add(0, LogKind::kShift, RPoly(TCoef(2)));           // 2 ln(R - t + sqrt D)
  e.add(-2, LogKind::kLn1mt, RPoly::monomial(0, -1));   // -ln(1-t)/D
  const long double t = 0.25L, R = 0.8L;
  const long double D = 1 - 2 * t * R + R * R;
  const long double ref = R * std::sqrt(D) + 2 * std::log(R - t + std::sqrt(D)) - std::log(1 - t) / D;
  EXPECT_NEAR(static_cast<double>(e.eval(t, R)), static_cast<double>(ref), 1e-15);
  EXPECT_TRUE((e - e).is_zero());
}
