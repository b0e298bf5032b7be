#include <gtest/gtest.h>

#include "opdam/poly_oracle.hpp"

using namespace opdam;
using namespace opdam::oracle;

TEST(LatticeWeight, Construction) {
  EXPECT_THROW(LatticeWeight::from_scaled(1, 0, 0), ParameterError);
  EXPECT_THROW(LatticeWeight::from_scaled(2, 0, -2), ParameterError);
  const auto w = LatticeWeight::fundamental(2, 1);
  EXPECT_TRUE(w.is_dominant());
  EXPECT_TRUE(w.is_regular());
  EXPECT_EQ(w.height(), 3);
  EXPECT_FALSE(LatticeWeight::fundamental(1, 0).is_regular());
  EXPECT_EQ(LatticeWeight::project(0, 1, 0).dominant(), LatticeWeight::fundamental(1, 0));
}

TEST(DominanceOrder, PositiveRootShift) {
  const auto mu = LatticeWeight::fundamental(1, 1);
  const auto lower = LatticeWeight::from_scaled(0, 0, 0);
  EXPECT_TRUE(DominanceOrder::precedes(lower, mu));
  EXPECT_FALSE(DominanceOrder::precedes(mu, lower));
  EXPECT_TRUE(DominanceOrder::precedes_or_equal(mu, mu));
  EXPECT_LT(DominanceOrder::key(lower), DominanceOrder::key(mu));
}

TEST(ExpPoly, ArithmeticAndCompose) {
  const auto a = ExpPoly::monomial(LatticeWeight::project(1, 0, 0), Rational(2));
  const auto b = ExpPoly::monomial(LatticeWeight::project(0, 0, 1), Rational(1, 3));
  const auto p = a * b;
  EXPECT_EQ(p.coeff(LatticeWeight::project(1, 0, 1)), Rational(2, 3));
  EXPECT_TRUE((p - p).empty());
  const auto s = WeylElement::reflection(3, 1, 3);
  EXPECT_EQ(a.compose(s).coeff(LatticeWeight::project(0, 0, 1)), Rational(2));
  EXPECT_EQ((a + b).at_zero(), Rational(7, 3));
}

TEST(OpdamE, TrivialAndLeadingTerm) {
  const auto e0 = opdam_E(Rational(1), LatticeWeight());
  EXPECT_EQ(e0.poly.size(), 1u);
  for (const auto& mu : {LatticeWeight::project(1, 0, 0), LatticeWeight::project(0, 1, 0),
                         LatticeWeight::project(0, 0, 1), LatticeWeight::fundamental(1, 1)}) {
    const auto E = opdam_E(Rational(3, 2), mu);
    EXPECT_EQ(E.poly.coeff(mu), Rational(1)) << mu.str();
    for (const auto& [w, c] : E.poly.terms())
      if (w != mu) {
        EXPECT_TRUE(DominanceOrder::precedes(w, mu)) << w.str();
      }
  }
  EXPECT_THROW(opdam_E(Rational(1), LatticeWeight::fundamental(3, 3)), ParameterError);
  EXPECT_THROW(opdam_E(Rational(0), LatticeWeight()), ParameterError);
}

TEST(OpdamE, IsCherednikEigenfunction) {
  const Rational k(1, 2);
  const auto mu = LatticeWeight::project(0, 1, 0);
  const auto E = opdam_E(k, mu);
  for (int i : {1, 2}) {
    const auto lhs = cherednik_exact(k, xi_basis(i), E.poly);
    EXPECT_TRUE((lhs - rdot(E.eigenvalue, xi_basis(i)) * E.poly).empty());
  }
}

TEST(Oracle, Identities) {
  for (const auto& k : {Rational(1, 2), Rational(2)})
    for (const auto& mu : dominant_weights(2)) {
      EXPECT_TRUE(check_p_eigen(k, mu).verdict) << mu.str();
      EXPECT_TRUE(check_alternating_shift(k, mu).verdict) << mu.str();
      EXPECT_TRUE(check_p_at_zero(k, mu).verdict) << mu.str();
      EXPECT_TRUE(check_g_properties(k, mu).verdict) << mu.str();
      EXPECT_TRUE(check_shift(k, mu).verdict) << mu.str();
      EXPECT_TRUE(check_dk_forms(k, mu).verdict) << mu.str();
      if (auto c = check_main_theorem(k, mu)) {
        EXPECT_TRUE(c->verdict) << mu.str();
      }
    }
  EXPECT_FALSE(check_main_theorem(Rational(1), LatticeWeight()).has_value());
}

TEST(Oracle, ProductOperatorRegularAndResonant) {
  const RVec xi = {Rational(3), Rational(-1), Rational(-2)};
  EXPECT_TRUE(check_product_operator(Rational(1), LatticeWeight::fundamental(1, 1), xi).verdict);
  EXPECT_THROW(product_operator_apply(Rational(1), LatticeWeight::fundamental(1, 0), xi), ResonantParam);
}

TEST(Oracle, NormalizationAndSymmetrization) {
  const Rational k(3, 2);
  const auto mu = LatticeWeight::fundamental(2, 1);
  EXPECT_EQ(f_exact(k, mu).at_zero(), Rational(1));
  EXPECT_EQ(g_exact(k, mu).at_zero(), Rational(1));
  ExpPoly sym;
  for (const auto& w : weyl_group(3)) sym += Rational(1, 6) * g_exact(k, mu).compose(w);
  EXPECT_TRUE((sym - f_exact(k, mu)).empty());
}

TEST(Oracle, Pochhammer) {
  EXPECT_EQ(pochhammer(Rational(1, 2), 3), Rational(15, 8));
  EXPECT_EQ(pochhammer(Rational(5), 0), Rational(1));
  EXPECT_EQ(stabilizer_size(LatticeWeight()), 6);
  EXPECT_EQ(stabilizer_size(LatticeWeight::fundamental(1, 0)), 2);
  EXPECT_EQ(stabilizer_size(LatticeWeight::fundamental(1, 1)), 1);
}
