#include <gtest/gtest.h>

#include <cmath>

#include "opdam/quadrature.hpp"

using namespace opdam;

TEST(GaussJacobi, MassAndMoments) {
  for (auto [a, b] : {std::pair{0.0, 0.0}, {-0.5, -0.5}, {1.5, -0.3}, {-0.7, 2.0}}) {
    const auto r = gauss_jacobi_rule(20, a, b);
    double mass = 0, m1 = 0;
    for (std::size_t i = 0; i < r->nodes.size(); ++i) {
      mass += r->weights[i];
      m1 += r->weights[i] * r->nodes[i];
      EXPECT_GT(r->weights[i], 0);
      EXPECT_LT(std::abs(r->nodes[i]), 1.0);
    }
    const double M = std::pow(2.0, a + b + 1) * std::tgamma(a + 1) * std::tgamma(b + 1) /
                     std::tgamma(a + b + 2);
    EXPECT_NEAR(mass, M, 1e-13 * M);
    EXPECT_NEAR(m1, M * (b - a) / (a + b + 2), 1e-13 * M);
  }
}

TEST(GaussJacobi, ExactForPolynomialsOfDegree2nMinus1) {
  const auto r = gauss_jacobi_rule(5, 0.0, 0.0);
  double s = 0;
  for (std::size_t i = 0; i < 5; ++i) s += r->weights[i] * std::pow(r->nodes[i], 8);
  EXPECT_NEAR(s, 2.0 / 9, 1e-15);
}

TEST(GaussJacobi, CacheReturnsSameRule) {
  EXPECT_EQ(gauss_jacobi_rule(17, 0.25, 0.25).get(), gauss_jacobi_rule(17, 0.25, 0.25).get());
}

TEST(GaussJacobi, RejectsBadParameters) {
  EXPECT_THROW(gauss_jacobi_rule(0, 0, 0), ParameterError);
  EXPECT_THROW(gauss_jacobi_rule(10, -1.0, 0), ParameterError);
}

TEST(Singular1D, EndpointPowerSingularities) {
  // int_0^1 x^{-1/2} (1-x)^{-1/2} cos(x) dx = pi * J0(1/2) * cos(1/2)
  auto r = integrate_singular_1d([](double x) { return Complex(std::cos(x)); }, 0.0, 1.0, -0.5,
                                 -0.5, 8, 1e-14);
  EXPECT_NEAR(r.value.real(), M_PI * std::cyl_bessel_j(0.0, 0.5) * std::cos(0.5), 1e-13);
  EXPECT_TRUE(r.converged);
  EXPECT_THROW(integrate_singular_1d([](double) { return Complex(1); }, 1.0, 0.0, 0, 0, 8),
               ParameterError);
}

TEST(SingularBox, ProductIntegral) {
  SingularBox<2> box{{0.0, -1.0}, {1.0, 2.0}, 0.5};
  auto r = integrate_box_singular<2>(
      [](const std::array<double, 2>& u) { return Complex(std::exp(u[0] + u[1])); }, box, 10, 1e-13);
  auto one = [](double a, double b) {
    return integrate_singular_1d([](double x) { return Complex(std::exp(x)); }, a, b, 0.5, 0.5, 10,
                                 1e-14)
        .value.real();
  };
  EXPECT_NEAR(r.value.real(), one(0, 1) * one(-1, 2), 1e-12);
}

TEST(SmoothPartW, ReconstructsWeight) {
  const ChamberPoint x{1, 0.2, -1.2};
  const std::array<double, 2> nu = {0.5, -0.4};
  const double K = 2.5;
  double W = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) W *= std::pow(std::abs(std::exp(x[i]) - std::exp(nu[j])), K - 1);
  const double lin = (x[0] - nu[0]) * (nu[0] - x[1]) * (x[1] - nu[1]) * (nu[1] - x[2]);
  EXPECT_NEAR(smooth_part_W(1.0, x, nu, K) * std::pow(lin, K - 1), W, 1e-13 * W);
  EXPECT_THROW(smooth_part_W(1.0, x, {1.5, 0.0}, K), DomainError);
  EXPECT_DOUBLE_EQ(exp_divided_difference(0.3, 0.3), std::exp(0.3));
}
