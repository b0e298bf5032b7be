#include <gtest/gtest.h>

#include "opdam/gauss_2f1.hpp"

using namespace opdam;

TEST(Hyp2F1, ElementaryValues) {
  // 2F1(1, 1; 2; z) = -log(1 - z)/z
  for (double z : {-30.0, -3.0, -0.5, -1e-3})
    EXPECT_NEAR(hyp2f1({1, 1, 2, z}).real(), -std::log1p(-z) / z, 1e-14);
  // 2F1(a, b; b; z) = (1 - z)^{-a}
  EXPECT_NEAR(std::abs(hyp2f1({Complex(0.3, 0.4), 1.5, 1.5, -7.0}) -
                       std::pow(Complex(8.0), -Complex(0.3, 0.4))),
              0, 1e-13);
  EXPECT_EQ(hyp2f1({2, 3, 4, 0}), Complex(1));
}

TEST(Hyp2F1, RejectsUnsupportedArguments) {
  EXPECT_THROW(hyp2f1({1, 1, 2, 0.5}), DomainError);
  EXPECT_THROW(hyp2f1({1, 1, -2, -0.5}), DomainError);
  EXPECT_THROW(hyp2f1({1, 1, 2, -0.5}, 0.0), ParameterError);
}

TEST(JacobiPhi, ClosedForms) {
  for (double t : {0.1, 0.7, 2.0})
    for (double eta : {0.4, 1.3}) {
      // k = 1: sinh(eta t)/(eta sinh t)
      EXPECT_NEAR(jacobi_phi(1.0, eta, t).real(), std::sinh(eta * t) / (eta * std::sinh(t)),
                  1e-13);
    }
  // k = 1/2: Legendre function P_{eta-1/2}(cosh t); polynomial for eta = n + 1/2.
  for (double t : {0.2, 0.9}) {
    const double c = std::cosh(t);
    EXPECT_NEAR(jacobi_phi(0.5, 1.5, t).real(), c, 1e-13);
    EXPECT_NEAR(jacobi_phi(0.5, 2.5, t).real(), 0.5 * (3 * c * c - 1), 1e-13);
    EXPECT_NEAR(jacobi_phi(0.5, 3.5, t).real(), 0.5 * (5 * c * c * c - 3 * c), 1e-13);
  }
}

TEST(JacobiPhi, EvenInEtaAndNormalized) {
  for (double k : {0.5, 1.0, 2.5}) {
    EXPECT_NEAR(std::abs(jacobi_phi(k, Complex(0.3, 0.8), 0.0) - 1.0), 0, 1e-15);
    EXPECT_NEAR(std::abs(jacobi_phi(k, Complex(0.3, 0.8), 1.1) -
                         jacobi_phi(k, Complex(-0.3, -0.8), 1.1)),
                0, 1e-13);
  }
}

TEST(JacobiPhi, DerivativeMatchesDifference) {
  const double h = 1e-5;
  for (double k : {0.5, 1.0, 2.0})
    for (Complex eta : {Complex(0), Complex(1.0), Complex(0, 1), Complex(0.5, 0.5)}) {
      const double t = 0.9;
      const Complex fd = (jacobi_phi(k, eta, t + h) - jacobi_phi(k, eta, t - h)) / (2 * h);
      EXPECT_NEAR(std::abs(fd - jacobi_phi_deriv(k, eta, t)), 0, 1e-8);
    }
}

TEST(JacobiPhi, LDerivativeRemovesSingularityAtEtaEqualsK) {
  const double k = 1.5, t = 0.6;
  EXPECT_NEAR(std::abs(jacobi_phi_L(k, k, t) - jacobi_phi_L(k, k + 1e-7, t)), 0, 1e-6);
  for (Complex eta : {Complex(0.3), Complex(1, 2)})
    EXPECT_NEAR(std::abs(jacobi_phi_L(k, eta, t) * (eta - k) - jacobi_phi_deriv(k, eta, t)), 0,
                1e-13);
}

TEST(JacobiPhi, OutOfRange) { EXPECT_THROW(jacobi_phi(1.0, 0.5, 3.5), ConvergenceError); }
