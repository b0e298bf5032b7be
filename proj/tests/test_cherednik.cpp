#include <gtest/gtest.h>

#include "opdam/cherednik.hpp"
#include "opdam/poly_oracle.hpp"

using namespace opdam;

TEST(Cherednik, DerivativesOfExponential) {
  const VPoint x{0.3, 0.1, -0.4};
  const std::vector<double> d = {0.6, -0.2, -0.4};
  auto f = [](const VPoint& y) { return std::exp(Complex(0.5, 0.3) * y[0] - 0.7 * y[2]); };
  const Complex dd = 0.6 * Complex(0.5, 0.3) + 0.4 * 0.7;
  DirectionalStencil st;
  EXPECT_LT(std::abs(directional_derivative(f, x, d, st).value - dd * f(x)), 1e-11);
  EXPECT_LT(std::abs(second_derivative(f, x, f(x), d, st).value - dd * dd * f(x)), 1e-8);
  const auto jet = directional_jet(f, x, f(x), d, st);
  EXPECT_LT(std::abs(jet[0].value - dd * f(x)), 1e-11);
  EXPECT_LT(std::abs(jet[1].value - dd * dd * f(x)), 1e-8);
  st.h = -1;
  EXPECT_THROW(directional_derivative(f, x, d, st), ParameterError);
}

TEST(Cherednik, GeneralReducesToSymOnInvariantFunctions) {
  auto f = [](const VPoint& y) {
    return Complex(std::cosh(y[0]) + std::cosh(y[1]) + std::cosh(y[2]));
  };
  const VPoint x{1, 0.2, -1.2};
  const VPoint xi = projected_basis(3, 1);
  DirectionalStencil st;
  EXPECT_LT(std::abs(cherednik_general(1.2, f, x, xi, st) - cherednik_sym(1.2, f, x, xi, st)), 1e-12);
  auto g = [&](const VPoint& y) { return Complex(vandermonde_exp(y)); };
  EXPECT_LT(std::abs(cherednik_general(1.2, g, x, xi, st) - cherednik_anti(1.2, g, x, xi, st)), 1e-10);
  EXPECT_THROW(cherednik_general(1.2, f, VPoint{0.5, 0.5, -1}, xi, st), WallError);
}

TEST(Cherednik, ExactAndNumericOperatorsAgree) {
  using namespace oracle;
  const Rational k(3, 2);
  const auto E = opdam_E(k, LatticeWeight::fundamental(1, 0)).poly;
  const auto TE = cherednik_exact(k, xi_basis(2), E);
  const VPoint x{0.9, 0.1, -1.0};
  auto f = [&](const VPoint& y) { return E.eval<double>(y.coords()); };
  const Complex num = cherednik_general(1.5, f, x, projected_basis(3, 2), DirectionalStencil{});
  EXPECT_LT(std::abs(num - TE.eval<double>(x.coords())), 1e-9);
}

TEST(Cherednik, GMatchesOracleAndOrbit) {
  using namespace oracle;
  HypFContext ctx;
  ctx.k = 1.0;
  const auto mu = LatticeWeight::fundamental(1, 1);
  const auto L = spectral_param_numeric(Rational(1), mu);
  const VPoint x{1.5, -0.2, -1.3};
  const Complex g = g_a2(ctx, L, x).value;
  const Complex o = g_oracle(Rational(1), mu, x);
  EXPECT_LT(std::abs(g - o), 1e-7 * std::abs(o));
  for (const auto& v : g_orbit(ctx, L, x)) {
    const Complex ov = g_oracle(Rational(1), mu, v.point);
    EXPECT_LT(std::abs(v.value - ov), 1e-7 * std::abs(ov)) << v.w.name();
  }
}

TEST(Cherednik, SingularSpectralParameter) {
  HypFContext ctx;
  ctx.k = 1.0;
  // tau(lambda) = l1^2 + l2^2 + l1 l2 = 1 at lambda = (1, 0, -1)
  EXPECT_THROW(g_a2(ctx, SpectralParam{Complex(1), Complex(0), Complex(-1)}, VPoint{1, 0, -1}),
               SingularSpectralParam);
}

TEST(Cherednik, LaplacianOfPlaneWaveAtKZero) {
  const std::vector<double> xi = {0.6, -0.2, -0.4};
  auto f = [&](const VPoint& y) { return Complex(std::exp(xi[0] * y[0] + xi[1] * y[1] + xi[2] * y[2])); };
  const VPoint x{1, 0.2, -1.2};
  const Complex lf = laplacian_L(0.0, f, x, DirectionalStencil{});
  EXPECT_LT(std::abs(lf - 0.56 * f(x)), 1e-7 * std::abs(f(x)));
}

TEST(Cherednik, LaplacianEigenvalueOfF) {
  HypFContext ctx;
  ctx.k = 1.0;
  const SpectralParam l{Complex(0.5), Complex(0.1), Complex(-0.6)};
  const auto c = ctx.fixed();
  auto F = [&](const VPoint& y) { return f_total(c, l, y).value; };
  const VPoint x{1, 0.2, -1.2};
  const Complex lhs = laplacian_L(1.0, F, x, DirectionalStencil::for_point(x));
  EXPECT_LT(std::abs(lhs - laplacian_eigenvalue(l) * F(x)), 1e-5 * std::abs(F(x)));
}

TEST(Cherednik, OperatorCoefficients) {
  const SpectralParam l{Complex(0.5), Complex(0.1), Complex(-0.6)};
  const auto d = d_operator(1.0, l), ds = dstar_operator(1.0, l);
  EXPECT_NEAR((d.c1 - ds.c1).real(), 4.0, 1e-15);
  EXPECT_NEAR((d.c2 - ds.c2).real(), 2.0, 1e-15);
  EXPECT_NEAR((d.c0 - ds.c0).real(), 2.0 * 1.1, 1e-15);
}
