#include <gtest/gtest.h>

#include "opdam/hyp_fstar.hpp"

using namespace opdam;

TEST(HypFStar, RoutesAgree) {
  const ChamberPoint x{1, 0.2, -1.2};
  for (double k : {0.5, 1.0, 2.0})
    for (const SpectralParam& l :
         {SpectralParam{Complex(0.5), Complex(0.1), Complex(-0.6)},
          SpectralParam{Complex(0.3, 0.2), Complex(0.1, -0.1), Complex(-0.4, -0.1)}}) {
      HypFContext ctx;
      ctx.k = k;
      const Complex a = fstar_via_shift(ctx, l, x).value;
      const Complex b = fstar_integral(ctx, l, x).value;
      EXPECT_LT(std::abs(a - b), 1e-8 * std::abs(a)) << "k=" << k;
    }
}

TEST(HypFStar, AntisymmetricAndZeroOnWalls) {
  HypFContext ctx;
  ctx.k = 1.5;
  const SpectralParam l{Complex(0.7), Complex(0.2), Complex(-0.9)};
  const VPoint x{1, 0.2, -1.2};
  const Complex base = fstar_total(ctx, l, x).value;
  for (const auto& w : weyl_group(3))
    EXPECT_LT(std::abs(fstar_total(ctx, l, w.apply(x)).value - double(w.sign()) * base), 1e-14);
  EXPECT_EQ(fstar_total(ctx, l, VPoint{0.5, 0.5, -1.0}).value, Complex(0));
}

TEST(HypFStar, ShiftConstant) {
  const SpectralParam l{Complex(1), Complex(0), Complex(-1)};
  // (1+k)(1+k)(2+k) / ((2k+1)(3k+1)(3k+2)) at k = 1
  EXPECT_NEAR(d_k(1.0, l).real(), 2.0 * 2.0 * 3.0 / (3.0 * 4.0 * 5.0), 1e-15);
  // d_k vanishes when l2 - l3 = -k
  const SpectralParam z{Complex(0.5), Complex(-0.75), Complex(0.25)};
  EXPECT_NEAR(std::abs(d_k(1.0, z)), 0, 1e-15);
}

TEST(HypFStar, PPolySymmetricInNu) {
  const ChamberPoint x{1, 0.2, -1.2};
  EXPECT_NEAR(p_poly(x, {0.5, -0.4}), p_poly(x, {-0.4, 0.5}), 1e-13);
  // vanishes as x, nu -> 0
  EXPECT_NEAR(p_poly(ChamberPoint{1e-4, 0, -1e-4}, {0, 0}), 0.0, 1e-6);
}

namespace {

double weight_W(double K, const std::vector<double>& x, double n1, double n2) {
  double w = 1;
  for (double xi : x)
    for (double nj : {n1, n2}) w *= std::pow(std::abs(std::exp(xi) - std::exp(nj)), K - 1);
  return w;
}

// {24k^2 + 2k coth((n1-n2)/2)(d1-d2) - 10k(d1+d2) + 4 d1 d2} W_{k+1}, by central differences.
double q_operator_on_W(double k, const std::vector<double>& x, double n1, double n2) {
  const double h = 1e-4;
  auto W = [&](double a, double b) { return weight_W(k + 1, x, a, b); };
  const double d1 = (W(n1 + h, n2) - W(n1 - h, n2)) / (2 * h);
  const double d2 = (W(n1, n2 + h) - W(n1, n2 - h)) / (2 * h);
  const double d12 = (W(n1 + h, n2 + h) - W(n1 + h, n2 - h) - W(n1 - h, n2 + h) +
                      W(n1 - h, n2 - h)) /
                     (4 * h * h);
  return 24 * k * k * W(n1, n2) + 2 * k / std::tanh(0.5 * (n1 - n2)) * (d1 - d2) -
         10 * k * (d1 + d2) + 4 * d12;
}

}  // namespace

TEST(HypFStar, PPolyWeightIdentity) {
  const ChamberPoint x{1, 0.2, -1.2};
  for (double k : {0.5, 1.0, 2.0})
    for (auto [n1, n2] : {std::pair{0.6, -0.3}, {0.3, -0.9}}) {
      const double q = q_operator_on_W(k, x.vec(), n1, n2);
      const double lhs = 4 * k * k * p_poly(x, {n1, n2}) * weight_W(k, x.vec(), n1, n2);
      EXPECT_LT(std::abs(q - lhs), 1e-6 * std::abs(lhs)) << "k=" << k;
      // p W_{k+1} alone is not the operator image.
      const double alt = p_poly(x, {n1, n2}) * weight_W(k + 1, x.vec(), n1, n2);
      EXPECT_GT(std::abs(q - alt), 1e-3 * std::abs(q)) << "k=" << k;
    }
}
