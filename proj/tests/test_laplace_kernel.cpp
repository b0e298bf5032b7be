#include <gtest/gtest.h>

#include "opdam/hyp_f.hpp"
#include "opdam/laplace_kernel.hpp"

using namespace opdam;

TEST(LaplaceKernel, SupportAndPositivity) {
  const ChamberPoint x{1, 0.2, -1.2};
  EXPECT_TRUE(kernel_support(2.0, x, 0.1, 0.0).lower < kernel_support(2.0, x, 0.1, 0.0).upper);
  EXPECT_TRUE(kernel_support(2.0, x, 0.1, 3.0).empty());
  EXPECT_GT(r_kernel(2.0, x, 0.1, 0.05, 24).value.real(), 0);
  EXPECT_EQ(n_kernel(2.0, x, VPoint{1.5, 0, -1.5}), 0.0);
  EXPECT_GT(n_kernel(2.0, x, VPoint{0.1, 0.05, -0.15}), 0.0);
}

TEST(LaplaceKernel, CoordinatesRoundTrip) {
  const VPoint z{0.3, -0.1, -0.2};
  const auto y = kernel_coords(z);
  const VPoint back = kernel_point(y[0], y[1]);
  for (std::size_t i = 0; i < 3; ++i) EXPECT_NEAR(back[i], z[i], 1e-15);
}

TEST(LaplaceKernel, TransformOfOneIsFAtZero) {
  const ChamberPoint x{1, 0.2, -1.2};
  for (double k : {1.0, 2.0}) {
    HypFContext ctx;
    ctx.k = k;
    const Complex v = vk_transform(k, [](const VPoint&) { return Complex(1); }, x, 20);
    const Complex f = f_a2(ctx, SpectralParam{Complex(0), Complex(0), Complex(0)}, x).value;
    EXPECT_LT(std::abs(v - f), 1e-7 * std::abs(f));
  }
}

TEST(LaplaceKernel, CosineGivesRealPartOfImaginaryF) {
  const ChamberPoint x{1, 0.2, -1.2};
  const std::array<double, 3> xi = {0.5, 0.1, -0.6};
  HypFContext ctx;
  ctx.k = 2.0;
  const Complex v = vk_transform(
      2.0, [&](const VPoint& z) { return Complex(std::cos(xi[0] * z[0] + xi[1] * z[1] + xi[2] * z[2])); },
      x, 20);
  const Complex f =
      f_a2(ctx, SpectralParam{Complex(0, 0.5), Complex(0, 0.1), Complex(0, -0.6)}, x).value;
  EXPECT_LT(std::abs(v - f.real()), 1e-6);
}

TEST(LaplaceKernel, ExponentialMatchesF) {
  const ChamberPoint x{0.9, 0.1, -1.0};
  const SpectralParam l{Complex(0.5), Complex(0.1), Complex(-0.6)};
  HypFContext ctx;
  ctx.k = 1.0;
  const Complex f = f_a2(ctx, l, x).value;
  EXPECT_LT(std::abs(kernel_transform(1.0, l, x, 20) - f), 1e-6 * std::abs(f));
}

TEST(LaplaceKernel, RejectsOtherRanks) {
  EXPECT_THROW(kernel_transform(1.0, SpectralParam{Complex(0), Complex(0)}, ChamberPoint{1, -1}, 8),
               ParameterError);
}
