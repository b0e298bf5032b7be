#include <gtest/gtest.h>

#include "opdam/hyp_f.hpp"

using namespace opdam;

namespace {

// F_1(lambda, x) = pi(rho) / pi(lambda) * sum_w det(w) e^{<w lambda, x>} / sum_w det(w) e^{<w rho, x>}
Complex f_k1_closed(const std::vector<Complex>& l, const std::vector<double>& x) {
  const std::size_t n = l.size();
  std::vector<double> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i] = 0.5 * (n - 1) - double(i);
  Complex pil = 1;
  double pir = 1, den = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      pil *= l[i] - l[j];
      pir *= r[i] - r[j];
      den *= 2 * std::sinh(0.5 * (x[i] - x[j]));
    }
  Complex num = 0;
  for (const auto& w : weyl_group(n)) {
    const auto wl = w.apply(std::span<const Complex>(l));
    Complex s = 0;
    for (std::size_t i = 0; i < n; ++i) s += wl[i] * x[i];
    num += double(w.sign()) * std::exp(s);
  }
  return pir / pil * num / den;
}

}  // namespace

TEST(HypF, RankOneMatchesQuadrature) {
  for (double k : {0.5, 1.0, 2.5})
    for (Complex l : {Complex(0.3), Complex(0.4, 0.7)}) {
      const Complex a = f_rank1(k, l, 0.8);
      const Complex b = f_rank1_quadrature(k, l, 0.8, 32, 1e-14).value;
      EXPECT_LT(std::abs(a - b), 1e-12 * std::abs(a));
    }
}

TEST(HypF, A2AtKOneMatchesClosedForm) {
  HypFContext ctx;
  ctx.k = 1.0;
  const std::vector<Complex> l = {Complex(0.5, 0.2), Complex(0.1, -0.3), Complex(-0.6, 0.1)};
  const ChamberPoint x{1, 0.2, -1.2};
  const auto r = f_a2(ctx, SpectralParam(l), x);
  const Complex c = f_k1_closed(l, x.vec());
  EXPECT_LT(std::abs(r.value - c), 1e-10 * std::abs(c));
  EXPECT_LT(r.err_estimate, 1e-6);
}

TEST(HypF, RecursiveN3AgreesWithA2) {
  HypFContext ctx;
  ctx.k = 1.7;
  const SpectralParam l{Complex(0.5), Complex(0.1), Complex(-0.6)};
  const ChamberPoint x{0.9, 0.1, -1.0};
  EXPECT_LT(std::abs(f_recursive(ctx, 3, l, x).value - f_a2(ctx, l, x).value), 1e-9);
}

TEST(HypF, RecursiveN4AtKOneMatchesClosedForm) {
  HypFContext ctx;
  ctx.k = 1.0;
  ctx.n = 4;
  const std::vector<Complex> l = {Complex(1.1), Complex(0.3), Complex(-0.2), Complex(-1.2)};
  const ChamberPoint x{1.2, 0.4, -0.3, -1.3};
  const Complex c = f_k1_closed(l, x.vec());
  EXPECT_LT(std::abs(f_recursive(ctx, 4, SpectralParam(l), x).value - c), 1e-6 * std::abs(c));
}

TEST(HypF, TotalIsWeylInvariant) {
  HypFContext ctx;
  ctx.k = 0.8;
  const SpectralParam l{Complex(0.3, 0.2), Complex(0.1), Complex(-0.4, -0.2)};
  const VPoint x{1, 0.2, -1.2};
  const Complex base = f_total(ctx, l, x).value;
  for (const auto& w : weyl_group(3)) {
    EXPECT_LT(std::abs(f_total(ctx, l, w.apply(x)).value - base), 1e-13);
    const auto wl = w.apply(std::span<const Complex>(l.vec()));
    EXPECT_LT(std::abs(f_total(ctx, SpectralParam(wl), x).value - base), 1e-8);
  }
}

TEST(HypF, RankTwoIsJacobiFunction) {
  HypFContext ctx;
  ctx.k = 1.3;
  const SpectralParam l{Complex(0.4), Complex(-0.4)};
  EXPECT_EQ(f_total(ctx, l, VPoint{0.5, -0.5}).value, f_rank1(1.3, 0.4, 0.5));
}

TEST(HypF, ContextValidation) {
  HypFContext ctx;
  ctx.k = 0.01;
  EXPECT_THROW(ctx.validate(), ParameterError);
  ctx.k = 1;
  ctx.quad_order = 2;
  EXPECT_THROW(ctx.validate(), ParameterError);
  HypFContext ok;
  EXPECT_THROW(f_a2(ok, SpectralParam{Complex(0), Complex(0)}, ChamberPoint{1, 0, -1}),
               ParameterError);
}
