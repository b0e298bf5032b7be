#pragma once

// Antisymmetric function F*_k for A2: the shift route d_k/6 V F_{k+1} and
// the direct double-integral representation.

#include <array>
#include <cmath>
#include <complex>

#include "opdam/errors.hpp"
#include "opdam/gauss_2f1.hpp"
#include "opdam/hyp_f.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

struct ShiftConstants {
  Complex d_k;
  std::array<Complex, 3> factors;  // l1-l2+k, l2-l3+k, l1-l3+k
};

inline ShiftConstants shift_constants(double k, const SpectralParam& l) {
  detail::require_n(l, 3, "d_k");
  ShiftConstants s;
  s.factors = {l[0] - l[1] + k, l[1] - l[2] + k, l[0] - l[2] + k};
  s.d_k = s.factors[0] * s.factors[1] * s.factors[2] /
          ((2 * k + 1) * (3 * k + 1) * (3 * k + 2));
  return s;
}

/// d_k(lambda) = (l1-l2+k)(l2-l3+k)(l1-l3+k) / ((2k+1)(3k+1)(3k+2)).
inline Complex d_k(double k, const SpectralParam& l) { return shift_constants(k, l).d_k; }

/// F*_k(lambda, x) = d_k(lambda)/6 V(x) F_{k+1}(lambda, x).
inline EvalResult fstar_via_shift(const HypFContext& ctx, const SpectralParam& lambda,
                                  const ChamberPoint& x) {
  const Complex d = d_k(ctx.k, lambda);
  const double v = vandermonde_exp(x.vec());
  EvalResult r = f_a2(ctx.with_k(ctx.k + 1.0), lambda, x);
  const Complex f = d / 6.0 * v;
  r.value *= f;
  r.err_estimate *= std::abs(f);
  return r;
}

/// p(x, nu) with a = sum e^{x_i}, b = sum e^{-x_i}.
inline double p_poly(const ChamberPoint& x, std::array<double, 2> nu) {
  double a = 0, b = 0;
  for (double xi : x.vec()) {
    a += std::exp(xi);
    b += std::exp(-xi);
  }
  const double e1 = std::exp(nu[0]), e2 = std::exp(nu[1]);
  const double s = e1 + e2, p = e1 * e2;
  return -2 * b * p * p + (a * b + 3) * p * s - 2 * a * (e1 * e1 + e2 * e2) -
         2 * (b * b + a) * p + 4 * b * s - 6;
}

/// L_k(lambda, nu) = phi'((nu1-nu2)/2)/(l1-l2-k) * e^{-(3/2)(l3+k)(nu1+nu2)}, in the
/// cancelled form that is regular at l1 - l2 = k.
inline Complex l_kernel(double k, const SpectralParam& l, std::array<double, 2> nu) {
  return jacobi_phi_L(k, l[0] - l[1], 0.5 * (nu[0] - nu[1])) *
         std::exp(-1.5 * (l[2] + k) * (nu[0] + nu[1]));
}

/// F*_k(lambda, x) = gamma_k V(x)^{-2k} int_{x2}^{x1} int_{x3}^{x2} L_k(lambda,nu) p(x,nu) W_k(nu,x) dnu.
inline EvalResult fstar_integral(const HypFContext& ctx, const SpectralParam& lambda,
                                 const ChamberPoint& x) {
  ctx.validate();
  detail::require_n(lambda, 3, "fstar_integral");
  if (x.size() != 3) throw ParameterError("fstar_integral: x must have 3 coordinates");
  const double k = ctx.k;
  auto g = [&](double nu1, double nu2) {
    return l_kernel(k, lambda, {nu1, nu2}) * p_poly(x, {nu1, nu2}) *
           smooth_part_W(k, x, {nu1, nu2}, k);
  };
  EvalResult r;
  if (ctx.estimate_error) {
    r = integrate_rect_singular_2d(g, x, k - 1.0, ctx.quad_order, ctx.tol);
  } else {
    SingularBox<2> box{{x[1], x[2]}, {x[0], x[1]}, k - 1.0};
    r.value = integrate_box_fixed<2>(
        [&](const std::array<double, 2>& nu) { return g(nu[0], nu[1]); }, box, ctx.quad_order);
    r.nodes_used = ctx.quad_order * ctx.quad_order;
  }
  const double pref = std::exp(log_gamma_ratio(3, k) - 2.0 * k * log_vandermonde_exp(x.vec()));
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

/// F*_k at an arbitrary point by antisymmetry; exactly 0 on the walls.
inline EvalResult fstar_total(const HypFContext& ctx, const SpectralParam& lambda,
                              const VPoint& x) {
  if (x.size() != 3) throw ParameterError("fstar_total: x must have 3 coordinates");
  if (min_coordinate_gap(x.coords()) <= kWallTolerance) return EvalResult{};
  const auto red = chamber_reduce(x);
  EvalResult r = fstar_via_shift(ctx, lambda, red.chamber);
  r.value *= double(red.w.sign());
  return r;
}

}  // namespace opdam
