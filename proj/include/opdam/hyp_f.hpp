#pragma once

// Symmetric Heckman-Opdam hypergeometric function F_k of type A_{n-1}:
// rank-one closed form, the A2 double-integral representation and the
// recursive integral formula in the rank.

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <span>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/gauss_2f1.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

/// Evaluation settings shared by the integral representations.
struct HypFContext {
  double k = 1.0;
  int n = 3;
  int quad_order = 48;
  double tol = 1e-8;
  /// Per-axis order of the outer box and of the nested A2 integral for n = 4.
  int outer_order_n4 = 14;
  int inner_order_n4 = 14;
  /// When false a single fixed-order rule is used and err_estimate is 0.
  bool estimate_error = true;

  void validate() const {
    MultiplicityK{k};
    require_supported_rank(static_cast<std::size_t>(n));
    if (quad_order < 8) throw ParameterError("quad_order must be >= 8");
    if (!(tol > 0)) throw ParameterError("tol must be positive");
  }
  HypFContext with_k(double kk) const {
    HypFContext c = *this;
    c.k = kk;
    return c;
  }
  HypFContext fixed() const {
    HypFContext c = *this;
    c.estimate_error = false;
    return c;
  }
};

/// log( Gamma(n k) / Gamma(k)^n ).
inline double log_gamma_ratio(int n, double k) {
  return std::lgamma(n * k) - n * std::lgamma(k);
}

/// gamma_k = Gamma(3k)/Gamma(k)^3.
inline double gamma_k(double k) { return std::exp(log_gamma_ratio(3, k)); }

// ---------------------------------------------------------------------------
// Rank one

/// F_{k,2}(lambda, x) with lambda = (lambda1, -lambda1), x = (x1, -x1):
/// 2F1(k/2 - lambda1, k/2 + lambda1; k + 1/2; -sinh^2 x1).
inline Complex f_rank1(double k, Complex lambda1, double x1) {
  return jacobi_phi(k, 2.0 * lambda1, x1);
}

/// Same function from the integral
///   Gamma(2k) / (2^k Gamma(k)^2 sinh^{2k-1} x1) * int_{-x1}^{x1} e^{2 nu lambda1}
///   (cosh x1 - cosh nu)^{k-1} d nu.
inline EvalResult f_rank1_quadrature(double k, Complex lambda1, double x1, int order,
                                     double tol = 1e-12) {
  MultiplicityK{k};
  if (!(x1 > 0)) throw DomainError("f_rank1_quadrature: x1 must be positive");
  auto sinhc = [](double u) { return u == 0.0 ? 1.0 : std::sinh(u) / u; };
  // cosh x1 - cosh nu = (x1 + nu)(x1 - nu)/2 * sinhc((x1+nu)/2) sinhc((x1-nu)/2).
  auto smooth = [&](double nu) {
    const double r = 0.5 * sinhc(0.5 * (x1 + nu)) * sinhc(0.5 * (x1 - nu));
    return std::exp(2.0 * nu * lambda1) * std::pow(r, k - 1.0);
  };
  EvalResult res = integrate_singular_1d(smooth, -x1, x1, k - 1.0, k - 1.0, order, tol);
  const double log_pref = std::lgamma(2 * k) - k * std::log(2.0) - 2 * std::lgamma(k) -
                          (2 * k - 1) * std::log(std::sinh(x1));
  const double pref = std::exp(log_pref);
  res.value *= pref;
  res.err_estimate *= pref;
  return res;
}

// ---------------------------------------------------------------------------
// Rank two

namespace detail {

inline void require_n(const SpectralParam& l, std::size_t n, const char* who) {
  if (l.size() != n) throw ParameterError(std::string(who) + ": spectral parameter has wrong rank");
}

// Integrand of the A2 representation at multiplicity k, without the
// boundary-vanishing factors (absorbed in the Gauss-Jacobi weight).
struct A2Integrand {
  double k;
  Complex eta;        // lambda1 - lambda2
  Complex exponent;   // 1 - (3/2)(lambda3 + k)
  const ChamberPoint* x;

  Complex operator()(double nu1, double nu2) const {
    const double t = 0.5 * (nu1 - nu2);
    const Complex phi = jacobi_phi(k, eta, t);
    const double ev = std::exp(nu1) - std::exp(nu2);
    return phi * std::exp(exponent * (nu1 + nu2)) * ev *
           smooth_part_W(k, *x, {nu1, nu2}, k);
  }
};

inline EvalResult f_a2_impl(const HypFContext& ctx, const SpectralParam& lambda,
                            const ChamberPoint& x) {
  const double k = ctx.k;
  A2Integrand g{k, lambda[0] - lambda[1], 1.0 - 1.5 * (lambda[2] + k), &x};
  EvalResult r;
  if (ctx.estimate_error) {
    r = integrate_rect_singular_2d(g, x, k - 1.0, ctx.quad_order, ctx.tol);
  } else {
    SingularBox<2> box{{x[1], x[2]}, {x[0], x[1]}, k - 1.0};
    r.value = integrate_box_fixed<2>(
        [&](const std::array<double, 2>& nu) { return g(nu[0], nu[1]); }, box, ctx.quad_order);
    r.nodes_used = ctx.quad_order * ctx.quad_order;
  }
  const double pref =
      std::exp(log_gamma_ratio(3, k) + (1.0 - 2.0 * k) * log_vandermonde_exp(x.vec()));
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

}  // namespace detail

/// F_k(lambda, x) for A2 by the double integral
///   gamma_k V(x)^{1-2k} int_{x2}^{x1} int_{x3}^{x2}
///     phi_{i(l1-l2)}((nu1-nu2)/2) e^{(1-(3/2)(l3+k))(nu1+nu2)} (e^{nu1}-e^{nu2}) W_k(nu,x) dnu.
inline EvalResult f_a2(const HypFContext& ctx, const SpectralParam& lambda,
                       const ChamberPoint& x) {
  ctx.validate();
  detail::require_n(lambda, 3, "f_a2");
  if (x.size() != 3) throw ParameterError("f_a2: x must have 3 coordinates");
  return detail::f_a2_impl(ctx, lambda, x);
}

// ---------------------------------------------------------------------------
// Recursion in the rank

namespace detail {

// Inner function F_{k,n-1}(pi(lambda_bar), pi(nu)) for the recursive formula.
inline Complex recursive_inner(const HypFContext& ctx, std::span<const Complex> lbar_proj,
                               std::span<const double> nu_proj) {
  if (nu_proj.size() == 2) return f_rank1(ctx.k, lbar_proj[0], nu_proj[0]);
  HypFContext inner = ctx;
  inner.quad_order = ctx.inner_order_n4;
  inner.estimate_error = false;
  const SpectralParam l(std::vector<Complex>(lbar_proj.begin(), lbar_proj.end()));
  const ChamberPoint c(std::vector<double>(nu_proj.begin(), nu_proj.end()));
  return f_a2_impl(inner, l, c).value;
}

template <std::size_t D>
EvalResult f_recursive_impl(const HypFContext& ctx, const SpectralParam& lambda,
                            const ChamberPoint& x) {
  constexpr std::size_t n = D + 1;
  const double k = ctx.k;
  // lambda_bar = (lambda_i - lambda_n)_{i<n}, |lambda_bar| its coordinate sum.
  std::vector<Complex> lbar(D);
  Complex lbar_sum{};
  for (std::size_t i = 0; i < D; ++i) {
    lbar[i] = lambda[i] - lambda[n - 1];
    lbar_sum += lbar[i];
  }
  const std::vector<Complex> lbar_proj = project_trace_zero_complex(lbar);
  const Complex expo = 1.0 - n * k / 2.0 + lbar_sum / double(D);

  auto g = [&](const std::array<double, D>& nu) -> Complex {
    double mean = 0;
    for (double v : nu) mean += v;
    mean /= double(D);
    std::array<double, D> nu_proj{};
    for (std::size_t i = 0; i < D; ++i) nu_proj[i] = nu[i] - mean;
    const Complex inner = recursive_inner(ctx, lbar_proj, nu_proj);
    return inner * std::exp(expo * (mean * double(D))) * vandermonde_exp(nu) *
           smooth_part_W_general(k, x.vec(), nu);
  };

  SingularBox<D> box{};
  for (std::size_t j = 0; j < D; ++j) {
    box.lower[j] = x[j + 1];
    box.upper[j] = x[j];
  }
  box.exponent = k - 1.0;
  const int order = (n == 4) ? ctx.outer_order_n4 : ctx.quad_order;
  EvalResult r;
  if (ctx.estimate_error) {
    r = integrate_box_singular<D>(g, box, order, ctx.tol, n == 4 ? 40 : kMaxBoxOrder);
  } else {
    r.value = integrate_box_fixed<D>(g, box, order);
    r.nodes_used = static_cast<int>(std::pow(order, D));
  }
  const double pref =
      std::exp(log_gamma_ratio(int(n), k) + (1.0 - 2.0 * k) * log_vandermonde_exp(x.vec()));
  r.value *= pref;
  r.err_estimate *= pref;
  return r;
}

}  // namespace detail

/// F_{k,n}(lambda, x), n in {3,4}, by the recursive integral over the
/// interlacing box x_{j+1} <= nu_j <= x_j with inner F_{k,n-1}.  For n = 4
/// the inner function is the A2 double integral.
inline EvalResult f_recursive(const HypFContext& ctx, int n, const SpectralParam& lambda,
                              const ChamberPoint& x) {
  MultiplicityK{ctx.k};
  if (n != 3 && n != 4) throw ParameterError("f_recursive: n must be 3 or 4");
  detail::require_n(lambda, n, "f_recursive");
  if (x.size() != static_cast<std::size_t>(n)) throw ParameterError("f_recursive: x has wrong rank");
  if (n == 3) return detail::f_recursive_impl<2>(ctx, lambda, x);
  return detail::f_recursive_impl<3>(ctx, lambda, x);
}

/// F_k at an arbitrary off-wall point, by Weyl invariance in x.
inline EvalResult f_total(const HypFContext& ctx, const SpectralParam& lambda, const VPoint& x) {
  const auto red = chamber_reduce(x);
  switch (x.size()) {
    case 2: {
      EvalResult r;
      r.value = f_rank1(ctx.k, lambda[0], red.chamber[0]);
      r.nodes_used = 0;
      return r;
    }
    case 3:
      return f_a2(ctx, lambda, red.chamber);
    default:
      return f_recursive(ctx, 4, lambda, red.chamber);
  }
}

}  // namespace opdam
