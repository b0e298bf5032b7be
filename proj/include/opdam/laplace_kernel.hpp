#pragma once

// Laplace-type representation of F_k for A2: the kernel R_k(x, y1, y2), the
// density N_k(x, z) on the convex hull of W.x, and the transform V_k.

#include <array>
#include <cmath>
#include <complex>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/quadrature.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

inline constexpr double kKernelTieTolerance = 1e-9;

/// Integration range of the inner t-integral and the exponent carried by each end.
struct KernelSupport {
  double lower = 0, upper = 0;
  int lower_count = 0, upper_count = 0;  // number of factors vanishing at each end
  double lower_exponent = 0, upper_exponent = 0;
  bool empty() const { return !(lower < upper); }
};

namespace detail {

// Zeros of the four cosh-difference factors: |y2|, |x1-y1|, |x2-y1|, |x3-y1|.
inline std::array<double, 4> kernel_zeros(const ChamberPoint& x, double y1, double y2) {
  return {std::abs(y2), std::abs(x[0] - y1), std::abs(x[1] - y1), std::abs(x[2] - y1)};
}

// Factors attached below the range (|y2|, |y1-x2|) and above it (x1-y1, y1-x3).
inline constexpr std::array<int, 2> kLowFactors = {0, 2};
inline constexpr std::array<int, 2> kHighFactors = {1, 3};

}  // namespace detail

inline KernelSupport kernel_support(double k, const ChamberPoint& x, double y1, double y2) {
  const auto z = detail::kernel_zeros(x, y1, y2);
  KernelSupport s;
  s.lower = std::max(z[0], z[2]);
  s.upper = std::min(x[0] - y1, y1 - x[2]);
  for (int f : detail::kLowFactors) s.lower_count += std::abs(z[f] - s.lower) <= kKernelTieTolerance;
  for (int f : detail::kHighFactors) s.upper_count += std::abs(z[f] - s.upper) <= kKernelTieTolerance;
  s.lower_exponent = s.lower_count * (k - 1.0);
  s.upper_exponent = s.upper_count * (k - 1.0);
  return s;
}

/// Gamma(2k)Gamma(3k) / (2^{4k-2} Gamma(k)^5 prod_{i<j} sinh^{2k-1}((x_i-x_j)/2)).
inline double kernel_prefactor(double k, const ChamberPoint& x) {
  double ls = 0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) ls += std::log(std::sinh(0.5 * (x[i] - x[j])));
  return std::exp(std::lgamma(2 * k) + std::lgamma(3 * k) - (4 * k - 2) * std::log(2.0) -
                  5 * std::lgamma(k) - (2 * k - 1) * ls);
}

namespace detail {

// Smooth part of ((cosh t - cosh y2)/sinh^2 t)^{k-1} prod_i |cosh(x_i-y1) - cosh t|^{k-1}
// after dividing by (t - lower)^{e_lo} (upper - t)^{e_hi}.
struct KernelIntegrand {
  double k;
  std::array<double, 4> zeros;
  std::array<int, 4> end;  // -1 active at lower, +1 active at upper, 0 inactive
  double lower, upper;

  double operator()(double t) const {
    double log_s = 0;
    for (int f = 0; f < 4; ++f) {
      const double t0 = zeros[f];
      const double d = std::abs(t - t0);
      double v;
      if (end[f] != 0) {
        // 2 sinh((t+t0)/2) sinh(|t-t0|/2) divided by the distance to the end point.
        const double e = end[f] < 0 ? t - lower : upper - t;
        const double sh = d == 0 ? 0.5 : std::sinh(0.5 * d) / d;
        v = 2.0 * std::sinh(0.5 * (t + t0)) * sh * (e > 0 ? d / e : 1.0);
      } else {
        v = std::abs(std::cosh(t) - std::cosh(t0));
      }
      log_s += std::log(v);
    }
    const double sht = std::sinh(t);
    log_s -= 2.0 * std::log(sht);
    return std::exp((k - 1.0) * log_s);
  }
};

inline KernelIntegrand kernel_integrand(double k, const ChamberPoint& x, double y1, double y2,
                                        const KernelSupport& s) {
  KernelIntegrand g{k, kernel_zeros(x, y1, y2), {0, 0, 0, 0}, s.lower, s.upper};
  for (int f : kLowFactors)
    if (std::abs(g.zeros[f] - s.lower) <= kKernelTieTolerance) g.end[f] = -1;
  for (int f : kHighFactors)
    if (std::abs(g.zeros[f] - s.upper) <= kKernelTieTolerance) g.end[f] = +1;
  return g;
}

inline void check_exponents(const KernelSupport& s) {
  if (!(s.lower_exponent > -1) || !(s.upper_exponent > -1)) {
    throw ParameterError("r_kernel: merged endpoint exponent <= -1 (divergent kernel integral)");
  }
}

}  // namespace detail

/// R_k(x, y1, y2): zero outside max(|y2|,|y1-x2|) <= min(y1-x3, x1-y1), otherwise
/// the prefactor times int ((cosh t - cosh y2)/sinh^2 t)^{k-1} prod_i |cosh(x_i-y1) - cosh t|^{k-1} dt.
inline EvalResult r_kernel(double k, const ChamberPoint& x, double y1, double y2, int order,
                           double tol = 1e-12) {
  MultiplicityK{k};
  if (x.size() != 3) throw ParameterError("r_kernel: n = 3 only");
  const auto s = kernel_support(k, x, y1, y2);
  if (s.empty()) return EvalResult{};
  detail::check_exponents(s);
  const auto g = detail::kernel_integrand(k, x, y1, y2, s);
  EvalResult r = integrate_singular_1d(g, s.lower, s.upper, s.lower_exponent, s.upper_exponent,
                                       order, tol);
  const double p = kernel_prefactor(k, x);
  r.value *= p;
  r.err_estimate *= p;
  return r;
}

namespace detail {

inline double r_kernel_fixed(double k, const ChamberPoint& x, double y1, double y2, int order,
                             double pref) {
  const auto s = kernel_support(k, x, y1, y2);
  if (s.empty()) return 0.0;
  detail::check_exponents(s);
  const auto g = kernel_integrand(k, x, y1, y2, s);
  return pref * singular_1d_fixed(g, s.lower, s.upper, s.lower_exponent, s.upper_exponent, order)
                    .value.real();
}

}  // namespace detail

/// Coordinates (y1, y2) of z = (y1+y2, y1-y2, -2 y1).
inline std::array<double, 2> kernel_coords(const VPoint& z) {
  return {-0.5 * z[2], 0.5 * (z[0] - z[1])};
}

inline VPoint kernel_point(double y1, double y2) { return VPoint({y1 + y2, y1 - y2, -2 * y1}); }

/// N_k(x, z) = R_k(x, z1/sqrt6, z2/sqrt2)/sqrt12 with (z1, z2) the coordinates of z
/// in the basis (e1+e2-2e3)/sqrt6, (e1-e2)/sqrt2.
inline double n_kernel(double k, const ChamberPoint& x, const VPoint& z, int order = 32) {
  if (z.size() != 3) throw ParameterError("n_kernel: n = 3 only");
  if (!in_convex_hull(x, z)) return 0.0;
  const auto y = kernel_coords(z);
  return r_kernel(k, x, y[0], y[1], order).value.real() / std::sqrt(12.0);
}

// ---------------------------------------------------------------------------
// Integration over the support

namespace detail {

struct P2 {
  double a, b;  // (y1, y2)
};
using Polygon = std::vector<P2>;

struct Line {
  double a, b, c;  // a y1 + b y2 = c
};

inline double polygon_area(const Polygon& p) {
  double s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % p.size()];
    s += u.a * v.b - v.a * u.b;
  }
  return 0.5 * std::abs(s);
}

inline std::array<Polygon, 2> split(const Polygon& p, const Line& l) {
  std::array<Polygon, 2> out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& u = p[i];
    const auto& v = p[(i + 1) % n];
    const double su = l.a * u.a + l.b * u.b - l.c;
    const double sv = l.a * v.a + l.b * v.b - l.c;
    if (su >= 0) out[0].push_back(u);
    if (su <= 0) out[1].push_back(u);
    if ((su > 0 && sv < 0) || (su < 0 && sv > 0)) {
      const double t = su / (su - sv);
      const P2 q{u.a + t * (v.a - u.a), u.b + t * (v.b - u.b)};
      out[0].push_back(q);
      out[1].push_back(q);
    }
  }
  return out;
}

// Convex cells of the support on which R_k is smooth.
inline std::vector<Polygon> support_cells(const ChamberPoint& x) {
  const double x1 = x[0], x2 = x[1], x3 = x[2];
  const double M = 0.5 * (x1 - x3);
  std::vector<Polygon> cells = {
      {{-0.5 * x1, -M}, {-0.5 * x3, -M}, {-0.5 * x3, M}, {-0.5 * x1, M}}};
  const std::array<Line, 9> lines = {{{0, 1, 0},
                                      {-1, 1, -x2},
                                      {1, 1, x2},
                                      {1, 0, x2},
                                      {1, 0, -0.5 * x2},
                                      {1, 1, x1},
                                      {-1, 1, -x1},
                                      {-1, 1, -x3},
                                      {1, 1, x3}}};
  const double min_area = 1e-14 * (x1 - x3) * (x1 - x3);
  for (const auto& l : lines) {
    std::vector<Polygon> next;
    for (const auto& c : cells)
      for (auto& part : split(c, l))
        if (part.size() >= 3 && polygon_area(part) > min_area) next.push_back(std::move(part));
    cells = std::move(next);
  }
  std::vector<Polygon> out;
  for (auto& c : cells) {
    P2 m{0, 0};
    for (const auto& v : c) {
      m.a += v.a / double(c.size());
      m.b += v.b / double(c.size());
    }
    const double lo = std::max(std::abs(m.b), std::abs(m.a - x2));
    const double hi = std::min(m.a - x3, x1 - m.a);
    if (lo < hi) out.push_back(std::move(c));
  }
  return out;
}

}  // namespace detail

/// int_{co(W.x)} f(z) N_k(x, z) dz, with f taking the point z in V.
/// grid_order is the per-axis order of the collapsed Gauss rule on each
/// triangle; t_order the order of the inner Gauss-Jacobi rule.
template <class F>
Complex vk_transform(double k, F&& f, const ChamberPoint& x, int grid_order, int t_order = 24) {
  MultiplicityK{k};
  if (x.size() != 3) throw ParameterError("vk_transform: n = 3 only");
  if (grid_order < 1 || t_order < 1) throw ParameterError("vk_transform: orders must be >= 1");
  const double pref = kernel_prefactor(k, x);
  const auto gl = gauss_jacobi_rule(grid_order, 0.0, 0.0);
  Complex total{};
  for (const auto& cell : detail::support_cells(x)) {
    for (std::size_t i = 1; i + 1 < cell.size(); ++i) {
      const auto &p0 = cell[0], &p1 = cell[i], &p2 = cell[i + 1];
      const double twice_area =
          std::abs((p1.a - p0.a) * (p2.b - p0.b) - (p2.a - p0.a) * (p1.b - p0.b));
      for (int a = 0; a < grid_order; ++a) {
        const double u = 0.5 * (gl->nodes[a] + 1.0);
        const double wu = 0.5 * gl->weights[a];
        for (int b = 0; b < grid_order; ++b) {
          const double v = 0.5 * (gl->nodes[b] + 1.0);
          const double wv = 0.5 * gl->weights[b];
          // Collapsed map of the unit square onto the triangle, Jacobian 2A u.
          const double y1 = p0.a + u * (p1.a - p0.a) + u * v * (p2.a - p1.a);
          const double y2 = p0.b + u * (p1.b - p0.b) + u * v * (p2.b - p1.b);
          const double r = detail::r_kernel_fixed(k, x, y1, y2, t_order, pref);
          if (r == 0.0) continue;
          total += wu * wv * twice_area * u * r * Complex(f(kernel_point(y1, y2)));
        }
      }
    }
  }
  return total;
}

/// int_{co(W.x)} e^{<lambda, z>} N_k(x, z) dz.
inline Complex kernel_transform(double k, const SpectralParam& lambda, const ChamberPoint& x,
                                int grid_order, int t_order = 24) {
  if (lambda.size() != 3) throw ParameterError("kernel_transform: n = 3 only");
  return vk_transform(
      k, [&](const VPoint& z) { return std::exp(dot(lambda, z)); }, x, grid_order, t_order);
}

}  // namespace opdam
