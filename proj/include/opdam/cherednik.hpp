#pragma once

// Cherednik operators applied to black-box functions by finite differences,
// the operators D_k, D*_k, the Heckman-Opdam Laplacian, and the
// nonsymmetric function G_k for A2 assembled from F_k and F*_k.

#include <array>
#include <cmath>
#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/hyp_f.hpp"
#include "opdam/hyp_fstar.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

inline constexpr double kSpectralSingularTol = 1e-8;
inline constexpr double kCherednikDenomTol = 1e-8;

/// Central-difference stencil for directional derivatives.
struct DirectionalStencil {
  double h = 1e-3;
  int order = 4;          // 2 or 4
  bool richardson = true;  // one extrapolation level h -> h/2

  /// h = max(1e-4, 1e-3 * wall distance).
  static DirectionalStencil for_point(const VPoint& x) {
    DirectionalStencil s;
    s.h = std::max(1e-4, 1e-3 * min_coordinate_gap(x.coords()));
    return s;
  }
  void validate() const {
    if (!(h > 0)) throw ParameterError("stencil step must be positive");
    if (order != 2 && order != 4) throw ParameterError("stencil order must be 2 or 4");
  }
};

struct Derivative {
  Complex value;
  double err = 0;
};

namespace detail {

inline VPoint shifted(const VPoint& x, std::span<const double> dir, double s) {
  std::vector<double> y(x.size());
  for (std::size_t i = 0; i < y.size(); ++i) y[i] = x[i] + s * dir[i];
  return VPoint(std::move(y));
}

template <class F>
Complex central_first(F& f, const VPoint& x, std::span<const double> dir, double h, int order) {
  if (order == 2) return (f(shifted(x, dir, h)) - f(shifted(x, dir, -h))) / (2 * h);
  return (-f(shifted(x, dir, 2 * h)) + 8.0 * f(shifted(x, dir, h)) -
          8.0 * f(shifted(x, dir, -h)) + f(shifted(x, dir, -2 * h))) /
         (12 * h);
}

template <class F>
Complex central_second(F& f, const VPoint& x, Complex fx, std::span<const double> dir, double h,
                       int order) {
  if (order == 2) return (f(shifted(x, dir, h)) - 2.0 * fx + f(shifted(x, dir, -h))) / (h * h);
  return (-f(shifted(x, dir, 2 * h)) + 16.0 * f(shifted(x, dir, h)) - 30.0 * fx +
          16.0 * f(shifted(x, dir, -h)) - f(shifted(x, dir, -2 * h))) /
         (12 * h * h);
}

}  // namespace detail

/// Directional derivative d/ds f(x + s dir) at s = 0.
template <class F>
Derivative directional_derivative(F&& f, const VPoint& x, std::span<const double> dir,
                                  const DirectionalStencil& st) {
  st.validate();
  if (!st.richardson) return {detail::central_first(f, x, dir, st.h, st.order), 0.0};
  // Steps h and h/2 share the points at +-h.
  const double h = st.h;
  auto at = [&](double s) { return f(detail::shifted(x, dir, s)); };
  const Complex p1 = at(h), ph = at(0.5 * h), m1 = at(-h), mh = at(-0.5 * h);
  Complex d1, d2;
  if (st.order == 2) {
    d1 = (p1 - m1) / (2 * h);
    d2 = (ph - mh) / h;
  } else {
    d1 = (-at(2 * h) + 8.0 * p1 - 8.0 * m1 + at(-2 * h)) / (12 * h);
    d2 = (-p1 + 8.0 * ph - 8.0 * mh + m1) / (6 * h);
  }
  const double q = std::pow(2.0, st.order) - 1.0;
  return {d2 + (d2 - d1) / q, std::abs(d2 - d1) / q};
}

template <class F>
Derivative second_derivative(F&& f, const VPoint& x, Complex fx, std::span<const double> dir,
                             const DirectionalStencil& st) {
  st.validate();
  const Complex d1 = detail::central_second(f, x, fx, dir, st.h, st.order);
  if (!st.richardson) return {d1, 0.0};
  const Complex d2 = detail::central_second(f, x, fx, dir, 0.5 * st.h, st.order);
  const double q = std::pow(2.0, st.order) - 1.0;
  return {d2 + (d2 - d1) / q, std::abs(d2 - d1) / q};
}

namespace detail {

inline double reflection_denominator(const VPoint& x, std::size_t i, std::size_t j) {
  const double d = -std::expm1(x[j] - x[i]);
  if (std::abs(d) < kCherednikDenomTol) throw WallError("Cherednik operator evaluated on a wall");
  return d;
}

}  // namespace detail

/// T_xi(k) f(x) = d_xi f(x) + k sum_{i<j} (xi_i - xi_j) (f(x) - f(s_ij x))/(1 - e^{x_j - x_i})
///                - <rho_k, xi> f(x).
template <class F>
Complex cherednik_general(double k, F&& f, const VPoint& x, const VPoint& xi,
                          const DirectionalStencil& st) {
  const std::size_t n = x.size();
  const Complex fx = f(x);
  Complex r = directional_derivative(f, x, xi.coords(), st).value - dot(rho(k, n), xi) * fx;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const double c = xi[i] - xi[j];
      if (c == 0) continue;
      const double den = detail::reflection_denominator(x, i, j);
      const auto s = WeylElement::reflection(n, int(i) + 1, int(j) + 1);
      r += k * c * (fx - f(s.apply(x))) / den;
    }
  }
  return r;
}

/// T_xi on a W-invariant f: d_xi f - <rho_k, xi> f.
template <class F>
Complex cherednik_sym(double k, F&& f, const VPoint& x, const VPoint& xi,
                      const DirectionalStencil& st) {
  return directional_derivative(f, x, xi.coords(), st).value - dot(rho(k, x.size()), xi) * f(x);
}

namespace detail {

// Coefficient of f(x) contributed by the reflection terms on an antisymmetric f.
inline Complex anti_reflection_coeff(double k, const VPoint& x, std::span<const double> xi) {
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) {
      const double c = xi[i] - xi[j];
      if (c != 0) s += 2.0 * k * c / reflection_denominator(x, i, j);
    }
  return s;
}

}  // namespace detail

/// T_xi on a W-antisymmetric f: d_xi f + 2k sum (xi_i-xi_j)/(1-e^{x_j-x_i}) f - <rho_k, xi> f.
template <class F>
Complex cherednik_anti(double k, F&& f, const VPoint& x, const VPoint& xi,
                       const DirectionalStencil& st) {
  const Complex fx = f(x);
  return directional_derivative(f, x, xi.coords(), st).value +
         (detail::anti_reflection_coeff(k, x, xi.coords()) - dot(rho(k, x.size()), xi)) * fx;
}

// ---------------------------------------------------------------------------
// D_k and D*_k

/// c1 T_{pi(e1)} + c2 T_{pi(e2)} + c0.
struct OperatorCoeffs {
  Complex c1, c2, c0;
};

/// tau(lambda) = l1^2 + l2^2 + l1 l2.
inline Complex tau(const SpectralParam& l) { return l[0] * l[0] + l[1] * l[1] + l[0] * l[1]; }

inline OperatorCoeffs d_operator(double k, const SpectralParam& l) {
  return {l[0] - l[2] + 2 * k, l[1] - l[2] + k, tau(l) + k * (l[0] - l[2]) + k * k};
}

inline OperatorCoeffs dstar_operator(double k, const SpectralParam& l) {
  return {l[0] - l[2] - 2 * k, l[1] - l[2] - k, tau(l) - k * (l[0] - l[2]) + k * k};
}

// ---------------------------------------------------------------------------
// G_k for A2

/// Values and gradients (in V) of F_k and F*_k at a chamber point.
struct A2Jet {
  ChamberPoint c;
  Complex f, fs;
  std::array<Complex, 3> grad_f{}, grad_fs{};
  double err = 0;
};

namespace detail {

inline std::array<Complex, 3> gradient_from(const std::vector<std::vector<double>>& basis,
                                            const std::array<Derivative, 2>& d) {
  std::array<Complex, 3> g{};
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t i = 0; i < 3; ++i) g[i] += d[b].value * basis[b][i];
  return g;
}

inline Complex dot_grad(const std::array<Complex, 3>& g, std::span<const double> v) {
  return g[0] * v[0] + g[1] * v[1] + g[2] * v[2];
}

}  // namespace detail

inline A2Jet a2_jet(const HypFContext& ctx, const SpectralParam& lambda, const ChamberPoint& c,
                    const DirectionalStencil& st) {
  const HypFContext fx = ctx.fixed();
  auto F = [&](const VPoint& y) { return f_total(fx, lambda, y).value; };
  auto Fs = [&](const VPoint& y) { return fstar_total(fx, lambda, y).value; };
  const auto basis = orthonormal_basis(3);
  A2Jet j{c, F(c.point()), Fs(c.point())};
  std::array<Derivative, 2> df, dfs;
  for (std::size_t b = 0; b < 2; ++b) {
    df[b] = directional_derivative(F, c.point(), basis[b], st);
    dfs[b] = directional_derivative(Fs, c.point(), basis[b], st);
    j.err += df[b].err + dfs[b].err;
  }
  j.grad_f = detail::gradient_from(basis, df);
  j.grad_fs = detail::gradient_from(basis, dfs);
  return j;
}

/// G_k(lambda, w.c) from a jet at c, with
///   (tau - k^2) G = D_k F + D*_k F*.
inline Complex g_from_jet(double k, const SpectralParam& lambda, const A2Jet& j,
                          const WeylElement& w) {
  const Complex den = tau(lambda) - k * k;
  if (std::abs(den) < kSpectralSingularTol) {
    throw SingularSpectralParam("tau(lambda) = k^2: G is not given by the operator formula");
  }
  const VPoint y = w.apply(j.c.point());
  const WeylElement winv = w.inverse();
  const double det = w.sign();
  const VPoint r = rho(k, 3);
  const OperatorCoeffs D = d_operator(k, lambda), Ds = dstar_operator(k, lambda);
  const std::array<VPoint, 2> xis = {projected_basis(3, 1), projected_basis(3, 2)};
  const std::array<Complex, 2> c = {D.c1, D.c2}, cs = {Ds.c1, Ds.c2};
  const Complex fy = j.f, fsy = det * j.fs;
  Complex total = D.c0 * fy + Ds.c0 * fsy;
  for (std::size_t a = 0; a < 2; ++a) {
    const auto back = winv.apply<double>(xis[a].coords());
    const Complex dF = detail::dot_grad(j.grad_f, back);
    const Complex dFs = det * detail::dot_grad(j.grad_fs, back);
    const double rx = dot(r, xis[a]);
    const Complex tf = dF - rx * fy;
    const Complex tfs = dFs + (detail::anti_reflection_coeff(k, y, xis[a].coords()) - rx) * fsy;
    total += c[a] * tf + cs[a] * tfs;
  }
  return total / den;
}

/// G_k(lambda, x) for A2, x off the walls.
inline EvalResult g_a2(const HypFContext& ctx, const SpectralParam& lambda, const VPoint& x,
                       std::optional<DirectionalStencil> stencil = std::nullopt) {
  detail::require_n(lambda, 3, "g_a2");
  if (x.size() != 3) throw ParameterError("g_a2: x must have 3 coordinates");
  if (std::abs(tau(lambda) - ctx.k * ctx.k) < kSpectralSingularTol) {
    throw SingularSpectralParam("tau(lambda) = k^2: G is not given by the operator formula");
  }
  const auto red = chamber_reduce(x);
  const DirectionalStencil st = stencil.value_or(DirectionalStencil::for_point(x));
  const A2Jet j = a2_jet(ctx, lambda, red.chamber, st);
  EvalResult r;
  r.value = g_from_jet(ctx.k, lambda, j, red.w);
  r.err_estimate = j.err * std::max(std::abs(tau(lambda)), 1.0) /
                   std::abs(tau(lambda) - ctx.k * ctx.k);
  return r;
}

struct OrbitValue {
  WeylElement w;
  VPoint point;
  Complex value;
};

/// G_k(lambda, w.x) for all six w, sharing one F/F* jet.
inline std::vector<OrbitValue> g_orbit(const HypFContext& ctx, const SpectralParam& lambda,
                                       const VPoint& x,
                                       std::optional<DirectionalStencil> stencil = std::nullopt) {
  detail::require_n(lambda, 3, "g_orbit");
  const auto red = chamber_reduce(x);
  const DirectionalStencil st = stencil.value_or(DirectionalStencil::for_point(x));
  const A2Jet j = a2_jet(ctx, lambda, red.chamber, st);
  std::vector<OrbitValue> out;
  for (const auto& w : weyl_group(3)) {
    // w.x = (w red.w).c
    out.push_back({w, w.apply(x), g_from_jet(ctx.k, lambda, j, w * red.w)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Laplacian

/// First and second directional derivatives from one shared set of stencil points.
template <class F>
std::array<Derivative, 2> directional_jet(F&& f, const VPoint& x, Complex fx,
                                          std::span<const double> dir,
                                          const DirectionalStencil& st) {
  st.validate();
  std::map<int, Complex> cache;  // keyed by offset in units of h/2
  auto at = [&](int m) {
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;
    const Complex v = f(detail::shifted(x, dir, 0.5 * m * st.h));
    cache.emplace(m, v);
    return v;
  };
  auto first = [&](int u) {  // step u * h/2
    const double h = 0.5 * u * st.h;
    if (st.order == 2) return (at(u) - at(-u)) / (2 * h);
    return (-at(2 * u) + 8.0 * at(u) - 8.0 * at(-u) + at(-2 * u)) / (12 * h);
  };
  auto second = [&](int u) {
    const double h = 0.5 * u * st.h;
    if (st.order == 2) return (at(u) - 2.0 * fx + at(-u)) / (h * h);
    return (-at(2 * u) + 16.0 * at(u) - 30.0 * fx + 16.0 * at(-u) - at(-2 * u)) / (12 * h * h);
  };
  const Complex d1 = first(2), s1 = second(2);
  if (!st.richardson) return {Derivative{d1, 0.0}, Derivative{s1, 0.0}};
  const Complex d2 = first(1), s2 = second(1);
  const double q = std::pow(2.0, st.order) - 1.0;
  return {Derivative{d2 + (d2 - d1) / q, std::abs(d2 - d1) / q},
          Derivative{s2 + (s2 - s1) / q, std::abs(s2 - s1) / q}};
}

/// L_k f = Delta f + k sum_{i<j} coth((x_i-x_j)/2) d_{e_i-e_j} f + <rho_k, rho_k> f.
template <class F>
Complex laplacian_L(double k, F&& f, const VPoint& x, const DirectionalStencil& st) {
  const std::size_t n = x.size();
  const auto basis = orthonormal_basis(n);
  const Complex fx = f(x);
  Complex lap{};
  std::vector<Complex> grad(n);
  for (const auto& b : basis) {
    const auto jet = directional_jet(f, x, fx, b, st);
    lap += jet[1].value;
    for (std::size_t i = 0; i < n; ++i) grad[i] += jet[0].value * b[i];
  }
  Complex drift{};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      const double g = x[i] - x[j];
      if (std::abs(g) <= kWallTolerance) throw WallError("laplacian_L evaluated on a wall");
      drift += (grad[i] - grad[j]) / std::tanh(0.5 * g);
    }
  const VPoint r = rho(k, n);
  return lap + k * drift + dot(r, r) * fx;
}

/// sum_i lambda_i^2, the L_k eigenvalue of F_k(lambda, .).
inline Complex laplacian_eigenvalue(const SpectralParam& l) {
  Complex s{};
  for (const auto& v : l.vec()) s += v * v;
  return s;
}

}  // namespace opdam
