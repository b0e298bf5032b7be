#pragma once

// Verification suites: each runs a family of identities and reports one
// record per case with the measured residual against a pinned tolerance.

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "opdam/opdam.hpp"

namespace opdam::verify {

using namespace std::complex_literals;

struct ReportRecord {
  std::string suite;
  std::string params;
  double residual = 0;
  double tolerance = 0;
  bool pass = false;
  double runtime_ms = 0;
  std::string note;
};

struct SuiteResult {
  std::string name;
  std::vector<ReportRecord> records;
  double runtime_s = 0;

  bool pass() const {
    return !records.empty() &&
           std::all_of(records.begin(), records.end(), [](const auto& r) { return r.pass; });
  }
  double max_residual() const {
    double m = 0;
    for (const auto& r : records) m = std::max(m, r.residual);
    return m;
  }
  std::size_t failures() const {
    return std::count_if(records.begin(), records.end(), [](const auto& r) { return !r.pass; });
  }
};

struct Options {
  std::uint64_t seed = 20240611;
  int quad_order = 48;
  double tol = 1e-8;
  unsigned jobs = 1;
  std::vector<double> ks;                   // overrides the default k-list where applicable
  std::map<std::string, double> tolerance;  // per-check overrides, keyed by check name
};

inline double tolerance(const Options& o, const std::string& key, double dflt) {
  auto it = o.tolerance.find(key);
  return it == o.tolerance.end() ? dflt : it->second;
}

inline double rel_err(Complex a, Complex b) {
  const double d = std::abs(b);
  return std::abs(a - b) / (d > 0 ? d : 1.0);
}

inline std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}
inline std::string fmt(Complex v) {
  if (v.imag() == 0) return fmt(v.real());
  return fmt(v.real()) + (v.imag() < 0 ? "" : "+") + fmt(v.imag()) + "i";
}
template <class V>
std::string fmt_vec(const V& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + fmt(v[i]);
  return s + ")";
}

/// Runs fn(i) for i in [0, n) on up to `jobs` threads; results stay in index order.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t n, unsigned jobs, Fn&& fn) {
  std::vector<T> out(n);
  if (jobs <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> errs(n);
  auto worker = [&] {
    for (std::size_t i = next++; i < n; i = next++) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errs[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < std::min<std::size_t>(jobs, n); ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return out;
}

using Case = std::function<ReportRecord()>;

inline ReportRecord make_record(std::string suite, std::string params, double residual, double tol,
                                std::string note = {}) {
  ReportRecord r{std::move(suite), std::move(params), residual, tol, false, 0, std::move(note)};
  r.pass = std::isfinite(residual) && residual <= tol;
  return r;
}

inline SuiteResult run_cases(const std::string& name, const std::vector<Case>& cases,
                             unsigned jobs) {
  const auto t0 = std::chrono::steady_clock::now();
  SuiteResult s{name, {}, 0};
  s.records = parallel_map<ReportRecord>(cases.size(), jobs, [&](std::size_t i) {
    const auto c0 = std::chrono::steady_clock::now();
    ReportRecord r;
    try {
      r = cases[i]();
    } catch (const std::exception& e) {
      r = make_record(name, "case " + std::to_string(i), INFINITY, 0, std::string("error: ") + e.what());
    }
    r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - c0).count();
    return r;
  });
  s.runtime_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return s;
}

inline HypFContext context(const Options& o, double k) {
  HypFContext c;
  c.k = k;
  c.quad_order = o.quad_order;
  c.tol = o.tol;
  return c;
}

inline SpectralParam spectral(std::initializer_list<Complex> l) {
  return SpectralParam(project_trace_zero_complex(std::vector<Complex>(l)));
}

inline std::vector<double> ks_or(const Options& o, std::vector<double> dflt) {
  return o.ks.empty() ? dflt : o.ks;
}

// ---------------------------------------------------------------------------
// rank1: 2F1 closed form against the rank-one integral

inline SuiteResult suite_rank1(const Options& o) {
  const double tol = tolerance(o, "rank1", 1e-9);
  std::vector<Case> cases;
  for (double k : ks_or(o, {0.5, 1.0, 1.5, 2.5}))
    for (Complex l : {Complex(0), Complex(0.3), Complex(1.2), Complex(0.4, 0.7)})
      for (double x1 : {0.2, 0.8, 1.5})
        cases.push_back([=] {
          const Complex a = f_rank1(k, l, x1);
          const Complex b = f_rank1_quadrature(k, l, x1, 32, 1e-14).value;
          return make_record("rank1",
                             "k=" + fmt(k) + " lambda1=" + fmt(l) + " x1=" + fmt(x1),
                             rel_err(b, a), tol);
        });
  return run_cases("rank1", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// exact: rational identities

inline std::vector<oracle::Rational> oracle_ks() {
  using oracle::Rational;
  return {Rational(1, 2), Rational(1), Rational(3, 2), Rational(2)};
}

inline SuiteResult suite_exact(const Options& o) {
  using namespace oracle;
  std::vector<Case> cases;
  auto rec = [](const Certificate& c) {
    return make_record("exact", c.identity + " k=" + to_string(c.k) + " lambda=" + c.lambda,
                       c.verdict ? 0.0 : to_double(c.max_abs_diff_coeff_numerator) + 1.0, 0.0,
                       c.note);
  };
  for (const auto& k : oracle_ks())
    for (const auto& mu : dominant_weights(3)) {
      cases.push_back([=] { return rec(check_p_eigen(k, mu)); });
      cases.push_back([=] { return rec(check_alternating_shift(k, mu)); });
      cases.push_back([=] { return rec(check_p_at_zero(k, mu)); });
      cases.push_back([=] { return rec(check_g_properties(k, mu)); });
      cases.push_back([=] { return rec(check_shift(k, mu)); });
      cases.push_back([=] { return rec(check_dk_forms(k, mu)); });
      cases.push_back([=] {
        auto c = check_main_theorem(k, mu);
        if (!c) {
          auto r = make_record("exact", "main-theorem k=" + to_string(k) + " lambda=" + mu.str(),
                               0.0, 0.0, "excluded: tau = k^2");
          return r;
        }
        return rec(*c);
      });
      cases.push_back([=] {
        try {
          return rec(check_product_operator(k, mu, {Rational(3), Rational(-1), Rational(-2)}));
        } catch (const ResonantParam& e) {
          return make_record("exact", "product-operator k=" + to_string(k) + " lambda=" + mu.str(), 0.0, 0.0,
                             std::string("excluded: ") + e.what());
        }
      });
    }
  (void)o;
  return run_cases("exact", cases, o.jobs);
}

inline const std::vector<VPoint>& oracle_points() {
  static const std::vector<VPoint> pts = {VPoint({1, 0, -1}), VPoint({0.9, 0.1, -1.0}),
                                          VPoint({1.5, -0.2, -1.3})};
  return pts;
}

inline SpectralParam mu_plus_rho(const oracle::Rational& k, const oracle::LatticeWeight& mu) {
  const auto c = mu.coords_double();
  const double kk = oracle::to_double(k);
  return SpectralParam({Complex(c[0] + kk), Complex(c[1]), Complex(c[2] - kk)});
}

// ---------------------------------------------------------------------------
// a2-oracle: symmetric function against the exact polynomial

inline SuiteResult suite_a2_oracle(const Options& o) {
  using namespace oracle;
  const double tol = tolerance(o, "a2-oracle", 1e-7);
  std::vector<Case> cases;
  for (const auto& k : oracle_ks())
    for (const auto& mu : dominant_weights(3))
      for (const auto& x : oracle_points())
        cases.push_back([=, &o] {
          const auto ctx = context(o, to_double(k));
          const Complex a = f_a2(ctx, mu_plus_rho(k, mu), ChamberPoint(x)).value;
          const Complex b = f_oracle(k, mu, x);
          return make_record("a2-oracle",
                             "k=" + to_string(k) + " mu=" + mu.str() + " x=" + fmt_vec(x.vec()),
                             rel_err(a, b), tol);
        });
  return run_cases("a2-oracle", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// eigen: G against the oracle, and the Cherednik eigen-system of G

inline double eigen_residual(const HypFContext& ctx, const SpectralParam& l, const VPoint& x,
                             int which) {
  // Inner stencil fixed so that G is a smooth function of the point.
  DirectionalStencil inner;
  inner.h = std::max(1e-4, 1e-3 * min_coordinate_gap(x.coords()));
  auto G = [&](const VPoint& y) { return g_a2(ctx, l, y, inner).value; };
  DirectionalStencil outer = inner;
  const VPoint xi = projected_basis(3, which);
  const Complex t = cherednik_general(ctx.k, G, x, xi, outer);
  const Complex g = G(x);
  const Complex ev = dot(l, xi) * g;
  return std::abs(t - ev) / std::max(std::abs(g), std::abs(ev));
}

inline SuiteResult suite_eigen(const Options& o) {
  using namespace oracle;
  const double tol_g = tolerance(o, "eigen-oracle", 1e-6);
  const double tol_e = tolerance(o, "eigen-residual", 1e-5);
  std::vector<Case> cases;
  for (const auto& k : oracle_ks())
    for (const auto& mu : dominant_weights(3))
      for (const auto& x : oracle_points())
        cases.push_back([=, &o] {
          const auto ctx = context(o, to_double(k));
          const auto L = spectral_param_numeric(k, mu);
          const std::string p = "g k=" + to_string(k) + " mu=" + mu.str() + " x=" + fmt_vec(x.vec());
          if (std::abs(tau(L) - ctx.k * ctx.k) < kSpectralSingularTol) {
            return make_record("eigen", p, 0.0, tol_g, "excluded: tau = k^2");
          }
          return make_record("eigen", p, rel_err(g_a2(ctx, L, x).value, g_oracle(k, mu, x)), tol_g);
        });
  struct EigenCase {
    double k;
    SpectralParam l;
    VPoint x;
  };
  std::vector<EigenCase> ec = {
      {1.0, spectral({0.7 + 0.3i, 0.1 - 0.2i, -0.8 - 0.1i}), VPoint({0.9, 0.1, -1.0})},
      {0.5, spectral({0.4 + 1.0i, -0.3 + 0.2i, -0.1 - 1.2i}), VPoint({1.5, -0.2, -1.3})},
      {2.0, spectral({1.1 - 0.4i, 0.2 + 0.5i, -1.3 - 0.1i}), VPoint({1, 0.2, -1.2})},
      {1.5, spectral({0.6, 0.35, -0.95}), VPoint({-0.2, 1.1, -0.9})},
      {1.0, mu_plus_rho(Rational(1), LatticeWeight::fundamental(1, 1)), VPoint({0.9, 0.1, -1.0})},
  };
  for (const auto& c : ec)
    for (int which : {1, 2})
      cases.push_back([=, &o] {
        return make_record("eigen",
                           "T_pi(e" + std::to_string(which) + ") k=" + fmt(c.k) +
                               " lambda=" + fmt_vec(c.l.vec()) + " x=" + fmt_vec(c.x.vec()),
                           eigen_residual(context(o, c.k), c.l, c.x, which), tol_e);
      });
  return run_cases("eigen", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// symmetrize: orbit sums of G reproduce F and F*

struct RandomCase {
  double k;
  SpectralParam l;
  VPoint x;
};

inline std::vector<RandomCase> random_cases(std::uint64_t seed, std::size_t n, double im_scale) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> re(-1.0, 1.0), im(-im_scale, im_scale),
      gap(0.2, 1.0), shift(-0.3, 0.3), uni(0.0, 1.0);
  const std::array<double, 3> ks = {0.5, 1.0, 2.0};
  std::vector<RandomCase> out;
  while (out.size() < n) {
    const double k = ks[out.size() % 3];
    std::vector<Complex> l(3);
    for (auto& v : l) v = Complex(re(rng), im(rng));
    SpectralParam L(project_trace_zero_complex(l));
    if (std::abs(tau(L) - k * k) < 1e-3) continue;
    const double g1 = gap(rng), g2 = gap(rng), a = shift(rng);
    std::vector<double> c = {a + g1, a, a - g2};
    // Random Weyl image so that points outside the chamber are covered too.
    const auto W = weyl_group(3);
    const auto& w = W[static_cast<std::size_t>(uni(rng) * 6) % 6];
    const VPoint x = w.apply(project_trace_zero(c));
    out.push_back({k, L, x});
  }
  return out;
}

inline SuiteResult suite_symmetrize(const Options& o) {
  const double tol = tolerance(o, "symmetrize", 1e-6);
  std::vector<Case> cases;
  for (const auto& c : random_cases(o.seed, 20, 1.0)) {
    cases.push_back([=, &o] {
      const auto ctx = context(o, c.k);
      const auto orbit = g_orbit(ctx, c.l, c.x);
      Complex sym{}, alt{};
      for (const auto& v : orbit) {
        sym += v.value / 6.0;
        alt += double(v.w.sign()) * v.value / 6.0;
      }
      const Complex F = f_total(ctx, c.l, c.x).value;
      const Complex Fs = fstar_total(ctx, c.l, c.x).value;
      const double r = std::max(std::abs(sym - F) / std::max(1.0, std::abs(F)),
                                std::abs(alt - Fs) / std::max(1.0, std::abs(Fs)));
      return make_record("symmetrize",
                         "k=" + fmt(c.k) + " lambda=" + fmt_vec(c.l.vec()) + " x=" + fmt_vec(c.x.vec()),
                         r, tol);
    });
  }
  return run_cases("symmetrize", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// fstar-routes: shift route against the direct integral

inline SuiteResult suite_fstar_routes(const Options& o) {
  const double tol = tolerance(o, "fstar-routes", 1e-6);
  std::vector<Case> cases;
  const ChamberPoint x{1, 0.2, -1.2};
  for (double k : ks_or(o, {0.5, 1.0, 2.0})) {
    std::vector<SpectralParam> ls = {spectral({0.5, 0.1, -0.6}),
                                     spectral({0.3 + 0.2i, 0.1 - 0.1i, -0.4 - 0.1i}),
                                     spectral({1.2 - 0.5i, -0.4 + 0.9i, -0.8 - 0.4i}),
                                     spectral({0.4 + k, 0.4, -0.8 - k}),
                                     spectral({0.2 + 0.3i + k, 0.2 + 0.3i, -0.4 - 0.6i - k})};
    for (const auto& l : ls)
      cases.push_back([=, &o] {
        const auto ctx = context(o, k);
        const Complex a = fstar_via_shift(ctx, l, x).value;
        const Complex b = fstar_integral(ctx, l, x).value;
        const bool removable = std::abs(l[0] - l[1] - k) < 1e-12;
        return make_record("fstar-routes", "k=" + fmt(k) + " lambda=" + fmt_vec(l.vec()),
                           rel_err(b, a), tol, removable ? "lambda1-lambda2 = k" : "");
      });
  }
  return run_cases("fstar-routes", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// shift: numerical alternating sum of G against d_k V F_{k+1} / 6

inline SuiteResult suite_shift(const Options& o) {
  const double tol = tolerance(o, "shift", 1e-5);
  std::vector<Case> cases;
  for (const auto& c : random_cases(o.seed + 1, 6, 0.5)) {
    cases.push_back([=, &o] {
      const auto ctx = context(o, c.k);
      Complex alt{};
      for (const auto& v : g_orbit(ctx, c.l, c.x)) alt += double(v.w.sign()) * v.value / 6.0;
      const auto red = chamber_reduce(c.x);
      const Complex s = double(red.w.sign()) * fstar_via_shift(ctx, c.l, red.chamber).value;
      return make_record("shift",
                         "k=" + fmt(c.k) + " lambda=" + fmt_vec(c.l.vec()) + " x=" + fmt_vec(c.x.vec()),
                         std::abs(alt - s) / std::max(1.0, std::abs(s)), tol);
    });
  }
  return run_cases("shift", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// kernel: Laplace-type representation and the intertwining property

inline SuiteResult suite_kernel(const Options& o) {
  const double tol = tolerance(o, "kernel", 1e-4);
  const double tol_i = tolerance(o, "intertwining", 1e-3);
  const ChamberPoint x{1, 0.2, -1.2};
  std::vector<Case> cases;
  for (double k : ks_or(o, {1.0, 2.0})) {
    for (const auto& l : {spectral({0, 0, 0}), spectral({0.5, 0.1, -0.6}),
                          spectral({0.5i, 0.1i, -0.6i}), spectral({1.0i, -0.3i, -0.7i})})
      cases.push_back([=, &o] {
        const Complex a = kernel_transform(k, l, x, 20);
        const Complex b = f_a2(context(o, k), l, x).value;
        return make_record("kernel", "transform k=" + fmt(k) + " lambda=" + fmt_vec(l.vec()),
                           rel_err(a, b), tol);
      });
    for (const std::array<double, 3> xi : {std::array<double, 3>{0.6, -0.2, -0.4},
                                           std::array<double, 3>{1.0, 0.3, -1.3}})
      cases.push_back([=] {
        const auto f = [&](const VPoint& z) {
          return Complex(std::cos(xi[0] * z[0] + xi[1] * z[1] + xi[2] * z[2]));
        };
        const double xi2 = xi[0] * xi[0] + xi[1] * xi[1] + xi[2] * xi[2];
        auto V = [&](const VPoint& y) { return vk_transform(k, f, ChamberPoint(y), 16); };
        const Complex lhs = laplacian_L(k, V, x.point(), DirectionalStencil::for_point(x.point()));
        const Complex rhs = -xi2 * V(x.point());
        return make_record("kernel", "intertwining k=" + fmt(k) + " xi=" + fmt_vec(xi),
                           std::abs(lhs - rhs) / std::max(std::abs(rhs), std::abs(V(x.point()))),
                           tol_i);
      });
  }
  return run_cases("kernel", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// pde: the Heckman-Opdam Laplacian eigen-equation

inline double pde_residual(const HypFContext& ctx, const SpectralParam& l, const VPoint& x) {
  const HypFContext c = ctx.fixed();
  auto F = [&](const VPoint& y) { return f_total(c, l, y).value; };
  const Complex lhs = laplacian_L(ctx.k, F, x, DirectionalStencil::for_point(x));
  const Complex rhs = laplacian_eigenvalue(l) * F(x);
  return std::abs(lhs - rhs) / std::max(std::abs(rhs), std::abs(F(x)));
}

inline SuiteResult suite_pde(const Options& o) {
  const double tol = tolerance(o, "pde", 1e-4);
  std::vector<Case> cases;
  for (double k : ks_or(o, {0.5, 1.0, 2.0}))
    for (const auto& l : {spectral({0.5, 0.1, -0.6}), spectral({0.3 + 0.4i, 0.2 - 0.5i, -0.5 + 0.1i})})
      for (const auto& x : {VPoint({1, 0.2, -1.2}), VPoint({0.9, 0.1, -1.0})})
        cases.push_back([=, &o] {
          return make_record("pde",
                             "n=3 k=" + fmt(k) + " lambda=" + fmt_vec(l.vec()) + " x=" + fmt_vec(x.vec()),
                             pde_residual(context(o, k), l, x), tol);
        });
  cases.push_back([=, &o] {
    HypFContext ctx = context(o, 1.0);
    ctx.n = 4;
    const VPoint r = rho(1.0, 4), e = projected_basis(4, 1);
    std::vector<Complex> lv(4);
    for (std::size_t i = 0; i < 4; ++i) lv[i] = r[i] + e[i];
    const SpectralParam l(lv);
    const VPoint x({1.2, 0.4, -0.3, -1.3});
    return make_record("pde", "n=4 k=1 lambda=" + fmt_vec(l.vec()) + " x=" + fmt_vec(x.vec()),
                       pde_residual(ctx, l, x), tol);
  });
  return run_cases("pde", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// normalization: G(lambda, 0) = 1 and the growth bound

/// Polynomial (Neville) extrapolation of samples (t_i, v_i) to t = 0.
inline Complex extrapolate_to_zero(std::vector<double> t, std::vector<Complex> v) {
  const std::size_t n = t.size();
  for (std::size_t m = 1; m < n; ++m)
    for (std::size_t i = 0; i + m < n; ++i)
      v[i] = (t[i + m] * v[i] - t[i] * v[i + 1]) / (t[i + m] - t[i]);
  return v[0];
}

inline double growth_bound(const SpectralParam& l, const VPoint& x) {
  double m = -INFINITY;
  for (const auto& w : weyl_group(3)) {
    const VPoint wx = w.apply(x);
    double s = 0;
    for (std::size_t i = 0; i < 3; ++i) s += l[i].real() * wx[i];
    m = std::max(m, s);
  }
  return std::sqrt(6.0) * std::exp(m);
}

inline SuiteResult suite_normalization(const Options& o) {
  const double tol = tolerance(o, "normalization", 1e-3);
  std::vector<Case> cases;
  struct NC {
    double k;
    SpectralParam l;
  };
  const std::vector<NC> nc = {{1.0, spectral({0.5, 0.1, -0.6})},
                              {0.5, spectral({0.3 + 0.6i, -0.2 + 0.1i, -0.1 - 0.7i})},
                              {2.0, spectral({1.4, -0.1, -1.3})},
                              {1.0, mu_plus_rho(oracle::Rational(1), oracle::LatticeWeight::fundamental(1, 1))}};
  for (const auto& c : nc)
    cases.push_back([=, &o] {
      const auto ctx = context(o, c.k);
      std::vector<double> ts = {0.4, 0.2, 0.1, 0.05};
      std::vector<Complex> vs;
      for (double t : ts) vs.push_back(g_a2(ctx, c.l, VPoint({t, 0, -t})).value);
      const Complex g0 = extrapolate_to_zero(ts, vs);
      return make_record("normalization", "G(0) k=" + fmt(c.k) + " lambda=" + fmt_vec(c.l.vec()),
                         std::abs(g0 - 1.0), tol, "extrapolated " + fmt(g0));
    });
  for (const auto& c : random_cases(o.seed + 2, 100, 1.0))
    cases.push_back([=, &o] {
      const Complex g = g_a2(context(o, c.k), c.l, c.x).value;
      const double b = growth_bound(c.l, c.x);
      return make_record("normalization",
                         "bound k=" + fmt(c.k) + " lambda=" + fmt_vec(c.l.vec()) + " x=" + fmt_vec(c.x.vec()),
                         std::max(0.0, std::abs(g) - b) / b, 0.0, "|G|/bound=" + fmt(std::abs(g) / b));
    });
  return run_cases("normalization", cases, o.jobs);
}

// ---------------------------------------------------------------------------
// jacobi-id: identities for the Jacobi functions

/// phi^{(k-1/2,k-1/2)}_{2 i eta}(t) = 2F1(k - eta, k + eta; k + 1/2; -sinh^2 t).
inline Complex jacobi_phi_symmetric(double k, Complex eta, double t) {
  const double s = std::sinh(t);
  return hyp2f1({k - eta, k + eta, k + 0.5, -s * s});
}

/// Second derivative of phi from a central difference of the closed-form first derivative.
inline Complex jacobi_phi_second(double k, Complex eta, double t) {
  const double h = 1e-4;
  const auto d = [&](double u) { return jacobi_phi_deriv(k, eta, u); };
  const Complex d1 = (d(t + h) - d(t - h)) / (2 * h);
  const Complex d2 = (d(t + h / 2) - d(t - h / 2)) / h;
  return d2 + (d2 - d1) / 3.0;
}

/// Residual of phi'' + 2k coth(t) phi' = (eta^2 - k^2) rhs, relative to |eta^2 - k^2| |rhs| + |phi''|.
inline double ode_residual(double k, Complex eta, double t, Complex rhs_fn) {
  const Complex lhs = jacobi_phi_second(k, eta, t) + 2 * k / std::tanh(t) * jacobi_phi_deriv(k, eta, t);
  const Complex rhs = (eta * eta - k * k) * rhs_fn;
  return std::abs(lhs - rhs) / std::max({std::abs(rhs), std::abs(lhs), 1e-300});
}

inline SuiteResult suite_jacobi_id(const Options& o) {
  const double tol1 = tolerance(o, "jacobi-doubling", 1e-9);
  const double tol2 = tolerance(o, "jacobi-derivative", 1e-7);
  const double tol3 = tolerance(o, "jacobi-ode", 1e-6);
  std::vector<Case> cases;
  for (double k : ks_or(o, {0.5, 1.0, 2.0}))
    for (Complex eta : {Complex(0), Complex(1), Complex(0, 1), Complex(1, 1)}) {
      const std::string p = "k=" + fmt(k) + " eta=" + fmt(eta);
      cases.push_back([=] {
        double r = 0;
        for (int i = 0; i <= 15; ++i) {
          const double t = 0.1 * i;
          r = std::max(r, rel_err(jacobi_phi(k, eta, 2 * t), jacobi_phi_symmetric(k, eta, t)));
        }
        return make_record("jacobi-id", "doubling " + p, r, tol1);
      });
      cases.push_back([=] {
        double r = 0;
        for (int i = 1; i <= 15; ++i) {
          const double t = 0.1 * i, h = 1e-4;
          const auto f = [&](double u) { return jacobi_phi(k, eta, u); };
          const Complex c1 = (f(t + h) - f(t - h)) / (2 * h);
          const Complex c2 = (f(t + h / 2) - f(t - h / 2)) / h;
          const Complex fd = c2 + (c2 - c1) / 3.0;
          const Complex cf = jacobi_phi_deriv(k, eta, t);
          r = std::max(r, std::abs(fd - cf) / std::max(std::abs(cf), 1e-12 + std::abs(fd)));
          if (std::abs(eta * eta - k * k) == 0) r = std::max(r, std::abs(fd));
        }
        return make_record("jacobi-id", "derivative " + p, r, tol2);
      });
      cases.push_back([=] {
        double r = 0;
        for (int i = 1; i <= 15; ++i) {
          const double t = 0.1 * i;
          r = std::max(r, ode_residual(k, eta, t, jacobi_phi(k, eta, t)));
        }
        return make_record("jacobi-id", "ode " + p, r, tol3,
                           "right-hand side phi^{(k-1/2,-1/2)} (Jacobi equation)");
      });
    }
  return run_cases("jacobi-id", cases, o.jobs);
}

/// Largest residual of the variant with phi^{(k+1/2,-1/2)} on the right-hand side.
inline double ode_shifted_rhs_residual() {
  double r = 0;
  for (double k : {0.5, 1.0, 2.0})
    for (Complex eta : {Complex(1), Complex(0, 1), Complex(1, 1)})
      for (int i = 1; i <= 15; ++i) {
        const double t = 0.1 * i;
        r = std::max(r, ode_residual(k, eta, t, jacobi_phi(k + 1.0, eta, t)));
      }
  return r;
}

// ---------------------------------------------------------------------------

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"rank1",  "exact",        "a2-oracle", "eigen",
                                                 "symmetrize", "fstar-routes", "shift",
                                                 "kernel", "pde", "normalization", "jacobi-id"};
  return names;
}

inline SuiteResult run_suite(const std::string& name, const Options& o) {
  if (name == "rank1") return suite_rank1(o);
  if (name == "exact") return suite_exact(o);
  if (name == "a2-oracle") return suite_a2_oracle(o);
  if (name == "eigen") return suite_eigen(o);
  if (name == "symmetrize") return suite_symmetrize(o);
  if (name == "fstar-routes") return suite_fstar_routes(o);
  if (name == "shift") return suite_shift(o);
  if (name == "kernel") return suite_kernel(o);
  if (name == "pde") return suite_pde(o);
  if (name == "normalization") return suite_normalization(o);
  if (name == "jacobi-id") return suite_jacobi_id(o);
  throw ParameterError("unknown suite: " + name);
}

}  // namespace opdam::verify
