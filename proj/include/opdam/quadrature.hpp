#pragma once

// Gauss-Jacobi quadrature with algebraic endpoint singularities, and tensor
// integration over boxes whose faces carry (distance)^e weights.

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

inline constexpr int kMaxRuleOrder = 512;
inline constexpr int kMaxBoxOrder = 256;

/// Nodes and weights for the weight (1-t)^alpha (1+t)^beta on [-1,1].
struct QuadRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  double alpha = 0;
  double beta = 0;
  int order = 0;
};

/// Result of a numerical evaluation together with an a posteriori estimate.
struct EvalResult {
  Complex value{};
  double err_estimate = 0;  // |value(order n) - value(order ceil(1.5 n))|
  int nodes_used = 0;
  bool converged = true;
};

inline int refined_order(int n) { return (3 * n + 1) / 2; }

/// Integral of (1-t)^alpha (1+t)^beta over [-1,1].
inline double jacobi_weight_mass(double alpha, double beta) {
  return std::exp((alpha + beta + 1) * std::log(2.0) + std::lgamma(alpha + 1) +
                  std::lgamma(beta + 1) - std::lgamma(alpha + beta + 2));
}

namespace detail {

// Monic Jacobi recurrence: p_{j+1} = (t - a_j) p_j - b_j p_{j-1}.
inline void jacobi_recurrence(int n, double alpha, double beta, std::vector<double>& a,
                              std::vector<double>& b) {
  a.assign(n, 0.0);
  b.assign(n, 0.0);
  const double s = alpha + beta;
  for (int j = 0; j < n; ++j) {
    const double m = 2.0 * j + s;
    if (j == 0) {
      a[0] = (beta - alpha) / (s + 2.0);
    } else {
      a[j] = (beta * beta - alpha * alpha) / (m * (m + 2.0));
    }
    if (j == 1) {
      b[1] = 4.0 * (1 + alpha) * (1 + beta) / ((2 + s) * (2 + s) * (3 + s));
    } else if (j > 1) {
      b[j] = 4.0 * j * (j + alpha) * (j + beta) * (j + s) / (m * m * (m + 1.0) * (m - 1.0));
    }
  }
}

// Orthonormal polynomial values p_0..p_{n} at t; returns p_n and its derivative.
inline void orthonormal_eval(double t, const std::vector<double>& a, const std::vector<double>& b,
                             double mass, std::vector<double>& p, double& pn, double& dpn) {
  const int n = static_cast<int>(a.size());
  p.assign(n + 1, 0.0);
  std::vector<double> dp(n + 1, 0.0);
  p[0] = 1.0 / std::sqrt(mass);
  for (int j = 0; j < n; ++j) {
    const double sb_next = (j + 1 < n) ? std::sqrt(b[j + 1]) : 1.0;
    const double prev = j > 0 ? std::sqrt(b[j]) * p[j - 1] : 0.0;
    const double dprev = j > 0 ? std::sqrt(b[j]) * dp[j - 1] : 0.0;
    p[j + 1] = ((t - a[j]) * p[j] - prev) / sb_next;
    dp[j + 1] = (p[j] + (t - a[j]) * dp[j] - dprev) / sb_next;
  }
  pn = p[n];
  dpn = dp[n];
}

inline QuadRule build_gauss_jacobi(int order, double alpha, double beta) {
  std::vector<double> a, b;
  jacobi_recurrence(order, alpha, beta, a, b);
  const double mass = jacobi_weight_mass(alpha, beta);

  Eigen::VectorXd diag(order);
  Eigen::VectorXd sub(std::max(order - 1, 0));
  for (int j = 0; j < order; ++j) diag[j] = a[j];
  for (int j = 1; j < order; ++j) sub[j - 1] = std::sqrt(b[j]);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
  es.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);

  QuadRule r;
  r.alpha = alpha;
  r.beta = beta;
  r.order = order;
  r.nodes.resize(order);
  r.weights.resize(order);
  std::vector<double> p;
  for (int i = 0; i < order; ++i) {
    double t = es.eigenvalues()[i];
    // Newton polish on the orthonormal polynomial p_order.
    for (int it = 0; it < 3; ++it) {
      double pn, dpn;
      orthonormal_eval(t, a, b, mass, p, pn, dpn);
      if (dpn == 0) break;
      const double step = pn / dpn;
      t -= step;
      if (std::abs(step) < 1e-17) break;
    }
    t = std::clamp(t, -1.0 + 1e-300, 1.0 - 1e-300);
    double pn, dpn;
    orthonormal_eval(t, a, b, mass, p, pn, dpn);
    // Christoffel weight 1 / sum_{j<n} p_j(t)^2.
    double s = 0;
    for (int j = 0; j < order; ++j) s += p[j] * p[j];
    r.nodes[i] = t;
    r.weights[i] = 1.0 / s;
  }
  return r;
}

class RuleCache {
 public:
  static RuleCache& instance() {
    static RuleCache cache;
    return cache;
  }
  std::shared_ptr<const QuadRule> get(int order, double alpha, double beta) {
    const Key key{order, alpha, beta};
    if (enabled_) {
      std::shared_lock lock(mutex_);
      if (auto it = rules_.find(key); it != rules_.end()) return it->second;
    }
    auto rule = std::make_shared<const QuadRule>(build_gauss_jacobi(order, alpha, beta));
    if (enabled_) {
      std::unique_lock lock(mutex_);
      rules_.emplace(key, rule);
    }
    return rule;
  }
  void set_enabled(bool on) {
    std::unique_lock lock(mutex_);
    enabled_ = on;
    if (!on) rules_.clear();
  }

 private:
  using Key = std::tuple<int, double, double>;
  std::shared_mutex mutex_;
  std::map<Key, std::shared_ptr<const QuadRule>> rules_;
  bool enabled_ = true;
};

}  // namespace detail

/// Enables or disables the process-wide rule cache (enabled by default).
inline void set_rule_cache_enabled(bool on) { detail::RuleCache::instance().set_enabled(on); }

/// Gauss-Jacobi rule of the given order, exact for polynomials of degree
/// <= 2*order-1 against (1-t)^alpha (1+t)^beta.  Rules are cached.
inline std::shared_ptr<const QuadRule> gauss_jacobi_rule(int order, double alpha, double beta) {
  if (order < 1 || order > kMaxRuleOrder) {
    throw ParameterError("gauss_jacobi_rule: order must be in [1, 512]");
  }
  if (!(alpha > -1) || !(beta > -1)) {
    throw ParameterError("gauss_jacobi_rule: exponents must exceed -1");
  }
  return detail::RuleCache::instance().get(order, alpha, beta);
}

namespace detail {

inline bool accept(double err, Complex value, double abs_sum, double tol) {
  return err <= tol * std::abs(value) ||
         err <= 64.0 * std::numeric_limits<double>::epsilon() * abs_sum;
}

struct FixedResult {
  Complex value;
  double abs_sum;
  int nodes;
};

template <class F>
FixedResult singular_1d_fixed(F&& f, double a, double b, double expA, double expB, int order) {
  auto rule = gauss_jacobi_rule(order, expB, expA);
  const double half = 0.5 * (b - a);
  Complex s{};
  double abs_sum = 0;
  for (int i = 0; i < order; ++i) {
    const double u = a + half * (rule->nodes[i] + 1.0);
    const Complex v = rule->weights[i] * Complex(f(u));
    s += v;
    abs_sum += std::abs(v);
  }
  const double scale = std::pow(half, expA + expB + 1.0);
  return {s * scale, abs_sum * scale, order};
}

}  // namespace detail

/// Integral of (b-u)^expB (u-a)^expA f(u) over [a,b] for smooth f.
/// Refines order -> ceil(1.5 order) until the two-level difference meets tol.
template <class F>
EvalResult integrate_singular_1d(F&& f, double a, double b, double expA, double expB,
                                 int order, double tol = 1e-12) {
  if (!(a < b)) throw ParameterError("integrate_singular_1d: need a < b");
  if (!(expA > -1) || !(expB > -1)) throw ParameterError("integrate_singular_1d: exponent <= -1");
  if (order < 1) throw ParameterError("integrate_singular_1d: order must be >= 1");
  int n = std::min(order, kMaxRuleOrder);
  auto lo = detail::singular_1d_fixed(f, a, b, expA, expB, n);
  int used = lo.nodes;
  while (true) {
    const int m = refined_order(n);
    if (m > kMaxRuleOrder) break;
    auto hi = detail::singular_1d_fixed(f, a, b, expA, expB, m);
    used += hi.nodes;
    const double err = std::abs(hi.value - lo.value);
    if (detail::accept(err, hi.value, hi.abs_sum, tol)) return {hi.value, err, used, true};
    lo = hi;
    n = m;
  }
  throw ConvergenceError("integrate_singular_1d: tolerance not met at maximal order");
}

/// A box prod_d [lower_d, upper_d] with weight prod_d (upper_d-u_d)^e (u_d-lower_d)^e.
template <std::size_t D>
struct SingularBox {
  std::array<double, D> lower;
  std::array<double, D> upper;
  double exponent = 0;
};

namespace detail {

template <std::size_t D, class G>
FixedResult box_fixed(G&& g, const SingularBox<D>& box, int order) {
  auto rule = gauss_jacobi_rule(order, box.exponent, box.exponent);
  std::array<double, D> half{};
  double scale = 1.0;
  for (std::size_t d = 0; d < D; ++d) {
    half[d] = 0.5 * (box.upper[d] - box.lower[d]);
    scale *= std::pow(half[d], 2.0 * box.exponent + 1.0);
  }
  std::array<int, D> idx{};
  std::array<double, D> u{};
  Complex s{};
  double abs_sum = 0;
  while (true) {
    double w = 1.0;
    for (std::size_t d = 0; d < D; ++d) {
      u[d] = box.lower[d] + half[d] * (rule->nodes[idx[d]] + 1.0);
      w *= rule->weights[idx[d]];
    }
    const Complex v = w * Complex(g(std::as_const(u)));
    s += v;
    abs_sum += std::abs(v);
    std::size_t d = 0;
    while (d < D && ++idx[d] == order) idx[d++] = 0;
    if (d == D) break;
  }
  int nodes = 1;
  for (std::size_t d = 0; d < D; ++d) nodes *= order;
  return {s * scale, abs_sum * scale, nodes};
}

}  // namespace detail

/// Tensor-product Gauss-Jacobi integration over a SingularBox at a fixed order.
template <std::size_t D, class G>
Complex integrate_box_fixed(G&& g, const SingularBox<D>& box, int order) {
  return detail::box_fixed<D>(g, box, order).value;
}

/// Tensor-product Gauss-Jacobi integration with two-level refinement.
template <std::size_t D, class G>
EvalResult integrate_box_singular(G&& g, const SingularBox<D>& box, int order, double tol,
                                  int max_order = kMaxBoxOrder) {
  if (!(box.exponent > -1)) throw ParameterError("integrate_box_singular: exponent <= -1");
  for (std::size_t d = 0; d < D; ++d) {
    if (!(box.lower[d] < box.upper[d])) throw ParameterError("integrate_box_singular: empty box");
  }
  int n = order;
  auto lo = detail::box_fixed<D>(g, box, n);
  int used = lo.nodes;
  while (true) {
    const int m = refined_order(n);
    if (m > max_order) break;
    auto hi = detail::box_fixed<D>(g, box, m);
    used += hi.nodes;
    const double err = std::abs(hi.value - lo.value);
    if (detail::accept(err, hi.value, hi.abs_sum, tol)) return {hi.value, err, used, true};
    lo = hi;
    n = m;
  }
  throw ConvergenceError("integrate_box_singular: tolerance not met at maximal order");
}

/// Integral over [x2,x1] x [x3,x2] of
///   (x1-nu1)^e (nu1-x2)^e (x2-nu2)^e (nu2-x3)^e g(nu1, nu2).
template <class G>
EvalResult integrate_rect_singular_2d(G&& g, const ChamberPoint& x, double exponent, int order,
                                      double tol = 1e-12) {
  if (x.size() != 3) throw ParameterError("integrate_rect_singular_2d: needs n = 3");
  SingularBox<2> box{{x[1], x[2]}, {x[0], x[1]}, exponent};
  return integrate_box_singular<2>(
      [&](const std::array<double, 2>& nu) { return g(nu[0], nu[1]); }, box, order, tol);
}

/// (e^a - e^b)/(a - b), with the removable value e^a at a == b.
inline double exp_divided_difference(double a, double b) {
  if (a == b) return std::exp(a);
  const double d = a - b;
  return std::exp(b) * std::expm1(d) / d;
}

/// W_K(x, nu) = prod_{i,j} |e^{x_i} - e^{nu_j}|^{K-1} with the 2(n-1) factors
/// vanishing on the box faces (nu_j = x_j, nu_j = x_{j+1}) divided by the
/// corresponding linear distances.  nu_j must lie in [x_{j+1}, x_j].
inline double smooth_part_W_general(double shiftK, std::span<const double> x,
                                    std::span<const double> nu) {
  const std::size_t n = x.size();
  if (nu.size() + 1 != n) throw ParameterError("smooth_part_W: nu must have n-1 entries");
  constexpr double slack = 1e-12;
  double log_s = 0;
  for (std::size_t j = 0; j < nu.size(); ++j) {
    if (nu[j] > x[j] + slack || nu[j] < x[j + 1] - slack) {
      throw DomainError("smooth_part_W: nu outside the integration box");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j || i == j + 1) {
        log_s += std::log(exp_divided_difference(x[i], nu[j]));
      } else {
        log_s += std::log(std::abs(std::exp(x[i]) - std::exp(nu[j])));
      }
    }
  }
  return std::exp((shiftK - 1.0) * log_s);
}

/// n = 3 form of smooth_part_W_general for nu = (nu1, nu2).
inline double smooth_part_W(double k, const ChamberPoint& x, std::array<double, 2> nu,
                            double shiftK) {
  (void)k;
  return smooth_part_W_general(shiftK, x.vec(), nu);
}

}  // namespace opdam
