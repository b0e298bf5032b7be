#pragma once

// Gauss hypergeometric function 2F1(a,b;c;z) for z <= 0 and the Jacobi
// functions phi^{(k-1/2,-1/2)}_{i eta}(t) built on it.

#include <cmath>
#include <complex>
#include <limits>
#include <string>

#include "opdam/errors.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam {

struct Hyp2F1Params {
  Complex a;
  Complex b;
  double c = 1.0;
  double z = 0.0;
};

inline constexpr int kHyp2F1MaxTerms = 10000;
inline constexpr double kJacobiMaxAbsT = 3.0;

/// 2F1(a,b;c;z) for real z <= 0.
///
/// The Pfaff transformation 2F1(a,b;c;z) = (1-z)^{-a} 2F1(a,c-b;c;w) with
/// w = z/(z-1) in [0,1) maps the argument into the unit disk, where the
/// power series converges geometrically.  Summation stops once the geometric
/// tail bound drops below tol relative to the partial sum.
inline Complex hyp2f1(const Hyp2F1Params& p, double tol = 1e-15,
                      int max_terms = kHyp2F1MaxTerms) {
  if (!(tol > 0)) throw ParameterError("hyp2f1: tol must be positive");
  if (!(p.c > 0)) throw DomainError("hyp2f1: c must be positive");
  if (p.z > 0) throw DomainError("hyp2f1: only z <= 0 is supported");
  if (p.z == 0.0) return {1.0, 0.0};

  const double w = p.z / (p.z - 1.0);
  const Complex a = p.a;
  const Complex bb = p.c - p.b;
  Complex term{1.0, 0.0};
  Complex sum{1.0, 0.0};
  for (int n = 0; n < max_terms; ++n) {
    const Complex num = (a + double(n)) * (bb + double(n));
    const double den = (p.c + n) * (n + 1.0);
    const Complex next = term * num / den * w;
    sum += next;
    term = next;
    if (term == Complex{}) {
      // Terminating (polynomial) series.
      break;
    }
    // Ratio of the following term bounds the tail geometrically once < 1.
    const double ratio = std::abs((a + double(n + 1)) * (bb + double(n + 1))) /
                         ((p.c + n + 1) * (n + 2.0)) * w;
    const double q = std::max(ratio, w);
    if (q < 1.0) {
      const double tail = std::abs(term) * q / (1.0 - q);
      if (tail <= tol * std::abs(sum) ||
          tail <= std::numeric_limits<double>::min()) {
        return sum * std::exp(-a * std::log1p(-p.z));
      }
    }
    if (n + 1 == max_terms) {
      throw ConvergenceError("hyp2f1: series did not converge in " + std::to_string(max_terms) +
                             " terms (w=" + std::to_string(w) + ")");
    }
  }
  return sum * std::exp(-a * std::log1p(-p.z));
}

namespace detail {

// phi is even in eta; fixing a sign representative makes the evaluation
// bit-identical for eta and -eta.
inline Complex canonical_eta(Complex eta) {
  if (eta.real() < 0 || (eta.real() == 0 && eta.imag() < 0)) return -eta;
  return eta;
}

inline void check_jacobi_range(double t) {
  if (!(std::abs(t) <= kJacobiMaxAbsT)) {
    throw ConvergenceError("jacobi_phi: |t| = " + std::to_string(std::abs(t)) +
                           " outside supported range |t| <= 3");
  }
}

}  // namespace detail

/// phi^{(k-1/2,-1/2)}_{i eta}(t) = 2F1((k-eta)/2, (k+eta)/2; k+1/2; -sinh^2 t).
inline Complex jacobi_phi(double k, Complex eta, double t, double tol = 1e-15) {
  detail::check_jacobi_range(t);
  eta = detail::canonical_eta(eta);
  const double s = std::sinh(t);
  return hyp2f1({(k - eta) / 2.0, (k + eta) / 2.0, k + 0.5, -s * s}, tol);
}

/// Derivative in t of jacobi_phi, via
/// phi' = (eta^2 - k^2)/(2k+1) sinh(t) phi^{(k+1/2,-1/2)}_{i eta}(t).
inline Complex jacobi_phi_deriv(double k, Complex eta, double t, double tol = 1e-15) {
  return (eta * eta - k * k) / (2.0 * k + 1.0) * std::sinh(t) * jacobi_phi(k + 1.0, eta, t, tol);
}

/// phi'(t) / (eta - k) with the factor (eta - k) cancelled, so that eta = k
/// is a regular point.
inline Complex jacobi_phi_L(double k, Complex eta, double t, double tol = 1e-15) {
  return (eta + k) / (2.0 * k + 1.0) * std::sinh(t) * jacobi_phi(k + 1.0, eta, t, tol);
}

}  // namespace opdam
