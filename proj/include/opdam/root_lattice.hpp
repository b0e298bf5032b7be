#pragma once

// Geometry of the root system A_{n-1}, n in {2,3,4}, realized in the
// trace-zero hyperplane of R^n.  Points are kept in ambient coordinates.

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "opdam/errors.hpp"

namespace opdam {

using Complex = std::complex<double>;

inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kWallTolerance = 1e-10;
inline constexpr double kMinMultiplicity = 0.05;

inline void require_supported_rank(std::size_t n) {
  if (n < 2 || n > 4) {
    throw ParameterError("root system A_{n-1} supported only for n in {2,3,4}, got n=" +
                         std::to_string(n));
  }
}

/// Real point of the trace-zero hyperplane V.
class VPoint {
 public:
  VPoint() = default;
  explicit VPoint(std::vector<double> coords) : c_(std::move(coords)) {
    require_supported_rank(c_.size());
    const double s = std::accumulate(c_.begin(), c_.end(), 0.0);
    if (std::abs(s) > kTraceTolerance) {
      throw DomainError("VPoint coordinates must sum to 0 (sum=" + std::to_string(s) + ")");
    }
  }
  VPoint(std::initializer_list<double> coords) : VPoint(std::vector<double>(coords)) {}

  std::size_t size() const { return c_.size(); }
  double operator[](std::size_t i) const { return c_[i]; }
  std::span<const double> coords() const { return c_; }
  const std::vector<double>& vec() const { return c_; }

 private:
  std::vector<double> c_;
};

/// Complex spectral parameter lambda in the complexification of V.
class SpectralParam {
 public:
  SpectralParam() = default;
  explicit SpectralParam(std::vector<Complex> coords) : c_(std::move(coords)) {
    require_supported_rank(c_.size());
    const Complex s = std::accumulate(c_.begin(), c_.end(), Complex{});
    if (std::abs(s.real()) > kTraceTolerance || std::abs(s.imag()) > kTraceTolerance) {
      throw DomainError("SpectralParam coordinates must sum to 0");
    }
  }
  SpectralParam(std::initializer_list<Complex> coords)
      : SpectralParam(std::vector<Complex>(coords)) {}

  static SpectralParam real(std::span<const double> re) {
    return SpectralParam(std::vector<Complex>(re.begin(), re.end()));
  }

  std::size_t size() const { return c_.size(); }
  Complex operator[](std::size_t i) const { return c_[i]; }
  const std::vector<Complex>& vec() const { return c_; }

 private:
  std::vector<Complex> c_;
};

/// Point of the open positive chamber x_1 > x_2 > ... > x_n.
class ChamberPoint {
 public:
  explicit ChamberPoint(std::vector<double> coords) : p_(std::move(coords)) {
    for (std::size_t i = 0; i + 1 < p_.size(); ++i) {
      if (!(p_[i] - p_[i + 1] > kWallTolerance)) {
        throw WallError("point is not strictly inside the positive chamber");
      }
    }
  }
  explicit ChamberPoint(const VPoint& v) : ChamberPoint(v.vec()) {}
  ChamberPoint(std::initializer_list<double> coords) : ChamberPoint(std::vector<double>(coords)) {}

  std::size_t size() const { return p_.size(); }
  double operator[](std::size_t i) const { return p_[i]; }
  const VPoint& point() const { return p_; }
  const std::vector<double>& vec() const { return p_.vec(); }

  double wall_distance() const {
    double d = p_[0] - p_[1];
    for (std::size_t i = 1; i + 1 < p_.size(); ++i) d = std::min(d, p_[i] - p_[i + 1]);
    return d;
  }

 private:
  VPoint p_;
};

/// Element of the Weyl group S_n.  Acts on coordinates by (w.x)[perm[i]] = x[i].
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<int> perm) : perm_(std::move(perm)) {
    std::vector<int> check = perm_;
    std::sort(check.begin(), check.end());
    for (std::size_t i = 0; i < check.size(); ++i) {
      if (check[i] != static_cast<int>(i)) throw ParameterError("not a permutation");
    }
    sign_ = 1;
    for (std::size_t i = 0; i < perm_.size(); ++i)
      for (std::size_t j = i + 1; j < perm_.size(); ++j)
        if (perm_[i] > perm_[j]) sign_ = -sign_;
  }

  static WeylElement identity(std::size_t n) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    return WeylElement(std::move(p));
  }
  /// Transposition s_{i,j} (1-based indices as in the usual notation).
  static WeylElement reflection(std::size_t n, int i, int j) {
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i - 1], p[j - 1]);
    return WeylElement(std::move(p));
  }

  int sign() const { return sign_; }
  std::size_t size() const { return perm_.size(); }
  const std::vector<int>& perm() const { return perm_; }

  template <class T>
  std::vector<T> apply(std::span<const T> x) const {
    std::vector<T> r(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) r[perm_[i]] = x[i];
    return r;
  }
  VPoint apply(const VPoint& x) const { return VPoint(apply<double>(x.coords())); }

  /// Composition (this * other): first other, then this.
  WeylElement operator*(const WeylElement& other) const {
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[i] = perm_[other.perm_[i]];
    return WeylElement(std::move(p));
  }
  WeylElement inverse() const {
    std::vector<int> p(perm_.size());
    for (std::size_t i = 0; i < p.size(); ++i) p[perm_[i]] = static_cast<int>(i);
    return WeylElement(std::move(p));
  }
  bool operator==(const WeylElement&) const = default;

  std::string name() const {
    std::string s = "(";
    for (std::size_t i = 0; i < perm_.size(); ++i) {
      if (i) s += ' ';
      s += std::to_string(perm_[i] + 1);
    }
    return s + ")";
  }

 private:
  std::vector<int> perm_;
  int sign_ = 1;
};

/// All n! elements, identity first, in lexicographic order of permutations.
inline std::vector<WeylElement> weyl_group(std::size_t n) {
  require_supported_rank(n);
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<WeylElement> out;
  do {
    out.emplace_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// Positive multiplicity parameter.
class MultiplicityK {
 public:
  explicit MultiplicityK(double k) : k_(k) {
    if (!(k >= kMinMultiplicity)) {
      throw ParameterError("multiplicity k must be >= 0.05, got " + std::to_string(k));
    }
  }
  double value() const { return k_; }
  operator double() const { return k_; }

 private:
  double k_;
};

inline VPoint project_trace_zero(std::span<const double> x) {
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(x.size());
  std::vector<double> r(x.begin(), x.end());
  for (double& v : r) v -= mean;
  // Re-center once more so the sum is zero to rounding.
  const double drift = std::accumulate(r.begin(), r.end(), 0.0) / static_cast<double>(r.size());
  for (double& v : r) v -= drift;
  return VPoint(std::move(r));
}
inline VPoint project_trace_zero(std::initializer_list<double> x) {
  return project_trace_zero(std::span<const double>(x.begin(), x.size()));
}

inline std::vector<Complex> project_trace_zero_complex(std::span<const Complex> x) {
  Complex mean = std::accumulate(x.begin(), x.end(), Complex{}) / static_cast<double>(x.size());
  std::vector<Complex> r(x.begin(), x.end());
  for (auto& v : r) v -= mean;
  return r;
}

/// rho_k = (k/2) sum_j (n - 2j + 1) e_j.
inline VPoint rho(double k, std::size_t n) {
  require_supported_rank(n);
  std::vector<double> r(n);
  for (std::size_t j = 1; j <= n; ++j) {
    r[j - 1] = 0.5 * k * (static_cast<double>(n) - 2.0 * static_cast<double>(j) + 1.0);
  }
  return VPoint(std::move(r));
}

/// pi_n(e_i), the projection of the i-th standard basis vector (1-based).
inline VPoint projected_basis(std::size_t n, std::size_t i) {
  std::vector<double> e(n, 0.0);
  e[i - 1] = 1.0;
  return project_trace_zero(e);
}

template <class A, class B>
inline auto dot(std::span<const A> a, std::span<const B> b) {
  decltype(A{} * B{}) s{};
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}
inline double dot(const VPoint& a, const VPoint& b) { return dot(a.coords(), b.coords()); }
inline Complex dot(const SpectralParam& l, const VPoint& x) {
  Complex s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += l[i] * x[i];
  return s;
}

struct ChamberReduction {
  ChamberPoint chamber;
  WeylElement w;  // w.chamber == input
};

/// Sorts a point into the positive chamber; WallError if two coordinates coincide.
inline ChamberReduction chamber_reduce(const VPoint& x) {
  const std::size_t n = x.size();
  std::vector<int> idx(n);
  std::iota(idx.begin(), idx.end(), 0);
  std::stable_sort(idx.begin(), idx.end(), [&](int a, int b) { return x[a] > x[b]; });
  std::vector<double> c(n);
  for (std::size_t j = 0; j < n; ++j) c[j] = x[idx[j]];
  for (std::size_t j = 0; j + 1 < n; ++j) {
    if (c[j] - c[j + 1] <= kWallTolerance) throw WallError("point lies on a chamber wall");
  }
  return {ChamberPoint(std::move(c)), WeylElement(std::move(idx))};
}

/// Smallest gap between two coordinates (distance to the nearest wall, up to scaling).
inline double min_coordinate_gap(std::span<const double> x) {
  double d = INFINITY;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) d = std::min(d, std::abs(x[i] - x[j]));
  return d;
}

/// prod_{i<j} (e^{x_i} - e^{x_j}).
inline double vandermonde_exp(std::span<const double> x) {
  double v = 1.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= std::exp(x[i]) - std::exp(x[j]);
  return v;
}
inline double vandermonde_exp(const VPoint& x) { return vandermonde_exp(x.coords()); }

/// log of prod_{i<j} (e^{x_i} - e^{x_j}) for strictly decreasing x.
inline double log_vandermonde_exp(std::span<const double> x) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i + 1; j < x.size(); ++j) s += x[j] + std::log(std::expm1(x[i] - x[j]));
  return s;
}

/// Membership of z in the convex hull of the orbit W.x (n = 3).
inline bool in_convex_hull(const ChamberPoint& x, const VPoint& z) {
  if (x.size() != 3 || z.size() != 3) throw ParameterError("in_convex_hull is defined for n = 3");
  constexpr double slack = 1e-12;
  for (std::size_t i = 0; i < 3; ++i) {
    if (z[i] > x[0] + slack || z[i] < x[2] - slack) return false;
  }
  return true;
}

/// Orthonormal basis of V obtained from the simple roots by Gram-Schmidt.
inline std::vector<std::vector<double>> orthonormal_basis(std::size_t n) {
  std::vector<std::vector<double>> basis;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    std::vector<double> v(n, 0.0);
    v[i] = 1.0;
    v[i + 1] = -1.0;
    for (const auto& b : basis) {
      double p = dot<double, double>(v, b);
      for (std::size_t j = 0; j < n; ++j) v[j] -= p * b[j];
    }
    double nr = std::sqrt(dot<double, double>(v, v));
    for (double& c : v) c /= nr;
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace opdam
