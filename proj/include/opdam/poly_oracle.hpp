#pragma once

// Exact rational arithmetic for A2: Cherednik operators on exponential
// polynomials, nonsymmetric Opdam polynomials E, Jacobi polynomials P,
// c-function ratios, and the identities relating them to F, G and F*.

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <complex>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "opdam/errors.hpp"
#include "opdam/root_lattice.hpp"

namespace opdam::oracle {

using Rational = boost::multiprecision::cpp_rational;
using RVec = std::array<Rational, 3>;

inline std::string to_string(const Rational& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

/// Weight of the A2 weight lattice pi(Z^3), stored as 3 * coordinates.
class LatticeWeight {
 public:
  LatticeWeight() = default;
  /// From t = 3 * coords; t must sum to 0 with pairwise congruent entries mod 3.
  static LatticeWeight from_scaled(int t1, int t2, int t3) {
    if (t1 + t2 + t3 != 0) throw ParameterError("LatticeWeight: coordinates must sum to 0");
    if ((t1 - t2) % 3 != 0 || (t2 - t3) % 3 != 0) {
      throw ParameterError("LatticeWeight: not in the weight lattice");
    }
    LatticeWeight w;
    w.t_ = {t1, t2, t3};
    return w;
  }
  /// pi(m) for an integer vector m.
  static LatticeWeight project(int m1, int m2, int m3) {
    const int s = m1 + m2 + m3;
    return from_scaled(3 * m1 - s, 3 * m2 - s, 3 * m3 - s);
  }
  /// a * pi(e1) + b * pi(e1 + e2), i.e. a omega_1 + b omega_2.
  static LatticeWeight fundamental(int a, int b) { return from_scaled(2 * a + b, b - a, -a - 2 * b); }

  int scaled(std::size_t i) const { return t_[i]; }
  const std::array<int, 3>& scaled() const { return t_; }
  Rational coord(std::size_t i) const { return Rational(t_[i], 3); }
  RVec coords() const { return {coord(0), coord(1), coord(2)}; }
  std::array<double, 3> coords_double() const {
    return {t_[0] / 3.0, t_[1] / 3.0, t_[2] / 3.0};
  }

  LatticeWeight operator+(const LatticeWeight& o) const {
    return from_scaled(t_[0] + o.t_[0], t_[1] + o.t_[1], t_[2] + o.t_[2]);
  }
  LatticeWeight operator-(const LatticeWeight& o) const {
    return from_scaled(t_[0] - o.t_[0], t_[1] - o.t_[1], t_[2] - o.t_[2]);
  }
  auto operator<=>(const LatticeWeight&) const = default;

  /// Dominant representative (coordinates sorted decreasingly).
  LatticeWeight dominant() const {
    auto s = t_;
    std::sort(s.begin(), s.end(), std::greater<>());
    return from_scaled(s[0], s[1], s[2]);
  }
  bool is_dominant() const { return t_[0] >= t_[1] && t_[1] >= t_[2]; }
  bool is_regular() const { return t_[0] != t_[1] && t_[1] != t_[2] && t_[0] != t_[2]; }
  /// a + b in a omega_1 + b omega_2 (for dominant weights).
  int height() const { return (t_[0] - t_[2]) / 3; }
  /// (w.nu)[perm[i]] = nu[i].
  LatticeWeight act(const WeylElement& w) const {
    std::array<int, 3> r{};
    for (std::size_t i = 0; i < 3; ++i) r[w.perm()[i]] = t_[i];
    return from_scaled(r[0], r[1], r[2]);
  }
  std::string str() const {
    std::string s = "(";
    for (std::size_t i = 0; i < 3; ++i) {
      if (i) s += ",";
      s += to_string(coord(i));
    }
    return s + ")";
  }

 private:
  std::array<int, 3> t_{0, 0, 0};
};

/// delta = (1, 0, -1), half the sum of positive roots.
inline LatticeWeight delta_weight() { return LatticeWeight::from_scaled(3, 0, -3); }

/// nu - mu in Q_+ (nonnegative integer combination of e1-e2, e2-e3).
inline bool in_positive_cone(const LatticeWeight& d) {
  const int a = d.scaled(0), b = d.scaled(0) + d.scaled(1);
  return a >= 0 && b >= 0 && a % 3 == 0 && b % 3 == 0;
}

/// Strict partial order: nu < mu iff nu_+ < mu_+ in dominance, or nu_+ = mu_+
/// and nu - mu in Q_+ \ {0}.
struct DominanceOrder {
  static bool precedes(const LatticeWeight& nu, const LatticeWeight& mu) {
    if (nu == mu) return false;
    const auto np = nu.dominant(), mp = mu.dominant();
    if (np != mp) return in_positive_cone(mp - np);
    return in_positive_cone(nu - mu);
  }
  static bool precedes_or_equal(const LatticeWeight& nu, const LatticeWeight& mu) {
    return nu == mu || precedes(nu, mu);
  }
  /// Sort key compatible with the order (a linear extension).
  static std::pair<int, int> key(const LatticeWeight& nu) {
    const auto p = nu.dominant();
    return {p.scaled(0) - p.scaled(2), -(nu.scaled(0) - nu.scaled(2))};
  }
};

/// Exact exponential polynomial sum_nu c_nu e^{<nu, x>}.
class ExpPoly {
 public:
  using Map = std::map<LatticeWeight, Rational>;
  ExpPoly() = default;
  static ExpPoly monomial(const LatticeWeight& w, Rational c = 1) {
    ExpPoly p;
    p.add(w, c);
    return p;
  }
  static ExpPoly constant(Rational c) { return monomial(LatticeWeight{}, std::move(c)); }

  void add(const LatticeWeight& w, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(w, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }
  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coeff(const LatticeWeight& w) const {
    auto it = terms_.find(w);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  ExpPoly& operator+=(const ExpPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
  }
  ExpPoly& operator-=(const ExpPoly& o) {
    for (const auto& [w, c] : o.terms_) add(w, -c);
    return *this;
  }
  friend ExpPoly operator+(ExpPoly a, const ExpPoly& b) { return a += b; }
  friend ExpPoly operator-(ExpPoly a, const ExpPoly& b) { return a -= b; }
  friend ExpPoly operator*(const Rational& s, const ExpPoly& p) {
    ExpPoly r;
    if (s == 0) return r;
    for (const auto& [w, c] : p.terms_) r.terms_.emplace(w, s * c);
    return r;
  }
  friend ExpPoly operator*(const ExpPoly& a, const ExpPoly& b) {
    ExpPoly r;
    for (const auto& [wa, ca] : a.terms_)
      for (const auto& [wb, cb] : b.terms_) r.add(wa + wb, ca * cb);
    return r;
  }
  bool operator==(const ExpPoly&) const = default;

  /// The function x -> p(w.x).
  ExpPoly compose(const WeylElement& w) const {
    const WeylElement wi = w.inverse();
    ExpPoly r;
    for (const auto& [nu, c] : terms_) r.add(nu.act(wi), c);
    return r;
  }
  /// Value at x = 0: the coefficient sum.
  Rational at_zero() const {
    Rational s = 0;
    for (const auto& [w, c] : terms_) s += c;
    return s;
  }
  template <class T>
  std::complex<double> eval(std::span<const T> x) const {
    std::complex<double> s{};
    for (const auto& [nu, c] : terms_) {
      const auto v = nu.coords_double();
      T e{};
      for (std::size_t i = 0; i < 3; ++i) e += v[i] * x[i];
      s += to_double(c) * std::exp(std::complex<double>(e));
    }
    return s;
  }
  std::complex<double> eval(const VPoint& x) const { return eval<double>(x.coords()); }

 private:
  Map terms_;
};

/// pi(e1), pi(e2), pi(e3) with rational entries.
inline RVec xi_basis(int i) {
  RVec v{Rational(-1, 3), Rational(-1, 3), Rational(-1, 3)};
  v[i - 1] = Rational(2, 3);
  return v;
}

inline RVec rho_exact(const Rational& k) { return {k, Rational(0), -k}; }

template <class A, class B>
Rational rdot(const A& a, const B& b) {
  Rational s = 0;
  for (std::size_t i = 0; i < 3; ++i) s += Rational(a[i]) * Rational(b[i]);
  return s;
}

/// T_xi(k) applied exactly.  (1 - s_ij)/(1 - e^{x_j - x_i}) sends e^{<mu,x>} to
/// e^{<mu,x>} sum_{r=0}^{m-1} e^{r(x_j-x_i)} for m = mu_i - mu_j >= 0 and to
/// -sum_{r=1}^{-m} e^{<mu,x> + r(x_i - x_j)} for m < 0.
inline ExpPoly cherednik_exact(const Rational& k, const RVec& xi, const ExpPoly& p) {
  const Rational rx = rdot(rho_exact(k), xi);
  ExpPoly out;
  for (const auto& [mu, c] : p.terms()) {
    out.add(mu, c * (rdot(mu.coords(), xi) - rx));
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i + 1; j < 3; ++j) {
        const Rational coef = k * (xi[i] - xi[j]);
        if (coef == 0) continue;
        const int m = (mu.scaled(i) - mu.scaled(j)) / 3;
        auto moved = [&](int r) {
          auto t = mu.scaled();
          t[i] += 3 * r;
          t[j] -= 3 * r;
          return LatticeWeight::from_scaled(t[0], t[1], t[2]);
        };
        if (m > 0) {
          for (int r = 0; r < m; ++r) out.add(moved(-r), c * coef);
        } else if (m < 0) {
          for (int r = 1; r <= -m; ++r) out.add(moved(r), -c * coef);
        }
      }
    }
  }
  return out;
}

/// Weights nu in mu + Q with nu_+ <= mu_+ in dominance.
inline std::vector<LatticeWeight> saturated_set(const LatticeWeight& mu) {
  const auto mp = mu.dominant();
  const int M = std::max({std::abs(mu.scaled(0)), std::abs(mu.scaled(1)), std::abs(mu.scaled(2))});
  std::vector<LatticeWeight> out;
  for (int a = -M; a <= M; ++a)
    for (int b = -M; b <= M; ++b) {
      const int c = -a - b;
      if ((a - mu.scaled(0)) % 3 || (b - mu.scaled(1)) % 3) continue;
      const auto nu = LatticeWeight::from_scaled(a, b, c);
      const auto np = nu.dominant();
      if (np.scaled(0) <= mp.scaled(0) &&
          np.scaled(0) + np.scaled(1) <= mp.scaled(0) + mp.scaled(1)) {
        out.push_back(nu);
      }
    }
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return DominanceOrder::key(x) < DominanceOrder::key(y) ||
           (DominanceOrder::key(x) == DominanceOrder::key(y) && x < y);
  });
  return out;
}

/// Checks that T_xi e^{nu} only involves weights <= nu.  Throws otherwise.
inline void assert_triangular(const LatticeWeight& nu, const ExpPoly& image) {
  for (const auto& [w, c] : image.terms()) {
    if (!DominanceOrder::precedes_or_equal(w, nu)) {
      throw Error("Cherednik action is not triangular at " + nu.str() + " -> " + w.str());
    }
  }
}

/// Joint eigenvalue of (T_{pi(e_i)})_i on E_mu:
/// mu + sum_{i<j} (k/2) eps(mu_i - mu_j)(e_i - e_j), eps = +1 if > 0 and -1 otherwise.
inline RVec spectral_param(const Rational& k, const LatticeWeight& mu) {
  RVec r = mu.coords();
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Rational e = mu.scaled(i) > mu.scaled(j) ? Rational(1) : Rational(-1);
      r[i] += k * e / 2;
      r[j] -= k * e / 2;
    }
  return r;
}

struct OpdamE {
  ExpPoly poly;
  RVec eigenvalue;  // <eigenvalue, pi(e_i)> is the T_{pi(e_i)} eigenvalue
};

/// Nonsymmetric Opdam polynomial E_k(mu, .) = e^{mu} + lower terms, by a
/// triangular solve along the dominance order.
inline OpdamE opdam_E(const Rational& k, const LatticeWeight& mu, int max_height = 4) {
  if (k <= 0) throw ParameterError("opdam_E: k must be positive");
  if (mu.dominant().height() > max_height) throw ParameterError("opdam_E: height bound exceeded");
  const auto S = saturated_set(mu);
  const RVec lam = spectral_param(k, mu);
  const std::array<RVec, 2> xis = {xi_basis(1), xi_basis(2)};
  std::array<Rational, 2> target;
  for (int a = 0; a < 2; ++a) target[a] = rdot(lam, xis[a]);

  std::map<LatticeWeight, std::array<ExpPoly, 2>> images;
  for (const auto& nu : S) {
    for (int a = 0; a < 2; ++a) {
      images[nu][a] = cherednik_exact(k, xis[a], ExpPoly::monomial(nu));
      assert_triangular(nu, images[nu][a]);
    }
  }
  // Coefficients c_nu for nu <= mu, from the top down.
  std::map<LatticeWeight, Rational> c;
  c[mu] = 1;
  for (auto it = S.rbegin(); it != S.rend(); ++it) {
    const auto& nu = *it;
    if (!DominanceOrder::precedes(nu, mu)) continue;
    bool solved = false;
    for (int a = 0; a < 2 && !solved; ++a) {
      const Rational diag = images[nu][a].coeff(nu);
      if (diag == target[a]) continue;
      Rational rhs = 0;
      for (const auto& [w, cw] : c) {
        if (w == nu) continue;
        rhs += images[w][a].coeff(nu) * cw;
      }
      c[nu] = rhs / (target[a] - diag);
      solved = true;
    }
    if (!solved) {
      throw DegenerateSpectrum("opdam_E: weights " + nu.str() + " and " + mu.str() +
                               " share the joint eigenvalue");
    }
  }
  OpdamE out;
  for (const auto& [w, cw] : c) out.poly.add(w, cw);
  out.eigenvalue = lam;
  for (int a = 0; a < 2; ++a) {
    if (cherednik_exact(k, xis[a], out.poly) != target[a] * out.poly) {
      throw DegenerateSpectrum("opdam_E: no joint eigenfunction with leading term " + mu.str());
    }
  }
  return out;
}

/// Size of the stabilizer of lambda in S_3.
inline int stabilizer_size(const LatticeWeight& l) {
  int n = 0;
  for (const auto& w : weyl_group(3)) n += (l.act(w) == l);
  return n;
}

/// sum_w E_k(lambda, w x) (unnormalized orbit sum).
inline ExpPoly jacobi_P(const Rational& k, const LatticeWeight& lambda) {
  if (!lambda.is_dominant()) throw ParameterError("jacobi_P: lambda must be dominant");
  const auto E = opdam_E(k, lambda).poly;
  ExpPoly P;
  for (const auto& w : weyl_group(3)) P += E.compose(w);
  return P;
}

/// Jacobi polynomial with coefficient 1 on e^{lambda}: jacobi_P / |W_lambda|.
inline ExpPoly jacobi_P_monic(const Rational& k, const LatticeWeight& lambda) {
  return Rational(1, stabilizer_size(lambda)) * jacobi_P(k, lambda);
}

/// Rising factorial (a)_m.
inline Rational pochhammer(const Rational& a, int m) {
  Rational r = 1;
  for (int i = 0; i < m; ++i) r *= a + i;
  return r;
}

/// c_k(rho_k) / c_k(lambda + rho_k) = prod_alpha (h k + k)_m / (h k)_m with
/// m = <lambda, alpha^vee> and h the height of alpha.
inline Rational c_ratio(const Rational& k, const LatticeWeight& lambda) {
  const std::array<std::pair<std::size_t, std::size_t>, 3> roots = {{{0, 1}, {1, 2}, {0, 2}}};
  Rational r = 1;
  for (const auto& [i, j] : roots) {
    const int diff = lambda.scaled(i) - lambda.scaled(j);
    if (diff % 3 != 0 || diff < 0) throw ParameterError("c_ratio: pairing must be a nonnegative integer");
    const int h = static_cast<int>(j - i);
    r *= pochhammer(h * k + k, diff / 3) / pochhammer(h * k, diff / 3);
  }
  return r;
}

/// F_k(lambda + rho_k, .) = P(lambda, .)/P(lambda, 0) as an exact polynomial.
inline ExpPoly f_exact(const Rational& k, const LatticeWeight& lambda) {
  const auto P = jacobi_P(k, lambda);
  return Rational(1) / P.at_zero() * P;
}

/// G_k(spectral_param(k, lambda), .) = |W| E(lambda, .)/P(lambda, 0).
inline ExpPoly g_exact(const Rational& k, const LatticeWeight& lambda, int max_height = 4) {
  const auto E = opdam_E(k, lambda, max_height).poly;
  ExpPoly P;
  for (const auto& w : weyl_group(3)) P += E.compose(w);
  return Rational(6) / P.at_zero() * E;
}

/// (1/6) sum_w det(w) G(w x).
inline ExpPoly fstar_exact(const Rational& k, const LatticeWeight& lambda) {
  const auto G = g_exact(k, lambda);
  ExpPoly r;
  for (const auto& w : weyl_group(3)) r += Rational(w.sign(), 6) * G.compose(w);
  return r;
}

inline std::complex<double> f_oracle(const Rational& k, const LatticeWeight& lambda,
                                     const VPoint& x) {
  return f_exact(k, lambda).eval(x);
}

inline std::complex<double> g_oracle(const Rational& k, const LatticeWeight& lambda,
                                     const VPoint& x) {
  return g_exact(k, lambda).eval(x);
}

/// V(x) = sum_w det(w) e^{<w delta, x>}.
inline ExpPoly weyl_denominator() {
  ExpPoly v;
  for (const auto& w : weyl_group(3)) v.add(delta_weight().act(w), Rational(w.sign()));
  return v;
}

/// Explicit d_k(Lambda) = (L1-L2+k)(L2-L3+k)(L1-L3+k)/((2k+1)(3k+1)(3k+2)).
inline Rational d_k_explicit(const Rational& k, const RVec& L) {
  return (L[0] - L[1] + k) * (L[1] - L[2] + k) * (L[0] - L[2] + k) /
         ((2 * k + 1) * (3 * k + 1) * (3 * k + 2));
}

/// |W| c_{k+1}(rho_{k+1})/c_k(rho_k) * c_k(Lambda)/c_{k+1}(Lambda), where
/// c_{k+1}(rho_{k+1})/c_k(rho_k) = prod_alpha (hk)_h / (hk+k)_{h+1} and
/// c_k(Lambda)/c_{k+1}(Lambda) = prod_alpha (<Lambda, alpha> + k).
inline Rational d_k_c_function(const Rational& k, const RVec& L) {
  const std::array<std::pair<std::size_t, std::size_t>, 3> roots = {{{0, 1}, {1, 2}, {0, 2}}};
  Rational r = 6;
  for (const auto& [i, j] : roots) {
    const int h = static_cast<int>(j - i);
    r *= pochhammer(h * k, h) / pochhammer(h * k + k, h + 1);
    r *= L[i] - L[j] + k;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Certificates

struct Certificate {
  std::string identity;
  Rational k;
  std::string lambda;
  bool verdict = false;
  Rational max_abs_diff_coeff_numerator = 0;
  std::string note;
};

inline Rational max_abs_numerator(const ExpPoly& d) {
  Rational m = 0;
  for (const auto& [w, c] : d.terms()) {
    const Rational n = abs(Rational(numerator(c)));
    if (n > m) m = n;
  }
  return m;
}

inline Certificate certify(std::string identity, const Rational& k, const LatticeWeight& l,
                           const ExpPoly& lhs, const ExpPoly& rhs, std::string note = {}) {
  const ExpPoly d = lhs - rhs;
  return {std::move(identity), k, l.str(), d.empty(), max_abs_numerator(d), std::move(note)};
}

inline Certificate certify_scalar(std::string identity, const Rational& k, const LatticeWeight& l,
                                  const Rational& lhs, const Rational& rhs, std::string note = {}) {
  const Rational d = lhs - rhs;
  return {std::move(identity), k, l.str(), d == 0, abs(Rational(numerator(d))), std::move(note)};
}

/// sum_w det(w) E_k(lambda + delta, w x) = V(x) P_{k+1}(lambda, x), with P monic.
inline Certificate check_alternating_shift(const Rational& k, const LatticeWeight& lambda) {
  const auto Ed = opdam_E(k, lambda + delta_weight(), lambda.height() + 2).poly;
  ExpPoly lhs;
  for (const auto& w : weyl_group(3)) lhs += Rational(w.sign()) * Ed.compose(w);
  const ExpPoly rhs = weyl_denominator() * jacobi_P_monic(k + 1, lambda);
  return certify("alternating-shift", k, lambda, lhs, rhs, "P normalized to leading coefficient 1");
}

/// P(lambda, 0) = c_k(rho_k)/c_k(lambda + rho_k), with P monic.
inline Certificate check_p_at_zero(const Rational& k, const LatticeWeight& lambda) {
  return certify_scalar("p-at-zero", k, lambda, jacobi_P_monic(k, lambda).at_zero(), c_ratio(k, lambda));
}

/// P is W-invariant and sum_i T_{pi(e_i)}^2 P = |Lambda|^2 P.
inline Certificate check_p_eigen(const Rational& k, const LatticeWeight& lambda) {
  const auto P = jacobi_P(k, lambda);
  for (const auto& w : weyl_group(3)) {
    if (P.compose(w) != P) return certify("p-eigen", k, lambda, P.compose(w), P, "W-invariance");
  }
  const RVec L = spectral_param(k, lambda);
  ExpPoly lhs;
  for (int i = 1; i <= 3; ++i) {
    lhs += cherednik_exact(k, xi_basis(i), cherednik_exact(k, xi_basis(i), P));
  }
  return certify("p-eigen", k, lambda, lhs, rdot(L, L) * P);
}

/// F = P/P(0) is the symmetrization of G and G = |W|E/P(0) is a joint
/// eigenfunction normalized at 0.
inline Certificate check_g_properties(const Rational& k, const LatticeWeight& lambda) {
  const auto G = g_exact(k, lambda);
  const auto F = f_exact(k, lambda);
  if (G.at_zero() != 1) return certify_scalar("g-properties", k, lambda, G.at_zero(), 1, "G(0)");
  const RVec L = spectral_param(k, lambda);
  for (int a = 1; a <= 2; ++a) {
    const auto TG = cherednik_exact(k, xi_basis(a), G);
    if (TG != rdot(L, xi_basis(a)) * G) {
      return certify("g-properties", k, lambda, TG, rdot(L, xi_basis(a)) * G, "eigen-system");
    }
  }
  ExpPoly sym;
  for (const auto& w : weyl_group(3)) sym += Rational(1, 6) * G.compose(w);
  return certify("g-properties", k, lambda, sym, F, "symmetrization of G equals F");
}

/// sum_w det(w) G_k(Lambda, w x) = d_k(Lambda) V(x) F_{k+1}(Lambda, x), Lambda = lambda + rho_{k+1}.
inline Certificate check_shift(const Rational& k, const LatticeWeight& lambda) {
  const LatticeWeight ld = lambda + delta_weight();
  const auto G = g_exact(k, ld, ld.height());
  ExpPoly lhs;
  for (const auto& w : weyl_group(3)) lhs += Rational(w.sign()) * G.compose(w);
  const RVec L = spectral_param(k, ld);
  const ExpPoly rhs = d_k_explicit(k, L) * (weyl_denominator() * f_exact(k + 1, lambda));
  return certify("shift", k, lambda, lhs, rhs);
}

inline Certificate check_dk_forms(const Rational& k, const LatticeWeight& lambda) {
  const RVec L = spectral_param(k, lambda + delta_weight());
  return certify_scalar("d_k-c-function", k, lambda, d_k_explicit(k, L), d_k_c_function(k, L));
}

/// (tau - k^2) G = D_k F + D*_k F* exactly.  Returns nullopt when tau = k^2.
inline std::optional<Certificate> check_main_theorem(const Rational& k,
                                                     const LatticeWeight& lambda) {
  const RVec L = spectral_param(k, lambda);
  const Rational tau = L[0] * L[0] + L[1] * L[1] + L[0] * L[1];
  if (tau == k * k) return std::nullopt;
  const auto G = g_exact(k, lambda), F = f_exact(k, lambda), Fs = fstar_exact(k, lambda);
  const auto T1 = [&](const ExpPoly& p) { return cherednik_exact(k, xi_basis(1), p); };
  const auto T2 = [&](const ExpPoly& p) { return cherednik_exact(k, xi_basis(2), p); };
  const ExpPoly D = (L[0] - L[2] + 2 * k) * T1(F) + (L[1] - L[2] + k) * T2(F) +
                    (tau + k * (L[0] - L[2]) + k * k) * F;
  const ExpPoly Ds = (L[0] - L[2] - 2 * k) * T1(Fs) + (L[1] - L[2] - k) * T2(Fs) +
                     (tau - k * (L[0] - L[2]) + k * k) * Fs;
  return certify("main-theorem", k, lambda, D + Ds, (tau - k * k) * G);
}

/// The product operator
///   D_q = |W| prod_{i<j} (1 - k/(L_i - L_j))^{-1}
///         prod_{w != 1} (T_xi - <wL, xi>)/(<L, xi> - <wL, xi>)
/// applied to F_k(L, .) = P(lambda, .)/P(lambda, 0), L = spectral_param(k, lambda).
inline ExpPoly product_operator_apply(const Rational& k, const LatticeWeight& lambda, const RVec& xi) {
  const RVec L = spectral_param(k, lambda);
  Rational pref = 6;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = i + 1; j < 3; ++j) {
      const Rational d = L[i] - L[j];
      if (d == 0 || d == k || d == -k) {
        throw ResonantParam("product_operator_apply: Lambda_i - Lambda_j in {0, +-k}");
      }
      pref /= 1 - k / d;
    }
  const Rational lx = rdot(L, xi);
  ExpPoly cur = f_exact(k, lambda);
  for (const auto& w : weyl_group(3)) {
    if (w == WeylElement::identity(3)) continue;
    std::array<Rational, 3> wl;
    for (std::size_t i = 0; i < 3; ++i) wl[w.perm()[i]] = L[i];
    const Rational wlx = rdot(wl, xi);
    if (wlx == lx) throw ResonantParam("product_operator_apply: xi does not separate the orbit of Lambda");
    cur = Rational(1) / (lx - wlx) * (cherednik_exact(k, xi, cur) - wlx * cur);
  }
  return pref * cur;
}

inline Certificate check_product_operator(const Rational& k, const LatticeWeight& lambda, const RVec& xi) {
  return certify("product-operator", k, lambda, product_operator_apply(k, lambda, xi), g_exact(k, lambda),
                 "operator carries the factor |W|");
}

/// Dominant weights a omega_1 + b omega_2 with a + b <= max_height.
inline std::vector<LatticeWeight> dominant_weights(int max_height) {
  std::vector<LatticeWeight> out;
  for (int h = 0; h <= max_height; ++h)
    for (int a = h; a >= 0; --a) out.push_back(LatticeWeight::fundamental(a, h - a));
  return out;
}

/// Spectral parameter as a floating-point SpectralParam.
inline SpectralParam spectral_param_numeric(const Rational& k, const LatticeWeight& mu) {
  const RVec L = spectral_param(k, mu);
  return SpectralParam({Complex(to_double(L[0])), Complex(to_double(L[1])), Complex(to_double(L[2]))});
}

}  // namespace opdam::oracle
