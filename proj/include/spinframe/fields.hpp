// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Smooth field inputs evaluated pointwise: the coframe (the sole geometric
// input), spinor and electromagnetic-potential fields, and scalar angle
// fields. Every field carries a derivative provider, either analytic or a
// central-difference fallback. Evaluation is pure; instances are safe to
// share across threads.

#ifndef SPINFRAME_FIELDS_HPP
#define SPINFRAME_FIELDS_HPP

#include <array>
#include <cmath>
#include <functional>
#include <random>
#include <utility>
#include <vector>

#include "spinframe/errors.hpp"
#include "spinframe/linalg.hpp"
#include "spinframe/sampling.hpp"

namespace spinframe {

using SpacetimePoint = Vec4;

/// Central-difference settings for derivative fallbacks. The step is scaled
/// per axis by max(1, |x_axis|); one Richardson extrapolation level is
/// available behind a flag.
struct FdConfig {
  double step = 1e-5;
  bool richardson = false;
};

/// partial_nu theta^a_mu, indexed d[nu](a, mu).
struct CoframeDerivative {
  std::array<Mat4d, 4> d{};
};

namespace detail {
template <typename F>
CoframeDerivative central_difference_coframe(const F& theta, const Vec4& x, const FdConfig& fd) {
  auto eval = [&theta, &x](double h_scale) {
    CoframeDerivative out;
    for (int nu = 0; nu < 4; ++nu) {
      const auto n = static_cast<std::size_t>(nu);
      const double h = h_scale * std::max(1.0, std::abs(x[n]));
      Vec4 xp = x, xm = x;
      xp[n] += h;
      xm[n] -= h;
      const Mat4d tp = theta(xp), tm = theta(xm);
      out.d[n] = (1.0 / (2.0 * h)) * (tp - tm);
    }
    return out;
  };
  CoframeDerivative dh = eval(fd.step);
  if (!fd.richardson) return dh;
  CoframeDerivative dh2 = eval(fd.step / 2.0);
  CoframeDerivative out;
  for (int nu = 0; nu < 4; ++nu) {
    const auto n = static_cast<std::size_t>(nu);
    out.d[n] = (1.0 / 3.0) * (4.0 * dh2.d[n] - dh.d[n]);
  }
  return out;
}
}  // namespace detail

/// The coframe field theta^a_mu(x) with derivative provider and chart-domain
/// predicate. theta(a, mu) layout: row = Lorentz index, column = coordinate.
class CoframeField {
 public:
  using ThetaFn = std::function<Mat4d(const Vec4&)>;
  using DThetaFn = std::function<CoframeDerivative(const Vec4&)>;
  using DomainFn = std::function<bool(const Vec4&)>;

  CoframeField(ThetaFn theta, DThetaFn dtheta, DomainFn domain)
      : theta_(std::move(theta)), dtheta_(std::move(dtheta)), domain_(std::move(domain)) {}

  /// Analytic values with central-difference derivatives.
  static CoframeField with_fd_derivatives(ThetaFn theta, DomainFn domain, FdConfig fd = {}) {
    ThetaFn theta_for_d = theta;
    DThetaFn dtheta = [theta_for_d, fd](const Vec4& x) {
      return detail::central_difference_coframe(theta_for_d, x, fd);
    };
    return CoframeField(std::move(theta), std::move(dtheta), std::move(domain));
  }

  static CoframeField flat() {
    return CoframeField([](const Vec4&) { return Mat4d::identity(); },
                        [](const Vec4&) { return CoframeDerivative{}; },
                        [](const Vec4&) { return true; });
  }

  bool in_domain(const Vec4& x) const { return !domain_ || domain_(x); }

  Mat4d theta(const Vec4& x) const {
    check_domain(x);
    return theta_(x);
  }

  CoframeDerivative dtheta(const Vec4& x) const {
    check_domain(x);
    return dtheta_(x);
  }

 private:
  void check_domain(const Vec4& x) const {
    if (!in_domain(x)) throw DomainError("point is outside the chart domain");
  }

  ThetaFn theta_;
  DThetaFn dtheta_;
  DomainFn domain_;
};

/// Psi(x) in C^4 with per-coordinate derivative provider dpsi[mu] = d_mu Psi.
class SpinorField {
 public:
  using PsiFn = std::function<Vec4c(const Vec4&)>;
  using DPsiFn = std::function<std::array<Vec4c, 4>(const Vec4&)>;

  SpinorField(PsiFn psi, DPsiFn dpsi) : psi_(std::move(psi)), dpsi_(std::move(dpsi)) {}

  static SpinorField zero() {
    return SpinorField([](const Vec4&) { return Vec4c{}; },
                       [](const Vec4&) { return std::array<Vec4c, 4>{}; });
  }

  static SpinorField constant(const Vec4c& value) {
    return SpinorField([value](const Vec4&) { return value; },
                       [](const Vec4&) { return std::array<Vec4c, 4>{}; });
  }

  Vec4c psi(const Vec4& x) const { return psi_(x); }
  std::array<Vec4c, 4> dpsi(const Vec4& x) const { return dpsi_(x); }

 private:
  PsiFn psi_;
  DPsiFn dpsi_;
};

inline SpinorField superpose(std::vector<SpinorField> parts, std::vector<cplx> coeffs) {
  if (parts.size() != coeffs.size())
    throw std::invalid_argument("superpose needs one coefficient per field");
  auto psi = [parts, coeffs](const Vec4& x) {
    Vec4c acc{};
    for (std::size_t i = 0; i < parts.size(); ++i) acc = acc + coeffs[i] * parts[i].psi(x);
    return acc;
  };
  auto dpsi = [parts, coeffs](const Vec4& x) {
    std::array<Vec4c, 4> acc{};
    for (std::size_t i = 0; i < parts.size(); ++i) {
      const auto d = parts[i].dpsi(x);
      for (int mu = 0; mu < 4; ++mu) {
        const auto m = static_cast<std::size_t>(mu);
        acc[m] = acc[m] + coeffs[i] * d[m];
      }
    }
    return acc;
  };
  return SpinorField(std::move(psi), std::move(dpsi));
}

/// Electromagnetic potential as a coordinate 1-form A_mu(x). faraday() is the
/// antisymmetrized derivative F_{nu mu} = d_nu A_mu - d_mu A_nu, so dA is
/// antisymmetric by construction.
class PotentialField {
 public:
  using AFn = std::function<Vec4(const Vec4&)>;
  using DAFn = std::function<Mat4d(const Vec4&)>;  // (nu, mu) = d_nu A_mu

  PotentialField(AFn a, DAFn da) : a_(std::move(a)), da_(std::move(da)) {}

  static PotentialField zero() {
    return PotentialField([](const Vec4&) { return Vec4{}; },
                          [](const Vec4&) { return Mat4d{}; });
  }

  /// A with constant coordinate F_{nu mu}: A_mu(x) = 1/2 F_{mu nu} x^nu.
  static PotentialField constant_faraday(const Mat4d& f_coord) {
    Mat4d f = 0.5 * (f_coord - f_coord.transpose());
    return PotentialField(
        [f](const Vec4& x) {
          Vec4 a{};
          for (int mu = 0; mu < 4; ++mu)
            for (int nu = 0; nu < 4; ++nu)
              a[static_cast<std::size_t>(mu)] += 0.5 * f(mu, nu) * x[static_cast<std::size_t>(nu)];
          return a;
        },
        [f](const Vec4&) { return 0.5 * f.transpose(); });
  }

  Vec4 a(const Vec4& x) const { return a_(x); }

  Mat4d faraday(const Vec4& x) const {
    const Mat4d d = da_(x);
    Mat4d f;
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = nu + 1; mu < 4; ++mu) {
        const double v = d(nu, mu) - d(mu, nu);
        f(nu, mu) = v;
        f(mu, nu) = -v;
      }
    return f;
  }

 private:
  AFn a_;
  DAFn da_;
};

/// Scalar function with analytic gradient; used for position-dependent
/// rotation angles.
struct ScalarField {
  std::function<double(const Vec4&)> value;
  std::function<Vec4(const Vec4&)> gradient;

  static ScalarField constant(double v) {
    return {[v](const Vec4&) { return v; }, [](const Vec4&) { return Vec4{}; }};
  }

  /// amplitude * sin(x^axis + phase)
  static ScalarField sine(double amplitude, int axis, double phase = 0.0) {
    return {[amplitude, axis, phase](const Vec4& x) {
              return amplitude * std::sin(x[static_cast<std::size_t>(axis)] + phase);
            },
            [amplitude, axis, phase](const Vec4& x) {
              Vec4 g{};
              g[static_cast<std::size_t>(axis)] =
                  amplitude * std::cos(x[static_cast<std::size_t>(axis)] + phase);
              return g;
            }};
  }
};

/// Multivariate polynomial in the four coordinates, total degree <= 3 for the
/// random fixtures. Values and gradients are analytic, which keeps the
/// identity checks at roundoff level.
template <typename T>
class Poly4 {
 public:
  struct Term {
    std::array<int, 4> p;
    T c;
  };

  Poly4() = default;
  explicit Poly4(std::vector<Term> terms) : terms_(std::move(terms)) {}

  T value(const Vec4& x) const {
    T acc(0);
    for (const Term& t : terms_) acc += t.c * monomial(x, t.p);
    return acc;
  }

  std::array<T, 4> gradient(const Vec4& x) const {
    std::array<T, 4> g{};
    for (const Term& t : terms_) {
      for (int mu = 0; mu < 4; ++mu) {
        const auto m = static_cast<std::size_t>(mu);
        if (t.p[m] == 0) continue;
        std::array<int, 4> q = t.p;
        --q[m];
        g[m] += t.c * static_cast<double>(t.p[m]) * monomial(x, q);
      }
    }
    return g;
  }

  /// All monomials with total degree <= 3, coefficients uniform in
  /// [-amplitude, amplitude] (independently for real and imaginary parts in
  /// the complex case).
  static Poly4 random_cubic(std::mt19937_64& gen, double amplitude) {
    std::vector<Term> terms;
    for (int p0 = 0; p0 <= 3; ++p0)
      for (int p1 = 0; p1 + p0 <= 3; ++p1)
        for (int p2 = 0; p2 + p1 + p0 <= 3; ++p2)
          for (int p3 = 0; p3 + p2 + p1 + p0 <= 3; ++p3)
            terms.push_back(Term{{p0, p1, p2, p3}, random_coeff(gen, amplitude)});
    return Poly4(std::move(terms));
  }

 private:
  static double monomial(const Vec4& x, const std::array<int, 4>& p) {
    double m = 1.0;
    for (int mu = 0; mu < 4; ++mu)
      for (int k = 0; k < p[static_cast<std::size_t>(mu)]; ++k)
        m *= x[static_cast<std::size_t>(mu)];
    return m;
  }

  static T random_coeff(std::mt19937_64& gen, double amplitude) {
    if constexpr (std::is_same_v<T, cplx>) {
      return uniform_complex(gen, amplitude);
    } else {
      return uniform_range(gen, -amplitude, amplitude);
    }
  }

  std::vector<Term> terms_;
};

/// Componentwise random cubic spinor field with analytic derivatives.
inline SpinorField random_cubic_spinor(std::mt19937_64& gen, double amplitude = 1.0) {
  std::array<Poly4<cplx>, 4> comp;
  for (auto& p : comp) p = Poly4<cplx>::random_cubic(gen, amplitude);
  auto psi = [comp](const Vec4& x) {
    Vec4c v;
    for (int i = 0; i < 4; ++i) v[static_cast<std::size_t>(i)] = comp[static_cast<std::size_t>(i)].value(x);
    return v;
  };
  auto dpsi = [comp](const Vec4& x) {
    std::array<Vec4c, 4> d{};
    for (int i = 0; i < 4; ++i) {
      const auto g = comp[static_cast<std::size_t>(i)].gradient(x);
      for (int mu = 0; mu < 4; ++mu)
        d[static_cast<std::size_t>(mu)][static_cast<std::size_t>(i)] = g[static_cast<std::size_t>(mu)];
    }
    return d;
  };
  return SpinorField(std::move(psi), std::move(dpsi));
}

/// Componentwise random cubic potential with analytic derivatives.
inline PotentialField random_cubic_potential(std::mt19937_64& gen, double amplitude = 1.0) {
  std::array<Poly4<double>, 4> comp;
  for (auto& p : comp) p = Poly4<double>::random_cubic(gen, amplitude);
  auto a = [comp](const Vec4& x) {
    Vec4 v;
    for (int mu = 0; mu < 4; ++mu)
      v[static_cast<std::size_t>(mu)] = comp[static_cast<std::size_t>(mu)].value(x);
    return v;
  };
  auto da = [comp](const Vec4& x) {
    Mat4d d;
    for (int mu = 0; mu < 4; ++mu) {
      const auto g = comp[static_cast<std::size_t>(mu)].gradient(x);
      for (int nu = 0; nu < 4; ++nu) d(nu, mu) = g[static_cast<std::size_t>(nu)];
    }
    return d;
  };
  return PotentialField(std::move(a), std::move(da));
}

}  // namespace spinframe

#endif  // SPINFRAME_FIELDS_HPP
