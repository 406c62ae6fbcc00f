// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Coframe-driven geometry at a point: metric, dual frame, exterior
// derivatives on the orthonormal basis, the spin connection through both the
// direct formula and the Christoffel route, torsion, and the contracted
// divergence *d*theta_a.

#ifndef SPINFRAME_GEOMETRY_HPP
#define SPINFRAME_GEOMETRY_HPP

#include <array>
#include <cmath>

#include "spinframe/errors.hpp"
#include "spinframe/fields.hpp"
#include "spinframe/forms.hpp"
#include "spinframe/linalg.hpp"

namespace spinframe {

/// omega[a][b][c] = omega_{bc}(v_a): first slot is the form argument, the
/// trailing pair is the antisymmetric index pair.
struct SpinConnection {
  std::array<double, 64> w{};

  double operator()(int a, int b, int c) const {
    return w[static_cast<std::size_t>(16 * a + 4 * b + c)];
  }
  double& slot(int a, int b, int c) {
    return w[static_cast<std::size_t>(16 * a + 4 * b + c)];
  }
};

inline double max_abs_difference(const SpinConnection& a, const SpinConnection& b) {
  double best = 0.0;
  for (std::size_t i = 0; i < 64; ++i) best = std::max(best, std::abs(a.w[i] - b.w[i]));
  return best;
}

/// All-lower Christoffel symbols Gamma_{rho nu mu} (symmetric in the last two
/// slots) plus the index-raised form.
struct ChristoffelSymbols {
  double lower[4][4][4]{};
  double raised[4][4][4]{};
};

/// Everything the pointwise operators need from the coframe at one event:
/// values, derivatives, the dual frame, and dtheta on frame vectors.
struct PointFrame {
  Mat4d theta;              // theta(a, mu)
  CoframeDerivative dtheta; // d[nu](a, mu)
  Mat4d frame;              // frame(a, mu) = v_a^mu
  double ext[4][4][4];      // ext[a][b][c] = dtheta^a(v_b, v_c)
};

namespace detail {
constexpr double kMaxCoframeCondition = 1e12;

inline Mat4d invert_coframe(const Mat4d& theta) {
  Mat4d inv;
  try {
    inv = inverse(theta);
  } catch (const std::runtime_error&) {
    throw DegenerateCoframeError("coframe matrix is singular");
  }
  if (inf_norm(theta) * inf_norm(inv) > kMaxCoframeCondition)
    throw DegenerateCoframeError("coframe condition number exceeds 1e12");
  // frame(a, mu) = (theta^{-1})(mu, a)
  return inv.transpose();
}
}  // namespace detail

inline PointFrame point_frame(const CoframeField& cf, const Vec4& x) {
  PointFrame pf{};
  pf.theta = cf.theta(x);
  pf.dtheta = cf.dtheta(x);
  pf.frame = detail::invert_coframe(pf.theta);

  // dtheta^a(v_b, v_c) = (d_nu theta^a_mu - d_mu theta^a_nu) v_b^nu v_c^mu,
  // filled for b < c and mirrored so antisymmetry is exact.
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) pf.ext[a][b][b] = 0.0;
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        double acc = 0.0;
        for (int nu = 0; nu < 4; ++nu)
          for (int mu = 0; mu < 4; ++mu) {
            const double anti = pf.dtheta.d[static_cast<std::size_t>(nu)](a, mu) -
                                pf.dtheta.d[static_cast<std::size_t>(mu)](a, nu);
            acc += anti * pf.frame(b, nu) * pf.frame(c, mu);
          }
        pf.ext[a][b][c] = acc;
        pf.ext[a][c][b] = -acc;
      }
  }
  return pf;
}

/// g_{mu nu} = eta_{ab} theta^a_mu theta^b_nu; symmetric by construction.
inline Mat4d metric_from_coframe(const CoframeField& cf, const Vec4& x) {
  const Mat4d theta = cf.theta(x);
  Mat4d g;
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = mu; nu < 4; ++nu) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a) acc += GammaRep::eta(a, a) * theta(a, mu) * theta(a, nu);
      g(mu, nu) = acc;
      g(nu, mu) = acc;
    }
  return g;
}

/// Dual frame v_a^mu with theta^a(v_b) = delta^a_b, as rows of frame(a, mu).
inline Mat4d frame_from_coframe(const CoframeField& cf, const Vec4& x) {
  return detail::invert_coframe(cf.theta(x));
}

/// dtheta^a on frame vectors, one 2-form per Lorentz index a.
inline std::array<IndexedForm, 4> coframe_exterior_derivative(const CoframeField& cf,
                                                              const Vec4& x) {
  const PointFrame pf = point_frame(cf, x);
  std::array<IndexedForm, 4> out{IndexedForm(2), IndexedForm(2), IndexedForm(2), IndexedForm(2)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        out[static_cast<std::size_t>(a)].set_antisym({b, c}, pf.ext[a][b][c]);
  return out;
}

/// omega_{bc}(v_a) = (dtheta_a(v_b,v_c) + dtheta_b(v_a,v_c) - dtheta_c(v_a,v_b)) / 2
/// with the first index lowered by eta. Antisymmetric in (b,c) exactly.
inline SpinConnection spin_connection(const PointFrame& pf) {
  auto low = [&pf](int a, int b, int c) { return GammaRep::eta(a, a) * pf.ext[a][b][c]; };
  SpinConnection sc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        const double v = 0.5 * (low(a, b, c) + low(b, a, c) - low(c, a, b));
        sc.slot(a, b, c) = v;
        sc.slot(a, c, b) = -v;
      }
  return sc;
}

inline SpinConnection spin_connection(const CoframeField& cf, const Vec4& x) {
  return spin_connection(point_frame(cf, x));
}

/// Gamma_{rho nu mu} = (d_mu g_{rho nu} + d_nu g_{rho mu} - d_rho g_{nu mu}) / 2
/// with metric derivatives chained through the coframe derivative provider.
inline ChristoffelSymbols christoffel(const PointFrame& pf) {
  double dg[4][4][4];  // dg[sigma][mu][nu] = d_sigma g_{mu nu}
  for (int sigma = 0; sigma < 4; ++sigma) {
    const Mat4d& dth = pf.dtheta.d[static_cast<std::size_t>(sigma)];
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        double acc = 0.0;
        for (int a = 0; a < 4; ++a)
          acc += GammaRep::eta(a, a) *
                 (dth(a, mu) * pf.theta(a, nu) + pf.theta(a, mu) * dth(a, nu));
        dg[sigma][mu][nu] = acc;
        dg[sigma][nu][mu] = acc;
      }
  }

  ChristoffelSymbols ch;
  for (int rho = 0; rho < 4; ++rho)
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = 0; mu < 4; ++mu)
        ch.lower[rho][nu][mu] = 0.5 * (dg[mu][rho][nu] + dg[nu][rho][mu] - dg[rho][nu][mu]);

  // g^{rho lambda} = eta^{ab} v_a^rho v_b^lambda
  Mat4d ginv;
  for (int r = 0; r < 4; ++r)
    for (int l = 0; l < 4; ++l) {
      double acc = 0.0;
      for (int a = 0; a < 4; ++a) acc += GammaRep::eta(a, a) * pf.frame(a, r) * pf.frame(a, l);
      ginv(r, l) = acc;
    }
  for (int rho = 0; rho < 4; ++rho)
    for (int nu = 0; nu < 4; ++nu)
      for (int mu = 0; mu < 4; ++mu) {
        double acc = 0.0;
        for (int l = 0; l < 4; ++l) acc += ginv(rho, l) * ch.lower[l][nu][mu];
        ch.raised[rho][nu][mu] = acc;
      }
  return ch;
}

inline ChristoffelSymbols christoffel(const CoframeField& cf, const Vec4& x) {
  return christoffel(point_frame(cf, x));
}

/// omega_{bc}(v_a) = v_a^mu v_b^nu theta_{c rho} Gamma^rho_{nu mu}
///                 - v_a^mu v_b^nu d_mu theta_{c nu}.
/// Filled slot by slot from the formula; antisymmetry in (b,c) is emergent,
/// not enforced, so agreement with spin_connection() checks the identity.
inline SpinConnection spin_connection_via_christoffel(const PointFrame& pf) {
  const ChristoffelSymbols ch = christoffel(pf);
  SpinConnection sc;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const double eta_c = GammaRep::eta(c, c);
        double acc = 0.0;
        for (int mu = 0; mu < 4; ++mu)
          for (int nu = 0; nu < 4; ++nu) {
            double gamma_term = 0.0;
            for (int rho = 0; rho < 4; ++rho)
              gamma_term += eta_c * pf.theta(c, rho) * ch.raised[rho][nu][mu];
            gamma_term -= eta_c * pf.dtheta.d[static_cast<std::size_t>(mu)](c, nu);
            acc += pf.frame(a, mu) * pf.frame(b, nu) * gamma_term;
          }
        sc.slot(a, b, c) = acc;
      }
  return sc;
}

inline SpinConnection spin_connection_via_christoffel(const CoframeField& cf, const Vec4& x) {
  return spin_connection_via_christoffel(point_frame(cf, x));
}

/// Torsion residual (dtheta^a - omega^a_b ^ theta^b)(v_c, v_d), one 2-form
/// per index a; vanishes for the connection built by spin_connection.
inline std::array<IndexedForm, 4> torsion(const PointFrame& pf) {
  const SpinConnection sc = spin_connection(pf);
  auto omega_ud = [&sc](int a, int b, int c) {
    // omega^a_b(v_c) = eta^{aa} omega_{ab}(v_c)
    return GammaRep::eta(a, a) * sc(c, a, b);
  };
  std::array<IndexedForm, 4> out{IndexedForm(2), IndexedForm(2), IndexedForm(2), IndexedForm(2)};
  for (int a = 0; a < 4; ++a)
    for (int c = 0; c < 4; ++c)
      for (int d = c + 1; d < 4; ++d) {
        const double v = pf.ext[a][c][d] - omega_ud(a, d, c) + omega_ud(a, c, d);
        out[static_cast<std::size_t>(a)].set_antisym({c, d}, v);
      }
  return out;
}

inline std::array<IndexedForm, 4> torsion(const CoframeField& cf, const Vec4& x) {
  return torsion(point_frame(cf, x));
}

/// *d*theta_a = -dtheta^b(v_a, v_b), summed over b.
inline double star_d_star_theta(const PointFrame& pf, int a) {
  double acc = 0.0;
  for (int b = 0; b < 4; ++b) acc -= pf.ext[b][a][b];
  return acc;
}

inline double star_d_star_theta(const CoframeField& cf, const Vec4& x, int a) {
  if (a < 0 || a > 3) throw std::out_of_range("Lorentz index must be in 0..3");
  return star_d_star_theta(point_frame(cf, x), a);
}

/// Coordinate components W_{mu1..muk} = w_{a1..ak} theta^{a1}_{mu1} ... of a
/// form given on the orthonormal basis. Dense 4^k layout matching IndexedForm.
inline std::vector<double> coordinate_components(const Mat4d& theta, const IndexedForm& w) {
  const int k = w.degree();
  const std::size_t n = detail::pow4(k);
  std::vector<double> out(n, 0.0);
  for (std::size_t f = 0; f < n; ++f) {
    int mu[4];
    detail::decode4(f, k, mu);
    double acc = 0.0;
    const std::size_t nin = n;
    for (std::size_t g = 0; g < nin; ++g) {
      const double wv = w.raw()[g];
      if (wv == 0.0) continue;
      int a[4];
      detail::decode4(g, k, a);
      double prod = wv;
      for (int d = 0; d < k; ++d) prod *= theta(a[d], mu[d]);
      acc += prod;
    }
    out[f] = acc;
  }
  return out;
}

/// Exterior derivative, on the orthonormal basis, of the form field whose
/// orthonormal components are the constant array w. The position dependence
/// enters only through the coframe, so everything is analytic given dtheta.
inline IndexedForm d_constant_form(const PointFrame& pf, const IndexedForm& w) {
  const int k = w.degree();
  if (k >= 4) throw std::invalid_argument("cannot take d of a 4-form");

  // d_sigma W_{mu1..muk} by the product rule through theta.
  const std::size_t n = detail::pow4(k);
  std::vector<std::array<double, 4>> dW(n, std::array<double, 4>{});
  for (std::size_t f = 0; f < n; ++f) {
    int mu[4];
    detail::decode4(f, k, mu);
    for (int sigma = 0; sigma < 4; ++sigma) {
      double acc = 0.0;
      for (std::size_t g = 0; g < n; ++g) {
        const double wv = w.raw()[g];
        if (wv == 0.0) continue;
        int a[4];
        detail::decode4(g, k, a);
        for (int d = 0; d < k; ++d) {
          double prod = wv;
          for (int e = 0; e < k; ++e) {
            prod *= (e == d) ? pf.dtheta.d[static_cast<std::size_t>(sigma)](a[e], mu[e])
                             : pf.theta(a[e], mu[e]);
          }
          acc += prod;
        }
      }
      dW[f][static_cast<std::size_t>(sigma)] = acc;
    }
  }

  // (dW)_{nu0..nuk} = sum_j (-1)^j d_{nu_j} W_{..omit j..}, then contract
  // with frame vectors to land back on the orthonormal basis.
  IndexedForm out(k + 1);
  const std::size_t nout = detail::pow4(k + 1);
  std::vector<double> dcoord(nout, 0.0);
  for (std::size_t f = 0; f < nout; ++f) {
    int nu[5];
    detail::decode4(f, k + 1, nu);
    double acc = 0.0;
    for (int j = 0; j <= k; ++j) {
      std::size_t rest = 0;
      for (int e = 0; e <= k; ++e)
        if (e != j) rest = 4 * rest + static_cast<std::size_t>(nu[e]);
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      acc += sign * dW[rest][static_cast<std::size_t>(nu[j])];
    }
    dcoord[f] = acc;
  }
  for (std::size_t f = 0; f < nout; ++f) {
    int b[5];
    detail::decode4(f, k + 1, b);
    double acc = 0.0;
    for (std::size_t g = 0; g < nout; ++g) {
      const double dv = dcoord[g];
      if (dv == 0.0) continue;
      int nu[5];
      detail::decode4(g, k + 1, nu);
      double prod = dv;
      for (int d = 0; d <= k; ++d) prod *= pf.frame(b[d], nu[d]);
      acc += prod;
    }
    out.raw()[f] = acc;
  }
  return out;
}

}  // namespace spinframe

#endif  // SPINFRAME_GEOMETRY_HPP
