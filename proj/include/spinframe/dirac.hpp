// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// The curved-spacetime Dirac operator assembled from a coframe: the residual
// of the field equation in both formulations, the current and its divergence,
// the Lagrangean density, local Lorentz rotation of (coframe, spinor) pairs,
// and flat plane-wave fixtures.

#ifndef SPINFRAME_DIRAC_HPP
#define SPINFRAME_DIRAC_HPP

#include <cmath>
#include <utility>
#include <vector>

#include "spinframe/clifford.hpp"
#include "spinframe/errors.hpp"
#include "spinframe/fields.hpp"
#include "spinframe/forms.hpp"
#include "spinframe/geometry.hpp"

namespace spinframe {

struct DiracParameters {
  double mass = 1.0;    // m >= 0, natural units
  double charge = 1.0;  // e

  void validate() const {
    if (!std::isfinite(mass) || mass < 0.0)
      throw std::invalid_argument("mass must be finite and non-negative");
    if (!std::isfinite(charge)) throw std::invalid_argument("charge must be finite");
  }
};

/// Psi-bar = Psi^dagger gamma^0, as a row vector.
inline Vec4c bar(const GammaRep& rep, const Vec4c& psi) {
  Vec4c row{};
  const Mat4c& g0 = rep.gamma(0);
  for (int i = 0; i < 4; ++i) {
    cplx acc(0.0, 0.0);
    for (int k = 0; k < 4; ++k)
      acc += std::conj(psi[static_cast<std::size_t>(k)]) * g0(k, i);
    row[static_cast<std::size_t>(i)] = acc;
  }
  return row;
}

inline cplx row_dot(const Vec4c& row, const Vec4c& col) {
  cplx acc(0.0, 0.0);
  for (int i = 0; i < 4; ++i)
    acc += row[static_cast<std::size_t>(i)] * col[static_cast<std::size_t>(i)];
  return acc;
}

namespace detail {

/// dPsi(v_a) for all a: contract the coordinate derivative with the frame.
inline std::array<Vec4c, 4> frame_derivatives(const Mat4d& frame,
                                              const std::array<Vec4c, 4>& dpsi) {
  std::array<Vec4c, 4> out{};
  for (int a = 0; a < 4; ++a)
    for (int mu = 0; mu < 4; ++mu) {
      const cplx coeff(frame(a, mu), 0.0);
      out[static_cast<std::size_t>(a)] =
          out[static_cast<std::size_t>(a)] + coeff * dpsi[static_cast<std::size_t>(mu)];
    }
  return out;
}

inline Vec4 potential_on_frame(const Mat4d& frame, const Vec4& a_coord) {
  Vec4 out{};
  for (int a = 0; a < 4; ++a) {
    double acc = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      acc += frame(a, mu) * a_coord[static_cast<std::size_t>(mu)];
    out[static_cast<std::size_t>(a)] = acc;
  }
  return out;
}

}  // namespace detail

/// Left-hand side of the field equation
///   (gamma^a v_a + i e gamma^a A(v_a) - 1/4 gamma^a gamma^b gamma^c
///    omega_{bc}(v_a) + m) Psi
/// evaluated at x; vanishes exactly where Psi solves the equation.
inline Vec4c dirac_residual(const SpinorField& psi, const CoframeField& cf,
                            const PotentialField& A, const DiracParameters& p, const Vec4& x) {
  p.validate();
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const SpinConnection omega = spin_connection(pf);
  const Vec4c psival = psi.psi(x);
  const auto dframe = detail::frame_derivatives(pf.frame, psi.dpsi(x));
  const Vec4 a_frame = detail::potential_on_frame(pf.frame, A.a(x));

  Vec4c res{};
  const cplx ie(0.0, p.charge);
  for (int a = 0; a < 4; ++a) {
    const Mat4c& g = rep.gamma(a);
    res = res + g * dframe[static_cast<std::size_t>(a)];
    res = res + (ie * cplx(a_frame[static_cast<std::size_t>(a)])) * (g * psival);
  }

  Mat4c connection;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c) {
        // antisymmetric pair written out once with both orderings
        const double w = omega(a, b, c);
        if (w == 0.0) continue;
        connection += cplx(w) * (rep.triple(a, b, c) - rep.triple(a, c, b));
      }
  res = res - cplx(0.25) * (connection * psival);
  res = res + cplx(p.mass) * psival;
  return res;
}

/// The alternative formulation through the Christoffel symbols:
///   (gamma^a v_a^mu d_mu + i e gamma^a A(v_a)
///    - 1/2 gamma^a S^{bc} v_a^mu v_b^nu (theta_{c rho} Gamma^rho_{nu mu}
///                                        - d_mu theta_{c nu}) + m) Psi.
inline Vec4c dirac_residual_alt(const SpinorField& psi, const CoframeField& cf,
                                const PotentialField& A, const DiracParameters& p,
                                const Vec4& x) {
  p.validate();
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const SpinConnection omega = spin_connection_via_christoffel(pf);
  const Vec4c psival = psi.psi(x);
  const auto dframe = detail::frame_derivatives(pf.frame, psi.dpsi(x));
  const Vec4 a_frame = detail::potential_on_frame(pf.frame, A.a(x));

  Vec4c res{};
  const cplx ie(0.0, p.charge);
  for (int a = 0; a < 4; ++a) {
    const Mat4c& g = rep.gamma(a);
    res = res + g * dframe[static_cast<std::size_t>(a)];
    res = res + (ie * cplx(a_frame[static_cast<std::size_t>(a)])) * (g * psival);
  }

  Mat4c connection;  // gamma^a S^{bc} omega_{bc}(v_a), omega not symmetrized
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        const double w = omega(a, b, c);
        if (w == 0.0) continue;
        connection += (cplx(0.25) * w) * (rep.triple(a, b, c) - rep.triple(a, c, b));
      }
  res = res - cplx(0.5) * (connection * psival);
  res = res + cplx(p.mass) * psival;
  return res;
}

struct CurrentResult {
  Vec4 j;             // j^a = -e PsiBar gamma^a Psi, frame components
  IndexedForm form;   // j^a * hodge(theta_a), the degree-3 current form

  CurrentResult() : form(3) {}
};

/// The current j = -e PsiBar gamma^a Psi *theta_a. The frame components are
/// real because gamma^0 gamma^a is Hermitean; an imaginary part above 1e-10
/// signals a broken representation and throws.
inline CurrentResult current(const SpinorField& psi, const CoframeField& cf, double charge,
                             const Vec4& x) {
  const GammaRep& rep = GammaRep::standard();
  if (!cf.in_domain(x)) throw DomainError("point is outside the chart domain");
  const Vec4c psival = psi.psi(x);
  const Vec4c psibar = bar(rep, psival);

  CurrentResult out;
  for (int a = 0; a < 4; ++a) {
    const cplx bilinear = row_dot(psibar, rep.gamma(a) * psival);
    if (std::abs(bilinear.imag()) > 1e-10)
      throw ConsistencyError("PsiBar gamma^a Psi has a non-negligible imaginary part");
    out.j[static_cast<std::size_t>(a)] = -charge * bilinear.real();
  }
  for (int a = 0; a < 4; ++a)
    out.form += out.j[static_cast<std::size_t>(a)] *
                hodge_dual(IndexedForm::lowered_basis_coframe(a));
  return out;
}

struct DivergenceOptions {
  enum class Mode { Analytic, Fd };
  Mode mode = Mode::Analytic;
  double fd_step = 1e-5;
};

/// *dj = -v_a(j^a) - j^a dtheta^b(v_a, v_b); approximately zero wherever Psi
/// solves the field equation in a neighbourhood. The derivative of j^a comes
/// from the spinor derivative provider, or from central differences of the
/// current itself in Fd mode.
inline double current_divergence(const SpinorField& psi, const CoframeField& cf, double charge,
                                 const Vec4& x, const DivergenceOptions& opts = {}) {
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const CurrentResult cur = current(psi, cf, charge, x);

  Vec4 dj[4];  // dj[mu][a] = d_mu j^a
  if (opts.mode == DivergenceOptions::Mode::Analytic) {
    const Vec4c psival = psi.psi(x);
    const auto dpsi = psi.dpsi(x);
    const Vec4c psibar = bar(rep, psival);
    for (int mu = 0; mu < 4; ++mu) {
      const Vec4c dbar = bar(rep, dpsi[static_cast<std::size_t>(mu)]);
      for (int a = 0; a < 4; ++a) {
        const cplx v = row_dot(dbar, rep.gamma(a) * psival) +
                       row_dot(psibar, rep.gamma(a) * dpsi[static_cast<std::size_t>(mu)]);
        dj[mu][static_cast<std::size_t>(a)] = -charge * v.real();
      }
    }
  } else {
    for (int mu = 0; mu < 4; ++mu) {
      const auto m = static_cast<std::size_t>(mu);
      const double h = opts.fd_step * std::max(1.0, std::abs(x[m]));
      Vec4 xp = x, xm = x;
      xp[m] += h;
      xm[m] -= h;
      const CurrentResult jp = current(psi, cf, charge, xp);
      const CurrentResult jm = current(psi, cf, charge, xm);
      for (int a = 0; a < 4; ++a)
        dj[mu][static_cast<std::size_t>(a)] =
            (jp.j[static_cast<std::size_t>(a)] - jm.j[static_cast<std::size_t>(a)]) / (2.0 * h);
    }
  }

  double div = 0.0;
  for (int a = 0; a < 4; ++a) {
    double va_ja = 0.0;
    for (int mu = 0; mu < 4; ++mu) va_ja += pf.frame(a, mu) * dj[mu][static_cast<std::size_t>(a)];
    double dtheta_trace = 0.0;  // dtheta^b(v_a, v_b)
    for (int b = 0; b < 4; ++b) dtheta_trace += pf.ext[b][a][b];
    div += -va_ja - cur.j[static_cast<std::size_t>(a)] * dtheta_trace;
  }
  return div;
}

/// Faraday components on the orthonormal frame as a 2-form.
inline IndexedForm faraday_frame_form(const PointFrame& pf, const PotentialField& A,
                                      const Vec4& x) {
  const Mat4d f_coord = A.faraday(x);
  IndexedForm f(2);
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b) {
      double acc = 0.0;
      for (int nu = 0; nu < 4; ++nu)
        for (int mu = 0; mu < 4; ++mu) acc += f_coord(nu, mu) * pf.frame(a, nu) * pf.frame(b, mu);
      f.set_antisym({a, b}, acc);
    }
  return f;
}

/// Scalar coefficient of *1 in the Lagrangean density
///   -1/2 dA ^ *dA + i PsiBar (gamma^a dPsi(v_a) + i e gamma^a A(v_a) Psi
///                             - 1/4 gamma^a gamma^b gamma^c omega_{bc}(v_a) Psi
///                             + m Psi).
/// The Dirac bracket is exactly the residual, so the matter part is
/// i PsiBar (residual).
inline cplx lagrangean_density(const SpinorField& psi, const PotentialField& A,
                               const CoframeField& cf, const DiracParameters& p, const Vec4& x) {
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const IndexedForm f = faraday_frame_form(pf, A, x);
  const double em = -0.5 * wedge(f, hodge_dual(f))(0, 1, 2, 3);
  const Vec4c res = dirac_residual(psi, cf, A, p, x);
  const Vec4c psibar = bar(rep, psi.psi(x));
  return cplx(em, 0.0) + cplx(0.0, 1.0) * row_dot(psibar, res);
}

/// The equivalent real-part form of the same density.
inline double lagrangean_density_real(const SpinorField& psi, const PotentialField& A,
                                      const CoframeField& cf, const DiracParameters& p,
                                      const Vec4& x) {
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const IndexedForm f = faraday_frame_form(pf, A, x);
  const double em = -0.5 * wedge(f, hodge_dual(f))(0, 1, 2, 3);
  const Vec4c res = dirac_residual(psi, cf, A, p, x);
  const Vec4c psibar = bar(rep, psi.psi(x));
  return em + (cplx(0.0, 1.0) * row_dot(psibar, res)).real();
}

/// A pointwise Lorentz rotation given as an ordered list of single-plane
/// factors, each with its own smooth angle field; factors.front() acts first.
struct PlaneAngleField {
  int r;
  int s;
  ScalarField angle;
};

struct LocalLorentzField {
  std::vector<PlaneAngleField> factors;
};

inline Mat4d lorentz_at(const LocalLorentzField& field, const Vec4& x) {
  Mat4d lam = Mat4d::identity();
  for (const auto& f : field.factors)
    lam = single_plane_lorentz(f.r, f.s, f.angle.value(x)).m * lam;
  return lam;
}

namespace detail {

/// Unit-angle generator of the vector representation on the (r,s) plane.
inline Mat4d plane_generator(int r, int s) {
  Mat4d g;
  g(r, s) = GammaRep::eta(r, r);
  g(s, r) = -GammaRep::eta(s, s);
  return g;
}

}  // namespace detail

/// Applies theta_2 = Lambda(x) theta_1 and Psi_2 = Lambda_half(x) Psi_1. The
/// returned fields carry derivative providers composed by the product rule,
/// using the angle gradients (each factor commutes with its own derivative).
inline std::pair<CoframeField, SpinorField> rotate_coframe_and_spinor(
    const CoframeField& cf, const SpinorField& psi, const LocalLorentzField& field) {
  for (const auto& f : field.factors)
    if (f.r < 0 || f.s > 3 || f.r >= f.s)
      throw std::invalid_argument("plane indices must satisfy 0 <= r < s <= 3");
  const LocalLorentzField L = field;  // captured by value below

  auto theta2 = [cf, L](const Vec4& x) { return lorentz_at(L, x) * cf.theta(x); };

  auto dtheta2 = [cf, L](const Vec4& x) {
    const std::size_t n = L.factors.size();
    std::vector<Mat4d> fac(n), prefix(n + 1), suffix(n + 1);
    std::vector<Vec4> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
      fac[i] = single_plane_lorentz(L.factors[i].r, L.factors[i].s,
                                    L.factors[i].angle.value(x))
                   .m;
      grad[i] = L.factors[i].angle.gradient(x);
    }
    prefix[0] = Mat4d::identity();
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = fac[i] * prefix[i];
    suffix[n] = Mat4d::identity();
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * fac[i];
    // suffix[i+1] * fac[i] * prefix[i] = Lambda for every i
    const Mat4d lam = prefix[n];
    const Mat4d theta1 = cf.theta(x);
    const CoframeDerivative dtheta1 = cf.dtheta(x);

    CoframeDerivative out;
    for (int nu = 0; nu < 4; ++nu) {
      Mat4d dlam;
      for (std::size_t i = 0; i < n; ++i) {
        const Mat4d df =
            grad[i][static_cast<std::size_t>(nu)] *
            (fac[i] * detail::plane_generator(L.factors[i].r, L.factors[i].s));
        dlam += suffix[i + 1] * df * prefix[i];
      }
      out.d[static_cast<std::size_t>(nu)] =
          dlam * theta1 + lam * dtheta1.d[static_cast<std::size_t>(nu)];
    }
    return out;
  };

  auto domain = [cf](const Vec4& x) { return cf.in_domain(x); };
  CoframeField cf2(std::move(theta2), std::move(dtheta2), std::move(domain));

  auto lift_data = [L](const Vec4& x) {
    const GammaRep& rep = GammaRep::standard();
    const std::size_t n = L.factors.size();
    std::vector<Mat4c> fac(n);
    std::vector<Vec4> grad(n);
    for (std::size_t i = 0; i < n; ++i) {
      fac[i] = single_plane_spinor_lift(rep, L.factors[i].r, L.factors[i].s,
                                        L.factors[i].angle.value(x))
                   .half;
      grad[i] = L.factors[i].angle.gradient(x);
    }
    return std::pair(fac, grad);
  };

  auto psi2 = [psi, L](const Vec4& x) {
    const GammaRep& rep = GammaRep::standard();
    Mat4c lift = Mat4c::identity();
    for (const auto& f : L.factors)
      lift = single_plane_spinor_lift(rep, f.r, f.s, f.angle.value(x)).half * lift;
    return lift * psi.psi(x);
  };

  auto dpsi2 = [psi, L, lift_data](const Vec4& x) {
    const GammaRep& rep = GammaRep::standard();
    const auto [fac, grad] = lift_data(x);
    const std::size_t n = fac.size();
    std::vector<Mat4c> prefix(n + 1), suffix(n + 1);
    prefix[0] = Mat4c::identity();
    for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = fac[i] * prefix[i];
    suffix[n] = Mat4c::identity();
    for (std::size_t i = n; i-- > 0;) suffix[i] = suffix[i + 1] * fac[i];
    const Mat4c lift = prefix[n];

    const Vec4c psival = psi.psi(x);
    const auto dpsi1 = psi.dpsi(x);
    std::array<Vec4c, 4> out{};
    for (int mu = 0; mu < 4; ++mu) {
      Mat4c dlift;
      for (std::size_t i = 0; i < n; ++i) {
        const Mat4c half_gen =
            cplx(0.5) * rep.pair(L.factors[i].r, L.factors[i].s);
        dlift += cplx(grad[i][static_cast<std::size_t>(mu)]) * (suffix[i + 1] * (fac[i] * half_gen) * prefix[i]);
      }
      out[static_cast<std::size_t>(mu)] =
          dlift * psival + lift * dpsi1[static_cast<std::size_t>(mu)];
    }
    return out;
  };

  SpinorField psi_out(std::move(psi2), std::move(dpsi2));
  return {std::move(cf2), std::move(psi_out)};
}

/// Flat plane-wave solution fixture. momentum holds the raised components
/// (p^0, p^1, p^2, p^3); the mass-shell condition -(p^0)^2 + |p|^2 + m^2 = 0
/// with p^0 > 0 is required. The returned field is
///   Psi(x) = u exp(-i p_mu x^mu)   (p_0 = -p^0),
/// i.e. exp(+i m t) at rest, with u drawn from the null space of
/// (m - i gamma^a p_a), unit-normalized; branch selects a basis vector.
inline SpinorField flat_plane_wave(const DiracParameters& p, const Vec4& momentum, int branch) {
  p.validate();
  const GammaRep& rep = GammaRep::standard();
  const double p0 = momentum[0];
  const double shell = -p0 * p0 + momentum[1] * momentum[1] + momentum[2] * momentum[2] +
                       momentum[3] * momentum[3] + p.mass * p.mass;
  if (std::abs(shell) > 1e-10 * std::max(1.0, p0 * p0))
    throw OffShellError("momentum violates the mass-shell condition");
  if (!(p0 > 0.0)) throw OffShellError("p^0 must be positive");

  const Vec4 p_lower{-p0, momentum[1], momentum[2], momentum[3]};

  // (m - i gamma p)(m + i gamma p) = 0 on shell, so the columns of
  // P = m + i gamma^a p_a span the null space; orthonormalize them in order.
  Mat4c proj = cplx(p.mass) * Mat4c::identity();
  for (int a = 0; a < 4; ++a)
    proj += cplx(0.0, p_lower[static_cast<std::size_t>(a)]) * rep.gamma(a);

  std::vector<Vec4c> basis;
  double scale = 0.0;
  for (int c = 0; c < 4; ++c) {
    double colnorm = 0.0;
    for (int r = 0; r < 4; ++r) colnorm += std::norm(proj(r, c));
    scale = std::max(scale, std::sqrt(colnorm));
  }
  if (scale == 0.0) throw OffShellError("projector vanished; empty null space");
  for (int c = 0; c < 4 && static_cast<int>(basis.size()) < 2; ++c) {
    Vec4c col{proj(0, c), proj(1, c), proj(2, c), proj(3, c)};
    for (const Vec4c& b : basis) col = col - cdot(b, col) * b;
    const double n = norm2(col);
    if (n > 1e-8 * scale) basis.push_back((cplx(1.0 / n)) * col);
  }
  if (branch < 0 || branch >= static_cast<int>(basis.size()))
    throw OffShellError("requested branch is outside the null space");
  const Vec4c u = basis[static_cast<std::size_t>(branch)];

  auto phase = [p_lower](const Vec4& x) {
    double px = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      px += p_lower[static_cast<std::size_t>(mu)] * x[static_cast<std::size_t>(mu)];
    return std::exp(cplx(0.0, -px));
  };
  auto psi = [u, phase](const Vec4& x) { return phase(x) * u; };
  auto dpsi = [u, phase, p_lower](const Vec4& x) {
    const cplx ph = phase(x);
    std::array<Vec4c, 4> d{};
    for (int mu = 0; mu < 4; ++mu)
      d[static_cast<std::size_t>(mu)] =
          (cplx(0.0, -p_lower[static_cast<std::size_t>(mu)]) * ph) * u;
    return d;
  };
  return SpinorField(std::move(psi), std::move(dpsi));
}

/// Multiplies a field by the plane phase exp(-i q_mu x^mu). With q = e A for
/// a constant potential A this turns free plane waves into solutions of the
/// interacting flat equation, which gives on-shell fixtures with A != 0.
inline SpinorField phase_shifted(const SpinorField& base, const Vec4& q_lower) {
  auto phase = [q_lower](const Vec4& x) {
    double qx = 0.0;
    for (int mu = 0; mu < 4; ++mu)
      qx += q_lower[static_cast<std::size_t>(mu)] * x[static_cast<std::size_t>(mu)];
    return std::exp(cplx(0.0, -qx));
  };
  auto psi = [base, phase](const Vec4& x) { return phase(x) * base.psi(x); };
  auto dpsi = [base, phase, q_lower](const Vec4& x) {
    const cplx ph = phase(x);
    const Vec4c v = base.psi(x);
    auto d = base.dpsi(x);
    for (int mu = 0; mu < 4; ++mu) {
      const auto m = static_cast<std::size_t>(mu);
      d[m] = ph * d[m] + (cplx(0.0, -q_lower[m]) * ph) * v;
    }
    return d;
  };
  return SpinorField(std::move(psi), std::move(dpsi));
}

}  // namespace spinframe

#endif  // SPINFRAME_DIRAC_HPP
