// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Stress-energy of the Maxwell + Dirac system from coframe variation: the
// 3-forms T^m, the tensor T^{mn} = -*(theta^n ^ T^m), the flat-spacetime
// closed form, and the antisymmetric part that witnesses the asymmetry of
// the result.

#ifndef SPINFRAME_TELEPARALLEL_HPP
#define SPINFRAME_TELEPARALLEL_HPP

#include <array>
#include <cmath>

#include "spinframe/dirac.hpp"
#include "spinframe/errors.hpp"
#include "spinframe/fields.hpp"
#include "spinframe/forms.hpp"
#include "spinframe/geometry.hpp"

namespace spinframe {

/// One degree-3 form per Lorentz index m, on the orthonormal basis.
struct StressEnergyForms {
  std::array<IndexedForm, 4> T{IndexedForm(3), IndexedForm(3), IndexedForm(3), IndexedForm(3)};
};

using StressEnergyTensor = Mat4d;

/// Evaluates every term of the coframe-variation stress-energy 3-form
///   T^m = ( F^{ma} F^n_a - 1/4 eta^{mn} F^2
///           - e (eta^{mn} PsiBar gamma^a Psi A(v_a) - PsiBar gamma^n Psi A(v^m))
///           + Re(i eta^{mn} PsiBar gamma^a dPsi(v_a) - i PsiBar gamma^n dPsi(v^m))
///           + Re(i/4 PsiBar (gamma^f gamma^m gamma^n - gamma^n gamma^m gamma^f) dPsi(v_f))
///           + i m eta^{mn} PsiBar Psi ) *theta_n
///         + i/8 PsiBar gamma^c gamma^m gamma^b Psi d*(theta_b ^ theta_c)
///         + i/8 PsiBar gamma^c gamma^a gamma^b Psi dtheta_a ^ eps_{bcde} eta^{dm} theta^e.
/// The terms without an explicit Re are real after the antisymmetric (b,c)
/// sums; a residual imaginary part above 1e-10 throws.
inline StressEnergyForms stress_energy_forms(const SpinorField& psi, const PotentialField& A,
                                             const CoframeField& cf, const DiracParameters& p,
                                             const Vec4& x) {
  p.validate();
  const GammaRep& rep = GammaRep::standard();
  const PointFrame pf = point_frame(cf, x);
  const double e = p.charge;

  const Vec4c psival = psi.psi(x);
  const Vec4c psibar = bar(rep, psival);
  const auto dframe = detail::frame_derivatives(pf.frame, psi.dpsi(x));
  const Vec4 a_frame = detail::potential_on_frame(pf.frame, A.a(x));

  const IndexedForm faraday = faraday_frame_form(pf, A, x);
  auto F_low = [&faraday](int a, int b) { return faraday(a, b); };
  auto eta = [](int a) { return GammaRep::eta(a, a); };

  double f2 = 0.0;  // F^{ab} F_{ab}
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) f2 += eta(a) * eta(b) * F_low(a, b) * F_low(a, b);

  // bilinears reused across terms
  std::array<cplx, 4> bil_gamma;  // PsiBar gamma^a Psi
  for (int a = 0; a < 4; ++a)
    bil_gamma[static_cast<std::size_t>(a)] = row_dot(psibar, rep.gamma(a) * psival);
  cplx trace_kinetic(0.0, 0.0);  // PsiBar gamma^a dPsi(v_a)
  for (int a = 0; a < 4; ++a)
    trace_kinetic += row_dot(psibar, rep.gamma(a) * dframe[static_cast<std::size_t>(a)]);
  cplx trace_a(0.0, 0.0);  // PsiBar gamma^a Psi A(v_a)
  for (int a = 0; a < 4; ++a)
    trace_a += bil_gamma[static_cast<std::size_t>(a)] * a_frame[static_cast<std::size_t>(a)];
  const cplx psibar_psi = row_dot(psibar, psival);

  // precomputed hodges of the basis covectors
  std::array<IndexedForm, 4> star_theta{IndexedForm(3), IndexedForm(3), IndexedForm(3),
                                        IndexedForm(3)};
  for (int n = 0; n < 4; ++n)
    star_theta[static_cast<std::size_t>(n)] = hodge_dual(IndexedForm::lowered_basis_coframe(n));

  // d*(theta_b ^ theta_c) for b < c (antisymmetric in (b,c))
  IndexedForm d_star_pair[4][4] = {
      {IndexedForm(3), IndexedForm(3), IndexedForm(3), IndexedForm(3)},
      {IndexedForm(3), IndexedForm(3), IndexedForm(3), IndexedForm(3)},
      {IndexedForm(3), IndexedForm(3), IndexedForm(3), IndexedForm(3)},
      {IndexedForm(3), IndexedForm(3), IndexedForm(3), IndexedForm(3)}};
  for (int b = 0; b < 4; ++b)
    for (int c = b + 1; c < 4; ++c) {
      const IndexedForm pair_form =
          wedge(IndexedForm::lowered_basis_coframe(b), IndexedForm::lowered_basis_coframe(c));
      d_star_pair[b][c] = d_constant_form(pf, hodge_dual(pair_form));
      d_star_pair[c][b] = -1.0 * d_star_pair[b][c];
    }

  // dtheta_a as lowered 2-forms
  std::array<IndexedForm, 4> dtheta_low{IndexedForm(2), IndexedForm(2), IndexedForm(2),
                                        IndexedForm(2)};
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = b + 1; c < 4; ++c)
        dtheta_low[static_cast<std::size_t>(a)].set_antisym({b, c}, eta(a) * pf.ext[a][b][c]);

  StressEnergyForms out;
  for (int m = 0; m < 4; ++m) {
    IndexedForm real_acc(3);
    IndexedForm imag_acc(3);
    auto add = [&real_acc, &imag_acc](const cplx& s, const IndexedForm& f) {
      if (s.real() != 0.0) real_acc += s.real() * f;
      if (s.imag() != 0.0) imag_acc += s.imag() * f;
    };

    for (int n = 0; n < 4; ++n) {
      cplx coeff(0.0, 0.0);

      // Maxwell part
      double maxwell = 0.0;
      for (int a = 0; a < 4; ++a)
        maxwell += (eta(m) * eta(a) * F_low(m, a)) * (eta(n) * F_low(n, a));
      if (m == n) maxwell -= 0.25 * eta(m) * f2;
      coeff += cplx(maxwell, 0.0);

      // interaction
      cplx inter(0.0, 0.0);
      if (m == n) inter += eta(m) * trace_a;
      inter -= bil_gamma[static_cast<std::size_t>(n)] * (eta(m) * a_frame[static_cast<std::size_t>(m)]);
      coeff += -e * inter;

      // kinetic, real part taken as written
      cplx kin(0.0, 0.0);
      if (m == n) kin += cplx(0.0, 1.0) * eta(m) * trace_kinetic;
      kin -= cplx(0.0, 1.0) * eta(m) *
             row_dot(psibar, rep.gamma(n) * dframe[static_cast<std::size_t>(m)]);
      coeff += cplx(kin.real(), 0.0);

      // antisymmetrized-triple kinetic term, real part as written
      cplx trip(0.0, 0.0);
      for (int f = 0; f < 4; ++f) {
        const Mat4c gmat = rep.triple(f, m, n) - rep.triple(n, m, f);
        trip += cplx(0.0, 0.25) * row_dot(psibar, gmat * dframe[static_cast<std::size_t>(f)]);
      }
      coeff += cplx(trip.real(), 0.0);

      // mass term
      if (m == n) coeff += cplx(0.0, p.mass) * eta(m) * psibar_psi;

      add(coeff, star_theta[static_cast<std::size_t>(n)]);
    }

    // i/8 PsiBar gamma^c gamma^m gamma^b Psi d*(theta_b ^ theta_c)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        if (b == c) continue;
        const cplx s = cplx(0.0, 0.125) * row_dot(psibar, rep.triple(c, m, b) * psival);
        add(s, d_star_pair[b][c]);
      }

    // i/8 PsiBar gamma^c gamma^a gamma^b Psi dtheta_a ^ eps_{bcde} eta^{dm} theta^e
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c) {
          if (b == c) continue;
          IndexedForm one_form(1);
          for (int ee = 0; ee < 4; ++ee) {
            const double v = eta(m) * levi_civita(b, c, m, ee);
            if (v != 0.0) one_form.set({ee}, v);
          }
          if (one_form.max_abs() == 0.0) continue;
          const cplx s = cplx(0.0, 0.125) * row_dot(psibar, rep.triple(c, a, b) * psival);
          add(s, wedge(dtheta_low[static_cast<std::size_t>(a)], one_form));
        }

    const double scale = std::max(1.0, real_acc.max_abs());
    if (imag_acc.max_abs() > 1e-10 * scale)
      throw ConsistencyError("stress-energy 3-form has a non-negligible imaginary part");
    out.T[static_cast<std::size_t>(m)] = real_acc;
  }
  return out;
}

/// T^{mn} = -*(theta^n ^ T^m), contracted with the paper's Hodge convention.
inline StressEnergyTensor stress_energy_tensor(const StressEnergyForms& forms) {
  StressEnergyTensor t;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      const IndexedForm top = wedge(IndexedForm::basis_coframe(n),
                                    forms.T[static_cast<std::size_t>(m)]);
      t(m, n) = -hodge_dual(top).at({});
    }
  return t;
}

/// Flat-spacetime closed form, valid on shell:
///   T^{mn} = F^{ma} F^n_a - 1/4 eta^{mn} F^2 - 1/2 (j^m A^n + j^n A^m)
///          + Re(-i/2 PsiBar (gamma^m d^n + gamma^n d^m) Psi)
///          + Re(PsiBar (e/12 [gamma^m, gamma^n, gamma^a] A_a
///                       - i m / 4 [gamma^m, gamma^n]) Psi).
/// The last line is the explicitly asymmetric remainder. Off-shell input
/// (flat Dirac residual above 1e-6) throws, since the simplification uses
/// the equation of motion.
inline StressEnergyTensor flat_stress_energy(const SpinorField& psi, const PotentialField& A,
                                             const DiracParameters& p, const Vec4& x) {
  p.validate();
  const GammaRep& rep = GammaRep::standard();
  const CoframeField flat = CoframeField::flat();
  if (max_abs(dirac_residual(psi, flat, A, p, x)) > 1e-6)
    throw OffShellError("flat_stress_energy requires an on-shell state at x");

  const Vec4c psival = psi.psi(x);
  const Vec4c psibar = bar(rep, psival);
  const auto dpsi = psi.dpsi(x);
  const Vec4 a_val = A.a(x);
  const Mat4d faraday = A.faraday(x);
  auto eta = [](int a) { return GammaRep::eta(a, a); };

  Vec4 j{};
  for (int a = 0; a < 4; ++a) {
    const cplx bilinear = row_dot(psibar, rep.gamma(a) * psival);
    if (std::abs(bilinear.imag()) > 1e-10)
      throw ConsistencyError("PsiBar gamma^a Psi has a non-negligible imaginary part");
    j[static_cast<std::size_t>(a)] = -p.charge * bilinear.real();
  }

  double f2 = 0.0;
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) f2 += eta(a) * eta(b) * faraday(a, b) * faraday(a, b);

  StressEnergyTensor t;
  for (int m = 0; m < 4; ++m)
    for (int n = 0; n < 4; ++n) {
      double v = 0.0;
      for (int a = 0; a < 4; ++a)
        v += (eta(m) * eta(a) * faraday(m, a)) * (eta(n) * faraday(n, a));
      if (m == n) v -= 0.25 * eta(m) * f2;

      const double am = eta(m) * a_val[static_cast<std::size_t>(m)];
      const double an = eta(n) * a_val[static_cast<std::size_t>(n)];
      v -= 0.5 * (j[static_cast<std::size_t>(m)] * an + j[static_cast<std::size_t>(n)] * am);

      const Vec4c dm = cplx(eta(m)) * dpsi[static_cast<std::size_t>(m)];
      const Vec4c dn = cplx(eta(n)) * dpsi[static_cast<std::size_t>(n)];
      const cplx kin = row_dot(psibar, rep.gamma(m) * dn) + row_dot(psibar, rep.gamma(n) * dm);
      v += (cplx(0.0, -0.5) * kin).real();

      Mat4c rem;
      for (int a = 0; a < 4; ++a)
        rem += cplx(p.charge * a_val[static_cast<std::size_t>(a)] / 12.0) *
               antisym_triple(rep, m, n, a);
      rem += cplx(0.0, -0.25 * p.mass) * (rep.pair(m, n) - rep.pair(n, m));
      v += row_dot(psibar, rem * psival).real();

      t(m, n) = v;
    }
  return t;
}

/// (T - T^t) / 2.
inline Mat4d antisymmetric_part(const StressEnergyTensor& t) {
  return 0.5 * (t - t.transpose());
}

}  // namespace spinframe

#endif  // SPINFRAME_TELEPARALLEL_HPP
