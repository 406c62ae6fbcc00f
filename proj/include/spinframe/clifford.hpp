// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Complex 4x4 algebra for the gamma-matrix representation used throughout
// this library: the anticommutation relations, spin generators, single-plane
// Lorentz matrices and their spinor lifts, the Euler-style factorization of a
// proper orthochronous Lorentz matrix, and the antisymmetrized triple product.

#ifndef SPINFRAME_CLIFFORD_HPP
#define SPINFRAME_CLIFFORD_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinframe/linalg.hpp"

namespace spinframe {

/// The fixed gamma-matrix representation with gamma^0 = diag(i,i,-i,-i) and
/// gamma^j built from the Pauli matrices on the off-diagonal blocks, together
/// with eta = diag(-1,+1,+1,+1). Satisfies
///   gamma^a gamma^b + gamma^b gamma^a = 2 eta^{ab} I          (exactly)
///   (gamma^0)^dagger = -gamma^0,  (gamma^j)^dagger = gamma^j
///   gamma^{a dagger} gamma^0 = -gamma^0 gamma^a.
/// Pair and triple products are cached; all entries are small Gaussian
/// integers so products and sums are exact in double precision.
class GammaRep {
 public:
  static GammaRep build() { return GammaRep(); }

  /// Shared immutable instance.
  static const GammaRep& standard() {
    static const GammaRep rep;
    return rep;
  }

  const Mat4c& gamma(int a) const {
    check_index(a);
    return gamma_[static_cast<std::size_t>(a)];
  }

  /// Minkowski metric entry, diag(-1,+1,+1,+1). Same values with indices up
  /// or down.
  static double eta(int a, int b) {
    if (a != b) return 0.0;
    return a == 0 ? -1.0 : 1.0;
  }

  static Mat4d eta_matrix() {
    Mat4d e;
    for (int a = 0; a < 4; ++a) e(a, a) = eta(a, a);
    return e;
  }

  /// Cached gamma^a gamma^b.
  const Mat4c& pair(int a, int b) const {
    check_index(a);
    check_index(b);
    return pair_[static_cast<std::size_t>(4 * a + b)];
  }

  /// Cached gamma^a gamma^b gamma^c.
  const Mat4c& triple(int a, int b, int c) const {
    check_index(a);
    check_index(b);
    check_index(c);
    return triple_[static_cast<std::size_t>(16 * a + 4 * b + c)];
  }

 private:
  GammaRep() {
    const cplx i(0.0, 1.0);
    Mat4c g0;
    g0(0, 0) = i;
    g0(1, 1) = i;
    g0(2, 2) = -i;
    g0(3, 3) = -i;

    // Pauli blocks on the off-diagonal: gamma^j = [[0, sigma^j],[sigma^j, 0]].
    const cplx s1[2][2] = {{0.0, 1.0}, {1.0, 0.0}};
    const cplx s2[2][2] = {{0.0, -i}, {i, 0.0}};
    const cplx s3[2][2] = {{1.0, 0.0}, {0.0, -1.0}};
    auto embed = [](const cplx s[2][2]) {
      Mat4c g;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          g(r, 2 + c) = s[r][c];
          g(2 + r, c) = s[r][c];
        }
      return g;
    };

    gamma_[0] = g0;
    gamma_[1] = embed(s1);
    gamma_[2] = embed(s2);
    gamma_[3] = embed(s3);

    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        pair_[static_cast<std::size_t>(4 * a + b)] =
            gamma_[static_cast<std::size_t>(a)] * gamma_[static_cast<std::size_t>(b)];
    for (int a = 0; a < 4; ++a)
      for (int b = 0; b < 4; ++b)
        for (int c = 0; c < 4; ++c)
          triple_[static_cast<std::size_t>(16 * a + 4 * b + c)] =
              pair_[static_cast<std::size_t>(4 * a + b)] * gamma_[static_cast<std::size_t>(c)];
  }

  static void check_index(int a) {
    if (a < 0 || a > 3) throw std::out_of_range("Lorentz index must be in 0..3");
  }

  std::array<Mat4c, 4> gamma_;
  std::array<Mat4c, 16> pair_;
  std::array<Mat4c, 64> triple_;
};

/// S^{ab} = (1/4)[gamma^a, gamma^b].
inline Mat4c spin_generator(const GammaRep& rep, int a, int b) {
  return cplx(0.25) * (rep.pair(a, b) - rep.pair(b, a));
}

/// Proper orthochronous Lorentz matrix acting on Lorentz (frame) indices.
struct LorentzMatrix {
  Mat4d m;

  static constexpr double kOrthoTol = 1e-12;

  /// Validates Lambda^T eta Lambda = eta (to tol), det = +1, Lambda^0_0 >= 1.
  static LorentzMatrix checked(const Mat4d& lam, double tol = kOrthoTol) {
    const Mat4d eta = GammaRep::eta_matrix();
    const Mat4d residual = lam.transpose() * eta * lam - eta;
    const double scale = std::max(1.0, inf_norm(lam));
    if (max_abs(residual) > tol * scale * scale)
      throw std::invalid_argument("matrix is not in SO(3,1) to tolerance");
    if (det(lam) < 0.0) throw std::invalid_argument("Lorentz matrix is improper (det < 0)");
    if (lam(0, 0) < 1.0 - 1e-9)
      throw std::invalid_argument("Lorentz matrix is not orthochronous");
    return LorentzMatrix{lam};
  }

  friend LorentzMatrix operator*(const LorentzMatrix& a, const LorentzMatrix& b) {
    return LorentzMatrix{a.m * b.m};
  }

  double operator()(int r, int c) const { return m(r, c); }
};

namespace detail {
inline void check_plane(int r, int s) {
  if (r < 0 || s > 3 || r >= s)
    throw std::invalid_argument("plane indices must satisfy 0 <= r < s <= 3");
}
}  // namespace detail

/// exp of the single-plane generator k^c_d I_c^d with k_{rs} = angle:
/// a rotation block for spatial (r,s), a boost block for r = 0. The boost
/// block carries -sinh on the off-diagonal entries, which is what the raised
/// generator eta^{rr} k_{rs} produces.
inline LorentzMatrix single_plane_lorentz(int r, int s, double angle) {
  detail::check_plane(r, s);
  if (!std::isfinite(angle)) throw std::invalid_argument("angle must be finite");
  Mat4d lam = Mat4d::identity();
  if (r == 0) {
    const double ch = std::cosh(angle), sh = std::sinh(angle);
    lam(0, 0) = ch;
    lam(s, s) = ch;
    lam(0, s) = -sh;
    lam(s, 0) = -sh;
  } else {
    const double co = std::cos(angle), si = std::sin(angle);
    lam(r, r) = co;
    lam(s, s) = co;
    lam(r, s) = si;
    lam(s, r) = -si;
  }
  return LorentzMatrix{lam};
}

/// Spinor-space image of a Lorentz matrix together with its inverse;
/// satisfies half * inverse = I and half^dagger gamma^0 = gamma^0 * inverse.
struct SpinHalfTransform {
  Mat4c half;
  Mat4c inverse;
};

/// exp((angle/2) gamma^r gamma^s) in closed form: trigonometric when
/// (gamma^r gamma^s)^2 = -I (spatial pair), hyperbolic when it is +I (boost
/// pair). The inverse is the same expression at -angle.
inline SpinHalfTransform single_plane_spinor_lift(const GammaRep& rep, int r, int s,
                                                  double angle) {
  detail::check_plane(r, s);
  const Mat4c& g = rep.pair(r, s);
  const Mat4c I = Mat4c::identity();
  double c, v;
  if (r == 0) {
    c = std::cosh(angle / 2.0);
    v = std::sinh(angle / 2.0);
  } else {
    c = std::cos(angle / 2.0);
    v = std::sin(angle / 2.0);
  }
  return SpinHalfTransform{cplx(c) * I + cplx(v) * g, cplx(c) * I - cplx(v) * g};
}

struct PlaneAngle {
  int r;
  int s;
  double angle;
};

/// Ordered single-plane factors; factors.front() acts first, so the matrix
/// product runs back-to-front: Lambda = f[n-1] * ... * f[0].
struct EulerFactorization {
  std::vector<PlaneAngle> factors;
};

inline LorentzMatrix compose(const EulerFactorization& f) {
  Mat4d lam = Mat4d::identity();
  for (const PlaneAngle& p : f.factors)
    lam = single_plane_lorentz(p.r, p.s, p.angle).m * lam;
  return LorentzMatrix{lam};
}

/// Factors a proper orthochronous Lorentz matrix into six single-plane
/// factors in the fixed order (applied first to last)
///   boost-z (0,3), boost-y (0,2), boost-x (0,1), rot (1,2), rot (1,3), rot (2,3).
/// The boost angles come from eliminating row 0, the rotation angles from a
/// Givens-style sweep of the residual spatial block. Rotation angles land in
/// (-pi, pi] (the middle one in [-pi/2, pi/2]); boosts are unbounded.
inline EulerFactorization euler_decompose(const LorentzMatrix& lam_in) {
  const LorentzMatrix lam = LorentzMatrix::checked(lam_in.m);

  // Row 0 of B01(x1) B02(x2) B03(x3) is
  //   (ch1 ch2 ch3, -sh1, -ch1 sh2, -ch1 ch2 sh3).
  const double t1 = lam(0, 1), t2 = lam(0, 2), t3 = lam(0, 3);
  const double chi1 = -std::asinh(t1);
  const double ch1 = std::cosh(chi1);
  const double chi2 = -std::asinh(t2 / ch1);
  const double ch2 = std::cosh(chi2);
  const double chi3 = -std::asinh(t3 / (ch1 * ch2));

  Mat4d rot = lam.m;
  rot = rot * single_plane_lorentz(0, 3, -chi3).m;
  rot = rot * single_plane_lorentz(0, 2, -chi2).m;
  rot = rot * single_plane_lorentz(0, 1, -chi1).m;

  // rot is now 1 (+) SO(3); its row 1 reads
  //   (cos k13 cos k12, cos k13 sin k12, sin k13).
  const double sink13 = std::clamp(rot(1, 3), -1.0, 1.0);
  const double k13 = std::asin(sink13);
  const double k12 = std::atan2(rot(1, 2), rot(1, 1));

  Mat4d rest = rot;
  rest = rest * single_plane_lorentz(1, 2, -k12).m;
  rest = rest * single_plane_lorentz(1, 3, -k13).m;
  const double k23 = std::atan2(rest(2, 3), rest(2, 2));

  EulerFactorization out;
  out.factors = {{0, 3, chi3}, {0, 2, chi2}, {0, 1, chi1},
                 {1, 2, k12},  {1, 3, k13},  {2, 3, k23}};
  return out;
}

/// Spinor lift of an arbitrary proper orthochronous Lorentz matrix: the
/// product of the single-plane lifts in factorization order. Unique up to a
/// global sign; satisfies half^{-1} gamma^a half = Lambda^a_b gamma^b.
inline SpinHalfTransform spinor_lift(const GammaRep& rep, const LorentzMatrix& lam) {
  const EulerFactorization f = euler_decompose(lam);
  Mat4c half = Mat4c::identity();
  Mat4c inv = Mat4c::identity();
  for (const PlaneAngle& p : f.factors) {
    const SpinHalfTransform l = single_plane_spinor_lift(rep, p.r, p.s, p.angle);
    half = l.half * half;
    inv = inv * l.inverse;
  }
  return SpinHalfTransform{half, inv};
}

/// max_a || half^{-1} gamma^a half - Lambda^a_b gamma^b ||_max.
inline double vector_conjugation_residual(const GammaRep& rep, const LorentzMatrix& lam,
                                          const SpinHalfTransform& lift) {
  double worst = 0.0;
  for (int a = 0; a < 4; ++a) {
    Mat4c rhs;
    for (int b = 0; b < 4; ++b) rhs += cplx(lam(a, b)) * rep.gamma(b);
    const Mat4c lhs = lift.inverse * rep.gamma(a) * lift.half;
    worst = std::max(worst, max_abs(lhs - rhs));
  }
  return worst;
}

/// Fully antisymmetrized triple product: the signed sum over all six
/// orderings of gamma^m gamma^n gamma^a. Vanishes when any two indices
/// coincide; equals 6 gamma^m gamma^n gamma^a for pairwise distinct indices.
inline Mat4c antisym_triple(const GammaRep& rep, int m, int n, int a) {
  const int idx[3] = {m, n, a};
  static constexpr int perm[6][3] = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1},
                                     {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
  static constexpr double sgn[6] = {1, 1, 1, -1, -1, -1};
  Mat4c out;
  for (int p = 0; p < 6; ++p)
    out += cplx(sgn[p]) * rep.triple(idx[perm[p][0]], idx[perm[p][1]], idx[perm[p][2]]);
  return out;
}

}  // namespace spinframe

#endif  // SPINFRAME_CLIFFORD_HPP
