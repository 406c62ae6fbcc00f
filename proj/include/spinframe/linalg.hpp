// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPINFRAME_LINALG_HPP
#define SPINFRAME_LINALG_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <stdexcept>

namespace spinframe {

using cplx = std::complex<double>;
using Vec4 = std::array<double, 4>;
using Vec4c = std::array<cplx, 4>;

/// Dense 4x4 matrix, row-major. T is double or std::complex<double>.
template <typename T>
struct Matrix4 {
  std::array<T, 16> m{};

  T& operator()(int r, int c) { return m[static_cast<std::size_t>(4 * r + c)]; }
  const T& operator()(int r, int c) const {
    return m[static_cast<std::size_t>(4 * r + c)];
  }

  static Matrix4 zero() { return Matrix4{}; }
  static Matrix4 identity() {
    Matrix4 I;
    for (int i = 0; i < 4; ++i) I(i, i) = T(1);
    return I;
  }

  Matrix4 transpose() const {
    Matrix4 t;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  friend Matrix4 operator+(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = a.m[i] + b.m[i];
    return out;
  }
  friend Matrix4 operator-(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = a.m[i] - b.m[i];
    return out;
  }
  friend Matrix4 operator-(const Matrix4& a) {
    Matrix4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = -a.m[i];
    return out;
  }
  friend Matrix4 operator*(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c) {
        T acc(0);
        for (int k = 0; k < 4; ++k) acc += a(r, k) * b(k, c);
        out(r, c) = acc;
      }
    return out;
  }
  friend Matrix4 operator*(const T& s, const Matrix4& a) {
    Matrix4 out;
    for (std::size_t i = 0; i < 16; ++i) out.m[i] = s * a.m[i];
    return out;
  }
  friend Matrix4 operator*(const Matrix4& a, const T& s) { return s * a; }

  Matrix4& operator+=(const Matrix4& b) {
    for (std::size_t i = 0; i < 16; ++i) m[i] += b.m[i];
    return *this;
  }
  Matrix4& operator-=(const Matrix4& b) {
    for (std::size_t i = 0; i < 16; ++i) m[i] -= b.m[i];
    return *this;
  }

  std::array<T, 4> operator*(const std::array<T, 4>& v) const {
    std::array<T, 4> out{};
    for (int r = 0; r < 4; ++r) {
      T acc(0);
      for (int c = 0; c < 4; ++c) acc += (*this)(r, c) * v[static_cast<std::size_t>(c)];
      out[static_cast<std::size_t>(r)] = acc;
    }
    return out;
  }
};

using Mat4d = Matrix4<double>;
using Mat4c = Matrix4<cplx>;

inline Mat4c dagger(const Mat4c& a) {
  Mat4c out;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) out(r, c) = std::conj(a(c, r));
  return out;
}

inline Mat4c to_complex(const Mat4d& a) {
  Mat4c out;
  for (std::size_t i = 0; i < 16; ++i) out.m[i] = cplx(a.m[i], 0.0);
  return out;
}

template <typename T>
double inf_norm(const Matrix4<T>& a) {
  double best = 0.0;
  for (int r = 0; r < 4; ++r) {
    double row = 0.0;
    for (int c = 0; c < 4; ++c) row += std::abs(a(r, c));
    best = std::max(best, row);
  }
  return best;
}

template <typename T>
double max_abs(const Matrix4<T>& a) {
  double best = 0.0;
  for (const auto& v : a.m) best = std::max(best, std::abs(v));
  return best;
}

inline double max_abs(const Vec4& v) {
  double best = 0.0;
  for (double x : v) best = std::max(best, std::abs(x));
  return best;
}

inline double max_abs(const Vec4c& v) {
  double best = 0.0;
  for (const cplx& x : v) best = std::max(best, std::abs(x));
  return best;
}

/// Gauss-Jordan inverse with partial pivoting. Throws std::runtime_error on a
/// pivot below `pivot_tol` times the largest input entry.
template <typename T>
Matrix4<T> inverse(const Matrix4<T>& a, double pivot_tol = 1e-14) {
  Matrix4<T> work = a;
  Matrix4<T> inv = Matrix4<T>::identity();
  const double scale = std::max(max_abs(a), 1e-300);
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    double best = std::abs(work(col, col));
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(work(r, col)) > best) {
        best = std::abs(work(r, col));
        pivot = r;
      }
    }
    if (best <= pivot_tol * scale) throw std::runtime_error("matrix is numerically singular");
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    const T d = work(col, col);
    for (int c = 0; c < 4; ++c) {
      work(col, c) /= d;
      inv(col, c) /= d;
    }
    for (int r = 0; r < 4; ++r) {
      if (r == col) continue;
      const T f = work(r, col);
      if (f == T(0)) continue;
      for (int c = 0; c < 4; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

template <typename T>
T det(const Matrix4<T>& a) {
  // LU with partial pivoting.
  Matrix4<T> w = a;
  T d(1);
  for (int col = 0; col < 4; ++col) {
    int pivot = col;
    double best = std::abs(w(col, col));
    for (int r = col + 1; r < 4; ++r) {
      if (std::abs(w(r, col)) > best) {
        best = std::abs(w(r, col));
        pivot = r;
      }
    }
    if (best == 0.0) return T(0);
    if (pivot != col) {
      for (int c = 0; c < 4; ++c) std::swap(w(pivot, c), w(col, c));
      d = -d;
    }
    d *= w(col, col);
    for (int r = col + 1; r < 4; ++r) {
      const T f = w(r, col) / w(col, col);
      for (int c = col; c < 4; ++c) w(r, c) -= f * w(col, c);
    }
  }
  return d;
}

/// Eigenvalues of a symmetric real 4x4 matrix by cyclic Jacobi sweeps,
/// ascending order.
inline Vec4 symmetric_eigenvalues(Mat4d a, int max_sweeps = 50) {
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (int p = 0; p < 4; ++p)
      for (int q = p + 1; q < 4; ++q) off += a(p, q) * a(p, q);
    if (off < 1e-30) break;
    for (int p = 0; p < 4; ++p) {
      for (int q = p + 1; q < 4; ++q) {
        if (std::abs(a(p, q)) < 1e-300) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * a(p, q));
        const double t = (theta >= 0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (int k = 0; k < 4; ++k) {
          const double akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (int k = 0; k < 4; ++k) {
          const double apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
    }
  }
  Vec4 ev{a(0, 0), a(1, 1), a(2, 2), a(3, 3)};
  std::sort(ev.begin(), ev.end());
  return ev;
}

/// Totally antisymmetric symbol with epsilon_{0123} = +1 (all indices down;
/// the raised symbol is declared equal by convention).
inline int levi_civita(int a, int b, int c, int d) {
  const int idx[4] = {a, b, c, d};
  int sign = 1;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      if (idx[i] == idx[j]) return 0;
      if (idx[i] > idx[j]) sign = -sign;
    }
  return sign;
}

inline Vec4 operator+(const Vec4& a, const Vec4& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4 operator-(const Vec4& a, const Vec4& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4 operator*(double s, const Vec4& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

inline Vec4c operator+(const Vec4c& a, const Vec4c& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2], a[3] + b[3]};
}
inline Vec4c operator-(const Vec4c& a, const Vec4c& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2], a[3] - b[3]};
}
inline Vec4c operator*(const cplx& s, const Vec4c& a) {
  return {s * a[0], s * a[1], s * a[2], s * a[3]};
}

/// Hermitian inner product, conjugate-linear in the first slot.
inline cplx cdot(const Vec4c& a, const Vec4c& b) {
  cplx acc(0.0, 0.0);
  for (int i = 0; i < 4; ++i)
    acc += std::conj(a[static_cast<std::size_t>(i)]) * b[static_cast<std::size_t>(i)];
  return acc;
}

inline double norm2(const Vec4c& a) { return std::sqrt(cdot(a, a).real()); }

}  // namespace spinframe

#endif  // SPINFRAME_LINALG_HPP
