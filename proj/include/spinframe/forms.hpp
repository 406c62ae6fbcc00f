// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Antisymmetric forms on the orthonormal coframe basis. A degree-k form is
// stored through its values on frame vectors, A_{a1..ak} = A(v_{a1},..,v_{ak}),
// which are the coefficients of the expansion (1/k!) A_{a..} theta^{a1} ^ ...
// The Hodge dual implements the index formula
//   *(theta_{i0} ^ .. ^ theta_{i_{k-1}})
//     = 1/(n-k)! eps_{i0..i_{k-1} j0..j_{n-k-1}} theta^{j0} ^ .. ^ theta^{j_{n-k-1}}
// with eps^{0123} = eps_{0123} = +1, taken literally: inputs are lowered with
// eta on the left and the all-lower eps does the contraction. This convention
// makes **1 = -1 and *theta_0 = theta^1 ^ theta^2 ^ theta^3 hold exactly.

#ifndef SPINFRAME_FORMS_HPP
#define SPINFRAME_FORMS_HPP

#include <cmath>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "spinframe/clifford.hpp"
#include "spinframe/linalg.hpp"

namespace spinframe {

namespace detail {
inline std::size_t pow4(int k) {
  std::size_t n = 1;
  for (int i = 0; i < k; ++i) n *= 4;
  return n;
}
/// Digits of `flat` in base 4, most significant first, into idx[0..k-1].
inline void decode4(std::size_t flat, int k, int* idx) {
  for (int d = k - 1; d >= 0; --d) {
    idx[d] = static_cast<int>(flat % 4);
    flat /= 4;
  }
}
}  // namespace detail

class IndexedForm {
 public:
  explicit IndexedForm(int degree) : degree_(degree) {
    if (degree < 0 || degree > 4) throw std::invalid_argument("form degree must be in 0..4");
    c_.assign(detail::pow4(degree), 0.0);
  }

  static IndexedForm scalar(double v) {
    IndexedForm f(0);
    f.c_[0] = v;
    return f;
  }

  /// theta^a: components delta^a_b.
  static IndexedForm basis_coframe(int a) {
    IndexedForm f(1);
    f.c_[static_cast<std::size_t>(a)] = 1.0;
    return f;
  }

  /// theta_a = eta_{ab} theta^b.
  static IndexedForm lowered_basis_coframe(int a) {
    IndexedForm f(1);
    f.c_[static_cast<std::size_t>(a)] = GammaRep::eta(a, a);
    return f;
  }

  int degree() const { return degree_; }

  double at(std::initializer_list<int> idx) const { return c_[flat(idx)]; }
  void set(std::initializer_list<int> idx, double v) { c_[flat(idx)] = v; }

  template <typename... I>
  double operator()(I... idx) const {
    return at({static_cast<int>(idx)...});
  }

  /// Writes value at the given indices and the signed value over the whole
  /// permutation orbit.
  void set_antisym(std::initializer_list<int> idx, double v) {
    std::vector<int> id(idx);
    if (static_cast<int>(id.size()) != degree_)
      throw std::invalid_argument("index count does not match form degree");
    std::vector<int> order(id.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    do {
      std::size_t f = 0;
      int inv = 0;
      for (std::size_t i = 0; i < order.size(); ++i) {
        f = 4 * f + static_cast<std::size_t>(id[static_cast<std::size_t>(order[i])]);
        for (std::size_t j = i + 1; j < order.size(); ++j)
          if (order[i] > order[j]) ++inv;
      }
      c_[f] = (inv % 2 == 0) ? v : -v;
    } while (std::next_permutation(order.begin(), order.end()));
  }

  double max_abs() const {
    double best = 0.0;
    for (double v : c_) best = std::max(best, std::abs(v));
    return best;
  }

  friend IndexedForm operator+(const IndexedForm& a, const IndexedForm& b) {
    check_same_degree(a, b);
    IndexedForm out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] += b.c_[i];
    return out;
  }
  friend IndexedForm operator-(const IndexedForm& a, const IndexedForm& b) {
    check_same_degree(a, b);
    IndexedForm out = a;
    for (std::size_t i = 0; i < out.c_.size(); ++i) out.c_[i] -= b.c_[i];
    return out;
  }
  friend IndexedForm operator*(double s, const IndexedForm& a) {
    IndexedForm out = a;
    for (double& v : out.c_) v *= s;
    return out;
  }
  IndexedForm& operator+=(const IndexedForm& b) {
    check_same_degree(*this, b);
    for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += b.c_[i];
    return *this;
  }

  const std::vector<double>& raw() const { return c_; }
  std::vector<double>& raw() { return c_; }

 private:
  std::size_t flat(std::initializer_list<int> idx) const {
    if (static_cast<int>(idx.size()) != degree_)
      throw std::invalid_argument("index count does not match form degree");
    std::size_t f = 0;
    for (int i : idx) {
      if (i < 0 || i > 3) throw std::out_of_range("form index out of range");
      f = 4 * f + static_cast<std::size_t>(i);
    }
    return f;
  }
  static void check_same_degree(const IndexedForm& a, const IndexedForm& b) {
    if (a.degree_ != b.degree_) throw std::invalid_argument("form degrees differ");
  }

  int degree_;
  std::vector<double> c_;
};

/// Shuffle-sum wedge product; division-free, so small-integer inputs stay
/// exact. (a ^ b)(v_{i0},..) = sum over (k,l)-shuffles of signed products.
inline IndexedForm wedge(const IndexedForm& a, const IndexedForm& b) {
  const int k = a.degree(), l = b.degree();
  if (k + l > 4) throw std::invalid_argument("wedge degree exceeds 4");
  if (k == 0) return a.at({}) * b;
  if (l == 0) return b.at({}) * a;
  IndexedForm out(k + l);

  // k-element subsets of {0..k+l-1}, each with the parity of its shuffle.
  std::vector<std::pair<std::vector<int>, double>> shuffles;
  std::vector<int> sel(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) sel[static_cast<std::size_t>(i)] = i;
  while (true) {
    int parity = 0;
    for (int i = 0; i < k; ++i) parity += sel[static_cast<std::size_t>(i)] - i;
    shuffles.emplace_back(sel, (parity % 2 == 0) ? 1.0 : -1.0);
    int pos = k - 1;
    while (pos >= 0 && sel[static_cast<std::size_t>(pos)] == l + pos) --pos;
    if (pos < 0) break;
    ++sel[static_cast<std::size_t>(pos)];
    for (int i = pos + 1; i < k; ++i)
      sel[static_cast<std::size_t>(i)] = sel[static_cast<std::size_t>(i - 1)] + 1;
  }

  const std::size_t n_out = detail::pow4(k + l);
  for (std::size_t f = 0; f < n_out; ++f) {
    int idx[4];
    detail::decode4(f, k + l, idx);
    double acc = 0.0;
    for (const auto& [s, sign] : shuffles) {
      std::size_t fa = 0, fb = 0;
      std::size_t na = 0;
      for (int pos = 0; pos < k + l; ++pos) {
        if (na < s.size() && s[na] == pos) {
          fa = 4 * fa + static_cast<std::size_t>(idx[pos]);
          ++na;
        } else {
          fb = 4 * fb + static_cast<std::size_t>(idx[pos]);
        }
      }
      acc += sign * a.raw()[fa] * b.raw()[fb];
    }
    out.raw()[f] = acc;
  }
  return out;
}

/// Paper-convention Hodge dual on the orthonormal basis:
///   (*A)_{j0..j_{3-k}} = (1/k!) A^{i0..i_{k-1}} eps_{i0..i_{k-1} j0..j_{3-k}}
/// with indices raised by eta and eps all-lower. The k! division happens once
/// on the accumulated sum, which keeps integer cases exact.
inline IndexedForm hodge_dual(const IndexedForm& a) {
  const int k = a.degree();
  IndexedForm out(4 - k);
  double kfact = 1.0;
  for (int i = 2; i <= k; ++i) kfact *= i;

  const std::size_t n_in = detail::pow4(k);
  const std::size_t n_out = detail::pow4(4 - k);
  for (std::size_t fj = 0; fj < n_out; ++fj) {
    int full[4];
    detail::decode4(fj, 4 - k, full + k);
    double acc = 0.0;
    for (std::size_t fi = 0; fi < n_in; ++fi) {
      const double low = a.raw()[fi];
      if (low == 0.0) continue;
      detail::decode4(fi, k, full);
      double sign = 1.0;
      for (int d = 0; d < k; ++d) sign *= GammaRep::eta(full[d], full[d]);
      acc += sign * low * levi_civita(full[0], full[1], full[2], full[3]);
    }
    out.raw()[fj] = acc / kfact;
  }
  return out;
}

}  // namespace spinframe

#endif  // SPINFRAME_FORMS_HPP
