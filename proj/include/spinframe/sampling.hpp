// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Deterministic sampling helpers: portable uniform doubles from mt19937_64
// (the standard distributions are not bit-reproducible across library
// implementations), a Halton low-discrepancy sequence for spacetime sample
// points, and seeded random Lorentz matrices.

#ifndef SPINFRAME_SAMPLING_HPP
#define SPINFRAME_SAMPLING_HPP

#include <cstdint>
#include <random>

#include "spinframe/clifford.hpp"
#include "spinframe/linalg.hpp"

namespace spinframe {

/// Uniform double in [0, 1) with 53 random bits.
inline double uniform01(std::mt19937_64& gen) {
  return static_cast<double>(gen() >> 11) * 0x1.0p-53;
}

inline double uniform_range(std::mt19937_64& gen, double lo, double hi) {
  return lo + (hi - lo) * uniform01(gen);
}

inline cplx uniform_complex(std::mt19937_64& gen, double amplitude = 1.0) {
  const double re = uniform_range(gen, -amplitude, amplitude);
  const double im = uniform_range(gen, -amplitude, amplitude);
  return cplx(re, im);
}

/// Derives an independent seeded generator for a named stream, so adding a
/// check to the suite does not shift the draws of the others.
inline std::mt19937_64 seeded_stream(std::uint64_t seed, std::uint64_t stream) {
  // splitmix64 mix of (seed, stream)
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  z = z ^ (z >> 31);
  return std::mt19937_64(z);
}

/// Radical-inverse (van der Corput) value of `index` in the given base.
inline double radical_inverse(std::uint64_t index, std::uint64_t base) {
  double inv = 1.0 / static_cast<double>(base);
  double scale = inv;
  double value = 0.0;
  while (index > 0) {
    value += static_cast<double>(index % base) * scale;
    index /= base;
    scale *= inv;
  }
  return value;
}

/// Halton point in [0,1)^4, bases 2,3,5,7. Index 0 maps to the box centre
/// via the +1 offset convention.
inline Vec4 halton_point(std::uint64_t index) {
  static constexpr std::uint64_t bases[4] = {2, 3, 5, 7};
  Vec4 p;
  for (int d = 0; d < 4; ++d)
    p[static_cast<std::size_t>(d)] = radical_inverse(index + 1, bases[d]);
  return p;
}

/// Axis-aligned coordinate box with per-axis bounds.
struct Box {
  Vec4 lo;
  Vec4 hi;

  Vec4 map(const Vec4& unit) const {
    Vec4 x;
    for (int d = 0; d < 4; ++d) {
      const auto i = static_cast<std::size_t>(d);
      x[i] = lo[i] + (hi[i] - lo[i]) * unit[i];
    }
    return x;
  }
};

/// Product of the six single-plane factors in canonical plane order with
/// angles drawn uniformly from [-max_angle, max_angle].
inline LorentzMatrix random_lorentz(std::mt19937_64& gen, double max_angle = 1.0) {
  static constexpr int planes[6][2] = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  Mat4d lam = Mat4d::identity();
  for (const auto& p : planes) {
    const double angle = uniform_range(gen, -max_angle, max_angle);
    lam = single_plane_lorentz(p[0], p[1], angle).m * lam;
  }
  return LorentzMatrix{lam};
}

}  // namespace spinframe

#endif  // SPINFRAME_SAMPLING_HPP
