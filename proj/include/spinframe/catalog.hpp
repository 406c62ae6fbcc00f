// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0
//
// Catalog of analytic coframes (flat, Rindler, Schwarzschild, exponential
// FLRW) with closed-form derivatives, plus the key-value spacetime spec file
// format that drives the CLI.
//
// Spec file grammar, one `key = value` pair per line, '#' starts a comment:
//   kind            = flat | rindler | schwarzschild | flrw     (required)
//   M               = <double>      Schwarzschild mass, M > 0
//   a0              = <double>      FLRW scale factor at t = 0, a0 > 0
//   H               = <double>      FLRW expansion rate, a(t) = a0 exp(H t)
//   derivative_mode = analytic | fd
//   fd_step         = <double>      central-difference step, in (0, 1e-2]
//   richardson      = true | false  one extrapolation level for fd mode
//   margin          = <double>      horizon margin: domain is r > 2M(1+margin)

#ifndef SPINFRAME_CATALOG_HPP
#define SPINFRAME_CATALOG_HPP

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "spinframe/fields.hpp"
#include "spinframe/sampling.hpp"

namespace spinframe {

struct SpacetimeSpec {
  enum class Kind { Flat, Rindler, Schwarzschild, Flrw };
  enum class DerivMode { Analytic, Fd };

  Kind kind = Kind::Flat;
  double mass = 1.0;
  double a0 = 1.0;
  double hubble = 0.5;
  DerivMode mode = DerivMode::Analytic;
  double fd_step = 1e-5;
  bool richardson = false;
  double margin = 1e-3;

  void validate() const {
    if (kind == Kind::Schwarzschild && !(mass > 0.0))
      throw std::invalid_argument("schwarzschild requires M > 0");
    if (kind == Kind::Flrw && !(a0 > 0.0))
      throw std::invalid_argument("flrw requires a0 > 0");
    if (!(margin > 0.0)) throw std::invalid_argument("margin must be positive");
    if (!(fd_step > 0.0) || fd_step > 1e-2)
      throw std::invalid_argument("fd_step must be in (0, 1e-2]");
  }
};

inline std::string kind_name(SpacetimeSpec::Kind k) {
  switch (k) {
    case SpacetimeSpec::Kind::Flat: return "flat";
    case SpacetimeSpec::Kind::Rindler: return "rindler";
    case SpacetimeSpec::Kind::Schwarzschild: return "schwarzschild";
    case SpacetimeSpec::Kind::Flrw: return "flrw";
  }
  return "?";
}

inline SpacetimeSpec parse_spacetime_spec(std::istream& in) {
  SpacetimeSpec spec;
  bool have_kind = false;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    std::string key = line.substr(0, eq == std::string::npos ? line.size() : eq);
    auto trim = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string();
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    key = trim(key);
    if (key.empty()) continue;
    if (eq == std::string::npos)
      throw std::invalid_argument("spec line " + std::to_string(lineno) + ": expected key = value");
    const std::string value = trim(line.substr(eq + 1));

    auto as_double = [&](const std::string& v) {
      std::size_t used = 0;
      const double d = std::stod(v, &used);
      if (used != v.size())
        throw std::invalid_argument("spec line " + std::to_string(lineno) + ": bad number '" + v + "'");
      return d;
    };

    if (key == "kind") {
      have_kind = true;
      if (value == "flat")
        spec.kind = SpacetimeSpec::Kind::Flat;
      else if (value == "rindler")
        spec.kind = SpacetimeSpec::Kind::Rindler;
      else if (value == "schwarzschild")
        spec.kind = SpacetimeSpec::Kind::Schwarzschild;
      else if (value == "flrw")
        spec.kind = SpacetimeSpec::Kind::Flrw;
      else
        throw std::invalid_argument("unknown spacetime kind '" + value + "'");
    } else if (key == "M") {
      spec.mass = as_double(value);
    } else if (key == "a0") {
      spec.a0 = as_double(value);
    } else if (key == "H") {
      spec.hubble = as_double(value);
    } else if (key == "derivative_mode") {
      if (value == "analytic")
        spec.mode = SpacetimeSpec::DerivMode::Analytic;
      else if (value == "fd")
        spec.mode = SpacetimeSpec::DerivMode::Fd;
      else
        throw std::invalid_argument("derivative_mode must be analytic or fd");
    } else if (key == "fd_step") {
      spec.fd_step = as_double(value);
    } else if (key == "richardson") {
      if (value == "true")
        spec.richardson = true;
      else if (value == "false")
        spec.richardson = false;
      else
        throw std::invalid_argument("richardson must be true or false");
    } else if (key == "margin") {
      spec.margin = as_double(value);
    } else {
      throw std::invalid_argument("unknown spec key '" + key + "'");
    }
  }
  if (!have_kind) throw std::invalid_argument("spec file must set kind");
  spec.validate();
  return spec;
}

inline SpacetimeSpec parse_spacetime_spec(const std::string& text) {
  std::istringstream in(text);
  return parse_spacetime_spec(in);
}

inline SpacetimeSpec load_spacetime_spec_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open spec file '" + path + "'");
  return parse_spacetime_spec(in);
}

namespace detail {

// Coordinates (t, x, y, z); theta^0 = x dt. Domain x > 0.
inline Mat4d rindler_theta(const Vec4& x) {
  Mat4d th = Mat4d::identity();
  th(0, 0) = x[1];
  return th;
}
inline CoframeDerivative rindler_dtheta(const Vec4&) {
  CoframeDerivative d;
  d.d[1](0, 0) = 1.0;
  return d;
}

// Coordinates (t, r, theta, phi); diagonal coframe of the static chart.
inline Mat4d schwarzschild_theta(double mass, const Vec4& x) {
  const double r = x[1], th = x[2];
  const double s = std::sqrt(1.0 - 2.0 * mass / r);
  Mat4d out;
  out(0, 0) = s;
  out(1, 1) = 1.0 / s;
  out(2, 2) = r;
  out(3, 3) = r * std::sin(th);
  return out;
}
inline CoframeDerivative schwarzschild_dtheta(double mass, const Vec4& x) {
  const double r = x[1], th = x[2];
  const double f = 1.0 - 2.0 * mass / r;
  const double s = std::sqrt(f);
  CoframeDerivative d;
  d.d[1](0, 0) = mass / (r * r * s);
  d.d[1](1, 1) = -mass / (r * r * s * s * s);
  d.d[1](2, 2) = 1.0;
  d.d[1](3, 3) = std::sin(th);
  d.d[2](3, 3) = r * std::cos(th);
  return d;
}

// Coordinates (t, x, y, z); a(t) = a0 exp(H t).
inline Mat4d flrw_theta(double a0, double hubble, const Vec4& x) {
  const double a = a0 * std::exp(hubble * x[0]);
  Mat4d out;
  out(0, 0) = 1.0;
  out(1, 1) = a;
  out(2, 2) = a;
  out(3, 3) = a;
  return out;
}
inline CoframeDerivative flrw_dtheta(double a0, double hubble, const Vec4& x) {
  const double da = hubble * a0 * std::exp(hubble * x[0]);
  CoframeDerivative d;
  d.d[0](1, 1) = da;
  d.d[0](2, 2) = da;
  d.d[0](3, 3) = da;
  return d;
}

}  // namespace detail

/// Builds the coframe field for a spec: analytic derivative provider, or the
/// central-difference wrapper when derivative_mode = fd. The chart domain
/// predicate is attached in both modes.
inline CoframeField load_spacetime(const SpacetimeSpec& spec) {
  spec.validate();
  const FdConfig fd{spec.fd_step, spec.richardson};
  switch (spec.kind) {
    case SpacetimeSpec::Kind::Flat:
      return CoframeField::flat();
    case SpacetimeSpec::Kind::Rindler: {
      auto theta = [](const Vec4& x) { return detail::rindler_theta(x); };
      auto domain = [](const Vec4& x) { return x[1] > 0.0; };
      if (spec.mode == SpacetimeSpec::DerivMode::Fd)
        return CoframeField::with_fd_derivatives(theta, domain, fd);
      return CoframeField(theta, [](const Vec4& x) { return detail::rindler_dtheta(x); }, domain);
    }
    case SpacetimeSpec::Kind::Schwarzschild: {
      const double m = spec.mass;
      const double rmin = 2.0 * m * (1.0 + spec.margin);
      auto theta = [m](const Vec4& x) { return detail::schwarzschild_theta(m, x); };
      // The polar chart also degenerates on the axis, so keep away from it.
      auto domain = [rmin](const Vec4& x) {
        return x[1] > rmin && std::abs(std::sin(x[2])) > 1e-3;
      };
      if (spec.mode == SpacetimeSpec::DerivMode::Fd)
        return CoframeField::with_fd_derivatives(theta, domain, fd);
      return CoframeField(theta, [m](const Vec4& x) { return detail::schwarzschild_dtheta(m, x); },
                          domain);
    }
    case SpacetimeSpec::Kind::Flrw: {
      const double a0 = spec.a0, h = spec.hubble;
      auto theta = [a0, h](const Vec4& x) { return detail::flrw_theta(a0, h, x); };
      auto domain = [](const Vec4&) { return true; };
      if (spec.mode == SpacetimeSpec::DerivMode::Fd)
        return CoframeField::with_fd_derivatives(theta, domain, fd);
      return CoframeField(theta, [a0, h](const Vec4& x) { return detail::flrw_dtheta(a0, h, x); },
                          domain);
    }
  }
  throw std::invalid_argument("unknown spacetime kind");
}

/// Interior sampling box for the suite, clear of chart boundaries.
inline Box sampling_box(const SpacetimeSpec& spec) {
  switch (spec.kind) {
    case SpacetimeSpec::Kind::Flat:
    case SpacetimeSpec::Kind::Flrw:
      return Box{{-1.0, -1.0, -1.0, -1.0}, {1.0, 1.0, 1.0, 1.0}};
    case SpacetimeSpec::Kind::Rindler:
      return Box{{-1.0, 0.5, -1.0, -1.0}, {1.0, 3.0, 1.0, 1.0}};
    case SpacetimeSpec::Kind::Schwarzschild:
      return Box{{-1.0, 3.0 * spec.mass, 0.3, 0.3},
                 {1.0, 20.0 * spec.mass, M_PI - 0.3, 6.0}};
  }
  throw std::invalid_argument("unknown spacetime kind");
}

}  // namespace spinframe

#endif  // SPINFRAME_CATALOG_HPP
