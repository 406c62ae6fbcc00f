// Copyright 2026 The Spinframe Authors
// SPDX-License-Identifier: Apache-2.0

#ifndef SPINFRAME_ERRORS_HPP
#define SPINFRAME_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace spinframe {

/// A point fell outside the chart's declared validity domain.
struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Coframe matrix is singular or too ill-conditioned to invert.
struct DegenerateCoframeError : std::runtime_error {
  explicit DegenerateCoframeError(const std::string& what) : std::runtime_error(what) {}
};

/// An internal identity that should hold to roundoff was violated
/// (e.g. a supposedly real bilinear came out with a large imaginary part).
struct ConsistencyError : std::runtime_error {
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

/// A precondition on field data was violated (off-shell momentum, off-shell
/// state passed to an on-shell-only formula, empty null space).
struct OffShellError : std::invalid_argument {
  explicit OffShellError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace spinframe

#endif  // SPINFRAME_ERRORS_HPP
