#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>

#include "legortho/laurent.hpp"
#include "legortho/rational.hpp"

namespace legortho {

using ExactPoly = LaurentPoly<Rational>;

/// Outcome of one exact identity check. A failure is data, not an exception.
struct Certificate {
  std::string identity;
  int n = 0;
  std::optional<int> k;
  bool passed = false;
  /// Nonzero terms left in the residual; 0 when the identity holds.
  std::size_t residual_terms = 0;
  std::string detail;
};

/// Passes iff `residual` is the zero Laurent polynomial.
inline Certificate residual_certificate(std::string identity, int n,
                                        std::optional<int> k,
                                        const ExactPoly &residual,
                                        std::string detail = {}) {
  return Certificate{std::move(identity), n,
                     k,                   residual.is_zero(),
                     residual.term_count(), std::move(detail)};
}

inline bool all_passed(std::span<const Certificate> certificates) {
  for (const auto &c : certificates) {
    if (!c.passed) {
      return false;
    }
  }
  return true;
}

} // namespace legortho
