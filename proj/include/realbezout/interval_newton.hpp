#pragma once

#include <vector>

#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz {

enum class KrawczykVerdict {
  kUnique,   // K(X) lies in the interior of X: exactly one zero in X
  kNoZero,   // K(X) misses X: no zero in X
  kUnknown,
};

struct KrawczykResult {
  KrawczykVerdict verdict = KrawczykVerdict::kUnknown;
  Box image;  // K(X); empty when the midpoint Jacobian is singular
};

/// Krawczyk operator for a square system F: R^n -> R^n, evaluated in exact
/// rational interval arithmetic.
class KrawczykOperator {
 public:
  /// Throws std::invalid_argument unless the system is square and non-empty.
  explicit KrawczykOperator(std::vector<Polynomial> system);

  KrawczykResult apply(const Box& x) const;

  /// Iterates X <- K(X) ∩ X until the width of every side is at most `width`
  /// or `max_steps` is hit. Returns the final box; requires a kUnique start.
  Box contract(Box x, const Rational& width, int max_steps) const;

  std::size_t dimension() const { return system_.size(); }

 private:
  std::vector<Polynomial> system_;
  std::vector<std::vector<Polynomial>> jacobian_;  // [equation][variable]
};

}  // namespace rbz
