#pragma once

#include <vector>

#include "realbezout/rational.hpp"

namespace rbz {

/// Dense univariate polynomial over Q; coefs[i] multiplies x^i. Kept trimmed,
/// so the zero polynomial has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coefs);

  const std::vector<Rational>& coefs() const { return coefs_; }
  bool is_zero() const { return coefs_.empty(); }
  int degree() const { return static_cast<int>(coefs_.size()) - 1; }
  const Rational& leading() const { return coefs_.back(); }

  Rational operator()(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

 private:
  std::vector<Rational> coefs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r);
/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made monic. Same real roots as p, all simple.
UniPoly squarefree_part(const UniPoly& p);

/// The exact square root g with positive leading coefficient when p = g^2.
bool uni_sqrt(const UniPoly& p, UniPoly& g);
/// Like uni_sqrt, but the constant term of p is free: finds g and c with
/// p + c = g^2. Requires deg p >= 1.
bool uni_sqrt_shifted(const UniPoly& p, UniPoly& g, Rational& c);

/// Number of distinct real roots in [lo, hi]. p must be non-zero.
int count_roots_closed(const UniPoly& p, const Rational& lo, const Rational& hi);

/// A real root of a squarefree polynomial, known to lie in [lo, hi]. When
/// exact, lo == hi is the root; otherwise the root lies strictly inside and
/// the endpoints are not roots.
struct RootInterval {
  Rational lo, hi;
  bool exact = false;
};

/// Isolates each distinct real root of p in [lo, hi], in increasing order.
std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi);

/// Halves an inexact root interval of a squarefree p (or lands on the root).
/// Returns false once exact.
bool refine_root(const UniPoly& p, RootInterval& r);

}  // namespace rbz
