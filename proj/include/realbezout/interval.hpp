#pragma once

#include <span>
#include <string>
#include <vector>

#include "realbezout/polynomial.hpp"
#include "realbezout/rational.hpp"

namespace rbz {

/// Closed interval [lo, hi] with exact rational endpoints.
class Interval {
 public:
  Interval() = default;
  explicit Interval(const Rational& point) : lo_(point), hi_(point) {}
  /// Throws std::invalid_argument if lo > hi.
  Interval(Rational lo, Rational hi);

  const Rational& lo() const { return lo_; }
  const Rational& hi() const { return hi_; }
  Rational width() const { return hi_ - lo_; }
  Rational midpoint() const;
  Rational magnitude() const;

  bool contains(const Rational& x) const { return lo_ <= x && x <= hi_; }
  bool contains_zero() const { return lo_ <= 0 && 0 <= hi_; }
  bool strictly_positive() const { return lo_ > 0; }
  bool strictly_negative() const { return hi_ < 0; }
  /// True if this interval lies inside the open interior of `outer`.
  bool interior_of(const Interval& outer) const { return outer.lo_ < lo_ && hi_ < outer.hi_; }
  bool subset_of(const Interval& outer) const { return outer.lo_ <= lo_ && hi_ <= outer.hi_; }
  bool intersects(const Interval& other) const { return lo_ <= other.hi_ && other.lo_ <= hi_; }

  Interval& operator+=(const Interval& o);
  Interval& operator-=(const Interval& o);
  friend Interval operator+(Interval a, const Interval& b) { return a += b; }
  friend Interval operator-(Interval a, const Interval& b) { return a -= b; }
  friend Interval operator*(const Interval& a, const Interval& b);
  friend Interval operator*(const Rational& c, const Interval& a);
  Interval operator-() const { return Interval(-hi_, -lo_); }

  /// x^n; even powers of an interval straddling zero start at 0.
  Interval pow(unsigned n) const;

  friend bool operator==(const Interval& a, const Interval& b) = default;

  std::string to_string() const;

 private:
  Rational lo_{0};
  Rational hi_{0};
};

/// Interval hull; both arguments must intersect for intersect().
Interval hull(const Interval& a, const Interval& b);
Interval intersect(const Interval& a, const Interval& b);

using Box = std::vector<Interval>;

Box box_hull(const Box& a, const Box& b);
bool boxes_intersect(const Box& a, const Box& b);
bool box_contains(const Box& box, std::span<const Rational> point);
std::vector<Rational> box_midpoint(const Box& box);

/// Enclosure of {p(x) : x in box} by monomial accumulation. Sound for every box.
Interval eval_interval(const Polynomial& p, std::span<const Interval> box);

/// Centered-form enclosure: p is re-expanded around the box midpoint and the
/// result is intersected with eval_interval. Tighter on small boxes.
Interval eval_interval_centered(const Polynomial& p, std::span<const Interval> box);

}  // namespace rbz
