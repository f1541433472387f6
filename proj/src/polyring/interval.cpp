#include "realbezout/interval.hpp"

#include <algorithm>
#include <stdexcept>

namespace rbz {

Interval::Interval(Rational lo, Rational hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
  if (lo_ > hi_) throw std::invalid_argument("Interval: lo > hi");
}

Rational Interval::midpoint() const {
  Rational m = (lo_ + hi_) / 2;
  return m;
}

Rational Interval::magnitude() const { return std::max(Rational(abs(lo_)), Rational(abs(hi_))); }

Interval& Interval::operator+=(const Interval& o) {
  lo_ += o.lo_;
  hi_ += o.hi_;
  return *this;
}

Interval& Interval::operator-=(const Interval& o) {
  Rational new_lo = lo_ - o.hi_;
  hi_ -= o.lo_;
  lo_ = std::move(new_lo);
  return *this;
}

Interval operator*(const Interval& a, const Interval& b) {
  Rational p1 = a.lo_ * b.lo_, p2 = a.lo_ * b.hi_, p3 = a.hi_ * b.lo_, p4 = a.hi_ * b.hi_;
  Interval r;
  r.lo_ = std::min({p1, p2, p3, p4});
  r.hi_ = std::max({p1, p2, p3, p4});
  return r;
}

Interval operator*(const Rational& c, const Interval& a) {
  if (c >= 0) return Interval(c * a.lo_, c * a.hi_);
  return Interval(c * a.hi_, c * a.lo_);
}

Interval Interval::pow(unsigned n) const {
  if (n == 0) return Interval(Rational(1));
  if (n == 1) return *this;
  Rational a = rbz::pow(lo_, n), b = rbz::pow(hi_, n);
  if (n % 2 == 1) return Interval(a, b);
  if (contains_zero()) return Interval(Rational(0), std::max(a, b));
  if (lo_ >= 0) return Interval(a, b);
  return Interval(b, a);
}

std::string Interval::to_string() const { return "[" + lo_.get_str() + ", " + hi_.get_str() + "]"; }

Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo(), b.lo()), std::max(a.hi(), b.hi()));
}

Interval intersect(const Interval& a, const Interval& b) {
  if (!a.intersects(b)) throw std::invalid_argument("intersect: disjoint intervals");
  return Interval(std::max(a.lo(), b.lo()), std::min(a.hi(), b.hi()));
}

Box box_hull(const Box& a, const Box& b) {
  if (a.size() != b.size()) throw std::invalid_argument("box_hull: dimension mismatch");
  Box out;
  out.reserve(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out.push_back(hull(a[i], b[i]));
  return out;
}

bool boxes_intersect(const Box& a, const Box& b) {
  if (a.size() != b.size()) throw std::invalid_argument("boxes_intersect: dimension mismatch");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (!a[i].intersects(b[i])) return false;
  return true;
}

bool box_contains(const Box& box, std::span<const Rational> point) {
  if (box.size() != point.size()) throw std::invalid_argument("box_contains: dimension mismatch");
  for (std::size_t i = 0; i < box.size(); ++i)
    if (!box[i].contains(point[i])) return false;
  return true;
}

std::vector<Rational> box_midpoint(const Box& box) {
  std::vector<Rational> m;
  m.reserve(box.size());
  for (const auto& iv : box) m.push_back(iv.midpoint());
  return m;
}

Interval eval_interval(const Polynomial& p, std::span<const Interval> box) {
  if (box.size() != p.nvars()) throw std::invalid_argument("eval_interval: box dimension mismatch");
  std::vector<std::vector<Interval>> powers(p.nvars());
  Interval total(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    Interval term(c);
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      auto& cache = powers[i];
      if (cache.size() <= e[i]) cache.resize(e[i] + 1);
      if (cache[e[i]] == Interval()) cache[e[i]] = box[i].pow(e[i]);
      term = term * cache[e[i]];
    }
    total += term;
  }
  return total;
}

Interval eval_interval_centered(const Polynomial& p, std::span<const Interval> box) {
  if (box.size() != p.nvars()) throw std::invalid_argument("eval_interval_centered: box dimension mismatch");
  if (p.is_constant()) return eval_interval(p, box);
  std::vector<Rational> center;
  Box offsets;
  center.reserve(box.size());
  offsets.reserve(box.size());
  for (const auto& iv : box) {
    center.push_back(iv.midpoint());
    Rational r = iv.width() / 2;
    offsets.emplace_back(-r, r);
  }
  Interval centered = eval_interval(shift(p, center), offsets);
  Interval natural = eval_interval(p, box);
  return intersect(centered, natural);
}

}  // namespace rbz
