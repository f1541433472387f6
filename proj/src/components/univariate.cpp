#include "realbezout/univariate.hpp"

#include <stdexcept>

namespace rbz {

namespace {

void trim(std::vector<Rational>& c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
}

int sign(const Rational& x) { return sgn(x); }

std::vector<UniPoly> sturm_sequence(const UniPoly& p) {
  std::vector<UniPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    UniPoly q, r;
    divmod(seq[seq.size() - 2], seq.back(), q, r);
    if (r.is_zero()) break;
    seq.push_back(UniPoly() - r);
  }
  if (seq.back().is_zero()) seq.pop_back();
  return seq;
}

int variations(const std::vector<UniPoly>& seq, const Rational& x) {
  int count = 0, last = 0;
  for (const auto& s : seq) {
    const int v = sign(s(x));
    if (v == 0) continue;
    if (last != 0 && v != last) ++count;
    last = v;
  }
  return count;
}

// Roots strictly between lo and hi; neither endpoint may be a root of p.
int count_open(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() <= 0) return 0;
  const auto seq = sturm_sequence(p);
  return variations(seq, lo) - variations(seq, hi);
}

UniPoly deflate(const UniPoly& p, const Rational& root) {
  UniPoly q, r;
  divmod(p, UniPoly({-root, Rational(1)}), q, r);
  return q;
}

void isolate_open(const UniPoly& p, const Rational& lo, const Rational& hi, std::vector<RootInterval>& out) {
  const int n = count_open(p, lo, hi);
  if (n == 0) return;
  if (n == 1) {
    out.push_back({lo, hi, false});
    return;
  }
  Rational mid = (lo + hi) / 2;
  while (p(mid) == 0) mid = (lo + mid) / 2;  // split away from roots
  isolate_open(p, lo, mid, out);
  isolate_open(p, mid, hi, out);
}

}  // namespace

UniPoly::UniPoly(std::vector<Rational> coefs) : coefs_(std::move(coefs)) { trim(coefs_); }

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefs_.rbegin(); it != coefs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coefs_.size(); ++i) d.push_back(coefs_[i] * static_cast<long>(i));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  std::vector<Rational> c = coefs_;
  const Rational lead = c.back();
  for (auto& x : c) x /= lead;
  return UniPoly(std::move(c));
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> c(a.coefs_.size() + b.coefs_.size() - 1);
  for (std::size_t i = 0; i < a.coefs_.size(); ++i)
    for (std::size_t j = 0; j < b.coefs_.size(); ++j) c[i + j] += a.coefs_[i] * b.coefs_[j];
  return UniPoly(std::move(c));
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) {
  std::vector<Rational> c(std::max(a.coefs_.size(), b.coefs_.size()));
  for (std::size_t i = 0; i < a.coefs_.size(); ++i) c[i] += a.coefs_[i];
  for (std::size_t i = 0; i < b.coefs_.size(); ++i) c[i] -= b.coefs_[i];
  return UniPoly(std::move(c));
}

void divmod(const UniPoly& a, const UniPoly& b, UniPoly& q, UniPoly& r) {
  if (b.is_zero()) throw std::domain_error("UniPoly division by zero");
  std::vector<Rational> rem = a.coefs();
  const int db = b.degree();
  std::vector<Rational> quot(rem.size() >= b.coefs().size() ? rem.size() - b.coefs().size() + 1 : 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / b.leading();
    if (factor == 0) continue;
    quot[static_cast<std::size_t>(i - db)] = factor;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= factor * b.coefs()[static_cast<std::size_t>(j)];
  }
  q = UniPoly(std::move(quot));
  r = UniPoly(std::move(rem));
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly q, r;
    divmod(x, y, q, r);
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly squarefree_part(const UniPoly& p) {
  if (p.degree() <= 0) return p.monic();
  UniPoly q, r;
  divmod(p, gcd(p, p.derivative()), q, r);
  return q.monic();
}

bool uni_sqrt_shifted(const UniPoly& p, UniPoly& g, Rational& c) {
  const int d = p.degree();
  if (d < 1 || d % 2 != 0) return false;
  const int m = d / 2;
  std::vector<Rational> r(static_cast<std::size_t>(m) + 1);
  Rational top;
  if (p.leading() < 0 || !rational_sqrt(p.leading(), top)) return false;
  r[static_cast<std::size_t>(m)] = top;
  // The coefficients of g^2 in degrees m..2m determine g completely.
  for (int i = m - 1; i >= 0; --i) {
    Rational s = p.coefs()[static_cast<std::size_t>(m + i)];
    for (int a = i + 1; a < m; ++a) {
      const int b = m + i - a;
      if (b > i && b < m) s -= r[static_cast<std::size_t>(a)] * r[static_cast<std::size_t>(b)];
    }
    r[static_cast<std::size_t>(i)] = s / (2 * top);
  }
  UniPoly cand(std::move(r));
  const UniPoly sq = cand * cand;
  std::vector<Rational> diff = (sq - p).coefs();
  if (diff.size() > 1) return false;
  c = diff.empty() ? Rational(0) : diff[0];
  g = std::move(cand);
  return true;
}

bool uni_sqrt(const UniPoly& p, UniPoly& g) {
  if (p.is_zero()) {
    g = UniPoly();
    return true;
  }
  if (p.degree() == 0) {
    Rational root;
    if (p.leading() < 0 || !rational_sqrt(p.leading(), root)) return false;
    g = UniPoly({root});
    return true;
  }
  Rational c;
  UniPoly cand;
  if (!uni_sqrt_shifted(p, cand, c) || c != 0) return false;
  g = std::move(cand);
  return true;
}

int count_roots_closed(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("count_roots_closed: zero polynomial");
  if (lo > hi) return 0;
  UniPoly s = squarefree_part(p);
  if (lo == hi) return s(lo) == 0 ? 1 : 0;
  int n = 0;
  if (s(lo) == 0) {
    ++n;
    s = deflate(s, lo);
  }
  if (s(hi) == 0) {
    ++n;
    s = deflate(s, hi);
  }
  return n + count_open(s, lo, hi);
}

std::vector<RootInterval> isolate_roots(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
  std::vector<RootInterval> out;
  if (lo > hi) return out;
  const UniPoly s = squarefree_part(p);
  if (lo == hi) {
    if (s(lo) == 0) out.push_back({lo, lo, true});
    return out;
  }
  if (s(lo) == 0) out.push_back({lo, lo, true});
  isolate_open(s, lo, hi, out);
  if (s(hi) == 0) out.push_back({hi, hi, true});
  for (auto& r : out) refine_root(s, r);  // promotes simple rational roots to exact
  return out;
}

bool refine_root(const UniPoly& p, RootInterval& r) {
  if (r.exact) return false;
  const Rational guess = simplest_rational_between(r.lo, r.hi);
  if (guess != r.lo && guess != r.hi && p(guess) == 0) {
    r.lo = r.hi = guess;
    r.exact = true;
    return false;
  }
  const Rational mid = (r.lo + r.hi) / 2;
  const int sm = sign(p(mid));
  if (sm == 0) {
    r.lo = r.hi = mid;
    r.exact = true;
    return false;
  }
  if (sign(p(r.lo)) != sm) {
    r.hi = mid;
  } else {
    r.lo = mid;
  }
  return true;
}

}  // namespace rbz
