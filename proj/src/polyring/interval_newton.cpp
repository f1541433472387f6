#include "realbezout/interval_newton.hpp"

#include <stdexcept>

#include "realbezout/matrix.hpp"

namespace rbz {

KrawczykOperator::KrawczykOperator(std::vector<Polynomial> system) : system_(std::move(system)) {
  if (system_.empty()) throw std::invalid_argument("Krawczyk: empty system");
  const std::size_t n = system_.size();
  for (const auto& f : system_)
    if (f.nvars() != n) throw std::invalid_argument("Krawczyk: system must be square");
  jacobian_.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) jacobian_[i].push_back(partial(system_[i], v));
}

KrawczykResult KrawczykOperator::apply(const Box& x) const {
  const std::size_t n = system_.size();
  if (x.size() != n) throw std::invalid_argument("Krawczyk: box dimension mismatch");
  const std::vector<Rational> y = box_midpoint(x);

  RationalMatrix jy(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) jy(i, v) = eval(jacobian_[i][v], y);
  if (jy.determinant() == 0) return {};
  const RationalMatrix inv = jy.inverse();

  std::vector<Rational> fy(n);
  for (std::size_t i = 0; i < n; ++i) fy[i] = eval(system_[i], y);
  const std::vector<Rational> step = inv.apply(fy);

  std::vector<std::vector<Interval>> jx(n, std::vector<Interval>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t v = 0; v < n; ++v) jx[i][v] = eval_interval_centered(jacobian_[i][v], x);

  // K = y - Y f(y) + (I - Y J(X)) (X - y)
  Box k;
  k.reserve(n);
  for (std::size_t r = 0; r < n; ++r) {
    Interval acc(y[r] - step[r]);
    for (std::size_t c = 0; c < n; ++c) {
      Interval m(Rational(r == c ? 1 : 0));
      for (std::size_t t = 0; t < n; ++t) {
        if (inv(r, t) == 0) continue;
        m -= inv(r, t) * jx[t][c];
      }
      Interval offset(x[c].lo() - y[c], x[c].hi() - y[c]);
      acc += m * offset;
    }
    k.push_back(std::move(acc));
  }

  KrawczykResult result;
  bool interior = true;
  bool disjoint = false;
  for (std::size_t i = 0; i < n; ++i) {
    if (!k[i].interior_of(x[i])) interior = false;
    if (!k[i].intersects(x[i])) disjoint = true;
  }
  result.verdict = disjoint ? KrawczykVerdict::kNoZero : interior ? KrawczykVerdict::kUnique : KrawczykVerdict::kUnknown;
  result.image = std::move(k);
  return result;
}

Box KrawczykOperator::contract(Box x, const Rational& width, int max_steps) const {
  for (int step = 0; step < max_steps; ++step) {
    bool narrow = true;
    for (const auto& iv : x)
      if (iv.width() > width) narrow = false;
    if (narrow) break;
    KrawczykResult r = apply(x);
    if (r.image.empty() || r.verdict == KrawczykVerdict::kNoZero) break;
    Box next;
    for (std::size_t i = 0; i < x.size(); ++i) next.push_back(intersect(x[i], r.image[i]));
    if (next == x) break;
    x = std::move(next);
  }
  return x;
}

}  // namespace rbz
