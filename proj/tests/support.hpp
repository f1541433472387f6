#pragma once

#include <random>
#include <vector>

#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz::testing {

inline Rational small_rational(std::mt19937_64& rng, long span = 7, long den = 4) {
  const long num = static_cast<long>(rng() % static_cast<unsigned long>(2 * span + 1)) - span;
  const long d = 1 + static_cast<long>(rng() % static_cast<unsigned long>(den));
  return ratio(num, d);
}

inline Polynomial random_poly(std::mt19937_64& rng, std::size_t nvars, int max_deg, int terms) {
  Polynomial p(nvars);
  for (int t = 0; t < terms; ++t) {
    Exponents e(nvars, 0);
    int left = static_cast<int>(rng() % static_cast<unsigned long>(max_deg + 1));
    for (std::size_t v = 0; v < nvars && left > 0; ++v) {
      const int a = static_cast<int>(rng() % static_cast<unsigned long>(left + 1));
      e[v] = static_cast<std::uint32_t>(a);
      left -= a;
    }
    p.add_term(e, small_rational(rng));
  }
  return p;
}

inline Box random_box(std::mt19937_64& rng, std::size_t nvars) {
  Box b;
  for (std::size_t v = 0; v < nvars; ++v) {
    Rational lo = small_rational(rng, 3, 3);
    Rational w = ratio(static_cast<long>(1 + rng() % 8), static_cast<long>(1 + rng() % 4));
    b.emplace_back(lo, lo + w);
  }
  return b;
}

inline std::vector<Rational> random_point_in(std::mt19937_64& rng, const Box& b) {
  std::vector<Rational> x;
  for (const auto& iv : b) {
    const long t = static_cast<long>(rng() % 1001);
    x.push_back(iv.lo() + iv.width() * ratio(t, 1000));
  }
  return x;
}

inline Polynomial X(std::size_t nvars, std::size_t var) { return Polynomial::variable(nvars, var); }
inline Polynomial C(std::size_t nvars, const Rational& c) { return Polynomial::constant(nvars, c); }

}  // namespace rbz::testing
