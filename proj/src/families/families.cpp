#include "realbezout/families.hpp"

#include <stdexcept>

namespace rbz {

namespace {

// prod_{h=1}^{n} (X_var - h), in `nvars` variables.
Polynomial root_product(std::size_t nvars, std::size_t var, std::int64_t n) {
  Polynomial out = Polynomial::constant(nvars, 1);
  const Polynomial x = Polynomial::variable(nvars, var);
  for (std::int64_t h = 1; h <= n; ++h) out *= x - Polynomial::constant(nvars, Rational(static_cast<long>(h)));
  return out;
}

Box integer_box(std::size_t k, std::int64_t lo, std::int64_t hi) {
  return Box(k, Interval(Rational(static_cast<long>(lo)), Rational(static_cast<long>(hi))));
}

}  // namespace

FamilyInstance gen_example11(int d) {
  if (d < 1) throw std::invalid_argument("example 11 needs d >= 1");
  FamilyInstance f;
  const std::size_t k = 3;
  const Polynomial x3 = Polynomial::variable(k, 2);
  Polynomial q3(k);
  for (std::size_t i = 0; i < 2; ++i) q3 += root_product(k, i, d).pow(2);
  f.system = {x3, x3, q3};
  f.profile = Profile{3, {1, 1, 2 * static_cast<std::int64_t>(d)}, {3, 2, 2, 0}};
  f.exact_count = BigInt(d) * d;
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j) f.zero_points.push_back({Rational(i), Rational(j), Rational(0)});
  f.provenance = "example11 d=" + std::to_string(d);
  f.search_box = integer_box(k, 0, d + 1);
  return f;
}

FamilyInstance gen_example15(int k, const std::vector<int>& dims, const std::vector<std::int64_t>& degs) {
  if (k < 1) throw std::invalid_argument("example 15 needs k >= 1");
  if (degs.empty()) throw std::invalid_argument("example 15 needs at least one polynomial");
  Profile profile{k, degs, dims};
  profile.validate();
  if (dims.back() != 0) throw std::invalid_argument("example 15 needs k_ell = 0");
  for (std::size_t i = 1; i < dims.size(); ++i)
    if (dims[i] == dims[i - 1]) throw std::invalid_argument("example 15 needs strictly decreasing dims");
  for (auto d : degs)
    if (d < 2 || d % 2 != 0) throw std::invalid_argument("example 15 needs even degrees >= 2");

  FamilyInstance f;
  f.profile = profile;
  const auto nv = static_cast<std::size_t>(k);
  std::vector<std::int64_t> choices(nv);  // number of grid values per variable
  f.exact_count = 1;
  std::int64_t reach = 1;
  for (std::size_t i = 1; i < dims.size(); ++i) {
    const std::int64_t half = degs[i - 1] / 2;
    reach = std::max(reach, half);
    Polynomial q(nv);
    for (int j = k - dims[i - 1]; j < k - dims[i]; ++j) {
      q += root_product(nv, static_cast<std::size_t>(j), half).pow(2);
      choices[static_cast<std::size_t>(j)] = half;
      f.exact_count *= BigInt(static_cast<long>(half));
    }
    f.system.push_back(std::move(q));
  }

  if (f.exact_count <= BigInt(static_cast<unsigned long>(kMaxListedZeros))) {
    std::vector<std::int64_t> odometer(nv, 1);
    bool done = false;
    while (!done) {
      std::vector<Rational> pt;
      for (auto v : odometer) pt.emplace_back(static_cast<long>(v));
      f.zero_points.push_back(std::move(pt));
      done = true;
      for (std::size_t pos = nv; pos-- > 0;) {
        if (odometer[pos] < choices[pos]) {
          ++odometer[pos];
          done = false;
          break;
        }
        odometer[pos] = 1;
      }
    }
  }

  std::string dims_s, degs_s;
  for (auto v : dims) dims_s += (dims_s.empty() ? "" : ",") + std::to_string(v);
  for (auto v : degs) degs_s += (degs_s.empty() ? "" : ",") + std::to_string(v);
  f.provenance = "example15 k=" + std::to_string(k) + " dims=" + dims_s + " degs=" + degs_s;
  f.search_box = integer_box(nv, 0, reach + 1);
  return f;
}

Rational example15_count_unreduced(int k, const std::vector<int>& dims, const std::vector<std::int64_t>& degs) {
  Rational r(1);
  for (std::size_t i = 1; i < dims.size(); ++i)
    r *= pow(Rational(static_cast<long>(degs[i - 1])), static_cast<std::uint64_t>(dims[i - 1] - dims[i]));
  r /= pow(Rational(2), static_cast<std::uint64_t>(k));
  return r;
}

}  // namespace rbz
