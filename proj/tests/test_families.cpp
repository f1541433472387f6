#include <doctest.h>

#include <set>

#include "realbezout/bounds.hpp"
#include "realbezout/families.hpp"

using namespace rbz;

namespace {

// Every zero of these families has integer coordinates, so scanning the
// integer points of the search box finds all of them.
std::vector<std::vector<Rational>> integer_zeros(const FamilyInstance& f) {
  const std::size_t k = f.search_box.size();
  std::vector<long> lo(k), hi(k), cur(k);
  for (std::size_t v = 0; v < k; ++v) {
    lo[v] = f.search_box[v].lo().get_num().get_si();
    hi[v] = f.search_box[v].hi().get_num().get_si();
    cur[v] = lo[v];
  }
  std::vector<std::vector<Rational>> out;
  while (true) {
    std::vector<Rational> pt;
    for (auto c : cur) pt.emplace_back(c);
    bool zero = true;
    for (const auto& p : f.system) zero = zero && eval(p, pt) == 0;
    if (zero) out.push_back(pt);
    std::size_t pos = k;
    while (pos > 0 && cur[pos - 1] == hi[pos - 1]) {
      --pos;
      cur[pos] = lo[pos];
    }
    if (pos == 0) break;
    ++cur[pos - 1];
  }
  return out;
}

std::set<std::vector<Rational>> as_set(const std::vector<std::vector<Rational>>& pts) {
  return {pts.begin(), pts.end()};
}

}  // namespace

TEST_CASE("example 11 zero list matches a grid scan") {
  for (int d = 1; d <= 4; ++d) {
    const auto f = gen_example11(d);
    CHECK(f.exact_count == d * d);
    CHECK(f.zero_points.size() == static_cast<std::size_t>(d * d));
    CHECK(as_set(f.zero_points) == as_set(integer_zeros(f)));
    CHECK(f.system.size() == 3);
    CHECK(f.system[2].degree() == 2 * d);
    CHECK(f.profile.k == 3);
  }
}

TEST_CASE("example 11 box has margin one around every zero") {
  const auto f = gen_example11(3);
  for (const auto& iv : f.search_box) {
    CHECK(iv.lo() == 0);
    CHECK(iv.hi() == 4);
  }
  CHECK_THROWS_AS(gen_example11(0), std::invalid_argument);
}

TEST_CASE("example 11 breaks the naive degree product") {
  // deg product of (X3, X3, Q3) is 2d, the point count is d^2.
  const auto f = gen_example11(3);
  BigInt prod = 1;
  for (const auto& p : f.system) prod *= p.degree();
  CHECK(f.exact_count > prod);
}

TEST_CASE("example 15 instances") {
  struct Case {
    int k;
    std::vector<int> dims;
    std::vector<std::int64_t> degs;
    long count;
  };
  const std::vector<Case> cases = {
      {2, {2, 1, 0}, {2, 4}, 2}, {3, {3, 1, 0}, {4, 4}, 8}, {3, {3, 2, 0}, {2, 2}, 1}, {2, {2, 0}, {6}, 9}};
  for (const auto& c : cases) {
    const auto f = gen_example15(c.k, c.dims, c.degs);
    CHECK(f.exact_count == c.count);
    CHECK(f.zero_points.size() == static_cast<std::size_t>(c.count));
    CHECK(as_set(f.zero_points) == as_set(integer_zeros(f)));
    // The unreduced formula gives the same number.
    CHECK(example15_count_unreduced(c.k, c.dims, c.degs) == Rational(c.count));
    for (std::size_t i = 0; i < f.system.size(); ++i) CHECK(f.system[i].degree() == c.degs[i]);
  }
}

TEST_CASE("example 15 two-variable zeros") {
  const auto f = gen_example15(2, {2, 1, 0}, {2, 4});
  CHECK(as_set(f.zero_points) == std::set<std::vector<Rational>>{{Rational(1), Rational(1)}, {Rational(1), Rational(2)}});
  for (const auto& iv : f.search_box) CHECK(iv == Interval(Rational(0), Rational(3)));
}

TEST_CASE("example 15 rejects bad input") {
  CHECK_THROWS_AS(gen_example15(2, {2, 1, 0}, {3, 4}), std::invalid_argument);
  CHECK_THROWS_AS(gen_example15(2, {2, 1, 1}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(gen_example15(2, {2, 2, 0}, {2, 4}), std::invalid_argument);
  CHECK_THROWS_AS(gen_example15(2, {2, 1, 0}, {2}), std::invalid_argument);
}

TEST_CASE("large example 15 counts are not listed") {
  const auto f = gen_example15(6, {6, 0}, {22});
  CHECK(f.exact_count == BigInt(1771561));
  CHECK(f.zero_points.empty());
}

TEST_CASE("family counts stay under the component structural sum") {
  for (int d = 1; d <= 4; ++d) {
    const auto f = gen_example11(d);
    CHECK(theorem12_bound(f.profile).structural_sum >= f.exact_count);
  }
  const auto f = gen_example15(3, {3, 1, 0}, {4, 4});
  CHECK(theorem12_bound(f.profile).structural_sum >= f.exact_count);
}
