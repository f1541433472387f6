#include <doctest.h>

#include <random>
#include <set>

#include "realbezout/univariate.hpp"
#include "support.hpp"

using namespace rbz;

namespace {

UniPoly from_roots(const std::vector<Rational>& roots) {
  UniPoly p({Rational(1)});
  for (const auto& r : roots) p = p * UniPoly({-r, Rational(1)});
  return p;
}

}  // namespace

TEST_CASE("divmod reconstructs the dividend") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a, b;
    for (int i = 0; i < 6; ++i) a.push_back(testing::small_rational(rng));
    for (int i = 0; i < 3; ++i) b.push_back(testing::small_rational(rng));
    b.push_back(Rational(1));
    UniPoly pa(a), pb(b), q, r;
    divmod(pa, pb, q, r);
    CHECK((q * pb - (UniPoly() - r)) == pa);
    CHECK(r.degree() < pb.degree());
  }
  UniPoly q, r;
  CHECK_THROWS_AS(divmod(UniPoly({Rational(1)}), UniPoly(), q, r), std::domain_error);
}

TEST_CASE("gcd and squarefree part") {
  const auto a = from_roots({Rational(1), Rational(2), Rational(2)});
  const auto b = from_roots({Rational(2), Rational(3)});
  CHECK(gcd(a, b) == from_roots({Rational(2)}));
  CHECK(squarefree_part(a) == from_roots({Rational(1), Rational(2)}));
  CHECK(gcd(UniPoly(), UniPoly()).is_zero());
}

TEST_CASE("exact square roots") {
  const auto g = from_roots({Rational(1), ratio(-1, 2)});
  UniPoly root;
  REQUIRE(uni_sqrt(g * g, root));
  CHECK(root == g);
  CHECK_FALSE(uni_sqrt(from_roots({Rational(1), Rational(2)}), root));

  // (x - 1)^2 - 5 becomes a square after adding 5.
  UniPoly shifted = g * g - UniPoly({Rational(5)});
  Rational c;
  REQUIRE(uni_sqrt_shifted(shifted, root, c));
  CHECK(c == 5);
  CHECK(root == g);
}

TEST_CASE("root counts on closed intervals") {
  const auto p = from_roots({Rational(-1), Rational(0), ratio(3, 2), Rational(2)});
  CHECK(count_roots_closed(p, Rational(-5), Rational(5)) == 4);
  CHECK(count_roots_closed(p, Rational(0), Rational(2)) == 3);
  CHECK(count_roots_closed(p, ratio(1, 10), ratio(19, 10)) == 1);
  CHECK(count_roots_closed(p * p, Rational(-5), Rational(5)) == 4);
  // x^2 + 1 has no real roots.
  CHECK(count_roots_closed(UniPoly({Rational(1), Rational(0), Rational(1)}), Rational(-9), Rational(9)) == 0);
}

TEST_CASE("isolation separates close roots") {
  const auto p = from_roots({ratio(1, 1000), ratio(2, 1000), Rational(5)});
  const auto roots = isolate_roots(p, Rational(-10), Rational(10));
  REQUIRE(roots.size() == 3);
  for (std::size_t i = 0; i + 1 < roots.size(); ++i) CHECK(roots[i].hi < roots[i + 1].lo);
  CHECK(roots[0].lo <= ratio(1, 1000));
  CHECK(ratio(1, 1000) <= roots[0].hi);
  CHECK(roots[2].lo <= 5);
  CHECK(5 <= roots[2].hi);
}

TEST_CASE("refinement converges on an irrational root") {
  // x^2 - 2
  const UniPoly p({Rational(-2), Rational(0), Rational(1)});
  auto roots = isolate_roots(p, Rational(0), Rational(2));
  REQUIRE(roots.size() == 1);
  for (int i = 0; i < 60; ++i) refine_root(p, roots[0]);
  CHECK_FALSE(roots[0].exact);
  CHECK(roots[0].lo * roots[0].lo < 2);
  CHECK(roots[0].hi * roots[0].hi > 2);
  CHECK(roots[0].hi - roots[0].lo < ratio(1, 1000000));
}

TEST_CASE("random root sets are recovered") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    std::set<Rational> distinct;
    std::vector<Rational> roots;
    const int n = 1 + static_cast<int>(rng() % 5);
    for (int i = 0; i < n; ++i) {
      roots.push_back(testing::small_rational(rng, 6, 3));
      distinct.insert(roots.back());
    }
    const auto p = from_roots(roots);
    const auto iso = isolate_roots(squarefree_part(p), Rational(-7), Rational(7));
    REQUIRE(iso.size() == distinct.size());
    auto it = distinct.begin();
    for (const auto& r : iso) {
      CHECK(r.lo <= *it);
      CHECK(*it <= r.hi);
      ++it;
    }
  }
}
