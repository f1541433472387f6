#include <doctest.h>

#include <chrono>

#include "realbezout/components.hpp"
#include "realbezout/families.hpp"
#include "support.hpp"

using namespace rbz;
using testing::C;
using testing::X;

namespace {

Box square_box(std::size_t n, long lo, long hi) { return Box(n, Interval(Rational(lo), Rational(hi))); }

Polynomial circle() { return X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1) - C(2, 1); }

}  // namespace

TEST_CASE("circle is one cluster") {
  const auto r = count_components({circle()}, square_box(2, -2, 2));
  CHECK(r.upper == 1);
  CHECK(r.lower <= 1);
  CHECK_FALSE(r.exact);
}

TEST_CASE("example 11 d=2 is exact") {
  const auto f = gen_example11(2);
  const auto r = count_components(f.system, f.search_box);
  CHECK(r.exact);
  CHECK(r.lower == 4);
  CHECK(r.upper == 4);
}

TEST_CASE("example 15 two-variable instance is exact") {
  const auto f = gen_example15(2, {2, 1, 0}, {2, 4});
  const auto r = count_components(f.system, square_box(2, 0, 3));
  CHECK(r.exact);
  CHECK(r.lower == 2);
}

TEST_CASE("counts agree with the family oracle") {
  for (int d = 1; d <= 4; ++d) {
    const auto f = gen_example11(d);
    const auto r = count_components(f.system, f.search_box);
    REQUIRE(r.exact);
    CHECK(BigInt(static_cast<unsigned long>(r.lower)) == f.exact_count);
  }
  const auto g = gen_example15(3, {3, 1, 0}, {4, 4});
  const auto r = count_components(g.system, g.search_box);
  REQUIRE(r.exact);
  CHECK(BigInt(static_cast<unsigned long>(r.lower)) == g.exact_count);
}

TEST_CASE("partial example 11 system gives a plane") {
  // Only X3 = 0: the plane is one component of dimension 2.
  const auto r = count_components({X(3, 2)}, square_box(3, 0, 3));
  CHECK(r.exact);
  CHECK(r.lower == 1);
  REQUIRE(r.clusters.size() == 1);
  CHECK(r.clusters[0].dimension == 2);
}

TEST_CASE("separated parallel lines") {
  // (X1 - 1)(X1 + 1) = 0: two vertical lines.
  const auto p = (X(2, 0) - C(2, 1)) * (X(2, 0) + C(2, 1));
  const auto r = count_components({p}, square_box(2, -3, 3));
  CHECK(r.exact);
  CHECK(r.lower == 2);
}

TEST_CASE("empty zero set") {
  const auto p = X(2, 0) * X(2, 0) + X(2, 1) * X(2, 1) + C(2, 1);
  const auto r = count_components({p}, square_box(2, -2, 2));
  CHECK(r.exact);
  CHECK(r.upper == 0);
}

TEST_CASE("square system certified by Krawczyk") {
  // Circle meets the line X1 = X2 in two irrational points.
  const auto r = count_components({circle(), X(2, 0) - X(2, 1)}, square_box(2, -2, 2));
  CHECK(r.exact);
  CHECK(r.lower == 2);
}

TEST_CASE("budget exhaustion is reported, not thrown") {
  // A tangency: X2 = X1^2 touches X2 = 0 at a double point, never certified.
  const auto r = count_components({X(2, 1) - X(2, 0) * X(2, 0), X(2, 1)}, square_box(2, -1, 1),
                                  CountOptions{.max_depth = 4});
  CHECK_FALSE(r.exact);
  CHECK(r.upper >= 1);
  CHECK(r.lower <= r.upper);
}

TEST_CASE("bad input throws") {
  CHECK_THROWS_AS(count_components({}, square_box(2, 0, 1)), std::invalid_argument);
  CHECK_THROWS_AS(count_components({X(3, 0)}, square_box(2, 0, 1)), std::invalid_argument);
}

TEST_CASE("excluded cells hold no oracle zero") {
  CountOptions opts;
  opts.keep_excluded = true;
  opts.min_depth = 3;
  for (int d = 1; d <= 3; ++d) {
    const auto f = gen_example11(d);
    const auto r = count_components(f.system, f.search_box, opts);
    std::size_t excluded = 0;
    for (const auto& cell : r.complex.cells) {
      if (cell.status != CellStatus::kExcluded) continue;
      ++excluded;
      for (const auto& z : f.zero_points) CHECK_FALSE(box_contains(cell.box, z));
    }
    CHECK(excluded > 0);
  }
  const auto g = gen_example15(2, {2, 1, 0}, {2, 4});
  const auto r = count_components(g.system, g.search_box, opts);
  for (const auto& cell : r.complex.cells)
    if (cell.status == CellStatus::kExcluded)
      for (const auto& z : g.zero_points) CHECK_FALSE(box_contains(cell.box, z));
}

TEST_CASE("upper does not grow with depth") {
  const std::vector<std::pair<std::vector<Polynomial>, Box>> instances = {
      {{circle()}, square_box(2, -2, 2)},
      {gen_example11(2).system, gen_example11(2).search_box},
      {gen_example15(2, {2, 1, 0}, {2, 4}).system, square_box(2, 0, 3)},
      {gen_example11(3).system, gen_example11(3).search_box},
      {gen_example15(3, {3, 2, 0}, {2, 2}).system, gen_example15(3, {3, 2, 0}, {2, 2}).search_box},
  };
  for (const auto& [eqs, box] : instances) {
    std::uint64_t prev = std::numeric_limits<std::uint64_t>::max();
    for (int depth = 0; depth <= 8; ++depth) {
      const auto r = count_components(eqs, box, CountOptions{.max_depth = depth});
      CHECK(r.upper <= prev);
      CHECK(r.lower <= r.upper);
      prev = r.upper;
    }
  }
}

TEST_CASE("an uncertified cluster may split as depth grows") {
  // Circle and diagonal: one cluster while both zeros share it, two afterwards.
  const std::vector<Polynomial> eqs = {circle(), X(2, 0) - X(2, 1)};
  const auto coarse = count_components(eqs, square_box(2, -2, 2), CountOptions{.max_depth = 1});
  const auto fine = count_components(eqs, square_box(2, -2, 2), CountOptions{.max_depth = 8});
  CHECK_FALSE(coarse.exact);
  CHECK(coarse.upper == 1);
  CHECK(fine.exact);
  CHECK(fine.upper == 2);
}

TEST_CASE("vertex adjacency never splits more than facet adjacency") {
  CountOptions facet{.max_depth = 5};
  CountOptions vertex{.max_depth = 5, .vertex_adjacency = true};
  const auto a = count_components({circle()}, square_box(2, -2, 2), facet);
  const auto b = count_components({circle()}, square_box(2, -2, 2), vertex);
  CHECK(b.upper <= a.upper);
}

TEST_CASE("census on the two-point variety") {
  const auto f = gen_example15(2, {2, 1, 0}, {2, 4});
  const Box box = square_box(2, 0, 3);

  const auto plus = sign_census({X(2, 0)}, f.system, box);
  CHECK(plus.exact);
  REQUIRE(plus.per_sign.size() == 1);
  CHECK(plus.per_sign.begin()->first == SignConditionKey{1});
  CHECK(plus.per_sign.begin()->second.lower == 2);
  CHECK(plus.total_upper == 2);

  const auto split = sign_census({X(2, 1) - C(2, ratio(3, 2))}, f.system, box);
  CHECK(split.exact);
  REQUIRE(split.per_sign.size() == 2);
  CHECK(split.per_sign.at({-1}).lower == 1);
  CHECK(split.per_sign.at({1}).lower == 1);
  CHECK(split.total_lower == 2);
  CHECK(split.total_upper == 2);
}

TEST_CASE("census partition matches oracle zeros") {
  const auto f = gen_example11(3);
  const std::vector<Polynomial> fam = {X(3, 0) - X(3, 1), X(3, 0) - C(3, 2)};
  const auto c = sign_census(fam, f.system, f.search_box);
  REQUIRE(c.exact);
  std::map<SignConditionKey, std::uint64_t> oracle;
  for (const auto& z : f.zero_points) {
    SignConditionKey key;
    for (const auto& p : fam) key.push_back(sgn(eval(p, z)));
    ++oracle[key];
  }
  REQUIRE(c.per_sign.size() == oracle.size());
  for (const auto& [key, n] : oracle) {
    CHECK(c.per_sign.at(key).lower == n);
    CHECK(c.per_sign.at(key).upper == n);
  }
  CHECK(c.total_upper == 9);
}

TEST_CASE("census with an empty family") {
  const auto f = gen_example11(2);
  const auto c = sign_census({}, f.system, f.search_box);
  REQUIRE(c.per_sign.size() == 1);
  CHECK(c.per_sign.begin()->first.empty());
  const auto direct = count_components(f.system, f.search_box);
  CHECK(c.per_sign.begin()->second.lower == direct.lower);
  CHECK(c.per_sign.begin()->second.upper == direct.upper);
}

TEST_CASE("census on a curve counts pieces per sign") {
  // Circle cut by X1: the arcs X1 > 0 and X1 < 0 plus two points with X1 = 0.
  const auto c = sign_census({X(2, 0)}, {circle()}, square_box(2, -2, 2));
  CHECK(c.per_sign.count({1}) == 1);
  CHECK(c.per_sign.count({-1}) == 1);
  CHECK(c.total_upper >= 2);
}

TEST_CASE("perturbation family") {
  const Rational eps = ratio(1, 100), delta = ratio(1, 10);
  const auto fam = perturbation_family({X(1, 0)}, eps, delta, {Rational(1)});
  REQUIRE(fam.size() == 4);
  CHECK(fam[0].poly == X(1, 0) + C(1, eps));
  CHECK(fam[1].poly == X(1, 0) - C(1, eps));
  CHECK(fam[2].poly == X(1, 0) + C(1, delta));
  CHECK(fam[3].poly == X(1, 0) - C(1, delta));
  CHECK(fam[1].sign == -1);
  CHECK(fam[2].kind == PerturbKind::kDelta);

  CHECK_THROWS_AS(perturbation_family({X(1, 0)}, eps, delta, {Rational(0)}), std::invalid_argument);
  CHECK_THROWS_AS(perturbation_family({X(1, 0)}, eps, delta, {Rational(-1)}), std::invalid_argument);
  CHECK_THROWS_AS(perturbation_family({X(1, 0)}, Rational(0), delta, {Rational(1)}), std::invalid_argument);
  CHECK_THROWS_AS(perturbation_family({X(1, 0)}, eps, delta, {}), std::invalid_argument);
}

TEST_CASE("perturbation family members are distinct for generic gammas") {
  std::mt19937_64 rng(3);
  const std::vector<Polynomial> fam = {X(2, 0), X(2, 1), X(2, 0) * X(2, 1)};
  const std::vector<Rational> gammas = {ratio(3, 7), ratio(5, 11), ratio(2, 13)};
  const auto pert = perturbation_family(fam, ratio(1, 1000), ratio(1, 100), gammas);
  CHECK(pert.size() == 12);
  for (std::size_t i = 0; i < pert.size(); ++i)
    for (std::size_t j = i + 1; j < pert.size(); ++j) CHECK_FALSE(pert[i].poly == pert[j].poly);
}

TEST_CASE("perturbed subsets miss a finite variety") {
  const auto f = gen_example15(2, {2, 1, 0}, {2, 4});
  const std::vector<Polynomial> fam = {X(2, 0) - C(2, 1), X(2, 1) - C(2, 2)};
  const std::vector<Rational> gammas = {ratio(17, 29), ratio(23, 31)};
  const auto pert = perturbation_family(fam, ratio(1, 997), ratio(1, 89), gammas);
  for (std::size_t i = 0; i < fam.size(); ++i)
    for (int sign : {1, -1})
      for (auto kind : {PerturbKind::kEps, PerturbKind::kDelta}) {
        const auto sub = perturbation_subset(pert, {{i, sign, kind}});
        REQUIRE(sub.size() == 1);
        for (const auto& z : f.zero_points) CHECK(eval(sub[0], z) != 0);
      }
}
