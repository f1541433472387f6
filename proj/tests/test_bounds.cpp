#include <doctest.h>

#include <algorithm>
#include <functional>

#include "realbezout/bounds.hpp"

using namespace rbz;

namespace {

// Every tuple in [0,k]^j, filtered by the admissibility conditions.
std::vector<std::vector<int>> brute_admissible(int j, int k, const std::vector<int>& dims, bool cap_last) {
  std::vector<std::vector<int>> out;
  std::vector<int> t(static_cast<std::size_t>(j), 0);
  std::function<void(int)> rec = [&](int pos) {
    if (pos == j) {
      for (int i = 1; i < j; ++i)
        if (t[static_cast<std::size_t>(i)] > t[static_cast<std::size_t>(i - 1)]) return;
      for (int i = 0; i < j; ++i) {
        const bool capped = i + 1 < j || cap_last;
        if (capped && t[static_cast<std::size_t>(i)] > dims[static_cast<std::size_t>(i)]) return;
      }
      out.push_back(t);
      return;
    }
    for (int v = 0; v <= k; ++v) {
      t[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1);
    }
  };
  rec(0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

void all_dims(int k, int len, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> d(static_cast<std::size_t>(len));
  std::function<void(int, int)> rec = [&](int pos, int upper) {
    if (pos == len) {
      fn(d);
      return;
    }
    for (int v = upper; v >= 0; --v) {
      d[static_cast<std::size_t>(pos)] = v;
      rec(pos + 1, v);
    }
  };
  rec(0, k);
}

// (n)! / prod parts! computed from prime-free repeated division, independent of f_factor.
BigInt multinomial_oracle(const std::vector<int>& parts) {
  BigInt result = 1;
  int total = 0;
  for (int p : parts) {
    for (int i = 1; i <= p; ++i) {
      ++total;
      result *= total;
      result /= i;
    }
  }
  return result;
}

}  // namespace

TEST_SUITE("admissible") {
  TEST_CASE("small instances") {
    const std::vector<int> none;
    const std::vector<int> three{3};
    CHECK(enumerate_admissible(1, 3, three, false).size() == 4);
    const std::vector<int> two{2, 2};
    auto t = enumerate_admissible(2, 2, two, false);
    REQUIRE(t.size() == 6);
    CHECK(t.front().entries == std::vector<int>{2, 2});
    CHECK(t.back().entries == std::vector<int>{0, 0});
    CHECK(enumerate_admissible(0, 4, none, false).size() == 1);
  }

  TEST_CASE("matches brute force and the stars-and-bars ceiling") {
    for (int k = 0; k <= 6; ++k) {
      for (int j = 1; j <= 4; ++j) {
        all_dims(k, j, [&](const std::vector<int>& dims) {
          for (bool cap : {false, true}) {
            auto got = enumerate_admissible(j, k, dims, cap);
            auto want = brute_admissible(j, k, dims, cap);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].entries == want[i]);
            CHECK(BigInt(static_cast<unsigned long>(got.size())) <= binomial(static_cast<std::uint64_t>(k + j), static_cast<std::uint64_t>(j)));
          }
        });
      }
    }
  }

  TEST_CASE("rejects non-monotone dims") {
    const std::vector<int> bad{1, 2};
    CHECK_THROWS_AS(enumerate_admissible(2, 3, bad, true), std::invalid_argument);
    const std::vector<int> big{4};
    CHECK_THROWS_AS(enumerate_admissible(1, 3, big, true), std::invalid_argument);
  }
}

TEST_SUITE("f_factor") {
  TEST_CASE("values") {
    const std::vector<int> lone{4};
    CHECK(f_factor(4, lone) == 1);
    const std::vector<int> c{3, 2, 2};
    CHECK(f_factor(3, c) == 2);
    CHECK(lemma58_card(3, c) == 2);
    const std::vector<int> flat{3, 3, 3};
    CHECK(lemma58_card(3, flat) == 1);
    const std::vector<int> bad{3, 4};
    CHECK_THROWS_AS(f_factor(3, bad), std::invalid_argument);
  }

  TEST_CASE("agrees with independent oracles on every chain") {
    for (int k = 0; k <= 6; ++k) {
      for (int len = 1; len <= 4; ++len) {
        const std::vector<int> dims(static_cast<std::size_t>(len), k);
        for (const auto& t : enumerate_admissible(len, k, dims, true)) {
          const auto chain = t.chain(k);
          std::vector<int> parts;
          for (std::size_t i = 1; i < chain.size(); ++i) parts.push_back(chain[i - 1] - chain[i]);
          const BigInt want = BigInt(k - chain.back() + 1) * multinomial_oracle(parts);
          CHECK(f_factor(k, chain) == want);
          CHECK(lemma58_card(k, chain) == want);
          CHECK(f_factor(k, chain) >= 1);
        }
      }
    }
  }

  TEST_CASE("multinomial sums give powers") {
    // Summing multinomial(k - t; parts) over all chains of m steps ending at t
    // counts words of length k - t over m letters: m^(k - t).
    for (int k = 0; k <= 5; ++k) {
      for (int m = 1; m <= 3; ++m) {
        for (int last = 0; last <= k; ++last) {
          BigInt sum = 0;
          std::vector<int> chain{k};
          std::function<void(int)> rec = [&](int step) {
            if (step == m) {
              if (chain.back() != last) return;
              sum += f_factor(k, chain) / (k - last + 1);
              return;
            }
            for (int v = chain.back(); v >= last; --v) {
              chain.push_back(v);
              rec(step + 1);
              chain.pop_back();
            }
          };
          rec(0);
          CHECK(sum == pow(BigInt(m), static_cast<std::uint64_t>(k - last)));
        }
      }
    }
  }
}

TEST_SUITE("component bound") {
  TEST_CASE("ell = 1 collapses to d^k") {
    for (int k = 1; k <= 6; ++k) {
      for (int d = 1; d <= 6; ++d) {
        const auto r = theorem12_bound(Profile{k, {d}, {k, 0}});
        CHECK(r.structural_sum == pow(BigInt(d), static_cast<std::uint64_t>(k)));
        CHECK(r.per_tau_terms.size() == 1);
      }
    }
    const auto r = theorem12_bound(Profile{2, {3}, {2, 0}});
    CHECK(r.structural_sum == 9);
  }

  TEST_CASE("example 11 profile") {
    const auto r = theorem12_bound(Profile{3, {1, 1, 6}, {3, 2, 2, 0}});
    CHECK(r.hypothesis_violated);
    CHECK(r.witness_term == 72);
    CHECK(r.structural_sum >= 72);
    CHECK(r.structural_sum >= 9);
    bool found = false;
    for (const auto& t : r.per_tau_terms) {
      if (t.chain == std::vector<int>{3, 2, 2}) {
        found = true;
        CHECK(t.f == 2);
        CHECK(t.term == 72);
      }
    }
    CHECK(found);
  }

  TEST_CASE("example 15 instance") {
    const auto r = theorem12_bound(Profile{2, {2, 4}, {2, 1, 0}});
    CHECK_FALSE(r.hypothesis_violated);
    // F(2, (2,1)) = 2, times ((2-2+1)*2)^1 * 4^1 = 8
    CHECK(r.witness_term == 16);
    CHECK(r.witness_term / f_factor(2, std::vector<int>{2, 1}) == 8);
    CHECK(r.structural_sum >= r.witness_term);
    CHECK(r.structural_sum >= 2);
  }

  TEST_CASE("sum, witness and degree-product ordering") {
    for (int k = 1; k <= 4; ++k) {
      for (int ell = 1; ell <= 3; ++ell) {
        all_dims(k, ell, [&](const std::vector<int>& rest) {
          std::vector<int> dims{k};
          dims.insert(dims.end(), rest.begin(), rest.end());
          std::vector<std::int64_t> degs;
          for (int i = 0; i < ell; ++i) degs.push_back(2 + 3 * i);
          const Profile p{k, degs, dims};
          const auto r = theorem12_bound(p, Rational(3, 2));
          BigInt sum = 0, reverse = 0;
          for (const auto& t : r.per_tau_terms) sum += t.term;
          for (auto it = r.per_tau_terms.rbegin(); it != r.per_tau_terms.rend(); ++it) reverse += it->term;
          CHECK(sum == r.structural_sum);
          CHECK(reverse == r.structural_sum);
          CHECK(r.witness_term <= r.structural_sum);
          BigInt prod = 1;
          for (int i = 1; i < ell; ++i) prod *= pow(BigInt(static_cast<long>(p.d(i))), static_cast<std::uint64_t>(p.dim(i - 1) - p.dim(i)));
          prod *= pow(BigInt(static_cast<long>(p.d(ell))), static_cast<std::uint64_t>(p.dim(ell - 1)));
          CHECK(r.witness_term >= prod);
          CHECK(r.asymptotic_value == pow(Rational(3, 2), static_cast<std::uint64_t>(k)) * Rational(r.structural_sum));
        });
      }
    }
  }

  TEST_CASE("degenerate and invalid profiles") {
    const auto r = theorem12_bound(Profile{3, {}, {3}});
    CHECK(r.degenerate);
    CHECK(r.structural_sum == 1);
    CHECK_THROWS_AS(theorem12_bound(Profile{3, {2}, {2, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(theorem12_bound(Profile{3, {2, 2}, {3, 1, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(theorem12_bound(Profile{3, {0}, {3, 0}}), std::invalid_argument);
  }
}

TEST_SUITE("sign-condition bound") {
  TEST_CASE("envelope") {
    CHECK(sign_envelope(3, 2) == 61);
    CHECK(sign_envelope(0, 5) == 1);
  }

  TEST_CASE("empty family keeps only delta") {
    const Profile p{2, {2, 4}, {2, 1, 0}};
    const auto r = theorem16_bound(p, 0, 40);
    CHECK(r.envelope == 1);
    CHECK(r.structural_total == r.delta.structural_sum);
  }

  TEST_CASE("example 15 instance with one linear polynomial") {
    const auto r = theorem16_bound(Profile{2, {2, 4}, {2, 1, 0}}, 1, 1);
    CHECK(r.degree_hypothesis_violated);
    CHECK(r.delta.structural_sum == 108);
    CHECK(r.structural_total == 108);
    CHECK(r.structural_total >= 2);
  }

  TEST_CASE("ell = 1 dominant term has the shape (s d)^k1 d1^(k-k1)") {
    for (int k = 1; k <= 4; ++k) {
      for (int k1 = 0; k1 <= k; ++k1) {
        const std::int64_t d1 = 3, d = 5, s = 4;
        const auto r = theorem16_bound(Profile{k, {d1}, {k, k1}}, s, d);
        // the tau = (k, k1) term with j = k1 in the envelope
        const BigInt shape = pow(BigInt(s * d), static_cast<std::uint64_t>(k1)) * pow(BigInt(d1), static_cast<std::uint64_t>(k - k1));
        CHECK(r.structural_total >= shape);
        CHECK(r.delta.per_tau_terms.size() == static_cast<std::size_t>(k1 + 1));
      }
    }
  }
}

TEST_SUITE("subset bound and friends") {
  TEST_CASE("d_I") {
    const std::vector<std::int64_t> five{5};
    auto a = theorem18_dI(3, 1, five);
    CHECK(a.value == 5);
    const std::vector<std::int64_t> two_three{2, 3};
    auto b = theorem18_dI(2, 2, two_three);
    CHECK(b.value == 18);
    const std::vector<std::int64_t> none;
    auto c = theorem18_dI(2, 2, none);
    CHECK(c.degenerate);
    const std::vector<std::int64_t> three{2, 3, 4};
    CHECK(theorem18_dI(2, 2, three).over_dimension);
  }

  TEST_CASE("subset bound total") {
    const std::vector<std::int64_t> fam{2, 3};
    const auto r = theorem18_bound(Profile{2, {2}, {2, 1}}, fam);
    // subsets: {} -> 1 * (k+1)^0 * ... ; {2}, {3} with k_ell = 1
    CHECK(r.degree_product == 2);
    CHECK(r.subsets == 3);
    const std::vector<std::int64_t> e0{}, e1{2}, e2{3};
    BigInt want = BigInt(theorem18_dI(2, 1, e0).value.get_num()) + 4 * BigInt(theorem18_dI(2, 1, e1).value.get_num()) +
                  4 * BigInt(theorem18_dI(2, 1, e2).value.get_num());
    CHECK(r.structural_total == want * 2);
  }

  TEST_CASE("complete intersection bound") {
    const std::vector<std::int64_t> conics{2, 2};
    CHECK(prop52_bound(2, conics) == 6);
    for (std::int64_t d = 1; d < 8; ++d) {
      const std::vector<std::int64_t> one{d};
      CHECK(prop52_bound(1, one) == BigInt(static_cast<long>(d + 2)));
    }
    const std::vector<std::int64_t> three{2, 3, 5};
    CHECK(prop52_bound(3, three) == 2 * 3 * 5 + 2);
    const std::vector<std::int64_t> unsorted{3, 2};
    CHECK_THROWS_AS(prop52_bound(2, unsorted), std::invalid_argument);
    CHECK_THROWS_AS(prop52_bound(1, conics), std::invalid_argument);
  }

  TEST_CASE("degree ladder ratio") {
    const Profile p{3, {2, 2, 8}, {3, 2, 1, 0}};
    REQUIRE(p.ladder_ok());
    CHECK(lemma56_ratio(p, std::vector<int>{3, 2, 1}) == 1);
    const Rational bound = pow(Rational(4), 3);
    for (const auto& t : enumerate_admissible(2, 3, std::vector<int>{2, 1}, true)) {
      CHECK(lemma56_ratio(p, t.chain(3)) <= bound);
    }
    CHECK_THROWS_AS(lemma56_ratio(Profile{3, {1, 1, 6}, {3, 2, 2, 0}}, std::vector<int>{3, 2, 2}), std::domain_error);
  }
}
