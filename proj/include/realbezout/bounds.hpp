#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "realbezout/rational.hpp"

namespace rbz {

/// Degree/dimension ladder of a sequence of varieties V_1 ⊇ V_2 ⊇ ... ⊇ V_ell
/// in R^k: deg Q_i <= degs[i-1] and dim V_i <= dims[i], with dims[0] = k.
struct Profile {
  int k = 0;
  std::vector<std::int64_t> degs;  // d_1..d_ell
  std::vector<int> dims;           // k_0..k_ell

  int ell() const { return static_cast<int>(degs.size()); }
  /// d_i with 1-based i.
  std::int64_t d(int i) const { return degs.at(static_cast<std::size_t>(i - 1)); }
  /// k_i with the convention k_i = k for i <= 0.
  int dim(int i) const { return i <= 0 ? k : dims.at(static_cast<std::size_t>(i)); }

  /// Throws std::invalid_argument when the ladder is malformed.
  void validate() const;
  /// 2 <= d_1 <= d_2 and (k+1) d_i <= d_{i+1} for i >= 2.
  bool ladder_ok() const;
};

/// A tuple (tau_1..tau_j). Most bound formulas work on the chain
/// (tau_0 = k, tau_1, ..., tau_j), which chain(k) builds.
struct AdmissibleTuple {
  std::vector<int> entries;

  std::vector<int> chain(int k) const;
  friend bool operator==(const AdmissibleTuple&, const AdmissibleTuple&) = default;
};

/// All tuples with k >= tau_1 >= ... >= tau_j >= 0 and tau_i <= dims[i-1] for
/// i < j (and for i = j too when cap_last), in lexicographically decreasing
/// order. `dims` holds k_1..k_j. Throws on non-monotone dims.
std::vector<AdmissibleTuple> enumerate_admissible(int j, int k, std::span<const int> dims, bool cap_last);

/// (k - t + 1) * multinomial(k - t; chain[0]-chain[1], ...), t = chain.back().
/// The chain must start at k and be non-increasing.
BigInt f_factor(int k, std::span<const int> chain);

/// Telescoping product prod_j C(k - tau_j + 1, k - tau_{j-1} + 1) over the chain.
/// Equal to f_factor; computed independently.
BigInt lemma58_card(int k, std::span<const int> chain);

struct TauTerm {
  std::vector<int> chain;
  BigInt f;
  BigInt term;  // includes the factor f
};

struct BoundReport {
  BigInt structural_sum;
  std::vector<TauTerm> per_tau_terms;
  Rational constant_base{1};
  Rational asymptotic_value;  // constant_base^k * structural_sum
  bool hypothesis_violated = false;
  bool degenerate = false;  // ell = 0
  BigInt witness_term;      // term at tau = (k, k_1, ..., k_{ell-1})
};

/// Sum over chains (k, tau_1..tau_{ell-1}), tau_i <= k_i, of
/// F(k, tau) * d_ell^tau_{ell-1} * prod_{i<ell} ((k - tau_{i-1} + 1) d_i)^(tau_{i-1} - tau_i).
BoundReport theorem12_bound(const Profile& p, const Rational& c = Rational(1));

struct Theorem16Report {
  BoundReport delta;       // per-tau terms of Delta and Delta itself
  BigInt envelope;         // sum_{j=0}^{k_ell} 4^j C(s, j)
  BigInt structural_total; // envelope * Delta
  Rational asymptotic_total;
  bool degree_hypothesis_violated = false;  // (k+1) d_ell > d
};

/// Sign-condition bound over a family of s polynomials of degree <= d.
Theorem16Report theorem16_bound(const Profile& p, std::int64_t s, std::int64_t d, const Rational& c = Rational(1));

/// sum_{j=0}^{top} 4^j C(s, j)
BigInt sign_envelope(std::int64_t s, int top);

struct SubsetDegree {
  Rational value;  // an integer whenever card I <= k_ell
  bool over_dimension = false;  // card I > k_ell
  bool degenerate = false;      // empty I
};

/// d_I = (k+1)^(C(m,2) + (k_ell - m)(m - 1)) * prod d_P * (max d_P)^(k_ell - m), m = card I.
SubsetDegree theorem18_dI(int k, int k_ell, std::span<const std::int64_t> degs_in_subset);

struct Theorem18Report {
  BigInt degree_product;  // prod_{1<=j<=ell} d_j^(k_{j-1} - k_j)
  BigInt structural_total;  // sum over I, card I <= k_ell, of 4^card(I) d_I * degree_product
  std::size_t subsets = 0;
};

Theorem18Report theorem18_bound(const Profile& p, std::span<const std::int64_t> family_degs);

/// C(k+1, m+1) d_1...d_{m-1} d_m^(k-m+1) + 2(k-m+1); degs sorted non-decreasing, 1 <= m <= k.
BigInt prop52_bound(int k, std::span<const std::int64_t> degs);

/// Ratio of the tau-term to the tau = (k, k_1, ...) term (both without F).
/// Throws std::domain_error when the profile's ladder is violated.
Rational lemma56_ratio(const Profile& p, std::span<const int> chain);

}  // namespace rbz
