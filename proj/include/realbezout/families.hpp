#pragma once

#include <string>
#include <vector>

#include "realbezout/bounds.hpp"
#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz {

struct FamilyInstance {
  std::vector<Polynomial> system;
  Profile profile;
  BigInt exact_count;
  /// Every real zero, listed explicitly. Left empty when exact_count exceeds
  /// kMaxListedZeros.
  std::vector<std::vector<Rational>> zero_points;
  std::string provenance;  // e.g. "example11 d=3"
  /// A box with integer corners that contains every zero with margin 1.
  Box search_box;
};

inline constexpr std::size_t kMaxListedZeros = 1u << 20;

/// k = 3, (X3, X3, sum_{i=1,2} prod_{j=1}^{d} (X_i - j)^2). Zeros (i, j, 0).
FamilyInstance gen_example11(int d);

/// Block i uses X_j for k - k_{i-1} < j <= k - k_i; Q_i = sum over the block
/// of (prod_{h=1}^{d_i/2} (X_j - h))^2. `dims` is k_0..k_ell with k_0 = k and
/// k_ell = 0; each block must be non-empty. Degrees must be even.
FamilyInstance gen_example15(int k, const std::vector<int>& dims, const std::vector<std::int64_t>& degs);

/// 2^-k * prod d_i^(k_{i-1} - k_i), the count written with powers of d_i.
Rational example15_count_unreduced(int k, const std::vector<int>& dims, const std::vector<std::int64_t>& degs);

}  // namespace rbz
