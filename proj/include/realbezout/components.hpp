#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz {

enum class CellStatus { kExcluded, kCandidate, kCertified };

struct Cell {
  std::vector<std::int64_t> index;  // position in the 2^depth grid along each axis
  int depth = 0;
  CellStatus status = CellStatus::kCandidate;
  Box box;
  std::vector<Interval> enclosures;  // one per equation
};

/// Final state of a subdivision run. Excluded cells are recorded only when
/// CountOptions::keep_excluded is set.
struct CellComplex {
  Box root;
  std::vector<Cell> cells;
};

struct CountOptions {
  int max_depth = 12;
  /// Clusters are not certified above this depth; forces some subdivision.
  int min_depth = 0;
  bool vertex_adjacency = false;
  bool keep_excluded = false;
  /// Refinement stops early once a level would exceed this many cells.
  std::size_t max_cells = 1u << 18;
};

struct ClusterReport {
  Box hull;
  std::uint64_t components = 1;  // exact when certified, else a guess of 1
  int dimension = -1;            // local dimension when known
  bool certified = false;
  std::size_t cells = 0;
};

struct CountResult {
  std::uint64_t lower = 0;
  std::uint64_t upper = 0;
  bool exact = false;
  int depth_used = 0;
  bool budget_hit = false;
  bool positive_dimensional = false;
  std::vector<ClusterReport> clusters;
  CellComplex complex;
};

/// Counts connected components of {equations = 0} inside `box` by adaptive
/// bisection. A cluster of cells is certified when its hull is disjoint from
/// every other cluster and the zero set inside the hull is known: either the
/// system splits into univariate constraints (possibly via sums of squares of
/// univariate polynomials) whose roots are isolated exactly, or a square
/// system passes the Krawczyk test. Throws std::invalid_argument when the
/// equations are empty or their variable count differs from the box.
CountResult count_components(const std::vector<Polynomial>& equations, const Box& box, const CountOptions& opts = {});

/// Entries in {-1, 0, 1}, one per polynomial of the family.
using SignConditionKey = std::vector<int>;

struct CensusResult {
  std::map<SignConditionKey, CountResult> per_sign;  // only realized keys
  std::uint64_t total_lower = 0;
  std::uint64_t total_upper = 0;
  bool exact = false;
  CountResult components;  // the underlying count on the equations
};

/// Components of each sign-condition realization on {equations = 0} in `box`.
/// Zeros whose sign vector cannot be decided are counted in every compatible
/// key, which is then marked inexact.
CensusResult sign_census(const std::vector<Polynomial>& family, const std::vector<Polynomial>& equations,
                         const Box& box, const CountOptions& opts = {});

enum class PerturbKind { kEps, kDelta };

struct PerturbedPolynomial {
  Polynomial poly;
  std::size_t index;  // position of the source polynomial in the family
  int sign;           // +1 or -1
  PerturbKind kind;
};

/// P_i + sign * e * gamma_i for e in {eps, delta} and both signs: 4s entries,
/// ordered by i, then (+eps, -eps, +delta, -delta). Throws on a non-positive
/// gamma, eps or delta, or on a length mismatch.
std::vector<PerturbedPolynomial> perturbation_family(const std::vector<Polynomial>& family, const Rational& eps,
                                                     const Rational& delta, const std::vector<Rational>& gammas);

struct PerturbChoice {
  std::size_t index;
  int sign;
  PerturbKind kind;
};

/// The subfamily picked by one (index, sign, kind) choice per member of I.
std::vector<Polynomial> perturbation_subset(const std::vector<PerturbedPolynomial>& perturbed,
                                            const std::vector<PerturbChoice>& choices);

}  // namespace rbz
