#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "realbezout/bounds.hpp"
#include "realbezout/interval.hpp"
#include "realbezout/polynomial.hpp"

namespace rbz {

class ScheduleError : public std::invalid_argument {
 public:
  explicit ScheduleError(const std::string& what) : std::invalid_argument("schedule ordering: " + what) {}
};

/// Rational stand-ins for the infinitesimals, ordered
/// delta_ell > ... > delta_1 > zeta_1 > eta_1 > zeta_2 > eta_2 > ... > zeta_ell > eta_ell.
class InfSchedule {
 public:
  /// The value at position i of the order above is base^(i+1).
  static InfSchedule geometric(int ell, const Rational& base = default_base());
  /// Values listed in the order above; throws ScheduleError unless they are
  /// strictly decreasing and inside (0, 1).
  static InfSchedule from_values(int ell, std::vector<Rational> ordered);
  static Rational default_base();  // 2^-20

  int ell() const { return ell_; }
  const std::vector<Rational>& ordered() const { return values_; }
  /// 1-based level.
  const Rational& delta(int j) const;
  const Rational& zeta(int j) const;
  const Rational& eta(int j) const;
  bool strictly_decreasing() const;

 private:
  InfSchedule(int ell, std::vector<Rational> values) : ell_(ell), values_(std::move(values)) {}
  int ell_;
  std::vector<Rational> values_;
};

/// (1 - zeta) Q - zeta H. H may only use variables with index >= q, i.e.
/// X_{q+1}..X_k; zeta must lie in [0, 1].
Polynomial def_poly(const Polynomial& q_poly, const Rational& zeta, std::size_t q, const Polynomial& h);
std::vector<Polynomial> def_tuple(const std::vector<Polynomial>& polys, const Rational& zeta, std::size_t q,
                                  const std::vector<Polynomial>& hs);

/// Seeded polynomial in X_{q+1}..X_k (k variables in total), of exact total
/// degree `degree` and >= 1 everywhere: 1 + sum_v X_v^degree plus two squares
/// of random small-integer polynomials of degree degree/2. When q == k the
/// result is a positive constant and `degree` is ignored. Throws
/// std::invalid_argument for an odd or non-positive degree.
Polynomial generic_positive(std::size_t q, std::size_t k, int degree, std::uint64_t seed);

struct FJSystem {
  std::vector<Polynomial> system;  // F followed by the appended minors
  Polynomial jac_j;                // det Jac_J
  std::size_t appended = 0;
};

/// F_J for F = (F_1..F_{k-p}) with J a set of 0-based variable indices in
/// [q, k-1], card J = k - p, containing k - 1 (the last variable). Appends
/// jac_{J + i - (k-1)} for each i in [q, k-1] outside J, in increasing i.
FJSystem build_FJ(const std::vector<Polynomial>& f, std::size_t p, std::size_t q, const std::vector<std::size_t>& j);

/// Membership in C_J: every polynomial of F_J vanishes and jac_J does not.
bool in_CJ(const FJSystem& fj, const std::vector<Rational>& point);

/// One component of an index alpha: either the -1 marker or a set J
/// (0-based variable indices).
struct IndexPart {
  bool marker = true;
  std::vector<std::size_t> set;
  friend bool operator==(const IndexPart&, const IndexPart&) = default;
};

struct ApproxTuple {
  std::vector<int> tau;  // tau_1..tau_j
  std::vector<IndexPart> alpha;
  std::vector<Polynomial> p_tuple;
  std::vector<Polynomial> q_tuple;
  int level = 0;
  /// Some generic polynomial needed an odd degree and was rounded up to even.
  bool degree_rounded = false;
};

struct ApproxOptions {
  /// Replace every Q_i by Q_i^2 first (degrees double).
  bool square = false;
  int max_reseeds = 8;
};

/// Builds every (P^alpha_{tau,j}, Q^alpha_{tau,j}) for alpha in I_j(tau).
/// `system` holds Q_1..Q_ell; `tau` holds tau_1..tau_j and must be admissible
/// for the profile. The base level j = 0 is the single tuple with empty P and
/// Q and index (-1). Throws std::invalid_argument on bad input and
/// ScheduleError when the schedule is not strictly decreasing.
std::vector<ApproxTuple> build_approx_tuples(const std::vector<Polynomial>& system, const Profile& profile, int j,
                                             const std::vector<int>& tau, const InfSchedule& schedule,
                                             std::uint64_t seed, const ApproxOptions& opts = {});

/// Number of J sets the construction ranges over at one level when J must
/// contain the last variable: C(k - tau_j - 1, k - tau_{j-1}).
BigInt index_sets_with_last(int k, int tau_prev, int tau_cur);

struct TupleAudit {
  bool card_p_ok = false;  // card P = k - tau_j
  bool card_q_ok = false;  // card Q <= 1
  bool blocks_ok = false;  // block i degrees <= (k - tau_{i-1} + 1) d_i
  bool q_strict_ok = false;  // deg Q <= d_ell
  bool q_loose_ok = false;   // deg Q <= 2 d_ell
  /// The block check again with every d_i rounded up to even. Only consulted
  /// for tuples built with rounded degrees.
  bool blocks_rounded_ok = false;
  bool rounded = false;
  std::vector<int> p_degrees;
  std::vector<std::int64_t> block_bounds;  // one per entry of P
  int q_degree = kZeroDegree;

  bool pass() const {
    return card_p_ok && card_q_ok && q_loose_ok && (blocks_ok || (rounded && blocks_rounded_ok));
  }
};

/// Structure checks on one tuple. With `squared`, the profile degrees are doubled.
TupleAudit audit_tuple(const ApproxTuple& t, const Profile& profile, bool squared = false);

enum class PerturbVerdict { kCertified, kNotCertified, kRejected };

struct PerturbCheck {
  PerturbVerdict verdict = PerturbVerdict::kNotCertified;
  Box enclosure;  // box known to hold the perturbed zero when certified
  std::string reason;
};

/// Certifies that Def(F, zeta, 0, H) has exactly one zero in the box of the
/// given radius around x. Rejected when the Jacobian determinant of F is not
/// bounded away from zero on that box. Never reports a false certificate.
PerturbCheck perturb_simple_zero_check(const std::vector<Polynomial>& f, const std::vector<Polynomial>& h,
                                       const Rational& zeta, const std::vector<Rational>& x, const Rational& radius);

}  // namespace rbz
