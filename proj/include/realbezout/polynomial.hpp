#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "realbezout/rational.hpp"

namespace rbz {

/// Exponent vector of a monomial; its length is the number of variables.
using Exponents = std::vector<std::uint32_t>;

/// Degree reported for the zero polynomial. Compares below every real degree.
inline constexpr int kZeroDegree = std::numeric_limits<int>::min();

class RationalMatrix;

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Variables are numbered from 0: index i stands for X_{i+1}. Terms are kept in
/// descending lexicographic order of their exponent vectors and no stored
/// coefficient is ever zero.
class Polynomial {
 public:
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  explicit Polynomial(std::size_t nvars = 0) : nvars_(nvars) {}

  static Polynomial constant(std::size_t nvars, const Rational& c);
  static Polynomial variable(std::size_t nvars, std::size_t var);
  static Polynomial monomial(Exponents exps, const Rational& c);

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;

  /// Total degree; kZeroDegree for the zero polynomial.
  int degree() const;
  /// Degree in a single variable; kZeroDegree for the zero polynomial.
  int degree_in(std::size_t var) const;
  bool uses_variable(std::size_t var) const;
  /// Indices of the variables that occur with a positive exponent.
  std::vector<std::size_t> support() const;

  Rational coefficient(const Exponents& exps) const;
  Rational constant_term() const;

  /// Adds c * X^exps in place (dropping the term if it cancels).
  void add_term(const Exponents& exps, const Rational& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(const Rational& c, Polynomial a) { return a *= c; }
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  Polynomial pow(unsigned exponent) const;

  /// Human readable form, e.g. "X1^2 + 3/2*X2 - 1".
  std::string to_string() const;

 private:
  void check_compatible(const Polynomial& other) const;

  std::size_t nvars_;
  TermMap terms_;
};

/// Exact value at a rational point. Throws std::invalid_argument on length mismatch.
Rational eval(const Polynomial& p, std::span<const Rational> point);

Polynomial partial(const Polynomial& p, std::size_t var);

/// Adds a homogenizing variable X_0 at index 0; the original variables shift up by one.
Polynomial homogenize(const Polynomial& p);
/// Sets the variable at index 0 to 1 and drops it.
Polynomial dehomogenize(const Polynomial& p);

/// p(c + t) expressed as a polynomial in t.
Polynomial shift(const Polynomial& p, std::span<const Rational> center);

/// Substitutes value for variable var; the variable count is kept.
Polynomial substitute(const Polynomial& p, std::size_t var, const Rational& value);

/// q with q(x) = p(M x). Throws std::domain_error when M is singular.
Polynomial linear_change(const Polynomial& p, const RationalMatrix& m);

/// Univariate coefficient list (index = power) of a polynomial in one variable.
/// Throws std::invalid_argument if another variable occurs.
std::vector<Rational> univariate_coefficients(const Polynomial& p, std::size_t var);

}  // namespace rbz
