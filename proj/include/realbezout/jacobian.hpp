#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "realbezout/polynomial.hpp"

namespace rbz {

/// Jacobian of a tuple F = (F_1..F_{k-p}) restricted to the variables with
/// index >= q. Row r holds the partials with respect to variable q + r; column
/// c holds the partials of F_c.
class JacMatrix {
 public:
  JacMatrix(std::size_t first_var, std::vector<std::vector<Polynomial>> rows)
      : first_var_(first_var), rows_(std::move(rows)) {}

  std::size_t first_var() const { return first_var_; }
  std::size_t row_count() const { return rows_.size(); }
  std::size_t column_count() const { return rows_.empty() ? 0 : rows_.front().size(); }
  /// Entry for variable `var` (absolute index) and polynomial `col`.
  const Polynomial& at(std::size_t var, std::size_t col) const;

 private:
  std::size_t first_var_;
  std::vector<std::vector<Polynomial>> rows_;
};

/// Jac(F, p, q): requires F.size() == k - p and q <= p <= k, where k is the
/// shared variable count.
JacMatrix jac(std::span<const Polynomial> f, std::size_t p, std::size_t q);

/// Determinant of the square submatrix on the given variable rows (in the
/// order given). Throws std::invalid_argument for a non-square extraction or
/// a row outside the matrix.
Polynomial minor(const JacMatrix& j, std::span<const std::size_t> rows);

/// Determinant of a square polynomial matrix by cofactor expansion.
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace rbz
