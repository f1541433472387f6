#pragma once

#include <cstddef>
#include <vector>

#include "realbezout/rational.hpp"

namespace rbz {

/// Dense square matrix over the rationals, row-major.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n = 0) : n_(n), data_(n * n) {}
  RationalMatrix(std::size_t n, std::vector<Rational> row_major);

  static RationalMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * n_ + c]; }

  Rational determinant() const;
  /// Throws std::domain_error when singular.
  RationalMatrix inverse() const;

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  std::vector<Rational> apply(const std::vector<Rational>& v) const;

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) = default;

 private:
  std::size_t n_;
  std::vector<Rational> data_;
};

}  // namespace rbz
