#include "realbezout/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace rbz {

RationalMatrix::RationalMatrix(std::size_t n, std::vector<Rational> row_major)
    : n_(n), data_(std::move(row_major)) {
  if (data_.size() != n * n) throw std::invalid_argument("RationalMatrix: expected n*n entries");
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Rational RationalMatrix::determinant() const {
  RationalMatrix a = *this;
  Rational det = 1;
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col) == 0) ++pivot;
    if (pivot == n_) return 0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) std::swap(a(pivot, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n_; ++r) {
      if (a(r, col) == 0) continue;
      Rational f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n_; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

RationalMatrix RationalMatrix::inverse() const {
  RationalMatrix a = *this;
  RationalMatrix inv = identity(n_);
  for (std::size_t col = 0; col < n_; ++col) {
    std::size_t pivot = col;
    while (pivot < n_ && a(pivot, col) == 0) ++pivot;
    if (pivot == n_) throw std::domain_error("matrix is singular");
    if (pivot != col) {
      for (std::size_t c = 0; c < n_; ++c) {
        std::swap(a(pivot, c), a(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
    }
    Rational scale = 1 / a(col, col);
    for (std::size_t c = 0; c < n_; ++c) {
      a(col, c) *= scale;
      inv(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n_; ++r) {
      if (r == col || a(r, col) == 0) continue;
      Rational f = a(r, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(r, c) -= f * a(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  return inv;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("matrix size mismatch");
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

std::vector<Rational> RationalMatrix::apply(const std::vector<Rational>& v) const {
  if (v.size() != n_) throw std::invalid_argument("matrix/vector size mismatch");
  std::vector<Rational> out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

}  // namespace rbz
