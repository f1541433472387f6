#include "realbezout/jacobian.hpp"

#include <map>
#include <stdexcept>

namespace rbz {

const Polynomial& JacMatrix::at(std::size_t var, std::size_t col) const {
  if (var < first_var_ || var - first_var_ >= rows_.size()) throw std::out_of_range("JacMatrix: row out of range");
  return rows_[var - first_var_].at(col);
}

JacMatrix jac(std::span<const Polynomial> f, std::size_t p, std::size_t q) {
  if (f.empty() && p == 0) throw std::invalid_argument("jac: empty tuple");
  const std::size_t k = f.empty() ? p : f.front().nvars();
  if (q > p || p > k) throw std::invalid_argument("jac: need q <= p <= k");
  if (f.size() != k - p) throw std::invalid_argument("jac: tuple must have k - p entries");
  std::vector<std::vector<Polynomial>> rows;
  for (std::size_t var = q; var < k; ++var) {
    std::vector<Polynomial> row;
    row.reserve(f.size());
    for (const auto& fi : f) {
      if (fi.nvars() != k) throw std::invalid_argument("jac: mixed variable counts");
      row.push_back(partial(fi, var));
    }
    rows.push_back(std::move(row));
  }
  return JacMatrix(q, std::move(rows));
}

namespace {

// Expansion along the first row over the remaining columns, memoized by column mask.
Polynomial det_rec(const std::vector<std::vector<Polynomial>>& m, std::size_t row, unsigned mask,
                   std::map<unsigned, Polynomial>& memo) {
  const std::size_t n = m.size();
  if (row == n) return Polynomial::constant(m[0][0].nvars(), 1);
  if (auto it = memo.find(mask); it != memo.end()) return it->second;
  Polynomial acc(m[0][0].nvars());
  int sign = 1;
  for (std::size_t c = 0; c < n; ++c) {
    if (mask & (1U << c)) continue;
    if (!m[row][c].is_zero()) {
      Polynomial sub = det_rec(m, row + 1, mask | (1U << c), memo);
      if (!sub.is_zero()) {
        Polynomial t = m[row][c] * sub;
        if (sign > 0) acc += t; else acc -= t;
      }
    }
    sign = -sign;
  }
  memo.emplace(mask, acc);
  return acc;
}

}  // namespace

Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 0) throw std::invalid_argument("determinant: empty matrix");
  if (n > 16) throw std::invalid_argument("determinant: matrix too large");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  std::map<unsigned, Polynomial> memo;
  return det_rec(m, 0, 0U, memo);
}

Polynomial minor(const JacMatrix& j, std::span<const std::size_t> rows) {
  if (rows.size() != j.column_count()) throw std::invalid_argument("minor: non-square extraction");
  std::vector<std::vector<Polynomial>> sub;
  sub.reserve(rows.size());
  for (std::size_t r : rows) {
    if (r < j.first_var() || r - j.first_var() >= j.row_count())
      throw std::out_of_range("minor: row index out of range");
    std::vector<Polynomial> row;
    for (std::size_t c = 0; c < j.column_count(); ++c) row.push_back(j.at(r, c));
    sub.push_back(std::move(row));
  }
  return determinant(sub);
}

}  // namespace rbz
