#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "repstab/errors.hpp"
#include "repstab/rational.hpp"

namespace repstab {

/// Exact solver for A x = b with an integer matrix A, prepared once and
/// applied to many right-hand sides.
///
/// Fraction-free Gauss-Jordan elimination of [A | I]: each update is
/// (p * a_ij - a_ik * a_kj) / p_prev with exact integer division, pivots are
/// taken in row order. The right block records the transform T with T A = R.
class ExactSolver {
 public:
  explicit ExactSolver(std::vector<std::vector<Integer>> a) : rows_(a.size()) {
    cols_ = rows_ == 0 ? 0 : a.front().size();
    work_.assign(rows_, std::vector<Integer>(cols_ + rows_));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (a[i].size() != cols_) throw InputError("ragged matrix");
      for (std::size_t j = 0; j < cols_; ++j) work_[i][j] = std::move(a[i][j]);
      work_[i][cols_ + i] = 1;
    }
    eliminate();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t rank() const { return pivots_.size(); }
  bool full_column_rank() const { return rank() == cols_; }

  /// Unique solution; throws InconsistentSystem if b is not in the column
  /// space or the system is underdetermined.
  std::vector<Rational> solve(std::span<const Rational> b) const {
    if (b.size() != rows_) throw InputError("right-hand side has wrong length");
    if (!full_column_rank())
      throw InconsistentSystem("underdetermined system: rank " + std::to_string(rank()) + " < " +
                               std::to_string(cols_) + " unknowns");
    std::vector<Rational> x(cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
      Rational tb = 0;
      for (std::size_t i = 0; i < rows_; ++i)
        if (work_[r][cols_ + i] != 0) tb += Rational(work_[r][cols_ + i]) * b[i];
      if (r < pivots_.size()) {
        const std::size_t c = pivots_[r];
        x[c] = tb / Rational(work_[r][c]);
      } else if (tb != 0) {
        throw InconsistentSystem("inconsistent system: right-hand side outside the column space");
      }
    }
    return x;
  }

 private:
  void eliminate() {
    Integer previous = 1;
    std::size_t row = 0;
    const std::size_t width = cols_ + rows_;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
      std::size_t pivot = row;
      while (pivot < rows_ && work_[pivot][col] == 0) ++pivot;
      if (pivot == rows_) continue;
      std::swap(work_[row], work_[pivot]);
      const Integer p = work_[row][col];
      for (std::size_t i = 0; i < rows_; ++i) {
        if (i == row) continue;
        const Integer factor = work_[i][col];
        for (std::size_t j = 0; j < width; ++j) {
          Integer v = p * work_[i][j] - factor * work_[row][j];
          if (!mpz_divisible_p(v.get_mpz_t(), previous.get_mpz_t()))
            throw InconsistentSystem("fraction-free elimination lost exactness");
          mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
          work_[i][j] = std::move(v);
        }
      }
      previous = p;
      pivots_.push_back(col);
      ++row;
    }
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::vector<Integer>> work_;
  std::vector<std::size_t> pivots_;
};

}  // namespace repstab
