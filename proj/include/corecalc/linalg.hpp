#ifndef CORECALC_LINALG_HPP
#define CORECALC_LINALG_HPP

#include <optional>
#include <vector>

#include "corecalc/field.hpp"

namespace corecalc {

// Dense matrix over an exact field; just enough for the graded-piece and
// separator computations (row reduction, rank, kernels, linear solves).
class Matrix {
 public:
  Matrix(std::size_t rows, std::size_t cols, const Field& field)
      : cols_(cols), field_(field),
        data_(rows, std::vector<FieldScalar>(cols, FieldScalar::zero(field))) {}

  std::size_t rows() const { return data_.size(); }
  std::size_t cols() const { return cols_; }
  const Field& field() const { return field_; }

  FieldScalar& at(std::size_t r, std::size_t c) { return data_[r][c]; }
  const FieldScalar& at(std::size_t r, std::size_t c) const { return data_[r][c]; }

  void append_row(std::vector<FieldScalar> row) {
    data_.push_back(std::move(row));
  }

  // Reduced row echelon form in place; returns pivot column indices.
  std::vector<std::size_t> rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows(); ++col) {
      std::size_t sel = row;
      while (sel < rows() && data_[sel][col].is_zero()) ++sel;
      if (sel == rows()) continue;
      std::swap(data_[sel], data_[row]);
      FieldScalar inv = data_[row][col].inverse();
      for (std::size_t c = col; c < cols_; ++c) data_[row][c] *= inv;
      for (std::size_t r = 0; r < rows(); ++r) {
        if (r == row || data_[r][col].is_zero()) continue;
        FieldScalar factor = data_[r][col];
        for (std::size_t c = col; c < cols_; ++c)
          data_[r][c] -= factor * data_[row][c];
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  std::size_t rank() const {
    Matrix copy = *this;
    return copy.rref().size();
  }

  // Basis of the right kernel {x : A x = 0}.
  std::vector<std::vector<FieldScalar>> kernel_basis() const {
    Matrix copy = *this;
    auto pivots = copy.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<std::vector<FieldScalar>> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
      if (is_pivot[free]) continue;
      std::vector<FieldScalar> v(cols_, FieldScalar::zero(field_));
      v[free] = FieldScalar::one(field_);
      for (std::size_t i = 0; i < pivots.size(); ++i)
        v[pivots[i]] = -copy.data_[i][free];
      basis.push_back(std::move(v));
    }
    return basis;
  }

  // One solution of A x = b, if any.
  std::optional<std::vector<FieldScalar>> solve(
      const std::vector<FieldScalar>& b) const {
    Matrix aug(rows(), cols_ + 1, field_);
    for (std::size_t r = 0; r < rows(); ++r) {
      for (std::size_t c = 0; c < cols_; ++c) aug.data_[r][c] = data_[r][c];
      aug.data_[r][cols_] = b[r];
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    std::vector<FieldScalar> x(cols_, FieldScalar::zero(field_));
    for (std::size_t i = 0; i < pivots.size(); ++i)
      x[pivots[i]] = aug.data_[i][cols_];
    return x;
  }

 private:
  std::size_t cols_;
  Field field_;
  std::vector<std::vector<FieldScalar>> data_;
};

// Rank of the span of a set of coordinate vectors.
inline std::size_t span_rank(const std::vector<std::vector<FieldScalar>>& vecs,
                             std::size_t dim, const Field& field) {
  Matrix m(0, dim, field);
  for (const auto& v : vecs) m.append_row(v);
  return m.rank();
}

}  // namespace corecalc

#endif  // CORECALC_LINALG_HPP
