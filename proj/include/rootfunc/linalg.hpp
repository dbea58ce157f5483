#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rootfunc/field.hpp"

namespace rootfunc {

/// Dense row-major matrix of field elements.
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field = {});
  static ExactMatrix from_rows(const std::vector<std::vector<Scalar>>& rows, std::size_t cols,
                               FieldSpec field = {});

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldSpec& field() const noexcept { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  bool row_is_zero(std::size_t r) const;

  /// Keeps the first k rows.
  void truncate_rows(std::size_t k);
  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const ExactMatrix&, const ExactMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  FieldSpec field_;
  std::vector<Scalar> data_;
};

struct RrefResult {
  ExactMatrix matrix;
  std::vector<std::size_t> pivots;  // strictly increasing

  std::size_t rank() const noexcept { return pivots.size(); }
};

/// Reduced row echelon form by Gauss-Jordan elimination. The first usable row
/// in each column becomes the pivot, so the result is deterministic.
RrefResult rref(ExactMatrix m);

/// Basis of the right nullspace {v : m v = 0}: one vector per non-pivot
/// column, with that column set to 1 and the other free columns to 0.
std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m);

/// A solution of m v = rhs with every free variable set to zero, or nullopt
/// when the system is inconsistent.
std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> rhs);

/// Dimension of the solution set of m v = rhs (meaningful when consistent).
std::size_t solution_dimension(const ExactMatrix& m);

}  // namespace rootfunc
