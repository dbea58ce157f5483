#include "rootfunc/linalg.hpp"

#include <utility>

#include "rootfunc/errors.hpp"

namespace rootfunc {

ExactMatrix::ExactMatrix(std::size_t rows, std::size_t cols, FieldSpec field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols) {}

ExactMatrix ExactMatrix::from_rows(const std::vector<std::vector<Scalar>>& rows,
                                   std::size_t cols, FieldSpec field) {
  ExactMatrix m(rows.size(), cols, field);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      throw ArityError("ragged matrix rows");
    }
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = field.from_rational(rows[r][c]);
  }
  return m;
}

bool ExactMatrix::row_is_zero(std::size_t r) const {
  for (const auto& v : row(r)) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

void ExactMatrix::truncate_rows(std::size_t k) {
  if (k >= rows_) return;
  rows_ = k;
  data_.resize(rows_ * cols_);
}

void ExactMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap(at(a, c), at(b, c));
}

RrefResult rref(ExactMatrix m) {
  const FieldSpec& field = m.field();
  std::vector<std::size_t> pivots;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < m.cols() && lead < m.rows(); ++col) {
    std::size_t pivot_row = lead;
    while (pivot_row < m.rows() && sgn(m.at(pivot_row, col)) == 0) ++pivot_row;
    if (pivot_row == m.rows()) continue;
    m.swap_rows(lead, pivot_row);

    Scalar inv = field.inv(m.at(lead, col));
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (sgn(m.at(lead, c)) != 0) m.at(lead, c) = field.mul(m.at(lead, c), inv);
    }
    // Columns of the pivot row that are nonzero; rows are mostly sparse.
    std::vector<std::size_t> support;
    for (std::size_t c = col; c < m.cols(); ++c) {
      if (sgn(m.at(lead, c)) != 0) support.push_back(c);
    }
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == lead || sgn(m.at(r, col)) == 0) continue;
      Scalar factor = m.at(r, col);
      for (std::size_t c : support) {
        m.at(r, c) = field.sub(m.at(r, c), field.mul(factor, m.at(lead, c)));
      }
    }
    pivots.push_back(col);
    ++lead;
  }
  return RrefResult{std::move(m), std::move(pivots)};
}

std::vector<std::vector<Scalar>> nullspace(const ExactMatrix& m) {
  auto reduced = rref(m);
  const FieldSpec& field = m.field();
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : reduced.pivots) is_pivot[p] = true;

  std::vector<std::vector<Scalar>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols());
    v[free] = 1;
    for (std::size_t k = 0; k < reduced.pivots.size(); ++k) {
      v[reduced.pivots[k]] = field.neg(reduced.matrix.at(k, free));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<Scalar>> solve(const ExactMatrix& m, std::span<const Scalar> rhs) {
  if (rhs.size() != m.rows()) {
    throw ArityError("right-hand side length differs from the row count");
  }
  const FieldSpec& field = m.field();
  ExactMatrix augmented(m.rows(), m.cols() + 1, field);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) augmented.at(r, c) = m.at(r, c);
    augmented.at(r, m.cols()) = field.from_rational(rhs[r]);
  }
  auto reduced = rref(std::move(augmented));
  if (!reduced.pivots.empty() && reduced.pivots.back() == m.cols()) {
    return std::nullopt;
  }
  std::vector<Scalar> v(m.cols());
  for (std::size_t k = 0; k < reduced.pivots.size(); ++k) {
    v[reduced.pivots[k]] = reduced.matrix.at(k, m.cols());
  }
  return v;
}

std::size_t solution_dimension(const ExactMatrix& m) { return m.cols() - rref(m).rank(); }

}  // namespace rootfunc
