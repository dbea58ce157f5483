#pragma once

#include <cstddef>
#include <vector>

#include "rootfunc/polynomial.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc {

/// How the divided differences telescope through the variables.
///
/// forward:  grad_j F = (F(y1..y(j-1), xj..xn) - F(y1..yj, x(j+1)..xn)) / (xj - yj)
/// reverse:  grad_j F = (F(x1..xj, y(j+1)..yn) - F(x1..x(j-1), yj..yn)) / (xj - yj)
enum class Convention { forward, reverse };

class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, const Polynomial& fill);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Polynomial& at(std::size_t r, std::size_t c) { return entries_.at(r * cols_ + c); }
  const Polynomial& at(std::size_t r, std::size_t c) const { return entries_.at(r * cols_ + c); }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Polynomial> entries_;
};

/// Divided differences of an x-only polynomial: returns (grad_1 F, ..., grad_n F)
/// with sum_j grad_j F * (xj - yj) = F(x) - F(y). Throws ArityError if F
/// involves the y-block.
std::vector<Polynomial> divided_differences(const Polynomial& F,
                                            Convention convention = Convention::forward);

/// The divided-difference matrix of a system. Rows are indexed by variables
/// and columns by polynomials: entry (j, i) = grad_j f_i.
struct NablaSystem {
  PolySystem system;
  PolyMatrix matrix;
  Convention convention;
};

/// Builds the matrix and re-checks the telescoping identity and the degree
/// bounds of every column.
NablaSystem nabla_system(const PolySystem& f, Convention convention = Convention::forward);

/// Exact determinant by Laplace expansion with memoization over column
/// subsets (2^n subproblems). Throws ArityError for a non-square matrix.
Polynomial det_poly_matrix(const PolyMatrix& m);

/// det of the divided-difference matrix; degree <= delta_f in each block.
Polynomial bezoutian(const PolySystem& f, Convention convention = Convention::forward);

enum class BottomRow { x_form, y_form };

/// The (n+1)x(n+1) matrix with rows (grad_j f_1, ..., grad_j f_n, grad_j F)
/// and bottom row (f_1, ..., f_n, F) taken in x or in y.
PolyMatrix bordered_matrix(const PolySystem& f, const Polynomial& F, BottomRow bottom,
                           Convention convention = Convention::forward);

Polynomial bordered_det(const PolySystem& f, const Polynomial& F,
                        BottomRow bottom = BottomRow::x_form,
                        Convention convention = Convention::forward);

/// Bordered determinant expanded along its last column:
///
///   det = sum_j C_j(x,y) * grad_j F(x,y) + B(x,y) * F(x)
///
/// The cofactors C_j and the Bezoutian B depend only on the system, so they
/// are computed once and reused for every F.
class BorderedExpansion {
 public:
  BorderedExpansion(const PolySystem& f, Convention convention = Convention::forward);

  const PolySystem& system() const noexcept { return system_; }
  Convention convention() const noexcept { return convention_; }
  const Polynomial& bezoutian() const noexcept { return bezoutian_; }
  const std::vector<Polynomial>& cofactors() const noexcept { return cofactors_; }

  /// Same value as bordered_det(system(), F, x_form, convention()).
  Polynomial bordered(const Polynomial& F) const;
  Polynomial bordered_monomial(const Monomial& m) const;

 private:
  PolySystem system_;
  Convention convention_;
  Polynomial bezoutian_;
  std::vector<Polynomial> cofactors_;
};

}  // namespace rootfunc
