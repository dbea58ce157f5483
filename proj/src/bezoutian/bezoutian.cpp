#include "rootfunc/bezoutian.hpp"

#include <bit>
#include <cstdint>
#include <optional>

#include "rootfunc/errors.hpp"

namespace rootfunc {
namespace {

// Adds c * grad_j(m) to out[j] for every j. The j-th divided difference of a
// monomial is (prefix block) * h_{a-1}(xj, yj) * (suffix block) where
// a = m.x(j) and h_{a-1}(x, y) = sum_k x^k y^(a-1-k).
void accumulate_monomial_differences(const Monomial& m, const Scalar& c, Convention conv,
                                     std::vector<Polynomial>& out) {
  const std::size_t n = m.arity();
  for (std::size_t j = 0; j < n; ++j) {
    const unsigned a = m.x(j);
    if (a == 0) continue;
    Monomial base(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      bool substituted = conv == Convention::forward ? i < j : i > j;
      if (substituted) {
        base.set_y(i, m.x(i));
      } else {
        base.set_x(i, m.x(i));
      }
    }
    for (unsigned k = 0; k < a; ++k) {
      Monomial t = base;
      t.set_x(j, k);
      t.set_y(j, a - 1 - k);
      out[j].add_term(t, c);
    }
  }
}

Polynomial to_y(const Polynomial& p) { return p.swap_blocks(); }

}  // namespace

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, const Polynomial& fill)
    : rows_(rows), cols_(cols), entries_(rows * cols, fill) {}

std::vector<Polynomial> divided_differences(const Polynomial& F, Convention convention) {
  if (!F.is_x_only()) {
    throw ArityError("divided differences need an x-only polynomial");
  }
  std::vector<Polynomial> out(F.arity(), Polynomial(F.context(), F.field()));
  for (const auto& [m, c] : F.terms()) {
    accumulate_monomial_differences(m, c, convention, out);
  }
  return out;
}

NablaSystem nabla_system(const PolySystem& f, Convention convention) {
  const std::size_t n = f.size();
  PolyMatrix matrix(n, n, f.zero());
  for (std::size_t i = 0; i < n; ++i) {
    auto grads = divided_differences(f[i], convention);
    Polynomial telescoped = f.zero();
    for (std::size_t j = 0; j < n; ++j) {
      if (grads[j].degree(Block::x) > f.degree(i) - 1 ||
          grads[j].degree(Block::y) > f.degree(i) - 1) {
        throw Error("divided difference exceeds the degree bound");
      }
      Polynomial step = Polynomial::variable(f.context(), f.field(), j, Block::x) -
                        Polynomial::variable(f.context(), f.field(), j, Block::y);
      telescoped += grads[j] * step;
      matrix.at(j, i) = std::move(grads[j]);
    }
    if (!(telescoped == f[i] - to_y(f[i]))) {
      throw Error("divided differences fail the telescoping identity");
    }
  }
  return NablaSystem{f, std::move(matrix), convention};
}

Polynomial det_poly_matrix(const PolyMatrix& m) {
  if (m.rows() != m.cols()) {
    throw ArityError("determinant of a non-square matrix");
  }
  const std::size_t k = m.rows();
  if (k == 0) {
    throw ArityError("determinant of an empty matrix");
  }
  if (k > 20) {
    throw ArityError("matrix too large for subset-memoized expansion");
  }
  const Polynomial& sample = m.at(0, 0);
  std::vector<std::optional<Polynomial>> memo(std::size_t{1} << k);
  memo[0] = Polynomial::constant(sample.context(), sample.field(), Scalar(1));

  // minor(mask) = determinant of rows [k - |mask|, k) restricted to the
  // columns in mask.
  auto minor = [&](auto&& self, std::uint32_t mask) -> const Polynomial& {
    auto& slot = memo[mask];
    if (slot) return *slot;
    const std::size_t row = k - static_cast<std::size_t>(std::popcount(mask));
    Polynomial acc(sample.context(), sample.field());
    int position = 0;
    for (std::size_t c = 0; c < k; ++c) {
      const std::uint32_t bit = std::uint32_t{1} << c;
      if (!(mask & bit)) continue;
      const Polynomial& entry = m.at(row, c);
      if (!entry.is_zero()) {
        const Polynomial& sub = self(self, mask & ~bit);
        if (!sub.is_zero()) {
          Polynomial term = entry * sub;
          if (position % 2 == 0) {
            acc += term;
          } else {
            acc -= term;
          }
        }
      }
      ++position;
    }
    slot = std::move(acc);
    return *slot;
  };
  return minor(minor, static_cast<std::uint32_t>((std::size_t{1} << k) - 1));
}

Polynomial bezoutian(const PolySystem& f, Convention convention) {
  return det_poly_matrix(nabla_system(f, convention).matrix);
}

PolyMatrix bordered_matrix(const PolySystem& f, const Polynomial& F, BottomRow bottom,
                           Convention convention) {
  if (!F.is_x_only()) {
    throw ArityError("bordered determinant needs an x-only polynomial");
  }
  const std::size_t n = f.size();
  auto nabla = nabla_system(f, convention);
  auto grad_F = divided_differences(F, convention);
  PolyMatrix out(n + 1, n + 1, f.zero());
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) out.at(j, i) = nabla.matrix.at(j, i);
    out.at(j, n) = grad_F[j];
  }
  for (std::size_t i = 0; i < n; ++i) {
    out.at(n, i) = bottom == BottomRow::x_form ? f[i] : to_y(f[i]);
  }
  out.at(n, n) = bottom == BottomRow::x_form ? F : to_y(F);
  return out;
}

Polynomial bordered_det(const PolySystem& f, const Polynomial& F, BottomRow bottom,
                        Convention convention) {
  return det_poly_matrix(bordered_matrix(f, F, bottom, convention));
}

BorderedExpansion::BorderedExpansion(const PolySystem& f, Convention convention)
    : system_(f), convention_(convention) {
  const std::size_t n = f.size();
  auto nabla = nabla_system(f, convention);
  bezoutian_ = det_poly_matrix(nabla.matrix);
  // C_r = (-1)^(r+n) * det(matrix without row r and without the last column),
  // where the remaining rows are the other divided-difference rows followed
  // by the bottom row f(x).
  for (std::size_t r = 0; r < n; ++r) {
    PolyMatrix minor(n, n, f.zero());
    std::size_t dst = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == r) continue;
      for (std::size_t i = 0; i < n; ++i) minor.at(dst, i) = nabla.matrix.at(j, i);
      ++dst;
    }
    for (std::size_t i = 0; i < n; ++i) minor.at(n - 1, i) = f[i];
    Polynomial d = det_poly_matrix(minor);
    cofactors_.push_back((r + n) % 2 == 0 ? d : -d);
  }
}

Polynomial BorderedExpansion::bordered(const Polynomial& F) const {
  if (!F.is_x_only()) {
    throw ArityError("bordered determinant needs an x-only polynomial");
  }
  Polynomial out = bezoutian_ * F;
  auto grads = divided_differences(F, convention_);
  for (std::size_t j = 0; j < grads.size(); ++j) {
    if (!grads[j].is_zero()) out += cofactors_[j] * grads[j];
  }
  return out;
}

Polynomial BorderedExpansion::bordered_monomial(const Monomial& m) const {
  return bordered(Polynomial::monomial(system_.context(), system_.field(), m));
}

}  // namespace rootfunc
