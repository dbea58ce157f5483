#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "rootfunc/functional.hpp"
#include "rootfunc/linalg.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc {

/// The product x^multiplier * f_{poly_index}.
struct SliceGenerator {
  std::size_t poly_index;
  Monomial multiplier;
};

/// Row-reduced basis of the ideal slice of degree d,
///
///   span{ x^a f_i : |a| + deg f_i <= d },
///
/// written in the coordinates of `index` (all monomials of degree <= d,
/// descending grevlex). Row k of `basis` equals sum_g transform(k, g) * gen_g,
/// which is how explicit cofactors are recovered.
struct SliceBasis {
  std::shared_ptr<const PolySystem> system;
  int degree = -1;
  std::vector<SliceGenerator> generators;
  MonomialIndex index;
  ExactMatrix basis;      // rank x index.size(), reduced row echelon form
  std::vector<std::size_t> pivots;
  ExactMatrix transform;  // rank x generators.size()

  std::size_t rank() const noexcept { return basis.rows(); }
  Polynomial generator_polynomial(std::size_t g) const;
  Polynomial row_polynomial(std::size_t k) const;
  /// h with row_polynomial(k) = sum_i h_i f_i and deg(h_i f_i) <= degree.
  std::vector<Polynomial> row_cofactors(std::size_t k) const;
  /// Coordinates of an x-only polynomial in `index`; nullopt if a term has
  /// degree above the slice degree.
  std::optional<std::vector<Scalar>> coordinates(const Polynomial& P) const;
};

/// All generators x^a f_i of total degree <= d, grouped by i, multipliers in
/// descending grevlex order.
std::vector<SliceGenerator> slice_generators(const PolySystem& f, int d);

SliceBasis ideal_slice_basis(const PolySystem& f, int d);

/// Basis of the functionals on polynomials of degree <= d that vanish on the
/// slice of degree d. Each element carries certified degree d.
std::vector<Functional> annihilator_basis(const PolySystem& f, int d);
std::vector<Functional> annihilator_basis(const SliceBasis& slice);

/// Cofactors h with P = sum_i h_i f_i and deg(h_i f_i) <= d, or nullopt when
/// P is not in the slice (including when deg P > d).
std::optional<std::vector<Polynomial>> slice_membership_solve(const Polynomial& P,
                                                              const PolySystem& f, int d);
std::optional<std::vector<Polynomial>> slice_membership_solve(const Polynomial& P,
                                                              const SliceBasis& slice);

/// True when L vanishes on every basis row of the slice.
bool annihilates(const Functional& L, const SliceBasis& slice);

/// Returns L with certified degree slice.degree after re-checking that it
/// annihilates the slice. Throws Error otherwise.
Functional certify(const Functional& L, const SliceBasis& slice);

/// sum_i h_i f_i
Polynomial combine(const PolySystem& f, const std::vector<Polynomial>& cofactors);

}  // namespace rootfunc
