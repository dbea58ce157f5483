#pragma once

#include <string>
#include <vector>

#include "rootfunc/polynomial.hpp"
#include "rootfunc/slices.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc::oracle {

struct KnownRoot {
  std::vector<Scalar> point;
  Scalar jacobian;  // det of the Jacobian matrix at the point, nonzero
};

/// A test system whose grevlex leading monomials are pairwise coprime, so the
/// system is already a Groebner basis and plain division decides membership.
struct CatalogSystem {
  std::string name;
  PolySystem system;
  std::vector<Monomial> leading_monomials;
  std::vector<KnownRoot> known_roots;
  /// known_roots is the complete root set and every root is simple.
  bool roots_complete = false;
};

/// Validates coprime leading monomials and that every listed root is a simple
/// zero of the system. Throws Error on violation.
CatalogSystem make_catalog_system(std::string name, PolySystem system,
                                  const std::vector<std::vector<Scalar>>& roots,
                                  bool roots_complete);

/// Jacobian determinant of the system at a point.
Scalar jacobian_at(const PolySystem& f, const std::vector<Scalar>& point);

/// Remainder of multivariate division by the catalog polynomials (grevlex).
/// Zero exactly for ideal members.
Polynomial division_remainder(const Polynomial& G, const CatalogSystem& catalog);

/// Slice basis of degree d recomputed by naive generator enumeration and a
/// separate elimination routine, for cross-checking ideal_slice_basis.
SliceBasis brute_slice_enumerate(const PolySystem& f, int d);

/// Systems over Q used throughout the tests and the acceptance suite.
std::vector<CatalogSystem> standard_catalog();

}  // namespace rootfunc::oracle
