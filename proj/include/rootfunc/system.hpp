#pragma once

#include <cstddef>
#include <vector>

#include "rootfunc/polynomial.hpp"

namespace rootfunc {

/// n nonconstant x-only polynomials in n variables, with
/// delta_f = sum over i of (deg f_i - 1).
class PolySystem {
 public:
  PolySystem() = default;
  /// Throws ArityError when the count differs from the context arity, a
  /// polynomial involves the y-block or the polynomials disagree on context or
  /// field; throws DomainError for a constant polynomial.
  explicit PolySystem(std::vector<Polynomial> polys);

  const ContextPtr& context() const noexcept { return polys_.front().context(); }
  const FieldSpec& field() const noexcept { return polys_.front().field(); }
  std::size_t size() const noexcept { return polys_.size(); }
  const Polynomial& operator[](std::size_t i) const { return polys_.at(i); }
  const std::vector<Polynomial>& polys() const noexcept { return polys_; }
  int degree(std::size_t i) const { return polys_.at(i).degree(); }
  int delta_f() const noexcept { return delta_f_; }

  /// Zero, one and the x-variables in this system's context and field.
  Polynomial zero() const { return Polynomial(context(), field()); }
  Polynomial one() const { return Polynomial::constant(context(), field(), Scalar(1)); }

  friend bool operator==(const PolySystem&, const PolySystem&) = default;

 private:
  std::vector<Polynomial> polys_;
  int delta_f_ = 0;
};

}  // namespace rootfunc
