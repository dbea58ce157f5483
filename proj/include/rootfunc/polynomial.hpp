#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "rootfunc/field.hpp"
#include "rootfunc/monomial.hpp"

namespace rootfunc {

/// Sparse polynomial over the paired variable set (x1..xn, y1..yn).
///
/// Terms are kept canonical: coefficients are reduced field elements, zero
/// coefficients are never stored, and iteration runs from the largest
/// monomial down in graded reverse lexicographic order.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Scalar, GrevlexGreater>;

  Polynomial() = default;
  Polynomial(ContextPtr context, FieldSpec field);

  static Polynomial constant(ContextPtr context, FieldSpec field, const Scalar& c);
  static Polynomial variable(ContextPtr context, FieldSpec field, std::size_t i,
                             Block block = Block::x);
  static Polynomial monomial(ContextPtr context, FieldSpec field, const Monomial& m,
                             const Scalar& c = Scalar(1));

  const ContextPtr& context() const noexcept { return context_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return context_ ? context_->size() : 0; }

  const TermMap& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_x_only() const noexcept;
  /// Largest total degree of the chosen block over all terms; -1 for zero.
  int degree(Block block = Block::x) const noexcept;
  Scalar coefficient(const Monomial& m) const;
  /// Returns the leading (largest) monomial. Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;

  /// Adds c * m in place, keeping the term map canonical. `c` must already be
  /// a reduced element of field().
  void add_term(const Monomial& m, const Scalar& c);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial operator-() const;
  Polynomial scaled(const Scalar& c) const;
  Polynomial times_monomial(const Monomial& m, const Scalar& c = Scalar(1)) const;

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b);

  /// Replaces variables of one block by polynomials. Unlisted variables are
  /// left unchanged.
  Polynomial substitute(Block block, const std::map<std::size_t, Polynomial>& values) const;
  /// Exchanges the x- and y-blocks.
  Polynomial swap_blocks() const;
  /// Value of an x-only polynomial at a point of the field.
  Scalar evaluate(std::span<const Scalar> point) const;

 private:
  void check_compatible(const Polynomial& other) const;

  ContextPtr context_;
  FieldSpec field_;
  TermMap terms_;
};

/// An exponent vector (length n or 2n) with a rational coefficient.
using RawTerm = std::pair<std::vector<unsigned>, Scalar>;

/// Canonical polynomial from raw terms: duplicate monomials are summed and
/// zero coefficients dropped. Throws ArityError on a wrong exponent length and
/// DomainError when a coefficient has no image in the field.
Polynomial make_polynomial(const ContextPtr& context, const FieldSpec& field,
                           const std::vector<RawTerm>& terms);

enum class ArithOp { add, sub, mul, scalar_mul };

/// Ring operations on polynomials of a common context and field. For
/// scalar_mul the second operand must be a constant polynomial.
Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op);

Polynomial substitute_block(const Polynomial& p, Block block,
                            const std::map<std::size_t, Polynomial>& values);

/// Maximum block degree over the terms, -1 for the zero polynomial.
int total_degree(const Polynomial& p, Block block);

}  // namespace rootfunc
