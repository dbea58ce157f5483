#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rootfunc/bezoutian.hpp"
#include "rootfunc/polynomial.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc {

struct SliceBasis;

/// Finitely supported linear functional on the x-polynomials.
///
/// Values are stored for the support monomials only; every other monomial is
/// mapped to zero, which makes the functional total. A certified degree d
/// records that the functional was checked to annihilate the ideal slice of
/// degree d of `system_ref()`. Certificates are only attached by certify(),
/// which re-verifies them against a slice basis.
class Functional {
 public:
  using Support = std::map<Monomial, Scalar, GrevlexGreater>;

  Functional() = default;
  Functional(ContextPtr context, FieldSpec field);
  static Functional from_values(ContextPtr context, FieldSpec field,
                                const std::vector<std::pair<Monomial, Scalar>>& values);

  const ContextPtr& context() const noexcept { return context_; }
  const FieldSpec& field() const noexcept { return field_; }
  std::size_t arity() const noexcept { return context_ ? context_->size() : 0; }

  const Support& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }
  /// Largest degree with a nonzero value; -1 for the zero functional.
  int support_degree() const noexcept;

  /// Value on an x-only monomial.
  Scalar value(const Monomial& m) const;
  /// l.F for an x-only polynomial F.
  Scalar operator()(const Polynomial& F) const;
  /// Sets the value on an x-only monomial (the value is reduced into the field).
  void set(const Monomial& m, const Scalar& v);

  std::optional<int> certified_degree() const noexcept { return certified_degree_; }
  const std::shared_ptr<const PolySystem>& system_ref() const noexcept { return system_ref_; }
  Functional without_certificate() const;

  /// Restriction to monomials of degree <= d. A certificate above d drops to d.
  Functional truncated(int d) const;
  /// Equal values on every monomial of degree <= d.
  bool agrees_with(const Functional& other, int d) const;

  Functional& operator+=(const Functional& other);
  Functional& operator-=(const Functional& other);
  Functional scaled(const Scalar& c) const;
  friend Functional operator+(Functional a, const Functional& b) { return a += b; }
  friend Functional operator-(Functional a, const Functional& b) { return a -= b; }

  /// Compares values only; certificates are metadata.
  friend bool operator==(const Functional& a, const Functional& b);

  friend Functional certify(const Functional& L, const SliceBasis& slice);

 private:
  void check_compatible(const Functional& other) const;

  ContextPtr context_;
  FieldSpec field_;
  Support support_;
  std::optional<int> certified_degree_;
  std::shared_ptr<const PolySystem> system_ref_;
};

/// F |-> sum_k w_k F(p_k), stored on all monomials of degree <= degree_bound.
Functional eval_combination(const ContextPtr& context, const FieldSpec& field,
                            const std::vector<std::vector<Scalar>>& points,
                            const std::vector<Scalar>& weights, int degree_bound);

/// Collapses one block of P with L. For block y each term c x^a y^b becomes
/// c L(b) x^a; for block x each term c x^a y^b becomes c L(a) y^b.
Polynomial apply_functional(const Functional& L, const Polynomial& P, Block block);

/// The functional F |-> l.(G F), stored on monomials of degree <= out_degree.
Functional times_polynomial(const Functional& l, const Polynomial& G, int out_degree);

/// The extension operation for one system and divided-difference convention.
///
/// L * F applies L in the y-block to the bordered determinant of F, and
/// (l * L)(x^a) = l.(L * x^a). Bordered determinants of monomials are cached,
/// so repeated products against many functionals cost one pass over a cached
/// polynomial each. The cache is internally synchronized.
class ExtensionKernel {
 public:
  explicit ExtensionKernel(const PolySystem& f, Convention convention = Convention::forward);

  const PolySystem& system() const noexcept { return expansion_.system(); }
  Convention convention() const noexcept { return expansion_.convention(); }
  const BorderedExpansion& expansion() const noexcept { return expansion_; }
  const Polynomial& bezoutian() const noexcept { return expansion_.bezoutian(); }

  /// Bordered determinant (bottom row in x) of a single x-only monomial.
  const Polynomial& bordered_monomial(const Monomial& m) const;

  Polynomial star_poly(const Functional& L, const Polynomial& F) const;
  /// Values on every monomial of degree <= out_degree. Without an explicit
  /// bound both functionals need certificates for this system and the bound
  /// defaults to their commutativity window.
  Functional star_func(const Functional& l, const Functional& L,
                       std::optional<int> out_degree = std::nullopt) const;

  /// cert(l) + cert(L) - delta_f + 1: the degree up to which l * L = L * l.
  /// Throws Error when either functional lacks a certificate for this system.
  int commutativity_window(const Functional& l, const Functional& L) const;

  void clear_cache() const;

 private:
  BorderedExpansion expansion_;
  mutable std::mutex mutex_;
  mutable std::unordered_map<Monomial, Polynomial, MonomialHash> cache_;
};

Polynomial star_poly(const Functional& L, const Polynomial& F, const PolySystem& f,
                     Convention convention = Convention::forward);

Functional star_func(const Functional& l, const Functional& L, const PolySystem& f,
                     std::optional<int> out_degree = std::nullopt,
                     Convention convention = Convention::forward);

}  // namespace rootfunc
