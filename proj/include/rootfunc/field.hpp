#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace rootfunc {

// Every coefficient is stored as a GMP rational. Over a prime field the value
// is kept as the least non-negative residue (denominator 1).
using Scalar = mpq_class;

/// Exact coefficient field: the rationals or Z/p for a prime p < 2^62.
///
/// Arithmetic goes through the field object so that prime-field values are
/// reduced after every operation. All members are const and the object is
/// cheap to copy.
class FieldSpec {
 public:
  enum class Kind { rationals, prime_field };

  FieldSpec() = default;

  static FieldSpec rationals() { return FieldSpec{}; }
  /// Throws DomainError unless `modulus` is a prime below 2^62.
  static FieldSpec prime(std::uint64_t modulus);

  Kind kind() const noexcept { return kind_; }
  bool is_prime_field() const noexcept { return kind_ == Kind::prime_field; }
  /// Zero for the rationals.
  std::uint64_t modulus() const noexcept { return modulus_; }

  /// Image of a rational number in this field. Throws DomainError when the
  /// denominator is divisible by the modulus.
  Scalar from_rational(const Scalar& q) const;
  Scalar from_int(long v) const { return from_rational(Scalar(v)); }
  bool is_canonical(const Scalar& a) const;

  Scalar add(const Scalar& a, const Scalar& b) const;
  Scalar sub(const Scalar& a, const Scalar& b) const;
  Scalar mul(const Scalar& a, const Scalar& b) const;
  Scalar neg(const Scalar& a) const;
  /// Throws DomainError on zero.
  Scalar inv(const Scalar& a) const;
  Scalar div(const Scalar& a, const Scalar& b) const { return mul(a, inv(b)); }

  /// "Q" or "Fp <p>"; the same spelling the system file format uses.
  std::string name() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  Kind kind_ = Kind::rationals;
  std::uint64_t modulus_ = 0;
};

/// "a" or "a/b" with b > 0 (residue digits over a prime field).
std::string scalar_to_string(const Scalar& a);

}  // namespace rootfunc
