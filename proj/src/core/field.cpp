#include "rootfunc/field.hpp"

#include "rootfunc/errors.hpp"

namespace rootfunc {
namespace {

constexpr std::uint64_t kModulusLimit = std::uint64_t{1} << 62;

std::uint64_t residue(const Scalar& a) { return a.get_num().get_ui(); }

Scalar from_residue(std::uint64_t r) {
  Scalar out;
  mpz_set_ui(out.get_num_mpz_t(), r);
  return out;
}

}  // namespace

FieldSpec FieldSpec::prime(std::uint64_t modulus) {
  if (modulus < 2 || modulus >= kModulusLimit) {
    throw DomainError("prime field modulus out of range: " + std::to_string(modulus));
  }
  mpz_class m;
  mpz_set_ui(m.get_mpz_t(), modulus);
  if (mpz_probab_prime_p(m.get_mpz_t(), 40) == 0) {
    throw DomainError("prime field modulus is not prime: " + std::to_string(modulus));
  }
  FieldSpec f;
  f.kind_ = Kind::prime_field;
  f.modulus_ = modulus;
  return f;
}

Scalar FieldSpec::from_rational(const Scalar& q) const {
  if (kind_ == Kind::rationals) {
    if (sgn(q.get_den()) == 0) {
      throw DomainError("zero denominator");
    }
    Scalar out(q);
    out.canonicalize();
    return out;
  }
  mpz_class p;
  mpz_set_ui(p.get_mpz_t(), modulus_);
  mpz_class num = q.get_num() % p;
  if (num < 0) num += p;
  mpz_class den = q.get_den() % p;
  if (den == 0) {
    throw DomainError("denominator " + q.get_den().get_str() + " vanishes modulo " +
                      std::to_string(modulus_));
  }
  mpz_class den_inv;
  mpz_invert(den_inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
  mpz_class r = (num * den_inv) % p;
  return Scalar(r);
}

bool FieldSpec::is_canonical(const Scalar& a) const {
  if (kind_ == Kind::rationals) {
    return true;
  }
  return a.get_den() == 1 && sgn(a) >= 0 && mpz_cmp_ui(a.get_num_mpz_t(), modulus_) < 0;
}

Scalar FieldSpec::add(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) {
    return a + b;
  }
  std::uint64_t r = residue(a) + residue(b);
  if (r >= modulus_) r -= modulus_;
  return from_residue(r);
}

Scalar FieldSpec::sub(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) {
    return a - b;
  }
  std::uint64_t x = residue(a);
  std::uint64_t y = residue(b);
  return from_residue(x >= y ? x - y : x + modulus_ - y);
}

Scalar FieldSpec::mul(const Scalar& a, const Scalar& b) const {
  if (kind_ == Kind::rationals) {
    return a * b;
  }
  unsigned __int128 prod = static_cast<unsigned __int128>(residue(a)) * residue(b);
  return from_residue(static_cast<std::uint64_t>(prod % modulus_));
}

Scalar FieldSpec::neg(const Scalar& a) const {
  if (kind_ == Kind::rationals) {
    return -a;
  }
  std::uint64_t x = residue(a);
  return from_residue(x == 0 ? 0 : modulus_ - x);
}

Scalar FieldSpec::inv(const Scalar& a) const {
  if (sgn(a) == 0) {
    throw DomainError("inverse of zero");
  }
  if (kind_ == Kind::rationals) {
    return 1 / a;
  }
  mpz_class p;
  mpz_set_ui(p.get_mpz_t(), modulus_);
  mpz_class r;
  mpz_invert(r.get_mpz_t(), a.get_num_mpz_t(), p.get_mpz_t());
  return Scalar(r);
}

std::string FieldSpec::name() const {
  if (kind_ == Kind::rationals) {
    return "Q";
  }
  return "Fp " + std::to_string(modulus_);
}

std::string scalar_to_string(const Scalar& a) {
  if (a.get_den() == 1) {
    return a.get_num().get_str();
  }
  return a.get_num().get_str() + "/" + a.get_den().get_str();
}

}  // namespace rootfunc
