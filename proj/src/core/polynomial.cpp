#include "rootfunc/polynomial.hpp"

#include "rootfunc/errors.hpp"

namespace rootfunc {

Polynomial::Polynomial(ContextPtr context, FieldSpec field)
    : context_(std::move(context)), field_(field) {
  if (!context_) {
    throw ArityError("polynomial without a variable context");
  }
}

Polynomial Polynomial::constant(ContextPtr context, FieldSpec field, const Scalar& c) {
  Polynomial p(std::move(context), field);
  p.add_term(Monomial(p.arity()), field.from_rational(c));
  return p;
}

Polynomial Polynomial::variable(ContextPtr context, FieldSpec field, std::size_t i,
                                Block block) {
  Polynomial p(std::move(context), field);
  if (i >= p.arity()) {
    throw ArityError("variable index out of range");
  }
  Monomial m(p.arity());
  m.set(block == Block::y ? p.arity() + i : i, 1);
  p.add_term(m, Scalar(1));
  return p;
}

Polynomial Polynomial::monomial(ContextPtr context, FieldSpec field, const Monomial& m,
                                const Scalar& c) {
  Polynomial p(std::move(context), field);
  if (m.arity() != p.arity()) {
    throw ArityError("monomial arity does not match context");
  }
  p.add_term(m, field.from_rational(c));
  return p;
}

bool Polynomial::is_x_only() const noexcept {
  for (const auto& [m, c] : terms_) {
    if (!m.is_x_only()) return false;
  }
  return true;
}

int Polynomial::degree(Block block) const noexcept {
  int d = -1;
  for (const auto& [m, c] : terms_) {
    d = std::max(d, static_cast<int>(m.degree(block)));
  }
  return d;
}

Scalar Polynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(0) : it->second;
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) {
    throw Error("leading monomial of the zero polynomial");
  }
  return terms_.begin()->first;
}

void Polynomial::add_term(const Monomial& m, const Scalar& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second = field_.add(it->second, c);
    if (sgn(it->second) == 0) terms_.erase(it);
  }
}

void Polynomial::check_compatible(const Polynomial& other) const {
  if (!same_context(context_, other.context_)) {
    throw ArityError("polynomials over different variable contexts");
  }
  if (!(field_ == other.field_)) {
    throw ArityError("polynomials over different fields");
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  check_compatible(other);
  for (const auto& [m, c] : other.terms_) add_term(m, field_.neg(c));
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial out(context_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), m, field_.neg(c));
  return out;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
  Polynomial out(context_, field_);
  Scalar k = field_.from_rational(c);
  if (sgn(k) == 0) return out;
  for (const auto& [m, a] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), m, field_.mul(a, k));
  }
  return out;
}

Polynomial Polynomial::times_monomial(const Monomial& m, const Scalar& c) const {
  Polynomial out(context_, field_);
  Scalar k = field_.from_rational(c);
  if (sgn(k) == 0) return out;
  // Multiplying by a monomial preserves the order of the terms.
  for (const auto& [t, a] : terms_) {
    out.terms_.emplace_hint(out.terms_.end(), t * m, field_.mul(a, k));
  }
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  a.check_compatible(b);
  Polynomial out(a.context_, a.field_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      out.add_term(ma * mb, a.field_.mul(ca, cb));
    }
  }
  return out;
}

bool operator==(const Polynomial& a, const Polynomial& b) {
  return same_context(a.context_, b.context_) && a.field_ == b.field_ && a.terms_ == b.terms_;
}

Polynomial Polynomial::substitute(Block block,
                                  const std::map<std::size_t, Polynomial>& values) const {
  if (block == Block::both) {
    throw ArityError("substitution needs a single block");
  }
  const std::size_t n = arity();
  const std::size_t offset = block == Block::y ? n : 0;
  for (const auto& [i, v] : values) {
    if (i >= n) throw ArityError("substitution index out of range");
    check_compatible(v);
  }
  // powers[i][e] = values[i]^e, filled lazily
  std::map<std::size_t, std::vector<Polynomial>> powers;
  auto power = [&](std::size_t i, unsigned e) -> const Polynomial& {
    auto& table = powers[i];
    if (table.empty()) table.push_back(constant(context_, field_, Scalar(1)));
    while (table.size() <= e) table.push_back(table.back() * values.at(i));
    return table[e];
  };

  Polynomial out(context_, field_);
  for (const auto& [m, c] : terms_) {
    Monomial kept = m;
    Polynomial factor = constant(context_, field_, c);
    for (const auto& [i, v] : values) {
      unsigned e = m[offset + i];
      if (e == 0) continue;
      kept.set(offset + i, 0);
      factor = factor * power(i, e);
    }
    out += factor.times_monomial(kept);
  }
  return out;
}

Polynomial Polynomial::swap_blocks() const {
  Polynomial out(context_, field_);
  for (const auto& [m, c] : terms_) out.terms_.emplace(m.swapped(), c);
  return out;
}

Scalar Polynomial::evaluate(std::span<const Scalar> point) const {
  if (point.size() != arity()) {
    throw ArityError("evaluation point has wrong arity");
  }
  if (!is_x_only()) {
    throw ArityError("evaluation of a polynomial that involves the y-block");
  }
  Scalar acc(0);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i < arity(); ++i) {
      for (unsigned e = 0; e < m.x(i); ++e) t = field_.mul(t, point[i]);
    }
    acc = field_.add(acc, t);
  }
  return acc;
}

Polynomial make_polynomial(const ContextPtr& context, const FieldSpec& field,
                           const std::vector<RawTerm>& terms) {
  Polynomial p(context, field);
  for (const auto& [exps, c] : terms) {
    p.add_term(Monomial::from_exponents(p.arity(), exps), field.from_rational(c));
  }
  return p;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::scalar_mul:
      if (b.degree(Block::both) > 0) {
        throw ArityError("scalar_mul needs a constant second operand");
      }
      if (!same_context(a.context(), b.context()) || !(a.field() == b.field())) {
        throw ArityError("polynomials over different contexts or fields");
      }
      return a.scaled(b.coefficient(Monomial(b.arity())));
  }
  throw ArityError("unknown arithmetic operation");
}

Polynomial substitute_block(const Polynomial& p, Block block,
                            const std::map<std::size_t, Polynomial>& values) {
  return p.substitute(block, values);
}

int total_degree(const Polynomial& p, Block block) { return p.degree(block); }

}  // namespace rootfunc
