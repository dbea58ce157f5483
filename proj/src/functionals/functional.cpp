#include "rootfunc/functional.hpp"

#include "rootfunc/errors.hpp"

namespace rootfunc {

Functional::Functional(ContextPtr context, FieldSpec field)
    : context_(std::move(context)), field_(field) {
  if (!context_) {
    throw ArityError("functional without a variable context");
  }
}

Functional Functional::from_values(ContextPtr context, FieldSpec field,
                                   const std::vector<std::pair<Monomial, Scalar>>& values) {
  Functional out(std::move(context), field);
  for (const auto& [m, v] : values) {
    out.set(m, field.add(out.value(m), field.from_rational(v)));
  }
  return out;
}

int Functional::support_degree() const noexcept {
  // The support map is ordered with the largest degree first.
  return support_.empty() ? -1 : static_cast<int>(support_.begin()->first.degree());
}

Scalar Functional::value(const Monomial& m) const {
  auto it = support_.find(m);
  return it == support_.end() ? Scalar(0) : it->second;
}

Scalar Functional::operator()(const Polynomial& F) const {
  if (!F.is_x_only()) {
    throw ArityError("functional applied to a polynomial that involves the y-block");
  }
  Scalar acc(0);
  for (const auto& [m, c] : F.terms()) {
    auto it = support_.find(m);
    if (it != support_.end()) acc = field_.add(acc, field_.mul(c, it->second));
  }
  return acc;
}

void Functional::set(const Monomial& m, const Scalar& v) {
  if (m.arity() != arity() || !m.is_x_only()) {
    throw ArityError("functional values live on x-only monomials of the context");
  }
  Scalar r = field_.from_rational(v);
  if (sgn(r) == 0) {
    support_.erase(m);
  } else {
    support_[m] = std::move(r);
  }
  certified_degree_.reset();
  system_ref_.reset();
}

Functional Functional::without_certificate() const {
  Functional out = *this;
  out.certified_degree_.reset();
  out.system_ref_.reset();
  return out;
}

Functional Functional::truncated(int d) const {
  Functional out(context_, field_);
  for (const auto& [m, v] : support_) {
    if (static_cast<int>(m.degree()) <= d) out.support_.emplace_hint(out.support_.end(), m, v);
  }
  if (certified_degree_) {
    out.certified_degree_ = std::min(*certified_degree_, d);
    out.system_ref_ = system_ref_;
  }
  return out;
}

bool Functional::agrees_with(const Functional& other, int d) const {
  check_compatible(other);
  auto restricted = [d](const Support& s) {
    Support out;
    for (const auto& [m, v] : s) {
      if (static_cast<int>(m.degree()) <= d) out.emplace(m, v);
    }
    return out;
  };
  return restricted(support_) == restricted(other.support_);
}

void Functional::check_compatible(const Functional& other) const {
  if (!same_context(context_, other.context_) || !(field_ == other.field_)) {
    throw ArityError("functionals over different contexts or fields");
  }
}

Functional& Functional::operator+=(const Functional& other) {
  check_compatible(other);
  for (const auto& [m, v] : other.support_) set(m, field_.add(value(m), v));
  certified_degree_.reset();
  system_ref_.reset();
  return *this;
}

Functional& Functional::operator-=(const Functional& other) {
  check_compatible(other);
  for (const auto& [m, v] : other.support_) set(m, field_.sub(value(m), v));
  certified_degree_.reset();
  system_ref_.reset();
  return *this;
}

Functional Functional::scaled(const Scalar& c) const {
  Functional out(context_, field_);
  Scalar k = field_.from_rational(c);
  if (sgn(k) == 0) return out;
  for (const auto& [m, v] : support_) out.support_.emplace_hint(out.support_.end(), m, field_.mul(v, k));
  return out;
}

bool operator==(const Functional& a, const Functional& b) {
  return same_context(a.context_, b.context_) && a.field_ == b.field_ && a.support_ == b.support_;
}

Functional eval_combination(const ContextPtr& context, const FieldSpec& field,
                            const std::vector<std::vector<Scalar>>& points,
                            const std::vector<Scalar>& weights, int degree_bound) {
  if (points.size() != weights.size()) {
    throw ArityError("points and weights differ in length");
  }
  const std::size_t n = context->size();
  std::vector<std::vector<Scalar>> reduced_points;
  for (const auto& p : points) {
    if (p.size() != n) {
      throw ArityError("evaluation point has wrong arity");
    }
    std::vector<Scalar> q;
    for (const auto& v : p) q.push_back(field.from_rational(v));
    reduced_points.push_back(std::move(q));
  }
  Functional out(context, field);
  for (const auto& m : x_monomials_up_to(n, degree_bound)) {
    Scalar acc(0);
    for (std::size_t k = 0; k < reduced_points.size(); ++k) {
      Scalar t = field.from_rational(weights[k]);
      for (std::size_t i = 0; i < n; ++i) {
        for (unsigned e = 0; e < m.x(i); ++e) t = field.mul(t, reduced_points[k][i]);
      }
      acc = field.add(acc, t);
    }
    out.set(m, acc);
  }
  return out;
}

Polynomial apply_functional(const Functional& L, const Polynomial& P, Block block) {
  if (block == Block::both) {
    throw ArityError("a functional collapses a single block");
  }
  if (!same_context(L.context(), P.context()) || !(L.field() == P.field())) {
    throw ArityError("functional and polynomial over different contexts or fields");
  }
  const FieldSpec& field = P.field();
  Polynomial out(P.context(), field);
  for (const auto& [m, c] : P.terms()) {
    if (block == Block::y) {
      Scalar v = L.value(m.y_part_as_x());
      if (sgn(v) != 0) out.add_term(m.x_part(), field.mul(c, v));
    } else {
      Scalar v = L.value(m.x_part());
      if (sgn(v) != 0) out.add_term(m.y_part_as_x().swapped(), field.mul(c, v));
    }
  }
  return out;
}

Functional times_polynomial(const Functional& l, const Polynomial& G, int out_degree) {
  Functional out(l.context(), l.field());
  for (const auto& m : x_monomials_up_to(l.arity(), out_degree)) {
    out.set(m, l(G.times_monomial(m)));
  }
  return out;
}

ExtensionKernel::ExtensionKernel(const PolySystem& f, Convention convention)
    : expansion_(f, convention) {}

const Polynomial& ExtensionKernel::bordered_monomial(const Monomial& m) const {
  {
    std::lock_guard lock(mutex_);
    auto it = cache_.find(m);
    if (it != cache_.end()) return it->second;
  }
  Polynomial computed = expansion_.bordered_monomial(m);
  std::lock_guard lock(mutex_);
  // Node-based map: references stay valid across later insertions.
  return cache_.try_emplace(m, std::move(computed)).first->second;
}

Polynomial ExtensionKernel::star_poly(const Functional& L, const Polynomial& F) const {
  if (!F.is_x_only()) {
    throw ArityError("the extension operation acts on x-only polynomials");
  }
  const FieldSpec& field = F.field();
  Polynomial out(system().context(), field);
  for (const auto& [alpha, c] : F.terms()) {
    for (const auto& [m, d] : bordered_monomial(alpha).terms()) {
      Scalar v = L.value(m.y_part_as_x());
      if (sgn(v) != 0) out.add_term(m.x_part(), field.mul(c, field.mul(d, v)));
    }
  }
  return out;
}

int ExtensionKernel::commutativity_window(const Functional& l, const Functional& L) const {
  for (const auto* fn : {&l, &L}) {
    if (!fn->certified_degree() || !fn->system_ref() || !(*fn->system_ref() == system())) {
      throw Error("commutativity window needs functionals certified for this system");
    }
  }
  return *l.certified_degree() + *L.certified_degree() - system().delta_f() + 1;
}

Functional ExtensionKernel::star_func(const Functional& l, const Functional& L,
                                      std::optional<int> out_degree) const {
  const int window = out_degree ? *out_degree : commutativity_window(l, L);
  if (window < 0) {
    throw DomainError("negative output degree for the extension of functionals");
  }
  Functional out(system().context(), system().field());
  for (const auto& alpha : x_monomials_up_to(system().size(), window)) {
    out.set(alpha, l(star_poly(L, Polynomial::monomial(system().context(), system().field(), alpha))));
  }
  return out;
}

void ExtensionKernel::clear_cache() const {
  std::lock_guard lock(mutex_);
  cache_.clear();
}

Polynomial star_poly(const Functional& L, const Polynomial& F, const PolySystem& f,
                     Convention convention) {
  return apply_functional(L, bordered_det(f, F, BottomRow::x_form, convention), Block::y);
}

Functional star_func(const Functional& l, const Functional& L, const PolySystem& f,
                     std::optional<int> out_degree, Convention convention) {
  return ExtensionKernel(f, convention).star_func(l, L, out_degree);
}

}  // namespace rootfunc
