#include "rootfunc/system.hpp"

#include "rootfunc/errors.hpp"

namespace rootfunc {

PolySystem::PolySystem(std::vector<Polynomial> polys) : polys_(std::move(polys)) {
  if (polys_.empty()) {
    throw ArityError("empty polynomial system");
  }
  const auto& ctx = polys_.front().context();
  if (!ctx || polys_.size() != ctx->size()) {
    throw ArityError("a system needs exactly one polynomial per variable");
  }
  for (const auto& p : polys_) {
    if (!same_context(p.context(), ctx) || !(p.field() == polys_.front().field())) {
      throw ArityError("system polynomials over different contexts or fields");
    }
    if (!p.is_x_only()) {
      throw ArityError("system polynomials must not involve the y-block");
    }
    if (p.degree() < 1) {
      throw DomainError("system polynomials must be nonconstant");
    }
    delta_f_ += p.degree() - 1;
  }
}

}  // namespace rootfunc
