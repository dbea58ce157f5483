#include "rootfunc/errors.hpp"
#include "rootfunc/reduce.hpp"

namespace rootfunc {

Reducer::Reducer(PolySystem f, UnitFunctional unit, EngineConfig config)
    : system_(std::move(f)),
      unit_(std::move(unit)),
      config_(config),
      expansion_(std::make_shared<const BorderedExpansion>(system_, unit_.convention)),
      cache_(std::make_shared<Cache>()) {
  const auto& base = unit_.base;
  if (!base.certified_degree() || *base.certified_degree() != system_.delta_f() + unit_.epsilon ||
      !base.system_ref() || !(*base.system_ref() == system_)) {
    throw Error("unit functional is not certified for this system at delta_f + epsilon");
  }
}

const Polynomial& Reducer::monomial_image(const Monomial& m) const {
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->images.find(m);
    if (it != cache_->images.end()) return it->second;
  }
  Polynomial image = apply_functional(unit_.base, expansion_->bordered_monomial(m), Block::y);
  const int bound = std::max(system_.delta_f(), static_cast<int>(m.degree()) - unit_.epsilon - 1);
  if (image.degree() > bound) {
    throw Error("extension of a monomial breaks the degree bound");
  }
  std::lock_guard lock(cache_->mutex);
  return cache_->images.try_emplace(m, std::move(image)).first->second;
}

Polynomial Reducer::step(const Polynomial& G) const {
  if (!G.is_x_only()) {
    throw ArityError("reduction acts on x-only polynomials");
  }
  Polynomial out = system_.zero();
  for (const auto& [m, c] : G.terms()) out += monomial_image(m).scaled(c);
  return out;
}

int Reducer::iteration_cap(const Polynomial& G) const {
  if (config_.membership_iteration_cap) return *config_.membership_iteration_cap;
  const int n = static_cast<int>(system_.size());
  return std::max(G.degree(), system_.delta_f()) * (n + 1) + system_.delta_f() + 1;
}

std::pair<Polynomial, ReductionTrace> Reducer::normal_form(const Polynomial& G) const {
  ReductionTrace trace;
  trace.input = G;
  trace.steps.push_back(G);
  const int cap = iteration_cap(G);
  while (trace.iterations < cap) {
    Polynomial next = step(trace.steps.back());
    ++trace.iterations;
    const bool fixed = next == trace.steps.back();
    trace.steps.push_back(std::move(next));
    if (fixed) {
      trace.stabilized = true;
      return {trace.steps.back(), std::move(trace)};
    }
  }
  throw CapExceeded("no fixed point within " + std::to_string(cap) + " iterations");
}

bool Reducer::is_member(const Polynomial& G) const { return normal_form(G).first.is_zero(); }

std::vector<Polynomial> Reducer::quotient_representatives() const {
  auto monomials = x_monomials_up_to(system_.size(), system_.delta_f());
  std::vector<Polynomial> out;
  for (auto it = monomials.rbegin(); it != monomials.rend(); ++it) {
    out.push_back(monomial_image(*it));
  }
  return out;
}

std::vector<Polynomial> Reducer::telescoped_member_decomposition(const Polynomial& G) const {
  auto [fixed, trace] = normal_form(G);
  if (!fixed.is_zero()) {
    throw NotAMember("polynomial is not in the ideal (nonzero normal form)");
  }
  std::vector<Polynomial> out;
  for (const auto& g : trace.steps) {
    if (g.is_zero()) break;
    out.push_back(g);
  }
  return out;
}

std::pair<Polynomial, ReductionTrace> normal_form(const PolySystem& f, const UnitFunctional& unit,
                                                  const Polynomial& G,
                                                  const EngineConfig& config) {
  return Reducer(f, unit, config).normal_form(G);
}

bool is_member(const PolySystem& f, const UnitFunctional& unit, const Polynomial& G,
               const EngineConfig& config) {
  return Reducer(f, unit, config).is_member(G);
}

std::vector<Polynomial> quotient_representatives(const PolySystem& f, const UnitFunctional& unit) {
  EngineConfig config;
  config.epsilon = unit.epsilon;
  config.convention = unit.convention;
  return Reducer(f, unit, config).quotient_representatives();
}

std::vector<Polynomial> telescoped_member_decomposition(const PolySystem& f,
                                                        const UnitFunctional& unit,
                                                        const Polynomial& G,
                                                        const EngineConfig& config) {
  return Reducer(f, unit, config).telescoped_member_decomposition(G);
}

}  // namespace rootfunc
