#pragma once

#include <cstddef>
#include <memory>
#include <mutex>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rootfunc/bezoutian.hpp"
#include "rootfunc/functional.hpp"
#include "rootfunc/slices.hpp"
#include "rootfunc/system.hpp"

namespace rootfunc {

/// A unit bounded root functional E': it annihilates the ideal slice of
/// degree delta_f + epsilon and E'(y).B(x,y) = 1 + sum_i g_i f_i.
struct UnitFunctional {
  Functional base;
  int epsilon = 0;
  Convention convention = Convention::forward;
  /// The cofactors g, with deg(g_i f_i) <= delta_f.
  std::optional<std::vector<Polynomial>> certificate;
  /// Dimension of the affine set of admissible values of E' (0 = unique).
  std::size_t free_parameters = 0;
};

/// Solves for E' as one exact linear system in its values on monomials of
/// degree <= delta_f + epsilon and the slice coefficients of g. Free
/// parameters are set to zero. Throws Infeasible when no solution exists.
UnitFunctional unit_functional(const PolySystem& f, int epsilon,
                               Convention convention = Convention::forward);

struct EngineConfig {
  int epsilon = 0;
  /// Retry with epsilon + 1, ..., epsilon + limit on Infeasible (opt-in).
  bool escalate = false;
  int epsilon_escalation_limit = 3;
  /// Defaults to max(deg G, delta_f) * (n + 1) + delta_f + 1 per input.
  std::optional<int> membership_iteration_cap;
  /// Used when constructing the unit functional; a Reducer always follows
  /// the convention recorded in its unit functional.
  Convention convention = Convention::forward;
};

/// unit_functional at config.epsilon, escalating when config.escalate is set.
UnitFunctional find_unit_functional(const PolySystem& f, const EngineConfig& config);

/// G_0 = input, G_{p+1} = E' * G_p.
struct ReductionTrace {
  Polynomial input;
  std::vector<Polynomial> steps;
  int iterations = 0;
  bool stabilized = false;
};

/// Reduction modulo the ideal driven by a fixed unit functional.
///
/// The map G -> E' * G is linear, so its value on each monomial is computed
/// once and cached. Normal forms are canonical only relative to the unit
/// functional they were computed with.
class Reducer {
 public:
  Reducer(PolySystem f, UnitFunctional unit, EngineConfig config = {});

  const PolySystem& system() const noexcept { return system_; }
  const UnitFunctional& unit() const noexcept { return unit_; }
  const EngineConfig& config() const noexcept { return config_; }

  /// E' * G. Throws Error if the result breaks the degree bound
  /// max(delta_f, deg G - epsilon - 1).
  Polynomial step(const Polynomial& G) const;
  int iteration_cap(const Polynomial& G) const;

  /// Iterates until two consecutive values coincide. Throws CapExceeded.
  std::pair<Polynomial, ReductionTrace> normal_form(const Polynomial& G) const;
  /// True iff the normal form is zero. CapExceeded propagates.
  bool is_member(const Polynomial& G) const;
  /// E' * x^a for every |a| <= delta_f, lowest degree first.
  std::vector<Polynomial> quotient_representatives() const;
  /// G_0, ..., G_{P-1} with G = sum_p (G_p - E' * G_p). Throws NotAMember.
  std::vector<Polynomial> telescoped_member_decomposition(const Polynomial& G) const;

 private:
  const Polynomial& monomial_image(const Monomial& m) const;

  PolySystem system_;
  UnitFunctional unit_;
  EngineConfig config_;
  std::shared_ptr<const BorderedExpansion> expansion_;
  struct Cache {
    std::mutex mutex;
    std::unordered_map<Monomial, Polynomial, MonomialHash> images;
  };
  std::shared_ptr<Cache> cache_;
};

std::pair<Polynomial, ReductionTrace> normal_form(const PolySystem& f, const UnitFunctional& unit,
                                                  const Polynomial& G,
                                                  const EngineConfig& config = {});
bool is_member(const PolySystem& f, const UnitFunctional& unit, const Polynomial& G,
               const EngineConfig& config = {});
std::vector<Polynomial> quotient_representatives(const PolySystem& f, const UnitFunctional& unit);
std::vector<Polynomial> telescoped_member_decomposition(const PolySystem& f,
                                                        const UnitFunctional& unit,
                                                        const Polynomial& G,
                                                        const EngineConfig& config = {});

}  // namespace rootfunc
