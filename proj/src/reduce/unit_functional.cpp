#include "rootfunc/errors.hpp"
#include "rootfunc/reduce.hpp"

namespace rootfunc {

UnitFunctional unit_functional(const PolySystem& f, int epsilon, Convention convention) {
  if (epsilon < 0) {
    throw DomainError("epsilon must be non-negative");
  }
  const FieldSpec& field = f.field();
  const int support_degree = f.delta_f() + epsilon;
  const SliceBasis annihilated = ideal_slice_basis(f, support_degree);
  const SliceBasis unit_slice = ideal_slice_basis(f, f.delta_f());
  const MonomialIndex& support = annihilated.index;
  const MonomialIndex& targets = unit_slice.index;
  const Polynomial B = bezoutian(f, convention);

  // Unknowns: E' on every support monomial, then one coefficient per row of
  // the degree-delta_f slice (the multiple of f added to 1).
  const std::size_t n_values = support.size();
  const std::size_t n_slack = unit_slice.rank();
  const std::size_t n_rows = annihilated.rank() + targets.size();
  ExactMatrix system(n_rows, n_values + n_slack, field);
  std::vector<Scalar> rhs(n_rows);

  for (std::size_t k = 0; k < annihilated.rank(); ++k) {
    for (std::size_t c = 0; c < n_values; ++c) system.at(k, c) = annihilated.basis.at(k, c);
  }
  // E'(y).B(x,y) - sum_k lambda_k row_k(x) = 1, coefficient by coefficient.
  const std::size_t offset = annihilated.rank();
  for (const auto& [m, c] : B.terms()) {
    auto row = targets.find(m.x_part());
    auto col = support.find(m.y_part_as_x());
    if (!row || !col) {
      throw Error("Bezoutian exceeds its degree bound");
    }
    Scalar& cell = system.at(offset + *row, *col);
    cell = field.add(cell, c);
  }
  for (std::size_t k = 0; k < n_slack; ++k) {
    for (std::size_t c = 0; c < targets.size(); ++c) {
      system.at(offset + c, n_values + k) = field.neg(unit_slice.basis.at(k, c));
    }
  }
  rhs[offset + *targets.find(Monomial(f.size()))] = 1;

  auto solution = solve(system, rhs);
  if (!solution) {
    throw Infeasible("no unit bounded root functional at epsilon = " + std::to_string(epsilon) +
                     " (system not zero-dimensional, roots at infinity, or epsilon too small)");
  }

  Functional values(f.context(), field);
  for (std::size_t c = 0; c < n_values; ++c) values.set(support.at(c), (*solution)[c]);

  UnitFunctional unit;
  unit.base = certify(values, annihilated);
  unit.epsilon = epsilon;
  unit.convention = convention;

  Polynomial residue = apply_functional(unit.base, B, Block::y) - f.one();
  unit.certificate = slice_membership_solve(residue, unit_slice);
  if (!unit.certificate) {
    throw Error("unit functional certificate could not be reconstructed");
  }

  // Dimension of the projection of the solution set onto the E' values.
  auto kernel = nullspace(system);
  ExactMatrix projected(kernel.size(), n_values, field);
  for (std::size_t k = 0; k < kernel.size(); ++k) {
    for (std::size_t c = 0; c < n_values; ++c) projected.at(k, c) = kernel[k][c];
  }
  unit.free_parameters = rref(std::move(projected)).rank();
  return unit;
}

UnitFunctional find_unit_functional(const PolySystem& f, const EngineConfig& config) {
  const int last = config.escalate ? config.epsilon + config.epsilon_escalation_limit
                                   : config.epsilon;
  for (int epsilon = config.epsilon;; ++epsilon) {
    try {
      return unit_functional(f, epsilon, config.convention);
    } catch (const Infeasible&) {
      if (epsilon >= last) throw;
    }
  }
}

}  // namespace rootfunc
