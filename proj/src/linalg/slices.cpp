#include "rootfunc/slices.hpp"

#include "rootfunc/errors.hpp"

namespace rootfunc {

Polynomial SliceBasis::generator_polynomial(std::size_t g) const {
  const auto& gen = generators.at(g);
  return (*system)[gen.poly_index].times_monomial(gen.multiplier);
}

Polynomial SliceBasis::row_polynomial(std::size_t k) const {
  Polynomial out = system->zero();
  for (std::size_t c = 0; c < index.size(); ++c) {
    if (sgn(basis.at(k, c)) != 0) out.add_term(index.at(c), basis.at(k, c));
  }
  return out;
}

std::vector<Polynomial> SliceBasis::row_cofactors(std::size_t k) const {
  std::vector<Polynomial> h(system->size(), system->zero());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    const Scalar& c = transform.at(k, g);
    if (sgn(c) != 0) h[generators[g].poly_index].add_term(generators[g].multiplier, c);
  }
  return h;
}

std::optional<std::vector<Scalar>> SliceBasis::coordinates(const Polynomial& P) const {
  std::vector<Scalar> v(index.size());
  for (const auto& [m, c] : P.terms()) {
    auto k = index.find(m);
    if (!k) return std::nullopt;
    v[*k] = c;
  }
  return v;
}

std::vector<SliceGenerator> slice_generators(const PolySystem& f, int d) {
  std::vector<SliceGenerator> out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& m : x_monomials_up_to(f.size(), d - f.degree(i))) {
      out.push_back({i, m});
    }
  }
  return out;
}

SliceBasis ideal_slice_basis(const PolySystem& f, int d) {
  if (d < 0) {
    throw DomainError("slice degree must be non-negative");
  }
  SliceBasis slice;
  slice.system = std::make_shared<const PolySystem>(f);
  slice.degree = d;
  slice.generators = slice_generators(f, d);
  slice.index = MonomialIndex(f.size(), d);

  // Reduce [generators | identity] so the identity part tracks how every
  // basis row is assembled from generators.
  const std::size_t cols = slice.index.size();
  const std::size_t gens = slice.generators.size();
  ExactMatrix augmented(gens, cols + gens, f.field());
  for (std::size_t g = 0; g < gens; ++g) {
    const Polynomial gen = slice.generator_polynomial(g);
    for (const auto& [m, c] : gen.terms()) {
      augmented.at(g, *slice.index.find(m)) = c;
    }
    augmented.at(g, cols + g) = 1;
  }
  auto reduced = rref(std::move(augmented));

  std::size_t rank = 0;
  while (rank < reduced.pivots.size() && reduced.pivots[rank] < cols) ++rank;
  slice.basis = ExactMatrix(rank, cols, f.field());
  slice.transform = ExactMatrix(rank, gens, f.field());
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t c = 0; c < cols; ++c) slice.basis.at(k, c) = reduced.matrix.at(k, c);
    for (std::size_t g = 0; g < gens; ++g) slice.transform.at(k, g) = reduced.matrix.at(k, cols + g);
  }
  slice.pivots.assign(reduced.pivots.begin(), reduced.pivots.begin() + static_cast<long>(rank));
  return slice;
}

std::vector<Functional> annihilator_basis(const SliceBasis& slice) {
  std::vector<Functional> out;
  const auto& f = *slice.system;
  for (const auto& v : nullspace(slice.basis)) {
    Functional L(f.context(), f.field());
    for (std::size_t c = 0; c < v.size(); ++c) L.set(slice.index.at(c), v[c]);
    out.push_back(certify(L, slice));
  }
  return out;
}

std::vector<Functional> annihilator_basis(const PolySystem& f, int d) {
  return annihilator_basis(ideal_slice_basis(f, d));
}

std::optional<std::vector<Polynomial>> slice_membership_solve(const Polynomial& P,
                                                              const SliceBasis& slice) {
  const auto& f = *slice.system;
  const FieldSpec& field = f.field();
  auto coords = slice.coordinates(P);
  if (!coords) return std::nullopt;

  // In reduced echelon form P lies in the row space iff it equals the
  // combination of basis rows weighted by its own pivot coordinates.
  std::vector<Scalar> residual = *coords;
  std::vector<Polynomial> h(f.size(), f.zero());
  for (std::size_t k = 0; k < slice.rank(); ++k) {
    Scalar w = residual[slice.pivots[k]];
    if (sgn(w) == 0) continue;
    for (std::size_t c = 0; c < residual.size(); ++c) {
      if (sgn(slice.basis.at(k, c)) != 0) {
        residual[c] = field.sub(residual[c], field.mul(w, slice.basis.at(k, c)));
      }
    }
    auto row_h = slice.row_cofactors(k);
    for (std::size_t i = 0; i < f.size(); ++i) h[i] += row_h[i].scaled(w);
  }
  for (const auto& r : residual) {
    if (sgn(r) != 0) return std::nullopt;
  }
  return h;
}

std::optional<std::vector<Polynomial>> slice_membership_solve(const Polynomial& P,
                                                              const PolySystem& f, int d) {
  if (d < 0) {
    if (P.is_zero()) return std::vector<Polynomial>(f.size(), f.zero());
    return std::nullopt;
  }
  return slice_membership_solve(P, ideal_slice_basis(f, d));
}

bool annihilates(const Functional& L, const SliceBasis& slice) {
  const FieldSpec& field = slice.system->field();
  for (std::size_t k = 0; k < slice.rank(); ++k) {
    Scalar acc(0);
    for (std::size_t c = 0; c < slice.index.size(); ++c) {
      if (sgn(slice.basis.at(k, c)) != 0) {
        acc = field.add(acc, field.mul(slice.basis.at(k, c), L.value(slice.index.at(c))));
      }
    }
    if (sgn(acc) != 0) return false;
  }
  return true;
}

Functional certify(const Functional& L, const SliceBasis& slice) {
  if (!same_context(L.context(), slice.system->context()) ||
      !(L.field() == slice.system->field())) {
    throw ArityError("functional and slice over different contexts or fields");
  }
  if (!annihilates(L, slice)) {
    throw Error("functional does not annihilate the slice of degree " +
                std::to_string(slice.degree));
  }
  Functional out = L;
  out.certified_degree_ = slice.degree;
  out.system_ref_ = slice.system;
  return out;
}

Polynomial combine(const PolySystem& f, const std::vector<Polynomial>& cofactors) {
  if (cofactors.size() != f.size()) {
    throw ArityError("one cofactor per system polynomial expected");
  }
  Polynomial out = f.zero();
  for (std::size_t i = 0; i < f.size(); ++i) out += cofactors[i] * f[i];
  return out;
}

}  // namespace rootfunc
