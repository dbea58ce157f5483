#include "rootfunc/oracle.hpp"

#include <memory>

#include "rootfunc/errors.hpp"

namespace rootfunc::oracle {
namespace {

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.width(); ++k) {
    if (a[k] != 0 && b[k] != 0) return false;
  }
  return true;
}

Polynomial partial_derivative(const Polynomial& p, std::size_t var) {
  Polynomial out(p.context(), p.field());
  for (const auto& [m, c] : p.terms()) {
    unsigned e = m.x(var);
    if (e == 0) continue;
    Monomial d = m;
    d.set_x(var, e - 1);
    out.add_term(d, p.field().mul(c, p.field().from_int(static_cast<long>(e))));
  }
  return out;
}

// Determinant by elimination with row swaps.
Scalar scalar_det(std::vector<std::vector<Scalar>> a, const FieldSpec& field) {
  const std::size_t n = a.size();
  Scalar det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(a[p][c]) == 0) ++p;
    if (p == n) return Scalar(0);
    if (p != c) {
      std::swap(a[p], a[c]);
      det = field.neg(det);
    }
    det = field.mul(det, a[c][c]);
    Scalar inv = field.inv(a[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      Scalar factor = field.mul(a[r][c], inv);
      for (std::size_t k = c; k < n; ++k) a[r][k] = field.sub(a[r][k], field.mul(factor, a[c][k]));
    }
  }
  return det;
}

// Multipliers x^a with |a| <= budget, produced by an odometer over exponents.
std::vector<Monomial> odometer_monomials(std::size_t n, int budget) {
  std::vector<Monomial> out;
  if (budget < 0) return out;
  std::vector<unsigned> e(n, 0);
  while (true) {
    unsigned total = 0;
    for (auto v : e) total += v;
    if (static_cast<int>(total) <= budget) {
      out.push_back(Monomial::from_exponents(n, e));
    }
    std::size_t k = 0;
    while (k < n) {
      if (static_cast<int>(++e[k]) <= budget) break;
      e[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

}  // namespace

Scalar jacobian_at(const PolySystem& f, const std::vector<Scalar>& point) {
  const std::size_t n = f.size();
  std::vector<std::vector<Scalar>> jac(n, std::vector<Scalar>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      jac[i][j] = partial_derivative(f[i], j).evaluate(point);
    }
  }
  return scalar_det(std::move(jac), f.field());
}

CatalogSystem make_catalog_system(std::string name, PolySystem system,
                                  const std::vector<std::vector<Scalar>>& roots,
                                  bool roots_complete) {
  CatalogSystem cat;
  cat.name = std::move(name);
  for (const auto& p : system.polys()) cat.leading_monomials.push_back(p.leading_monomial());
  for (std::size_t a = 0; a < cat.leading_monomials.size(); ++a) {
    for (std::size_t b = a + 1; b < cat.leading_monomials.size(); ++b) {
      if (!coprime(cat.leading_monomials[a], cat.leading_monomials[b])) {
        throw Error("catalog system '" + cat.name + "' has non-coprime leading monomials");
      }
    }
  }
  for (const auto& r : roots) {
    std::vector<Scalar> point;
    for (const auto& v : r) point.push_back(system.field().from_rational(v));
    for (const auto& p : system.polys()) {
      if (sgn(p.evaluate(point)) != 0) {
        throw Error("catalog system '" + cat.name + "' lists a point that is not a root");
      }
    }
    Scalar j = jacobian_at(system, point);
    if (sgn(j) == 0) {
      throw Error("catalog system '" + cat.name + "' lists a multiple root");
    }
    cat.known_roots.push_back({std::move(point), std::move(j)});
  }
  cat.system = std::move(system);
  cat.roots_complete = roots_complete;
  return cat;
}

Polynomial division_remainder(const Polynomial& G, const CatalogSystem& catalog) {
  const auto& f = catalog.system;
  const FieldSpec& field = f.field();
  Polynomial p = G;
  Polynomial remainder(G.context(), field);
  while (!p.is_zero()) {
    const Monomial lead = p.leading_monomial();
    const Scalar lc = p.coefficient(lead);
    bool divided = false;
    for (std::size_t i = 0; i < f.size(); ++i) {
      const Monomial& lm = catalog.leading_monomials[i];
      if (!lm.divides(lead)) continue;
      Scalar factor = field.div(lc, f[i].coefficient(lm));
      p -= f[i].times_monomial(lead.quotient(lm), factor);
      divided = true;
      break;
    }
    if (!divided) {
      remainder.add_term(lead, lc);
      p.add_term(lead, field.neg(lc));
    }
  }
  return remainder;
}

SliceBasis brute_slice_enumerate(const PolySystem& f, int d) {
  const FieldSpec& field = f.field();
  SliceBasis slice;
  slice.system = std::make_shared<const PolySystem>(f);
  slice.degree = d;
  slice.index = MonomialIndex(f.size(), d);
  std::vector<Polynomial> products;
  for (std::size_t i = 0; i < f.size(); ++i) {
    for (const auto& m : odometer_monomials(f.size(), d - f.degree(i))) {
      slice.generators.push_back({i, m});
      products.push_back(f[i] * Polynomial::monomial(f.context(), field, m));
    }
  }

  // rows[g] = (coordinates | unit vector e_g); forward elimination, then
  // back substitution and normalization.
  const std::size_t cols = slice.index.size();
  const std::size_t gens = products.size();
  std::vector<std::vector<Scalar>> rows(gens, std::vector<Scalar>(cols + gens));
  for (std::size_t g = 0; g < gens; ++g) {
    for (const auto& [m, c] : products[g].terms()) rows[g][*slice.index.find(m)] = c;
    rows[g][cols + g] = 1;
  }
  std::vector<std::size_t> pivots;
  std::size_t next = 0;
  for (std::size_t c = 0; c < cols && next < gens; ++c) {
    std::size_t p = next;
    while (p < gens && sgn(rows[p][c]) == 0) ++p;
    if (p == gens) continue;
    std::swap(rows[p], rows[next]);
    for (std::size_t r = next + 1; r < gens; ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Scalar factor = field.div(rows[r][c], rows[next][c]);
      for (std::size_t k = c; k < cols + gens; ++k) {
        rows[r][k] = field.sub(rows[r][k], field.mul(factor, rows[next][k]));
      }
    }
    pivots.push_back(c);
    ++next;
  }
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Scalar inv = field.inv(rows[k][c]);
    for (auto& v : rows[k]) v = field.mul(v, inv);
    for (std::size_t r = 0; r < k; ++r) {
      if (sgn(rows[r][c]) == 0) continue;
      Scalar factor = rows[r][c];
      for (std::size_t j = 0; j < cols + gens; ++j) {
        rows[r][j] = field.sub(rows[r][j], field.mul(factor, rows[k][j]));
      }
    }
  }

  const std::size_t rank = pivots.size();
  slice.basis = ExactMatrix(rank, cols, field);
  slice.transform = ExactMatrix(rank, gens, field);
  for (std::size_t k = 0; k < rank; ++k) {
    for (std::size_t c = 0; c < cols; ++c) slice.basis.at(k, c) = rows[k][c];
    for (std::size_t g = 0; g < gens; ++g) slice.transform.at(k, g) = rows[k][cols + g];
  }
  slice.pivots = std::move(pivots);
  return slice;
}

std::vector<CatalogSystem> standard_catalog() {
  const FieldSpec Q;
  auto sys = [&](std::size_t n, const std::vector<std::vector<RawTerm>>& polys) {
    auto ctx = VarContext::make_default(n);
    std::vector<Polynomial> ps;
    for (const auto& terms : polys) ps.push_back(make_polynomial(ctx, Q, terms));
    return PolySystem(std::move(ps));
  };
  using S = Scalar;
  std::vector<CatalogSystem> out;
  // x1^2 - 1
  out.push_back(make_catalog_system("square", sys(1, {{{{2}, S(1)}, {{0}, S(-1)}}}),
                                    {{S(1)}, {S(-1)}}, true));
  // (x1, x2)
  out.push_back(make_catalog_system("linear2", sys(2, {{{{1, 0}, S(1)}}, {{{0, 1}, S(1)}}}),
                                    {{S(0), S(0)}}, true));
  // (x1^2 - 1, x2^2 - x1)
  out.push_back(make_catalog_system(
      "tower", sys(2, {{{{2, 0}, S(1)}, {{0, 0}, S(-1)}}, {{{0, 2}, S(1)}, {{1, 0}, S(-1)}}}),
      {{S(1), S(1)}, {S(1), S(-1)}}, false));
  // (x1^2 - 1, x2^2 - 1)
  out.push_back(make_catalog_system(
      "grid", sys(2, {{{{2, 0}, S(1)}, {{0, 0}, S(-1)}}, {{{0, 2}, S(1)}, {{0, 0}, S(-1)}}}),
      {{S(1), S(1)}, {S(1), S(-1)}, {S(-1), S(1)}, {S(-1), S(-1)}}, true));
  // (x1 - x2 - 1, x2^2 - 4): a linear generator puts ideal members in degree delta_f
  out.push_back(make_catalog_system(
      "shifted",
      sys(2, {{{{1, 0}, S(1)}, {{0, 1}, S(-1)}, {{0, 0}, S(-1)}},
              {{{0, 2}, S(1)}, {{0, 0}, S(-4)}}}),
      {{S(3), S(2)}, {S(-1), S(-2)}}, true));
  // (x1^3 - x2, x2^2 - x1)
  out.push_back(make_catalog_system(
      "cubic", sys(2, {{{{3, 0}, S(1)}, {{0, 1}, S(-1)}}, {{{0, 2}, S(1)}, {{1, 0}, S(-1)}}}),
      {{S(0), S(0)}, {S(1), S(1)}}, false));
  // x1^3 - x1^2: double root at 0
  out.push_back(make_catalog_system("double_root", sys(1, {{{{3}, S(1)}, {{2}, S(-1)}}}),
                                    {{S(1)}}, false));
  // (x1^2 - 1, x2^2 - 1, x3^2 - 1)
  {
    std::vector<std::vector<Scalar>> roots;
    for (int a : {1, -1})
      for (int b : {1, -1})
        for (int c : {1, -1}) roots.push_back({S(a), S(b), S(c)});
    out.push_back(make_catalog_system("cube3",
                                      sys(3, {{{{2, 0, 0}, S(1)}, {{0, 0, 0}, S(-1)}},
                                              {{{0, 2, 0}, S(1)}, {{0, 0, 0}, S(-1)}},
                                              {{{0, 0, 2}, S(1)}, {{0, 0, 0}, S(-1)}}}),
                                      roots, true));
  }
  // (x1^2 - x3, x2^2 - 1, x3^2 - x3): double point at x1 = x3 = 0
  out.push_back(make_catalog_system(
      "chain3",
      sys(3, {{{{2, 0, 0}, S(1)}, {{0, 0, 1}, S(-1)}},
              {{{0, 2, 0}, S(1)}, {{0, 0, 0}, S(-1)}},
              {{{0, 0, 2}, S(1)}, {{0, 0, 1}, S(-1)}}}),
      {{S(1), S(1), S(1)}, {S(1), S(-1), S(1)}, {S(-1), S(1), S(1)}, {S(-1), S(-1), S(1)}},
      false));
  return out;
}

}  // namespace rootfunc::oracle
