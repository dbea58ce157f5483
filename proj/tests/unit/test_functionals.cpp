#include <gtest/gtest.h>

#include "rootfunc/errors.hpp"
#include "rootfunc/functional.hpp"
#include "rootfunc/oracle.hpp"
#include "rootfunc/reduce.hpp"
#include "rootfunc/slices.hpp"
#include "support/gen.hpp"

using namespace rootfunc;
using rootfunc::testing::poly;
using rootfunc::testing::random_poly;
using rootfunc::testing::random_scalar;
using rootfunc::testing::system_of;

namespace {

constexpr int kEvalDegree = 12;

Functional mono_value(const ContextPtr& ctx, std::vector<unsigned> e, Scalar v) {
  return Functional::from_values(ctx, FieldSpec{}, {{Monomial::from_exponents(ctx->size(), e), v}});
}

Functional eval_at(const ContextPtr& ctx, std::vector<Scalar> pt, int degree = kEvalDegree) {
  return eval_combination(ctx, FieldSpec{}, {std::move(pt)}, {Scalar(1)}, degree);
}

/// Sum of eval_xi / J(xi) over a complete root set.
Functional residue_functional(const oracle::CatalogSystem& cat, int degree) {
  std::vector<std::vector<Scalar>> pts;
  std::vector<Scalar> w;
  for (const auto& r : cat.known_roots) {
    pts.push_back(r.point);
    w.push_back(1 / r.jacobian);
  }
  return eval_combination(cat.system.context(), cat.system.field(), pts, w, degree);
}

std::vector<oracle::CatalogSystem> complete_catalog() {
  std::vector<oracle::CatalogSystem> out;
  for (auto& c : oracle::standard_catalog()) {
    if (c.roots_complete) out.push_back(std::move(c));
  }
  return out;
}

Functional random_functional(const ContextPtr& ctx, int degree, std::mt19937_64& rng) {
  Functional L(ctx, FieldSpec{});
  for (const auto& m : x_monomials_up_to(ctx->size(), degree)) L.set(m, random_scalar(rng, FieldSpec{}));
  return L;
}

}  // namespace

TEST(EvalCombination, Examples) {
  auto c2 = VarContext::make_default(2);
  Functional e = eval_at(c2, {Scalar(2), Scalar(-3)}, 4);
  for (const auto& m : x_monomials_up_to(2, 4)) {
    Scalar expect = 1;
    for (unsigned k = 0; k < m.x(0); ++k) expect *= 2;
    for (unsigned k = 0; k < m.x(1); ++k) expect *= -3;
    EXPECT_EQ(e.value(m), expect);
  }
  EXPECT_TRUE(eval_combination(c2, FieldSpec{}, {{Scalar(1), Scalar(5)}}, {Scalar(0)}, 4).is_zero());

  auto c1 = VarContext::make_default(1);
  Functional h = eval_combination(c1, FieldSpec{}, {{Scalar(1)}, {Scalar(-1)}},
                                  {Scalar(1, 2), Scalar(-1, 2)}, 3);
  EXPECT_EQ(h.value(Monomial::x_power(1, 0, 0)), 0);
  EXPECT_EQ(h.value(Monomial::x_power(1, 0, 1)), 1);
  EXPECT_EQ(h.value(Monomial::x_power(1, 0, 2)), 0);
  EXPECT_EQ(h.value(Monomial::x_power(1, 0, 3)), 1);
  EXPECT_EQ(h.truncated(2), unit_functional(system_of(c1, {"x1^2 - 1"}), 0).base);
}

TEST(Functional, ZeroExtensionAndTruncation) {
  auto c1 = VarContext::make_default(1);
  Functional L = mono_value(c1, {5}, Scalar(2));
  EXPECT_EQ(L.value(Monomial::x_power(1, 0, 9)), 0);
  EXPECT_EQ(L.support_degree(), 5);
  EXPECT_TRUE(L.truncated(4).is_zero());
  EXPECT_FALSE(L.certified_degree().has_value());
  L.set(Monomial::x_power(1, 0, 5), Scalar(0));
  EXPECT_TRUE(L.is_zero());
}

TEST(Functional, CertifyChecksAnnihilation) {
  auto c1 = VarContext::make_default(1);
  auto f = system_of(c1, {"x1^2 - 1"});
  auto slice = ideal_slice_basis(f, 3);
  Functional good = eval_at(c1, {Scalar(1)}, 3);
  EXPECT_EQ(certify(good, slice).certified_degree(), 3);
  EXPECT_THROW(certify(mono_value(c1, {2}, Scalar(1)), slice), Error);
  EXPECT_EQ(certify(good, slice).truncated(2).certified_degree(), 2);
}

TEST(ApplyFunctional, Examples) {
  auto c2 = VarContext::make_default(2);
  Polynomial P = poly(c2, "x1*x2'^2 + 3*x1'*x2' - x2 + 4");
  Functional e = eval_at(c2, {Scalar(2), Scalar(5)}, 4);
  EXPECT_EQ(apply_functional(e, P, Block::y),
            substitute_block(P, Block::y, {{0, poly(c2, "2")}, {1, poly(c2, "5")}}));
  EXPECT_TRUE(apply_functional(Functional(c2, FieldSpec{}), P, Block::y).is_zero());

  auto c1 = VarContext::make_default(1);
  Functional L = mono_value(c1, {1}, Scalar(1));
  EXPECT_EQ(apply_functional(L, poly(c1, "x1^2 + x1*x1' + x1'^2 - x1^2*x1'^2"), Block::y),
            poly(c1, "x1"));
}

TEST(StarPoly, Examples) {
  for (const auto& cat : oracle::standard_catalog()) {
    const auto& f = cat.system;
    std::mt19937_64 rng(5);
    Functional L = random_functional(f.context(), f.delta_f() + 2, rng);
    EXPECT_EQ(star_poly(L, f.one(), f), apply_functional(L, bezoutian(f), Block::y)) << cat.name;
    for (const auto& fi : f.polys()) EXPECT_TRUE(star_poly(L, fi, f).is_zero()) << cat.name;
  }
  auto c1 = VarContext::make_default(1);
  auto f = system_of(c1, {"x1^2 - 1"});
  EXPECT_EQ(star_poly(mono_value(c1, {1}, Scalar(1)), poly(c1, "x1^3"), f), poly(c1, "x1"));
}

TEST(StarPoly, KernelMatchesDirect) {
  std::mt19937_64 rng(17);
  for (const auto& cat : oracle::standard_catalog()) {
    const auto& f = cat.system;
    for (Convention conv : {Convention::forward, Convention::reverse}) {
      ExtensionKernel kernel(f, conv);
      Functional L = random_functional(f.context(), f.delta_f() + 3, rng);
      Polynomial F = random_poly(f.context(), f.field(), 4, rng, 4);
      EXPECT_EQ(kernel.star_poly(L, F), star_poly(L, F, f, conv)) << cat.name;
    }
  }
}

TEST(StarFunc, OrthogonalityOfEvaluations) {
  for (const auto& cat : complete_catalog()) {
    const auto& f = cat.system;
    ExtensionKernel kernel(f);
    const int window = f.delta_f() + 3;
    for (const auto& a : cat.known_roots) {
      for (const auto& b : cat.known_roots) {
        Functional ea = eval_at(f.context(), a.point), eb = eval_at(f.context(), b.point);
        Functional prod = kernel.star_func(ea, eb, window);
        Functional expect = a.point == b.point ? eval_at(f.context(), a.point, window).scaled(a.jacobian)
                                               : Functional(f.context(), f.field());
        EXPECT_EQ(prod, expect) << cat.name;
      }
    }
  }
}

TEST(StarFunc, ExamplesOnSquare) {
  auto c1 = VarContext::make_default(1);
  auto f = system_of(c1, {"x1^2 - 1"});
  const int window = 5;
  Functional e1 = eval_at(c1, {Scalar(1)}), em = eval_at(c1, {Scalar(-1)});
  EXPECT_TRUE(star_func(e1, em, f, window).is_zero());
  EXPECT_EQ(star_func(e1, e1, f, window), eval_at(c1, {Scalar(1)}, window).scaled(Scalar(2)));
}

TEST(StarFunc, NeedsCertificatesWithoutBound) {
  auto c1 = VarContext::make_default(1);
  auto f = system_of(c1, {"x1^2 - 1"});
  Functional e1 = eval_at(c1, {Scalar(1)});
  EXPECT_THROW(star_func(e1, e1, f), Error);
  auto slice = ideal_slice_basis(f, 4);
  Functional c = certify(e1, slice);
  ExtensionKernel kernel(f);
  EXPECT_EQ(kernel.commutativity_window(c, c), 4 + 4 - 1 + 1);
  EXPECT_EQ(kernel.star_func(c, c).support_degree(), 8);
}

TEST(StarFunc, ProductAppliedMatchesNestedApplication) {
  std::mt19937_64 rng(23);
  for (const auto& cat : oracle::standard_catalog()) {
    const auto& f = cat.system;
    if (f.size() > 2) continue;
    ExtensionKernel kernel(f);
    for (int t = 0; t < 3; ++t) {
      Functional l = random_functional(f.context(), 2 * f.delta_f() + 4, rng);
      Functional L = random_functional(f.context(), 2 * f.delta_f() + 4, rng);
      const int out = 3;
      Functional prod = kernel.star_func(l, L, out);
      Polynomial F = random_poly(f.context(), f.field(), out, rng, 5);
      EXPECT_EQ(prod(F), l(kernel.star_poly(L, F))) << cat.name;
    }
  }
}

TEST(StarFunc, Linearity) {
  std::mt19937_64 rng(29);
  auto c2 = VarContext::make_default(2);
  auto f = system_of(c2, {"x1^2 - 1", "x2^2 - x1"});
  ExtensionKernel kernel(f);
  Functional a = random_functional(c2, 6, rng), b = random_functional(c2, 6, rng),
             L = random_functional(c2, 6, rng);
  Scalar s(2, 7);
  const int out = 3;
  EXPECT_EQ(kernel.star_func(a.scaled(s) + b, L, out),
            kernel.star_func(a, L, out).scaled(s) + kernel.star_func(b, L, out));
  EXPECT_EQ(kernel.star_func(L, a.scaled(s) + b, out),
            kernel.star_func(L, a, out).scaled(s) + kernel.star_func(L, b, out));
  Polynomial F = random_poly(c2, FieldSpec{}, 4, rng), G = random_poly(c2, FieldSpec{}, 4, rng);
  EXPECT_EQ(kernel.star_poly(a.scaled(s) + b, F),
            kernel.star_poly(a, F).scaled(s) + kernel.star_poly(b, F));
  EXPECT_EQ(kernel.star_poly(L, F.scaled(s) + G),
            kernel.star_poly(L, F).scaled(s) + kernel.star_poly(L, G));
}

TEST(StarPoly, FullAnnihilatorClosedForm) {
  std::mt19937_64 rng(31);
  for (const auto& cat : complete_catalog()) {
    const auto& f = cat.system;
    ExtensionKernel kernel(f);
    Functional l = residue_functional(cat, kEvalDegree);
    for (int t = 0; t < 4; ++t) {
      Polynomial F = random_poly(f.context(), f.field(), 4, rng, 4);
      Polynomial got = kernel.star_poly(l, F);
      EXPECT_EQ(got, apply_functional(l, F.swap_blocks() * kernel.bezoutian(), Block::y)) << cat.name;
      EXPECT_LE(got.degree(), f.delta_f()) << cat.name;
      std::vector<Polynomial> h;
      for (std::size_t i = 0; i < f.size(); ++i) h.push_back(random_poly(f.context(), f.field(), 2, rng, 3));
      EXPECT_TRUE(kernel.star_poly(l, combine(f, h)).is_zero()) << cat.name;
    }
  }
}

TEST(StarFunc, FullAnnihilatorTimesContractedBezoutian) {
  for (const auto& cat : complete_catalog()) {
    const auto& f = cat.system;
    if (f.size() > 2) continue;
    ExtensionKernel kernel(f);
    Functional l = residue_functional(cat, kEvalDegree);
    for (int delta : {0, 1}) {
      const int window = f.delta_f() + delta + 1;
      for (const auto& L : annihilator_basis(f, f.delta_f() + delta)) {
        Functional lhs = kernel.star_func(l, L, window);
        Functional rhs = times_polynomial(l, apply_functional(L, kernel.bezoutian(), Block::y), window);
        EXPECT_EQ(lhs, rhs) << cat.name;
        EXPECT_EQ(kernel.star_func(L, l, window), lhs) << cat.name;
      }
    }
  }
}
