#include <gtest/gtest.h>

#include "rootfunc/errors.hpp"
#include "rootfunc/polynomial.hpp"
#include "rootfunc/system.hpp"
#include "support/gen.hpp"

using namespace rootfunc;
using rootfunc::testing::poly;
using rootfunc::testing::random_poly;
using rootfunc::testing::random_scalar;

namespace {

void expect_canonical(const Polynomial& p) {
  for (const auto& [m, c] : p.terms()) {
    EXPECT_NE(c, 0);
    EXPECT_TRUE(p.field().is_canonical(c));
  }
}

}  // namespace

TEST(Field, AxiomsOnRandomElements) {
  std::mt19937_64 rng(7);
  for (const FieldSpec& F : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    for (int t = 0; t < 200; ++t) {
      Scalar a = random_scalar(rng, F), b = random_scalar(rng, F), c = random_scalar(rng, F);
      EXPECT_EQ(F.mul(F.mul(a, b), c), F.mul(a, F.mul(b, c)));
      EXPECT_EQ(F.add(F.add(a, b), c), F.add(a, F.add(b, c)));
      EXPECT_EQ(F.mul(a, F.add(b, c)), F.add(F.mul(a, b), F.mul(a, c)));
      EXPECT_EQ(F.add(a, F.neg(a)), 0);
      if (a != 0) EXPECT_EQ(F.mul(a, F.inv(a)), 1);
    }
  }
}

TEST(Field, PrimeFieldRejectsBadInput) {
  EXPECT_THROW(FieldSpec::prime(32004), DomainError);
  FieldSpec F = FieldSpec::prime(7);
  EXPECT_THROW(F.from_rational(Scalar(1, 7)), DomainError);
  EXPECT_EQ(F.from_rational(Scalar(-1)), 6);
  EXPECT_EQ(F.from_rational(Scalar(1, 2)), 4);
  EXPECT_THROW(F.inv(Scalar(0)), DomainError);
}

TEST(Monomial, GrevlexOrder) {
  auto lt = [](std::vector<unsigned> a, std::vector<unsigned> b) {
    return grevlex_compare(Monomial::from_exponents(3, a), Monomial::from_exponents(3, b)) < 0;
  };
  EXPECT_TRUE(lt({0, 0, 1}, {1, 0, 0}));
  EXPECT_TRUE(lt({2, 0, 0}, {0, 0, 3}));
  EXPECT_TRUE(lt({0, 1, 1}, {1, 0, 1}));
  EXPECT_TRUE(lt({1, 0, 1}, {0, 2, 0}));
  auto all = x_monomials_up_to(2, 2);
  ASSERT_EQ(all.size(), 6u);
  EXPECT_TRUE(all.back().is_one());
  MonomialIndex index(2, 2);
  for (std::size_t k = 0; k < index.size(); ++k) EXPECT_EQ(index.find(index.at(k)), k);
}

TEST(Polynomial, MakePolynomialExamples) {
  auto ctx = VarContext::make_default(1);
  FieldSpec Q;
  EXPECT_TRUE(make_polynomial(ctx, Q, {}).is_zero());
  Polynomial p = make_polynomial(ctx, Q, {{{2, 0}, Scalar(1)}, {{0, 0}, Scalar(-1)}});
  EXPECT_EQ(p, poly(ctx, "x1^2 - 1"));
  EXPECT_TRUE(make_polynomial(ctx, Q, {{{1, 0}, Scalar(1)}, {{1, 0}, Scalar(-1)}}).is_zero());
  EXPECT_THROW(make_polynomial(ctx, Q, {{{1, 0, 0}, Scalar(1)}}), ArityError);
}

TEST(Polynomial, ArithExamples) {
  auto ctx = VarContext::make_default(1);
  Polynomial x = poly(ctx, "x1");
  Polynomial one = poly(ctx, "1");
  EXPECT_EQ(poly_arith(x + one, x - one, ArithOp::mul), poly(ctx, "x1^2 - 1"));
  EXPECT_EQ(poly_arith(x, Polynomial(ctx, FieldSpec{}), ArithOp::add), x);
  Polynomial prod = poly_arith(poly(ctx, "x1^2 - 1"), x, ArithOp::mul);
  EXPECT_EQ(prod, poly(ctx, "x1^3 - x1"));
  for (int v : {2, -5, 11}) {
    std::vector<Scalar> pt{Scalar(v)};
    EXPECT_EQ(prod.evaluate(pt), Scalar(v * v * v - v));
  }
  EXPECT_EQ(poly_arith(x, poly(ctx, "3"), ArithOp::scalar_mul), poly(ctx, "3*x1"));
  EXPECT_THROW(poly_arith(x, x, ArithOp::scalar_mul), ArityError);
}

TEST(Polynomial, RingLawsRandom) {
  std::mt19937_64 rng(11);
  for (const FieldSpec& F : {FieldSpec::rationals(), FieldSpec::prime(32003)}) {
    for (std::size_t n = 1; n <= 3; ++n) {
      auto ctx = VarContext::make_default(n);
      for (int t = 0; t < 15; ++t) {
        Polynomial a = random_poly(ctx, F, 5, rng), b = random_poly(ctx, F, 5, rng),
                   c = random_poly(ctx, F, 5, rng);
        EXPECT_EQ(a * b, b * a);
        EXPECT_EQ(a * (b + c), a * b + a * c);
        EXPECT_EQ((a * b) * c, a * (b * c));
        expect_canonical(a * b - b * c);
        EXPECT_TRUE((a - a).is_zero());
      }
    }
  }
}

TEST(Polynomial, SubstituteExamples) {
  auto ctx = VarContext::make_default(1);
  Polynomial xy = poly(ctx, "x1 + x1'");
  EXPECT_EQ(substitute_block(xy, Block::y, {{0, poly(ctx, "1")}}), poly(ctx, "x1 + 1"));
  EXPECT_EQ(substitute_block(poly(ctx, "x1^2 - 1"), Block::x, {{0, poly(ctx, "x1'")}}),
            poly(ctx, "x1'^2 - 1"));
  EXPECT_EQ(substitute_block(xy, Block::y, {{0, poly(ctx, "x1")}}), poly(ctx, "2*x1"));
}

TEST(Polynomial, SubstituteRoundTrip) {
  std::mt19937_64 rng(3);
  for (std::size_t n = 1; n <= 3; ++n) {
    auto ctx = VarContext::make_default(n);
    std::map<std::size_t, Polynomial> to_y, to_x;
    for (std::size_t i = 0; i < n; ++i) {
      to_y.emplace(i, Polynomial::variable(ctx, FieldSpec{}, i, Block::y));
      to_x.emplace(i, Polynomial::variable(ctx, FieldSpec{}, i, Block::x));
    }
    for (int t = 0; t < 10; ++t) {
      Polynomial p = random_poly(ctx, FieldSpec{}, 5, rng);
      Polynomial q = substitute_block(p, Block::x, to_y);
      EXPECT_EQ(q.degree(Block::x), p.is_zero() ? -1 : 0);
      EXPECT_EQ(q.swap_blocks(), p);
      EXPECT_EQ(substitute_block(q, Block::y, to_x), p);
    }
  }
}

TEST(Polynomial, TotalDegree) {
  auto ctx = VarContext::make_default(1);
  Polynomial p = poly(ctx, "x1^2*x1'");
  EXPECT_EQ(total_degree(p, Block::x), 2);
  EXPECT_EQ(total_degree(p, Block::y), 1);
  EXPECT_EQ(total_degree(p, Block::both), 3);
  EXPECT_EQ(total_degree(Polynomial(ctx, FieldSpec{}), Block::x), -1);
}

TEST(Polynomial, MixedContextsRejected) {
  auto a = VarContext::make_default(1);
  auto b = VarContext::make({"u", "v"});
  EXPECT_THROW(poly(a, "x1") + poly(b, "u"), ArityError);
  EXPECT_THROW(poly(a, "x1") + poly(a, "x1", FieldSpec::prime(5)), ArityError);
}

TEST(PolySystem, Validation) {
  auto ctx = VarContext::make_default(2);
  using rootfunc::testing::system_of;
  EXPECT_THROW(system_of(ctx, {"x1"}), ArityError);
  EXPECT_THROW(system_of(ctx, {"x1", "3"}), DomainError);
  std::vector<Polynomial> mixed{poly(ctx, "x1"), poly(ctx, "x2'")};
  EXPECT_THROW(PolySystem{mixed}, ArityError);
  EXPECT_EQ(system_of(ctx, {"x1^2 - 1", "x2^3 - x1"}).delta_f(), 3);
}
