#include <gtest/gtest.h>

#include "hopfpi/hopfpi.hpp"
#include "support/properties.hpp"

namespace hopfpi {
namespace {

CommPoly var(Var v, unsigned order = 3) { return CommPoly::variable(order, v); }

TEST(Var, DIsSymmetric) {
  EXPECT_EQ(Var::d(2, 1), Var::d(1, 2));
  EXPECT_NE(Var::d(1, 2), Var::d(1, 2, 1));
  EXPECT_TRUE(Var::a() < Var::t(1, 0));
  EXPECT_FALSE(Var::t(1, 0).is_param());
}

TEST(Var, Rendering) {
  EXPECT_EQ(to_string(Var::a()), "a");
  EXPECT_EQ(to_string(Var::c(1)), "c'");
  EXPECT_EQ(to_string(Var::c_indexed(2)), "c[2]");
  EXPECT_EQ(to_string(Var::d(2, 1, 2)), "d[1,2]''");
  const auto h = taft(3);
  EXPECT_EQ(to_string(Var::t(1, 0), h->namer()), "t[1,1]");
  EXPECT_EQ(to_string(Var::t(2, h->basis_index({1})), h->namer()), "t[2,y]");
}

TEST(CommPoly, ZeroHasNoTerms) {
  CommPoly p = var(Var::a()) - var(Var::a());
  EXPECT_TRUE(p.is_zero());
  EXPECT_EQ(p.term_count(), 0u);
  EXPECT_EQ(to_string(p), "0");
}

TEST(CommPoly, BinomialExpansion) {
  const CommPoly x = var(Var::a(), 1), y = var(Var::c(), 1);
  const CommPoly cube = (x + y).pow(3);
  EXPECT_EQ(cube.term_count(), 4u);
  EXPECT_EQ(cube.coefficient(CommMonomial(Var::a(), 2) * CommMonomial(Var::c())),
            CyclotomicNumber(1, 3));
  EXPECT_EQ(cube.degree(), 3u);
}

TEST(CommPoly, ConstantQueries) {
  const CommPoly five(3, 5);
  EXPECT_TRUE(five.is_constant());
  EXPECT_EQ(five.constant_value(), CyclotomicNumber(3, 5));
  EXPECT_FALSE(var(Var::a()).is_constant());
  EXPECT_TRUE(CommPoly(3, 1).is_one());
  EXPECT_TRUE((var(Var::t(1, 2)) * var(Var::a())).has_t_variables());
  EXPECT_FALSE(var(Var::a()).has_t_variables());
}

TEST(CommPoly, OrderMismatchThrows) {
  EXPECT_THROW(var(Var::a(), 2) + var(Var::a(), 3), OrderMismatch);
}

TEST(CommPoly, SpecializeAndSubstitute) {
  const CommPoly p = var(Var::a()) * var(Var::c()) + CommPoly(CyclotomicNumber::zeta(3));
  const CommPoly s = specialize(p, {{Var::a(), CyclotomicNumber(3, 2)}});
  EXPECT_EQ(s, CommPoly(3, 2) * var(Var::c()) + CommPoly(CyclotomicNumber::zeta(3)));
  const CommPoly sub = substitute(p, {{Var::c(), var(Var::a())}});
  EXPECT_EQ(sub, var(Var::a()).pow(2) + CommPoly(CyclotomicNumber::zeta(3)));
  EXPECT_TRUE(specialize(var(Var::a()) - var(Var::c()),
                         {{Var::a(), CyclotomicNumber(3, 1)}, {Var::c(), CyclotomicNumber(3, 1)}})
                  .is_zero());
}

TEST(CommPoly, RenderingIsCanonical) {
  const CommPoly p = CommPoly(3, 4) * var(Var::c()) * var(Var::t(1, 0)).pow(2) -
                     CommPoly(CommPoly(3, 1) - CommPoly(CyclotomicNumber::zeta(3))) * var(Var::a());
  const auto h = taft(3);
  const std::string text = to_string(p, h->namer());
  EXPECT_NE(text.find("4*c*t[1,1]^2"), std::string::npos) << text;
  EXPECT_NE(text.find("(-1 + z)*a"), std::string::npos) << text;
  EXPECT_EQ(parse_poly(text, scalar_context(3, h)), p);
}

TEST(CommPoly, RandomRingLaws) {
  const auto result = testing::ring_axioms(99, 200);
  EXPECT_TRUE(result.ok()) << result.first_failure;
  EXPECT_EQ(result.cases, 200u);
}

}  // namespace
}  // namespace hopfpi
