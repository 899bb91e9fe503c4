#include <gtest/gtest.h>

#include "hopfpi/hopfpi.hpp"
#include "support/properties.hpp"

namespace hopfpi {
namespace {

TEST(GaloisObjectSpec, DefaultsAreSymbolic) {
  const auto spec = GaloisObjectSpec::en(3);
  EXPECT_FALSE(spec.is_numeric());
  EXPECT_EQ(spec.c.size(), 3u);
  EXPECT_EQ(spec.d.size(), 3u);
  EXPECT_EQ(spec.order(), 2u);
  EXPECT_EQ(spec.d_value(2, 2), CommPoly(2, 2) * spec.c_value(2));
  EXPECT_EQ(spec.d_value(2, 1), spec.d_value(1, 2));
  EXPECT_EQ(spec.with_prime(1).a_value(), CommPoly::variable(2, Var::a(1)));
  EXPECT_EQ(to_string(GaloisObjectSpec::taft(3)), "taft:3;a=sym;c=sym");
}

TEST(GaloisObjectSpec, ZeroAIsRejected) {
  EXPECT_THROW(galois_object(parse_object_spec("taft:2;a=0;c=1")), PreconditionError);
  GaloisObjectSpec spec = GaloisObjectSpec::taft(3);
  spec.a = CyclotomicNumber(3, 0);
  EXPECT_THROW(spec.validate(), PreconditionError);
  spec.a = CyclotomicNumber(4, 1);
  EXPECT_THROW(spec.validate(), PreconditionError);
}

TEST(GaloisObject, PresentationRelations) {
  const auto object = galois_object(GaloisObjectSpec::taft(3));
  const auto& alg = object->algebra();
  const auto x = AlgElement::generator(alg, 0), y = AlgElement::generator(alg, 1);
  const unsigned n = 3;
  EXPECT_EQ(x.pow(n), AlgElement::scalar(alg, CommPoly::variable(n, Var::a())));
  EXPECT_EQ(y.pow(n), AlgElement::scalar(alg, CommPoly::variable(n, Var::c())));
  EXPECT_EQ(y * x, CommPoly(CyclotomicNumber::zeta(3)) * (x * y));

  const auto e = galois_object(GaloisObjectSpec::en(2));
  const auto& ea = e->algebra();
  const auto u = AlgElement::generator(ea, 0), u1 = AlgElement::generator(ea, 1),
             u2 = AlgElement::generator(ea, 2);
  EXPECT_EQ(u1 * u, -(u * u1));
  EXPECT_EQ(u2 * u1 + u1 * u2, AlgElement::scalar(ea, CommPoly::variable(2, Var::d(1, 2))));
  EXPECT_EQ(u1 * u1, AlgElement::scalar(ea, CommPoly::variable(2, Var::c_indexed(1))));
}

TEST(Coaction, GeneratorImages) {
  const auto object = galois_object(GaloisObjectSpec::taft(2));
  const auto& alg = object->algebra();
  const auto& ah = object->with_h();
  const auto& h = object->hopf()->algebra();
  const auto x = AlgElement::generator(alg, 0), y = AlgElement::generator(alg, 1);
  const auto hx = AlgElement::generator(h, 0), hy = AlgElement::generator(h, 1);
  EXPECT_EQ(coaction(*object, x), embed_left(ah, x) * embed_right(ah, hx));
  EXPECT_EQ(coaction(*object, y), embed_right(ah, hy) + embed_left(ah, y) * embed_right(ah, hx));
}

TEST(Coaction, AxiomsHoldForAllObjects) {
  testing::Zoo zoo;
  for (const auto& object : zoo.objects()) {
    const auto report = check_comodule_axioms(*object);
    EXPECT_TRUE(report.ok()) << to_string(object->spec()) << ": "
                             << to_string(report.failures[0].axiom) << " " << report.failures[0].subject;
  }
}

TEST(Coaction, IsAnAlgebraMapOnRandomPairs) {
  testing::Zoo zoo;
  testing::Rng rng(17);
  for (const auto& object : zoo.objects()) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto e = testing::random_element(rng, object->algebra(), 3, 4);
      const auto f = testing::random_element(rng, object->algebra(), 3, 4);
      EXPECT_EQ(coaction(*object, e * f), coaction(*object, e) * coaction(*object, f))
          << to_string(object->spec());
    }
  }
}

TEST(Section, IntertwinesCoactions) {
  for (const auto& object : {galois_object(GaloisObjectSpec::taft(4)), galois_object(GaloisObjectSpec::en(3))}) {
    const auto& hopf = *object->hopf();
    const auto& ah = object->with_h();
    for (std::uint32_t r = 0; r < hopf.dimension(); ++r) {
      AlgElement expected(ah);
      for (const auto& [key, c] : tensor_terms(hopf.coproduct_of_word(hopf.basis()[r])))
        expected += c * embed_left(ah, object->section(hopf.basis_index(key[0]))) *
                    embed_right(ah, normal_form(hopf.algebra(), key[1]));
      EXPECT_EQ(coaction(*object, object->section(r)), expected) << hopf.basis_name(r);
    }
  }
}

TEST(Coinvariants, TrivialForGaloisObjects) {
  for (const char* text : {"taft:2;a=1;c=0", "taft:3;a=1;c=2", "taft:4;a=z;c=1+z", "en:1;a=1;c1=1",
                           "en:2;a=-1;c1=0;c2=3;d12=1", "en:3;a=2;c1=1;c2=0;c3=1;d12=0;d13=1;d23=0"}) {
    const auto object = galois_object(parse_object_spec(text));
    const auto basis = coinvariants(*object);
    ASSERT_EQ(basis.size(), 1u) << text;
    EXPECT_EQ(basis[0].degree(), 0u) << text;
    EXPECT_TRUE(galois_map_bijective(*object)) << text;
  }
}

TEST(Coinvariants, RequireNumericParameters) {
  const auto object = galois_object(GaloisObjectSpec::taft(2));
  EXPECT_THROW(coinvariants(*object), PreconditionError);
  EXPECT_THROW(galois_map_bijective(*object), PreconditionError);
}

TEST(Coinvariants, HopfAlgebraAsItsOwnObject) {
  // A_{1,0} is H with the regular coaction.
  const auto object = galois_object(parse_object_spec("taft:3;a=1;c=0"));
  EXPECT_EQ(object->algebra()->normal_basis(), object->hopf()->basis());
}

}  // namespace
}  // namespace hopfpi
