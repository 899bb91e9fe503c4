#include "hopfpi/identities.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "hopfpi/error.hpp"

namespace hopfpi {

FreeAlgebra::FreeAlgebra(HopfPtr hopf, unsigned copies)
    : hopf_(std::move(hopf)), copies_(copies) {
  if (!hopf_) throw PreconditionError("free algebra needs a Hopf algebra");
  if (copies_ == 0) throw PreconditionError("free algebra needs at least one copy");
  const auto dim = static_cast<std::uint32_t>(hopf_->dimension());
  std::vector<std::string> names;
  for (unsigned i = 1; i <= copies_; ++i)
    for (std::uint32_t r = 0; r < dim; ++r)
      names.push_back("X[" + std::to_string(i) + "," + hopf_->basis_name(r) + "]");
  algebra_ = PresentedAlgebra::create("T(" + hopf_->spec_name() + ")", order(),
                                      std::move(names), {});
  with_h_ = tensor_product(algebra_, hopf_->algebra());

  for (unsigned i = 1; i <= copies_; ++i) {
    for (std::uint32_t r = 0; r < dim; ++r) {
      AlgElement image(with_h_);
      for (const auto& [key, c] : tensor_terms(hopf_->coproduct_of_word(hopf_->basis()[r])))
        image += AlgElement::from_word(
            with_h_,
            join_words(*with_h_, Word{generator(i, hopf_->basis_index(key[0]))}, key[1]),
            c);
      coaction_.push_back(std::move(image));
    }
  }
}

FreePtr FreeAlgebra::create(HopfPtr hopf, unsigned copies) {
  return FreePtr(new FreeAlgebra(std::move(hopf), copies));
}

Generator FreeAlgebra::generator(unsigned copy, std::uint32_t basis_index) const {
  if (copy < 1 || copy > copies_)
    throw PreconditionError("copy index " + std::to_string(copy) + " outside 1.." +
                            std::to_string(copies_));
  if (basis_index >= hopf_->dimension())
    throw PreconditionError("basis index out of range");
  return static_cast<Generator>((copy - 1) * hopf_->dimension() + basis_index);
}

std::pair<unsigned, std::uint32_t> FreeAlgebra::symbol(Generator g) const {
  const auto dim = static_cast<Generator>(hopf_->dimension());
  return {g / dim + 1, g % dim};
}

AlgElement x_symbol(const FreeAlgebra& free, unsigned copy, const Word& basis_word) {
  return AlgElement::generator(free.algebra(),
                               free.generator(copy, free.hopf()->basis_index(basis_word)));
}

AlgElement x_symbol(const FreeAlgebra& free, unsigned copy, const AlgElement& h) {
  if (h.algebra() != free.hopf()->algebra())
    throw AlgebraMismatch("x_symbol: element is not in " + free.hopf()->spec_name());
  AlgElement result(free.algebra());
  for (const auto& [word, coefficient] : h.terms())
    result.add_normal_term(Word{free.generator(copy, free.hopf()->basis_index(word))},
                           coefficient);
  return result;
}

AlgElement t_coaction(const FreeAlgebra& free, const AlgElement& p) {
  if (p.algebra() != free.algebra())
    throw AlgebraMismatch("t_coaction: element is not in " + free.algebra()->name());
  return apply_homomorphism(p, free.with_h(), free.coaction_images());
}

bool is_coinvariant(const FreeAlgebra& free, const AlgElement& p) {
  return t_coaction(free, p) == embed_left(free.with_h(), p);
}

UniversalMap::UniversalMap(FreePtr free, ComodulePtr object)
    : free_(std::move(free)), object_(std::move(object)) {
  const HopfPresentation& hopf = *free_->hopf();
  if (free_->hopf() != object_->hopf())
    throw PreconditionError("mu: " + object_->algebra()->name() +
                            " is not over the Hopf algebra of " +
                            free_->algebra()->name());
  const unsigned order = hopf.order();
  for (Generator g = 0; g < free_->algebra()->generator_count(); ++g) {
    const auto [copy, r] = free_->symbol(g);
    AlgElement image(object_->algebra());
    for (const auto& [key, c] : tensor_terms(hopf.coproduct_of_word(hopf.basis()[r]))) {
      const CommPoly t = CommPoly::variable(order, Var::t(copy, hopf.basis_index(key[0])));
      image += object_->section(hopf.basis_index(key[1])) * (t * c);
    }
    images_.push_back(std::move(image));
  }
}

AlgElement UniversalMap::operator()(const AlgElement& p) const {
  if (p.algebra() != free_->algebra())
    throw AlgebraMismatch("mu: element is not in " + free_->algebra()->name());
  return apply_homomorphism(p, object_->algebra(), images_);
}

AlgElement mu(const FreePtr& free, const ComodulePtr& object, const AlgElement& p) {
  return UniversalMap(free, object)(p);
}

bool is_identity(const FreePtr& free, const ComodulePtr& object, const AlgElement& p) {
  return mu(free, object, p).is_zero();
}

namespace {

struct Letters {
  AlgElement e, x;
  std::vector<AlgElement> y;  // y[0] is Y (Taft) or Y_1 (E(n))
};

Letters letters(const FreeAlgebra& free) {
  const auto& hopf = *free.hopf();
  if (hopf.family() != HopfFamily::Taft && hopf.family() != HopfFamily::En)
    throw PreconditionError("catalog identities need a taft or en Hopf algebra");
  Letters l{x_symbol(free, 1, Word{}), x_symbol(free, 1, Word{0}), {}};
  const unsigned count = hopf.family() == HopfFamily::Taft ? 1 : hopf.rank();
  for (Generator i = 1; i <= count; ++i) l.y.push_back(x_symbol(free, 1, Word{i}));
  return l;
}

}  // namespace

AlgElement taft_identity(const FreeAlgebra& free) {
  return taft_identity(free, CommPoly::variable(free.order(), Var::c()));
}

AlgElement taft_identity(const FreeAlgebra& free, const CommPoly& c) {
  const auto& hopf = *free.hopf();
  if (hopf.family() != HopfFamily::Taft)
    throw PreconditionError("taft_identity needs a taft Hopf algebra");
  const unsigned n = hopf.rank();
  const CyclotomicNumber q = hopf.root();
  const CommPoly scale((CyclotomicNumber(n, 1) - q).pow(n));
  const Letters l = letters(free);
  const AlgElement& x = l.x;
  const AlgElement& y = l.y[0];
  return (y * x - x * y * CommPoly(q)).pow(n) - x.pow(n) * y.pow(n) * scale +
         l.e.pow(n) * x.pow(n) * (scale * c);
}

std::vector<NamedIdentity> en_identities(const FreeAlgebra& free) {
  return en_identities(free, GaloisObjectSpec::en(free.hopf()->rank()));
}

std::vector<NamedIdentity> en_identities(const FreeAlgebra& free,
                                         const GaloisObjectSpec& spec) {
  const auto& hopf = *free.hopf();
  if (hopf.family() != HopfFamily::En || spec.family != HopfFamily::En ||
      spec.rank != hopf.rank())
    throw PreconditionError("en_identities needs en(n) and an en:n parameter set");
  const unsigned n = hopf.rank();
  const Letters l = letters(free);
  const CommPoly two(2, 2), four(2, 4);
  const AlgElement e2x2 = l.e * l.e * l.x * l.x;
  const AlgElement x2 = l.x * l.x;
  std::vector<AlgElement> anti;  // X Y_i + Y_i X
  for (const auto& y : l.y) anti.push_back(l.x * y + y * l.x);

  std::vector<NamedIdentity> out;
  for (unsigned i = 1; i <= n; ++i) {
    const AlgElement& yi = l.y[i - 1];
    out.push_back({"en_ci:" + std::to_string(i),
                   anti[i - 1] * anti[i - 1] - x2 * yi * yi * four +
                       e2x2 * (four * spec.c_value(i))});
  }
  for (unsigned i = 1; i <= n; ++i) {
    for (unsigned j = i; j <= n; ++j) {
      const AlgElement& yi = l.y[i - 1];
      const AlgElement& yj = l.y[j - 1];
      out.push_back({"en_dij:" + std::to_string(i) + "," + std::to_string(j),
                     (yi * yj + yj * yi) * x2 * two - anti[i - 1] * anti[j - 1] -
                         e2x2 * (two * spec.d_value(i, j))});
    }
  }
  return out;
}

AlgElement coinvariant_P(const FreeAlgebra& free, const AlgElement& h) {
  const auto& hopf = *free.hopf();
  AlgElement result(free.algebra());
  for (const auto& [key, c] : tensor_terms(coproduct(hopf, h))) {
    const AlgElement right = antipode(hopf, normal_form(hopf.algebra(), key[1]));
    result += x_symbol(free, 1, key[0]) * x_symbol(free, 1, right) * c;
  }
  return result;
}

AlgElement coinvariant_Q(const FreeAlgebra& free, const AlgElement& h,
                         const AlgElement& h_prime) {
  const auto& hopf = *free.hopf();
  AlgElement result(free.algebra());
  const TensorTerms dh = tensor_terms(coproduct(hopf, h));
  const TensorTerms dh_prime = tensor_terms(coproduct(hopf, h_prime));
  for (const auto& [k1, c1] : dh) {
    for (const auto& [k2, c2] : dh_prime) {
      const AlgElement tail =
          antipode(hopf, normal_form(hopf.algebra(), k1[1]) *
                             normal_form(hopf.algebra(), k2[1]));
      result += x_symbol(free, 1, k1[0]) * x_symbol(free, 1, k2[0]) *
                x_symbol(free, 1, tail) * (c1 * c2);
    }
  }
  return result;
}

AlgElement commutator_identity(const FreeAlgebra& free, const AlgElement& core,
                               const AlgElement& z) {
  const AlgElement xz = x_symbol(free, 2, z);
  return core * xz - xz * core;
}

AlgElement standard_polynomial(const FreeAlgebra& free, unsigned m) {
  if (free.hopf()->family() != HopfFamily::Trivial)
    throw PreconditionError("standard_polynomial needs T over the trivial Hopf algebra");
  if (m < 1 || m > free.copies())
    throw PreconditionError("standard_polynomial(" + std::to_string(m) +
                            ") needs at least m copies");
  std::vector<unsigned> perm(m);
  std::iota(perm.begin(), perm.end(), 1u);
  AlgElement result(free.algebra());
  do {
    int inversions = 0;
    for (unsigned a = 0; a < m; ++a)
      for (unsigned b = a + 1; b < m; ++b)
        if (perm[a] > perm[b]) ++inversions;
    Word word;
    for (unsigned i : perm) word.push_back(free.generator(i, 0));
    result.add_normal_term(word, CommPoly(free.order(), inversions % 2 ? -1 : 1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  return result;
}

MatrixIdentityReport check_matrix_identity(unsigned m, unsigned k, std::uint64_t budget) {
  if (m < 1 || k < 1) throw PreconditionError("check_matrix_identity needs m, k >= 1");
  const std::uint64_t units = std::uint64_t{k} * k;
  double estimate = std::pow(static_cast<double>(units), m) * std::tgamma(m + 1.0);
  if (estimate > static_cast<double>(budget))
    throw BudgetExceeded("matrix identity check exceeds the budget of " +
                         std::to_string(budget) + " word evaluations");
  std::uint64_t tuples = 1;
  for (unsigned i = 0; i < m; ++i) tuples *= units;

  auto free = FreeAlgebra::create(trivial_hopf(), m);
  const AlgElement s = standard_polynomial(*free, m);
  std::vector<std::pair<Word, long>> terms;
  for (const auto& [word, c] : s.terms())
    terms.emplace_back(word, c.constant_value().rational_value().get_num().get_si());

  MatrixIdentityReport report;
  std::vector<unsigned> digits(m, 0);
  std::vector<long> value(units);
  for (std::uint64_t t = 0; t < tuples; ++t) {
    std::fill(value.begin(), value.end(), 0);
    for (const auto& [word, sign] : terms) {
      // E_{r1 c1} E_{r2 c2} ... is E_{r1 cm} when every c_i = r_{i+1}.
      unsigned row = digits[word.front()] / k, col = digits[word.front()] % k;
      bool nonzero = true;
      for (std::size_t p = 1; p < word.size() && nonzero; ++p) {
        const unsigned u = digits[word[p]];
        if (u / k != col) nonzero = false;
        col = u % k;
      }
      if (nonzero) value[row * k + col] += sign;
    }
    ++report.substitutions;
    if (std::any_of(value.begin(), value.end(), [](long v) { return v != 0; })) {
      for (unsigned d : digits) report.counterexample.emplace_back(d / k, d % k);
      for (long v : value) report.value.emplace_back(v);
      return report;
    }
    for (unsigned p = 0; p < m && ++digits[p] == units; ++p) digits[p] = 0;
  }
  report.holds = true;
  return report;
}

bool verify_matrix_identity(unsigned m, unsigned k) {
  return check_matrix_identity(m, k).holds;
}

std::vector<NamedIdentity> identity_catalog(const FreeAlgebra& free,
                                            const GaloisObjectSpec& spec) {
  if (spec.family == HopfFamily::Taft)
    return {{"taft_pc", taft_identity(free, spec.c_value())}};
  return en_identities(free, spec);
}

std::string to_string(AClass a_class) {
  switch (a_class) {
    case AClass::Same:
      return "same";
    case AClass::Equivalent:
      return "equivalent";
    case AClass::Inequivalent:
      return "inequivalent";
    case AClass::Undetermined:
      return "undetermined";
    case AClass::Symbolic:
      return "symbolic";
  }
  return "?";
}

namespace {

bool is_perfect_power(const BigInteger& value, unsigned exponent) {
  if (value < 0) {
    if (exponent % 2 == 0) return false;
    return is_perfect_power(BigInteger(-value), exponent);
  }
  BigInteger root;
  return mpz_root(root.get_mpz_t(), value.get_mpz_t(), exponent) != 0;
}

AClass compare_a(const GaloisObjectSpec& first, const GaloisObjectSpec& second) {
  const bool s1 = is_symbolic(first.a), s2 = is_symbolic(second.a);
  if (s1 || s2) {
    if (s1 && s2 && std::get<Symbolic>(first.a) == std::get<Symbolic>(second.a))
      return AClass::Same;
    return AClass::Symbolic;
  }
  const auto& a1 = std::get<CyclotomicNumber>(first.a);
  const auto& a2 = std::get<CyclotomicNumber>(second.a);
  if (a1 == a2) return AClass::Same;
  // A' ≅ A after u -> v u exactly when a'/a is a v^exponent.
  const unsigned exponent = first.family == HopfFamily::Taft ? first.rank : 2;
  const CyclotomicNumber ratio = a2 / a1;
  if (ratio.is_rational()) {
    const BigRational& r = ratio.rational_value();
    if (is_perfect_power(r.get_num(), exponent) && is_perfect_power(r.get_den(), exponent))
      return AClass::Equivalent;
    if (first.order() <= 2) return AClass::Inequivalent;
  }
  return AClass::Undetermined;
}

}  // namespace

Verdict distinguish(const ComodulePtr& first, const ComodulePtr& second) {
  if (first->spec().family != second->spec().family ||
      first->spec().rank != second->spec().rank)
    throw PreconditionError("distinguish: " + to_string(first->spec()) + " and " +
                            to_string(second->spec()) + " are over different Hopf algebras");
  const ComodulePtr other = first->hopf() == second->hopf()
                                ? second
                                : galois_object(second->spec(), first->hopf());
  auto free = FreeAlgebra::create(first->hopf(), 2);
  const UniversalMap mu_first(free, first), mu_second(free, other);

  Verdict verdict;
  verdict.a_class = compare_a(first->spec(), other->spec());
  auto search = [&](const GaloisObjectSpec& spec, const UniversalMap& target, int direction) {
    for (auto& identity : identity_catalog(*free, spec)) {
      AlgElement image = target(identity.element);
      if (image.is_zero()) continue;
      verdict.identities_agree = false;
      verdict.identity = std::move(identity.name);
      verdict.witness = std::move(image);
      verdict.direction = direction;
      return true;
    }
    return false;
  };
  if (!search(first->spec(), mu_second, 1)) search(other->spec(), mu_first, 2);
  return verdict;
}

}  // namespace hopfpi
