#include "hopfpi/comodule.hpp"

#include <algorithm>

#include "hopfpi/error.hpp"

namespace hopfpi {

bool is_symbolic(const ParamValue& value) {
  return std::holds_alternative<Symbolic>(value);
}

GaloisObjectSpec GaloisObjectSpec::taft(unsigned n, std::uint8_t prime) {
  GaloisObjectSpec spec;
  spec.family = HopfFamily::Taft;
  spec.rank = n;
  spec.a = Symbolic{prime};
  spec.c = {Symbolic{prime}};
  return spec;
}

GaloisObjectSpec GaloisObjectSpec::en(unsigned n, std::uint8_t prime) {
  GaloisObjectSpec spec;
  spec.family = HopfFamily::En;
  spec.rank = n;
  spec.a = Symbolic{prime};
  spec.c.assign(n, Symbolic{prime});
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned i = 1; i < j; ++i) spec.d.emplace(std::pair{i, j}, Symbolic{prime});
  return spec;
}

bool GaloisObjectSpec::is_numeric() const {
  if (is_symbolic(a)) return false;
  for (const auto& v : c)
    if (is_symbolic(v)) return false;
  for (const auto& [key, v] : d)
    if (is_symbolic(v)) return false;
  return true;
}

void GaloisObjectSpec::validate() const {
  auto check_value = [&](const ParamValue& v, const std::string& name) {
    if (const auto* number = std::get_if<CyclotomicNumber>(&v);
        number && number->order() != order())
      throw PreconditionError("parameter " + name + " lives in Q(zeta_" +
                              std::to_string(number->order()) + "), expected Q(zeta_" +
                              std::to_string(order()) + ")");
  };
  switch (family) {
    case HopfFamily::Taft:
      if (rank < 2) throw PreconditionError("taft objects require n >= 2");
      if (c.size() != 1) throw PreconditionError("taft objects take exactly one c");
      if (!d.empty()) throw PreconditionError("taft objects take no d parameters");
      break;
    case HopfFamily::En:
      if (rank < 1) throw PreconditionError("en objects require n >= 1");
      if (c.size() != rank)
        throw PreconditionError("en:" + std::to_string(rank) + " objects take " +
                                std::to_string(rank) + " c parameters");
      if (d.size() != rank * (rank - 1) / 2)
        throw PreconditionError("en objects take one d parameter per pair i < j");
      for (const auto& [key, v] : d)
        if (key.first >= key.second || key.second > rank)
          throw PreconditionError("d parameters are keyed by 1 <= i < j <= n");
      break;
    default:
      throw PreconditionError("Galois objects exist only for taft and en families");
  }
  check_value(a, "a");
  if (const auto* number = std::get_if<CyclotomicNumber>(&a); number && number->is_zero())
    throw PreconditionError("parameter a must be nonzero");
  for (const auto& v : c) check_value(v, "c");
  for (const auto& [key, v] : d) check_value(v, "d");
}

namespace {

CommPoly param_value(const ParamValue& value, unsigned order, Var (*make)(std::uint8_t)) {
  if (const auto* s = std::get_if<Symbolic>(&value))
    return CommPoly::variable(order, make(s->prime));
  return CommPoly(std::get<CyclotomicNumber>(value));
}

}  // namespace

CommPoly GaloisObjectSpec::a_value() const {
  return param_value(a, order(), [](std::uint8_t p) { return Var::a(p); });
}

CommPoly GaloisObjectSpec::c_value(unsigned i) const {
  if (family == HopfFamily::Taft)
    return param_value(c.at(0), order(), [](std::uint8_t p) { return Var::c(p); });
  const ParamValue& value = c.at(i - 1);
  if (const auto* s = std::get_if<Symbolic>(&value))
    return CommPoly::variable(order(), Var::c_indexed(i, s->prime));
  return CommPoly(std::get<CyclotomicNumber>(value));
}

CommPoly GaloisObjectSpec::d_value(unsigned i, unsigned j) const {
  if (i == j) return c_value(i) * CyclotomicNumber(order(), 2);
  if (i > j) std::swap(i, j);
  const ParamValue& value = d.at({i, j});
  if (const auto* s = std::get_if<Symbolic>(&value))
    return CommPoly::variable(order(), Var::d(i, j, s->prime));
  return CommPoly(std::get<CyclotomicNumber>(value));
}

GaloisObjectSpec GaloisObjectSpec::with_prime(std::uint8_t prime) const {
  GaloisObjectSpec out = *this;
  auto reprime = [&](ParamValue& v) {
    if (auto* s = std::get_if<Symbolic>(&v)) s->prime = prime;
  };
  reprime(out.a);
  for (auto& v : out.c) reprime(v);
  for (auto& [key, v] : out.d) reprime(v);
  return out;
}

std::map<Var, CyclotomicNumber> GaloisObjectSpec::numeric_assignment(
    std::uint8_t prime) const {
  std::map<Var, CyclotomicNumber> out;
  auto add = [&](const ParamValue& v, Var var) {
    if (const auto* number = std::get_if<CyclotomicNumber>(&v)) out.emplace(var, *number);
  };
  add(a, Var::a(prime));
  if (family == HopfFamily::Taft) {
    add(c.at(0), Var::c(prime));
  } else {
    for (unsigned i = 1; i <= c.size(); ++i) add(c[i - 1], Var::c_indexed(i, prime));
    for (const auto& [key, v] : d) add(v, Var::d(key.first, key.second, prime));
  }
  return out;
}

namespace {

std::string value_text(const ParamValue& v) {
  if (const auto* s = std::get_if<Symbolic>(&v))
    return "sym" + std::string(s->prime, '\'');
  std::string text = to_string(std::get<CyclotomicNumber>(v));
  std::erase(text, ' ');
  return text;
}

}  // namespace

std::string to_string(const GaloisObjectSpec& spec) {
  std::string out = (spec.family == HopfFamily::Taft ? "taft:" : "en:") +
                    std::to_string(spec.rank) + ";a=" + value_text(spec.a);
  if (spec.family == HopfFamily::Taft) return out + ";c=" + value_text(spec.c.at(0));
  for (unsigned i = 1; i <= spec.c.size(); ++i)
    out += ";c" + std::to_string(i) + "=" + value_text(spec.c[i - 1]);
  for (const auto& [key, v] : spec.d)
    out += ";d" + std::to_string(key.first) + std::to_string(key.second) + "=" +
           value_text(v);
  return out;
}

namespace {

AlgebraPtr taft_object_algebra(const GaloisObjectSpec& spec) {
  const unsigned n = spec.rank, order = spec.order();
  constexpr Generator x = 0, y = 1;
  std::vector<RewriteRule> rules{
      {Word(n, x), {{Word{}, spec.a_value()}}},
      {Word{y, x}, {{Word{x, y}, CommPoly(CyclotomicNumber::zeta(order))}}},
      {Word(n, y), {{Word{}, spec.c_value()}}},
  };
  return PresentedAlgebra::create(to_string(spec), order, {"x", "y"}, std::move(rules));
}

AlgebraPtr en_object_algebra(const GaloisObjectSpec& spec) {
  const unsigned n = spec.rank, order = spec.order();
  const CommPoly minus_one(order, -1);
  constexpr Generator u = 0;
  std::vector<std::string> names{"u"};
  for (unsigned i = 1; i <= n; ++i) names.push_back("u" + std::to_string(i));
  std::vector<RewriteRule> rules{{Word{u, u}, {{Word{}, spec.a_value()}}}};
  for (Generator i = 1; i <= n; ++i) {
    rules.push_back({Word{i, i}, {{Word{}, spec.c_value(i)}}});
    rules.push_back({Word{i, u}, {{Word{u, i}, minus_one}}});
  }
  for (Generator j = 1; j <= n; ++j)
    for (Generator i = 1; i < j; ++i)
      rules.push_back({Word{j, i}, {{Word{}, spec.d_value(i, j)}, {Word{i, j}, minus_one}}});
  return PresentedAlgebra::create(to_string(spec), order, std::move(names),
                                  std::move(rules));
}

}  // namespace

ComoduleAlgebra::ComoduleAlgebra(GaloisObjectSpec spec, HopfPtr hopf)
    : spec_(std::move(spec)), hopf_(std::move(hopf)) {
  spec_.validate();
  if (!hopf_ || hopf_->family() != spec_.family || hopf_->rank() != spec_.rank)
    throw PreconditionError("Hopf algebra does not match object " + to_string(spec_));
  algebra_ = spec_.family == HopfFamily::Taft ? taft_object_algebra(spec_)
                                              : en_object_algebra(spec_);
  with_h_ = tensor_product(algebra_, hopf_->algebra());

  // A and H share generator indices, so the generator images of δ are those
  // of Δ with the left tensor factor read in A.
  for (Generator g = 0; g < hopf_->algebra()->generator_count(); ++g) {
    AlgElement image(with_h_);
    for (const auto& [key, coefficient] :
         tensor_terms(hopf_->structure().coproduct[g]))
      image += AlgElement::from_word(with_h_, join_words(*with_h_, key[0], key[1]),
                                     coefficient);
    coaction_.push_back(std::move(image));
  }
  const CommPoly one(spec_.order(), 1);
  for (const Word& w : hopf_->basis())
    section_.push_back(AlgElement::from_word(algebra_, w, one));
}

ComodulePtr ComoduleAlgebra::create(const GaloisObjectSpec& spec, HopfPtr hopf) {
  return ComodulePtr(new ComoduleAlgebra(spec, std::move(hopf)));
}

ComodulePtr galois_object(const GaloisObjectSpec& spec, HopfPtr hopf) {
  if (!hopf) hopf = spec.family == HopfFamily::En ? en(spec.rank) : taft(spec.rank);
  return ComoduleAlgebra::create(spec, std::move(hopf));
}

AlgElement coaction(const ComoduleAlgebra& object, const AlgElement& element) {
  if (element.algebra() != object.algebra())
    throw AlgebraMismatch("coaction: element is not in " + object.algebra()->name());
  return apply_homomorphism(element, object.with_h(), object.coaction_images());
}

AlgElement section_u(const ComoduleAlgebra& object, const AlgElement& h) {
  if (h.algebra() != object.hopf()->algebra())
    throw AlgebraMismatch("section_u: element is not in " + object.hopf()->spec_name());
  AlgElement result(object.algebra());
  for (const auto& [word, coefficient] : h.terms())
    result += object.section(object.hopf()->basis_index(word)) * coefficient;
  return result;
}

namespace {

void require_numeric(const ComoduleAlgebra& object, const char* operation) {
  if (!object.spec().is_numeric())
    throw PreconditionError(std::string(operation) +
                            " requires numeric parameters; got " +
                            to_string(object.spec()));
}

// Writes the coordinates of `element` over `index` into column `column`.
void fill_column(FieldMatrix& matrix, std::size_t column, const AlgElement& element,
                 const std::map<Word, std::size_t, DegLex>& index) {
  for (const auto& [word, coefficient] : element.terms())
    matrix.at(index.at(word), column) = coefficient.constant_value();
}

std::map<Word, std::size_t, DegLex> index_words(const std::vector<Word>& words) {
  std::map<Word, std::size_t, DegLex> index;
  for (std::size_t k = 0; k < words.size(); ++k) index.emplace(words[k], k);
  return index;
}

}  // namespace

std::vector<AlgElement> coinvariants(const ComoduleAlgebra& object) {
  require_numeric(object, "coinvariants");
  const auto basis = object.algebra()->normal_basis();
  const auto rows = index_words(object.with_h()->normal_basis());
  const unsigned order = object.spec().order();
  FieldMatrix matrix(rows.size(), basis.size(), order);
  for (std::size_t k = 0; k < basis.size(); ++k) {
    const AlgElement v = normal_form(object.algebra(), basis[k]);
    fill_column(matrix, k, coaction(object, v) - embed_left(object.with_h(), v), rows);
  }
  std::vector<AlgElement> result;
  for (const auto& vector : nullspace(std::move(matrix))) {
    AlgElement element(object.algebra());
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (!vector[k].is_zero()) element.add_normal_term(basis[k], CommPoly(vector[k]));
    result.push_back(std::move(element));
  }
  return result;
}

bool galois_map_bijective(const ComoduleAlgebra& object) {
  require_numeric(object, "galois_map_bijective");
  const auto basis = object.algebra()->normal_basis();
  const auto rows = index_words(object.with_h()->normal_basis());
  const std::size_t dim = basis.size();
  if (rows.size() != dim * object.hopf()->dimension()) return false;
  FieldMatrix matrix(rows.size(), dim * dim, object.spec().order());
  std::vector<AlgElement> left, delta;
  for (const Word& w : basis) {
    const AlgElement e = normal_form(object.algebra(), w);
    left.push_back(embed_left(object.with_h(), e));
    delta.push_back(coaction(object, e));
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      fill_column(matrix, i * dim + j, left[i] * delta[j], rows);
  return matrix.rows() == matrix.cols() && rank(std::move(matrix)) == dim * dim;
}

std::string to_string(ComoduleAxiom axiom) {
  switch (axiom) {
    case ComoduleAxiom::AlgebraMap:
      return "coaction respects relations";
    case ComoduleAxiom::Coassociativity:
      return "coaction coassociativity";
    case ComoduleAxiom::Counit:
      return "coaction counit";
    case ComoduleAxiom::SectionColinear:
      return "section is colinear";
  }
  return "?";
}

ComoduleAxiomReport check_comodule_axioms(const ComoduleAlgebra& object) {
  ComoduleAxiomReport report;
  const auto& hopf = *object.hopf();
  const auto& algebra = object.algebra();
  const auto& with_h = object.with_h();
  auto record = [&](bool ok, ComoduleAxiom axiom, const std::string& subject) {
    ++report.checks;
    if (!ok) report.failures.push_back({axiom, subject});
  };

  for (const auto& rule : algebra->rules()) {
    AlgElement rhs(with_h);
    for (const auto& [w, c] : rule.rhs)
      rhs += evaluate_word(w, with_h, object.coaction_images()) * c;
    record(evaluate_word(rule.lhs, with_h, object.coaction_images()) == rhs,
           ComoduleAxiom::AlgebraMap, algebra->word_to_string(rule.lhs));
  }

  for (const Word& b : algebra->normal_basis()) {
    const AlgElement element = normal_form(algebra, b);
    const TensorTerms delta = tensor_terms(coaction(object, element));
    TensorTerms coaction_first, coproduct_first;
    AlgElement counit_applied(algebra);
    for (const auto& [key, c] : delta) {
      const AlgElement l = normal_form(algebra, key[0]);
      for (const auto& [inner, c2] : tensor_terms(coaction(object, l))) {
        auto [it, fresh] = coaction_first.try_emplace({inner[0], inner[1], key[1]}, c * c2);
        if (!fresh) it->second += c * c2;
      }
      for (const auto& [inner, c2] : tensor_terms(hopf.coproduct_of_word(key[1]))) {
        auto [it, fresh] = coproduct_first.try_emplace({key[0], inner[0], inner[1]}, c * c2);
        if (!fresh) it->second += c * c2;
      }
      counit_applied += l * (c * counit_poly(hopf, normal_form(hopf.algebra(), key[1])));
    }
    std::erase_if(coaction_first, [](const auto& t) { return t.second.is_zero(); });
    std::erase_if(coproduct_first, [](const auto& t) { return t.second.is_zero(); });
    const std::string subject = algebra->word_to_string(b);
    record(coaction_first == coproduct_first, ComoduleAxiom::Coassociativity, subject);
    record(counit_applied == element, ComoduleAxiom::Counit, subject);
  }

  for (std::uint32_t r = 0; r < hopf.dimension(); ++r) {
    AlgElement expected(with_h);
    for (const auto& [key, c] : tensor_terms(hopf.coproduct_of_word(hopf.basis()[r]))) {
      const AlgElement u = object.section(hopf.basis_index(key[0]));
      expected += embed_left(with_h, u) *
                  embed_right(with_h, normal_form(hopf.algebra(), key[1])) * c;
    }
    record(coaction(object, object.section(r)) == expected,
           ComoduleAxiom::SectionColinear, hopf.basis_name(r));
  }
  return report;
}

}  // namespace hopfpi
