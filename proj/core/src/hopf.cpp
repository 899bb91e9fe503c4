#include "hopfpi/hopf.hpp"

#include <algorithm>

#include "hopfpi/error.hpp"

namespace hopfpi {

HopfPresentation::HopfPresentation(HopfFamily family, unsigned rank, AlgebraPtr algebra,
                                   AlgebraPtr square, Structure structure)
    : family_(family),
      rank_(rank),
      algebra_(std::move(algebra)),
      square_(std::move(square)),
      structure_(std::move(structure)) {
  const std::size_t count = algebra_->generator_count();
  if (structure_.coproduct.size() != count || structure_.counit.size() != count ||
      structure_.antipode.size() != count)
    throw PreconditionError("Hopf structure must be given on every generator");
  if (!square_->tensor() || square_->tensor()->left != algebra_ ||
      square_->tensor()->right != algebra_)
    throw PreconditionError("coproduct codomain must be tensor_square(algebra)");
  for (const auto& d : structure_.coproduct)
    if (d.algebra() != square_) throw AlgebraMismatch("coproduct image outside H⊗H");
  for (const auto& s : structure_.antipode)
    if (s.algebra() != algebra_) throw AlgebraMismatch("antipode image outside H");
  for (const auto& e : structure_.counit)
    if (e.order() != algebra_->order()) throw OrderMismatch(algebra_->order(), e.order());
  basis_ = algebra_->normal_basis();
  for (std::uint32_t r = 0; r < basis_.size(); ++r) basis_index_.emplace(basis_[r], r);
}

std::shared_ptr<const HopfPresentation> HopfPresentation::create(
    HopfFamily family, unsigned rank, AlgebraPtr algebra, AlgebraPtr square,
    Structure structure) {
  return std::shared_ptr<const HopfPresentation>(new HopfPresentation(
      family, rank, std::move(algebra), std::move(square), std::move(structure)));
}

std::string HopfPresentation::spec_name() const {
  switch (family_) {
    case HopfFamily::Trivial:
      return "trivial";
    case HopfFamily::Taft:
      return "taft:" + std::to_string(rank_);
    case HopfFamily::En:
      return "en:" + std::to_string(rank_);
    case HopfFamily::Custom:
      break;
  }
  return algebra_->name();
}

std::uint32_t HopfPresentation::basis_index(const Word& word) const {
  auto it = basis_index_.find(word);
  if (it == basis_index_.end())
    throw PreconditionError("word " + algebra_->word_to_string(word) +
                            " is not a basis element of " + spec_name());
  return it->second;
}

std::string HopfPresentation::basis_name(std::uint32_t index) const {
  return algebra_->word_to_string(basis_.at(index));
}

BasisNamer HopfPresentation::namer() const {
  return [this](std::uint32_t index) { return basis_name(index); };
}

const AlgElement& HopfPresentation::coproduct_of_word(const Word& word) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    if (auto it = coproduct_cache_.find(word); it != coproduct_cache_.end())
      return *it->second;
  }
  auto value = std::make_unique<AlgElement>(
      evaluate_word(word, square_, structure_.coproduct));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = coproduct_cache_.try_emplace(word, std::move(value));
  return *it->second;
}

namespace {

Word power_word(Generator g, unsigned exponent) { return Word(exponent, g); }

}  // namespace

HopfPtr taft(unsigned n) {
  if (n < 2) throw PreconditionError("taft(n) requires n >= 2");
  const unsigned order = n;
  const CyclotomicNumber q = CyclotomicNumber::zeta(order);
  constexpr Generator x = 0, y = 1;
  std::vector<RewriteRule> rules{
      {power_word(x, n), {{Word{}, CommPoly(order, 1)}}},
      {Word{y, x}, {{Word{x, y}, CommPoly(q)}}},
      {power_word(y, n), {}},
  };
  auto algebra = PresentedAlgebra::create("H" + std::to_string(n * n), order,
                                          {"x", "y"}, std::move(rules));
  auto square = tensor_square(algebra);
  const CommPoly one(order, 1);
  constexpr Generator x2 = 2, y2 = 3;  // generators of the right factor

  HopfPresentation::Structure s;
  s.coproduct.push_back(AlgElement::from_word(square, Word{x, x2}, one));
  s.coproduct.push_back(AlgElement::from_word(square, Word{y2}, one) +
                        AlgElement::from_word(square, Word{y, x2}, one));
  s.counit = {CyclotomicNumber(order, 1), CyclotomicNumber(order, 0)};
  Word x_inverse = power_word(x, n - 1);
  Word antipode_y = x_inverse;
  antipode_y.push_back(y);
  s.antipode.push_back(AlgElement::from_word(algebra, x_inverse, one));
  s.antipode.push_back(AlgElement::from_word(algebra, antipode_y, CommPoly(-q.inverse())));
  return HopfPresentation::create(HopfFamily::Taft, n, algebra, square, std::move(s));
}

HopfPtr en(unsigned n) {
  if (n < 1) throw PreconditionError("en(n) requires n >= 1");
  constexpr unsigned order = 2;
  const CommPoly one(order, 1), minus_one(order, -1);
  constexpr Generator x = 0;
  auto y = [](unsigned i) { return static_cast<Generator>(i); };
  std::vector<std::string> names{"x"};
  for (unsigned i = 1; i <= n; ++i) names.push_back("y" + std::to_string(i));

  std::vector<RewriteRule> rules{{Word{x, x}, {{Word{}, one}}}};
  for (unsigned i = 1; i <= n; ++i) {
    rules.push_back({Word{y(i), y(i)}, {}});
    rules.push_back({Word{y(i), x}, {{Word{x, y(i)}, minus_one}}});
  }
  for (unsigned j = 1; j <= n; ++j)
    for (unsigned i = 1; i < j; ++i)
      rules.push_back({Word{y(j), y(i)}, {{Word{y(i), y(j)}, minus_one}}});
  auto algebra = PresentedAlgebra::create("E(" + std::to_string(n) + ")", order,
                                          std::move(names), std::move(rules));
  auto square = tensor_square(algebra);
  const auto shift = static_cast<Generator>(n + 1);

  HopfPresentation::Structure s;
  s.coproduct.push_back(AlgElement::from_word(square, Word{x, x + shift}, one));
  s.counit.emplace_back(order, 1);
  s.antipode.push_back(AlgElement::generator(algebra, x));
  for (unsigned i = 1; i <= n; ++i) {
    s.coproduct.push_back(AlgElement::from_word(square, Word{y(i) + shift}, one) +
                          AlgElement::from_word(square, Word{y(i), x + shift}, one));
    s.counit.emplace_back(order, 0);
    s.antipode.push_back(AlgElement::from_word(algebra, Word{y(i), x}, minus_one));
  }
  return HopfPresentation::create(HopfFamily::En, n, algebra, square, std::move(s));
}

HopfPtr trivial_hopf(unsigned order) {
  auto algebra = PresentedAlgebra::create("k", order, {}, {});
  return HopfPresentation::create(HopfFamily::Trivial, 0, algebra,
                                  tensor_square(algebra), {});
}

AlgElement coproduct(const HopfPresentation& hopf, const AlgElement& element) {
  if (element.algebra() != hopf.algebra())
    throw AlgebraMismatch("coproduct: element is not in " + hopf.spec_name());
  AlgElement result(hopf.square());
  for (const auto& [word, coefficient] : element.terms())
    result += hopf.coproduct_of_word(word) * coefficient;
  return result;
}

CommPoly counit_poly(const HopfPresentation& hopf, const AlgElement& element) {
  if (element.algebra() != hopf.algebra())
    throw AlgebraMismatch("counit: element is not in " + hopf.spec_name());
  CommPoly result(hopf.order());
  for (const auto& [word, coefficient] : element.terms()) {
    CyclotomicNumber value(hopf.order(), 1);
    for (Generator g : word) value *= hopf.structure().counit[g];
    result += coefficient * value;
  }
  return result;
}

CyclotomicNumber counit(const HopfPresentation& hopf, const AlgElement& element) {
  return counit_poly(hopf, element).constant_value();
}

AlgElement antipode(const HopfPresentation& hopf, const AlgElement& element) {
  if (element.algebra() != hopf.algebra())
    throw AlgebraMismatch("antipode: element is not in " + hopf.spec_name());
  return apply_homomorphism(element, hopf.algebra(), hopf.structure().antipode, true);
}

CyclotomicNumber qbinom(unsigned m, unsigned k, const CyclotomicNumber& q) {
  if (k > m) throw PreconditionError("qbinom: requires 0 <= k <= m");
  const unsigned order = q.order();
  // row[j] holds [i choose j] for the current i.
  std::vector<CyclotomicNumber> row(k + 1, CyclotomicNumber(order));
  row[0] = CyclotomicNumber(order, 1);
  std::vector<CyclotomicNumber> q_powers{CyclotomicNumber(order, 1)};
  for (unsigned j = 1; j <= k; ++j) q_powers.push_back(q_powers.back() * q);
  for (unsigned i = 1; i <= m; ++i) {
    for (unsigned j = std::min(i, k); j >= 1; --j)
      row[j] = row[j - 1] + q_powers[j] * row[j];
  }
  return row[k];
}

std::string to_string(HopfAxiom axiom) {
  switch (axiom) {
    case HopfAxiom::Coassociativity:
      return "coassociativity";
    case HopfAxiom::CounitLeft:
      return "counit (left)";
    case HopfAxiom::CounitRight:
      return "counit (right)";
    case HopfAxiom::AntipodeLeft:
      return "antipode (left)";
    case HopfAxiom::AntipodeRight:
      return "antipode (right)";
    case HopfAxiom::CoproductRelations:
      return "coproduct respects relations";
    case HopfAxiom::CounitRelations:
      return "counit respects relations";
    case HopfAxiom::AntipodeRelations:
      return "antipode respects relations";
  }
  return "?";
}

bool HopfAxiomReport::passed(HopfAxiom axiom) const {
  return std::none_of(failures.begin(), failures.end(),
                      [&](const HopfAxiomFailure& f) { return f.axiom == axiom; });
}

TensorTerms tensor_terms(const AlgElement& element) {
  TensorTerms result;
  for (const auto& [word, coefficient] : element.terms()) {
    auto [left, right] = split_word(*element.algebra(), word);
    result.emplace(std::vector<Word>{std::move(left), std::move(right)}, coefficient);
  }
  return result;
}

namespace {

void add_tensor_term(TensorTerms& terms, std::vector<Word> key, const CommPoly& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(std::move(key), c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms.erase(it);
}

std::string relation_text(const PresentedAlgebra& algebra, const RewriteRule& rule) {
  AlgElement rhs(std::shared_ptr<const PresentedAlgebra>{});
  std::string text = algebra.word_to_string(rule.lhs) + " -> ";
  if (rule.rhs.empty()) return text + "0";
  bool first = true;
  for (const auto& [word, coefficient] : rule.rhs) {
    if (!first) text += " + ";
    first = false;
    if (!coefficient.is_one()) text += "(" + to_string(coefficient) + ")*";
    text += algebra.word_to_string(word);
  }
  return text;
}

}  // namespace

HopfAxiomReport check_hopf_axioms(const HopfPresentation& hopf) {
  HopfAxiomReport report;
  const auto& algebra = hopf.algebra();
  const auto& square = hopf.square();
  const auto& structure = hopf.structure();
  const unsigned order = hopf.order();
  auto record = [&](bool ok, HopfAxiom axiom, const std::string& subject) {
    ++report.checks;
    if (!ok) report.failures.push_back({axiom, subject});
  };
  auto word_element = [&](const Word& w) { return normal_form(algebra, w); };

  for (const Word& b : hopf.basis()) {
    const std::string subject = algebra->word_to_string(b);
    const AlgElement element = word_element(b);
    const TensorTerms delta = tensor_terms(hopf.coproduct_of_word(b));

    TensorTerms left_first, right_first;
    AlgElement counit_left(algebra), counit_right(algebra);
    AlgElement antipode_left(algebra), antipode_right(algebra);
    for (const auto& [key, c] : delta) {
      const Word& l = key[0];
      const Word& r = key[1];
      for (const auto& [inner, c2] : tensor_terms(hopf.coproduct_of_word(l)))
        add_tensor_term(left_first, {inner[0], inner[1], r}, c * c2);
      for (const auto& [inner, c2] : tensor_terms(hopf.coproduct_of_word(r)))
        add_tensor_term(right_first, {l, inner[0], inner[1]}, c * c2);
      const AlgElement el = word_element(l), er = word_element(r);
      counit_left += er * (c * counit_poly(hopf, el));
      counit_right += el * (c * counit_poly(hopf, er));
      antipode_left += antipode(hopf, el) * er * c;
      antipode_right += el * antipode(hopf, er) * c;
    }
    const AlgElement unit_times_counit =
        AlgElement::scalar(algebra, counit_poly(hopf, element));
    record(left_first == right_first, HopfAxiom::Coassociativity, subject);
    record(counit_left == element, HopfAxiom::CounitLeft, subject);
    record(counit_right == element, HopfAxiom::CounitRight, subject);
    record(antipode_left == unit_times_counit, HopfAxiom::AntipodeLeft, subject);
    record(antipode_right == unit_times_counit, HopfAxiom::AntipodeRight, subject);
  }

  for (const auto& rule : algebra->rules()) {
    const std::string subject = relation_text(*algebra, rule);
    auto counit_of = [&](const Word& w) {
      CyclotomicNumber v(order, 1);
      for (Generator g : w) v *= structure.counit[g];
      return CommPoly(v);
    };
    AlgElement delta_rhs(square), antipode_rhs(algebra);
    CommPoly counit_rhs(order);
    for (const auto& [w, c] : rule.rhs) {
      delta_rhs += evaluate_word(w, square, structure.coproduct) * c;
      antipode_rhs += evaluate_word(w, algebra, structure.antipode, true) * c;
      counit_rhs += counit_of(w) * c;
    }
    record(evaluate_word(rule.lhs, square, structure.coproduct) == delta_rhs,
           HopfAxiom::CoproductRelations, subject);
    record(counit_of(rule.lhs) == counit_rhs, HopfAxiom::CounitRelations, subject);
    record(evaluate_word(rule.lhs, algebra, structure.antipode, true) == antipode_rhs,
           HopfAxiom::AntipodeRelations, subject);
  }
  return report;
}

}  // namespace hopfpi
