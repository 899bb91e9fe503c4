#include "hopfpi/ncalg.hpp"

#include <algorithm>
#include <sstream>

#include "hopfpi/error.hpp"

namespace hopfpi {

namespace {

constexpr std::size_t kMaxCacheEntries = 1u << 21;

void accumulate(Terms& terms, const Word& word, const CommPoly& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms.try_emplace(word, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms.erase(it);
}

}  // namespace

std::size_t PresentedAlgebra::WordHash::operator()(const Word& w) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Generator g : w) {
    h ^= g + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

PresentedAlgebra::PresentedAlgebra(std::string name, unsigned order,
                                   std::vector<std::string> generator_names,
                                   std::vector<RewriteRule> rules)
    : name_(std::move(name)),
      order_(order),
      generator_names_(std::move(generator_names)),
      rules_(std::move(rules)),
      rules_by_first_(generator_names_.size()) {
  for (auto& rule : rules_)
    std::erase_if(rule.rhs, [](const auto& term) { return term.second.is_zero(); });
  for (std::size_t r = 0; r < rules_.size(); ++r) {
    const auto& rule = rules_[r];
    if (rule.lhs.empty())
      throw PreconditionError(name_ + ": rule with empty left-hand side");
    for (Generator g : rule.lhs)
      if (g >= generator_names_.size())
        throw PreconditionError(name_ + ": rule mentions unknown generator");
    for (const auto& [word, coefficient] : rule.rhs) {
      for (Generator g : word)
        if (g >= generator_names_.size())
          throw PreconditionError(name_ + ": rule mentions unknown generator");
      if (!DegLex{}(word, rule.lhs))
        throw PreconditionError(name_ + ": rule " + std::to_string(r) +
                                " is not order-decreasing");
      if (coefficient.order() != order_)
        throw OrderMismatch(order_, coefficient.order());
    }
    rules_by_first_[rule.lhs.front()].push_back(r);
    max_lhs_ = std::max(max_lhs_, rule.lhs.size());
  }
}

AlgebraPtr PresentedAlgebra::create(std::string name, unsigned order,
                                    std::vector<std::string> generator_names,
                                    std::vector<RewriteRule> rules, bool validate) {
  AlgebraPtr algebra(new PresentedAlgebra(std::move(name), order,
                                          std::move(generator_names),
                                          std::move(rules)));
  if (validate) {
    auto report = check_confluence(*algebra);
    if (!report.confluent())
      throw PreconditionError(algebra->name() + ": rule set is not confluent (" +
                              std::to_string(report.unresolved.size()) +
                              " unresolved ambiguities)");
  }
  return algebra;
}

std::optional<Generator> PresentedAlgebra::find_generator(std::string_view name) const {
  for (Generator g = 0; g < generator_names_.size(); ++g)
    if (generator_names_[g] == name) return g;
  return std::nullopt;
}

std::size_t PresentedAlgebra::split() const {
  return tensor_ ? tensor_->left->generator_count() : generator_count();
}

std::optional<PresentedAlgebra::Match> PresentedAlgebra::find_match(
    const Word& word, std::size_t start) const {
  for (std::size_t p = start; p < word.size(); ++p) {
    for (std::size_t r : rules_by_first_[word[p]]) {
      const Word& lhs = rules_[r].lhs;
      if (p + lhs.size() <= word.size() &&
          std::equal(lhs.begin(), lhs.end(), word.begin() + p))
        return Match{p, r};
    }
  }
  return std::nullopt;
}

Terms PresentedAlgebra::reduce(const Word& word, std::size_t start) const {
  auto match = find_match(word, start);
  if (!match) return Terms{{word, CommPoly(order_, 1)}};
  {
    std::lock_guard<std::mutex> lock(cache_mutex_);
    if (auto it = cache_.find(word); it != cache_.end()) return it->second;
  }
  const RewriteRule& rule = rules_[match->rule];
  const std::size_t p = match->position;
  // Every match in a rewritten word overlaps the replaced window.
  const std::size_t next_start = p + 1 >= max_lhs_ ? p + 1 - max_lhs_ : 0;
  Terms result;
  for (const auto& [replacement, coefficient] : rule.rhs) {
    Word rewritten;
    rewritten.reserve(word.size() - rule.lhs.size() + replacement.size());
    rewritten.insert(rewritten.end(), word.begin(), word.begin() + p);
    rewritten.insert(rewritten.end(), replacement.begin(), replacement.end());
    rewritten.insert(rewritten.end(), word.begin() + p + rule.lhs.size(), word.end());
    for (const auto& [w, c] : reduce(rewritten, next_start))
      accumulate(result, w, c * coefficient);
  }
  std::lock_guard<std::mutex> lock(cache_mutex_);
  if (cache_.size() >= kMaxCacheEntries) cache_.clear();
  cache_.emplace(word, result);
  return result;
}

Terms PresentedAlgebra::normal_form(const Word& word) const {
  for (Generator g : word)
    if (g >= generator_count())
      throw PreconditionError(name_ + ": generator id " + std::to_string(g) +
                              " out of range");
  return reduce(word, 0);
}

Terms PresentedAlgebra::multiply_words(const Word& lhs, const Word& rhs) const {
  Word word;
  word.reserve(lhs.size() + rhs.size());
  word.insert(word.end(), lhs.begin(), lhs.end());
  word.insert(word.end(), rhs.begin(), rhs.end());
  if (rules_.empty()) return Terms{{std::move(word), CommPoly(order_, 1)}};
  const std::size_t start = lhs.size() + 1 >= max_lhs_ ? lhs.size() + 1 - max_lhs_ : 0;
  return reduce(word, start);
}

bool PresentedAlgebra::is_normal(const Word& word) const {
  return !find_match(word, 0).has_value();
}

std::vector<Word> PresentedAlgebra::normal_words_up_to(std::size_t max_length,
                                                       std::size_t limit) const {
  std::vector<Word> all{Word{}};
  std::vector<Word> level{Word{}};
  for (std::size_t length = 1; length <= max_length && !level.empty(); ++length) {
    std::vector<Word> next;
    for (const Word& w : level) {
      for (Generator g = 0; g < generator_count(); ++g) {
        Word extended = w;
        extended.push_back(g);
        const std::size_t start =
            extended.size() >= max_lhs_ ? extended.size() - max_lhs_ : 0;
        if (find_match(extended, start)) continue;
        next.push_back(std::move(extended));
        if (all.size() + next.size() > limit)
          throw BudgetExceeded(name_ + ": more than " + std::to_string(limit) +
                               " normal words");
      }
    }
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  std::sort(all.begin(), all.end(), DegLex{});
  return all;
}

std::vector<Word> PresentedAlgebra::normal_basis(std::size_t limit) const {
  // Normal words are closed under prefixes, so the search stops exactly when
  // a whole length level is empty.
  std::vector<Word> all = normal_words_up_to(limit, limit);
  return all;
}

std::string PresentedAlgebra::plain_word_to_string(const Word& word,
                                                   Generator offset) const {
  if (word.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < word.size();) {
    std::size_t j = i;
    while (j < word.size() && word[j] == word[i]) ++j;
    if (!out.empty()) out += '*';
    out += generator_names_.at(word[i] + offset);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

std::string PresentedAlgebra::word_to_string(const Word& word) const {
  if (!tensor_) return plain_word_to_string(word, 0);
  auto [left, right] = split_word(*this, word);
  return tensor_->left->word_to_string(left) + " @ " +
         tensor_->right->word_to_string(right);
}

void PresentedAlgebra::clear_cache() const {
  std::lock_guard<std::mutex> lock(cache_mutex_);
  cache_.clear();
}

namespace {

// Applies `rule` at `position` of `word` and reduces the result.
Terms reduce_after(const PresentedAlgebra& algebra, const Word& word,
                   std::size_t position, const RewriteRule& rule) {
  Terms result;
  for (const auto& [replacement, coefficient] : rule.rhs) {
    Word rewritten(word.begin(), word.begin() + position);
    rewritten.insert(rewritten.end(), replacement.begin(), replacement.end());
    rewritten.insert(rewritten.end(), word.begin() + position + rule.lhs.size(),
                     word.end());
    for (const auto& [w, c] : algebra.normal_form(rewritten))
      accumulate(result, w, c * coefficient);
  }
  return result;
}

}  // namespace

ConfluenceReport check_confluence(const PresentedAlgebra& algebra) {
  ConfluenceReport report;
  const auto& rules = algebra.rules();
  auto check = [&](const Word& word, std::size_t r1, std::size_t p1, std::size_t r2,
                   std::size_t p2) {
    ++report.ambiguities_checked;
    Terms first = reduce_after(algebra, word, p1, rules[r1]);
    Terms second = reduce_after(algebra, word, p2, rules[r2]);
    if (first != second)
      report.unresolved.push_back({word, r1, r2, std::move(first), std::move(second)});
  };
  for (std::size_t i = 0; i < rules.size(); ++i) {
    const Word& li = rules[i].lhs;
    for (std::size_t j = 0; j < rules.size(); ++j) {
      const Word& lj = rules[j].lhs;
      // Overlaps: a proper suffix of li equals a proper prefix of lj.
      for (std::size_t k = 1; k < std::min(li.size(), lj.size()); ++k) {
        if (!std::equal(li.end() - k, li.end(), lj.begin())) continue;
        Word word = li;
        word.insert(word.end(), lj.begin() + k, lj.end());
        check(word, i, 0, j, li.size() - k);
      }
      // Inclusions: lj occurs inside li. Equal left-hand sides count once.
      if (i == j || lj.size() > li.size()) continue;
      if (lj.size() == li.size() && j < i) continue;
      for (std::size_t p = 0; p + lj.size() <= li.size(); ++p) {
        if (std::equal(lj.begin(), lj.end(), li.begin() + p)) check(li, i, 0, j, p);
      }
    }
  }
  return report;
}

AlgebraPtr tensor_product(const AlgebraPtr& left, const AlgebraPtr& right) {
  if (left->order() != right->order()) throw OrderMismatch(left->order(), right->order());
  const unsigned order = left->order();
  const auto offset = static_cast<Generator>(left->generator_count());
  std::vector<std::string> names = left->generator_names();
  names.insert(names.end(), right->generator_names().begin(),
               right->generator_names().end());
  std::vector<RewriteRule> rules = left->rules();
  for (const auto& rule : right->rules()) {
    RewriteRule shifted;
    for (Generator g : rule.lhs) shifted.lhs.push_back(g + offset);
    for (const auto& [word, coefficient] : rule.rhs) {
      Word w;
      for (Generator g : word) w.push_back(g + offset);
      shifted.rhs.emplace_back(std::move(w), coefficient);
    }
    rules.push_back(std::move(shifted));
  }
  for (Generator b = 0; b < right->generator_count(); ++b)
    for (Generator a = 0; a < offset; ++a)
      rules.push_back({Word{b + offset, a}, {{Word{a, b + offset}, CommPoly(order, 1)}}});
  std::shared_ptr<PresentedAlgebra> product(new PresentedAlgebra(
      left->name() + "⊗" + right->name(), order, std::move(names), std::move(rules)));
  product->tensor_ = PresentedAlgebra::TensorInfo{left, right};
  return product;
}

AlgebraPtr tensor_square(const AlgebraPtr& algebra) {
  return tensor_product(algebra, algebra);
}

AlgElement::AlgElement(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

AlgElement AlgElement::one(AlgebraPtr algebra) {
  const unsigned order = algebra->order();
  return scalar(std::move(algebra), CommPoly(order, 1));
}

AlgElement AlgElement::scalar(AlgebraPtr algebra, const CommPoly& coefficient) {
  AlgElement e(std::move(algebra));
  e.add_normal_term(Word{}, coefficient);
  return e;
}

AlgElement AlgElement::generator(AlgebraPtr algebra, Generator g) {
  const unsigned order = algebra->order();
  return from_word(std::move(algebra), Word{g}, CommPoly(order, 1));
}

AlgElement AlgElement::from_word(AlgebraPtr algebra, const Word& word,
                                 const CommPoly& coefficient) {
  AlgElement e(algebra);
  if (coefficient.is_zero()) return e;
  for (const auto& [w, c] : algebra->normal_form(word))
    e.add_normal_term(w, c * coefficient);
  return e;
}

CommPoly AlgElement::coefficient(const Word& word) const {
  auto it = terms_.find(word);
  return it == terms_.end() ? CommPoly(algebra_->order()) : it->second;
}

std::size_t AlgElement::degree() const {
  std::size_t d = 0;
  for (const auto& [w, c] : terms_) d = std::max(d, w.size());
  return d;
}

void AlgElement::check_algebra(const AlgElement& other) const {
  if (algebra_ != other.algebra_)
    throw AlgebraMismatch("elements of " + algebra_->name() + " and " +
                          other.algebra_->name() + " combined");
}

void AlgElement::add_normal_term(const Word& word, const CommPoly& coefficient) {
  if (coefficient.order() != algebra_->order())
    throw OrderMismatch(algebra_->order(), coefficient.order());
  accumulate(terms_, word, coefficient);
}

AlgElement AlgElement::operator-() const {
  AlgElement r = *this;
  for (auto& [w, c] : r.terms_) c = -c;
  return r;
}

AlgElement& AlgElement::operator+=(const AlgElement& rhs) {
  check_algebra(rhs);
  for (const auto& [w, c] : rhs.terms_) accumulate(terms_, w, c);
  return *this;
}

AlgElement& AlgElement::operator-=(const AlgElement& rhs) {
  check_algebra(rhs);
  for (const auto& [w, c] : rhs.terms_) accumulate(terms_, w, -c);
  return *this;
}

AlgElement& AlgElement::operator*=(const AlgElement& rhs) {
  check_algebra(rhs);
  Terms product;
  for (const auto& [w1, c1] : terms_) {
    for (const auto& [w2, c2] : rhs.terms_) {
      const CommPoly coefficient = c1 * c2;
      if (coefficient.is_zero()) continue;
      for (const auto& [w, c] : algebra_->multiply_words(w1, w2))
        accumulate(product, w, c.is_one() ? coefficient : c * coefficient);
    }
  }
  terms_ = std::move(product);
  return *this;
}

AlgElement& AlgElement::operator*=(const CommPoly& rhs) {
  if (rhs.order() != algebra_->order()) throw OrderMismatch(algebra_->order(), rhs.order());
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (rhs.is_one()) return *this;
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= rhs;
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

AlgElement AlgElement::pow(unsigned exponent) const {
  AlgElement result = one(algebra_);
  for (unsigned i = 0; i < exponent; ++i) result *= *this;
  return result;
}

AlgElement normal_form(const AlgebraPtr& algebra, const Word& word) {
  return AlgElement::from_word(algebra, word, CommPoly(algebra->order(), 1));
}

AlgElement evaluate_word(const Word& word, const AlgebraPtr& target,
                         const std::vector<AlgElement>& images, bool anti) {
  AlgElement result = AlgElement::one(target);
  auto step = [&](Generator g) {
    const AlgElement& image = images.at(g);
    if (image.algebra() != target)
      throw AlgebraMismatch("homomorphism image lives outside the target algebra");
    result *= image;
  };
  if (anti) {
    for (auto it = word.rbegin(); it != word.rend(); ++it) step(*it);
  } else {
    for (Generator g : word) step(g);
  }
  return result;
}

AlgElement apply_homomorphism(const AlgElement& element, const AlgebraPtr& target,
                              const std::vector<AlgElement>& images, bool anti) {
  AlgElement result(target);
  for (const auto& [word, coefficient] : element.terms())
    result += evaluate_word(word, target, images, anti) * coefficient;
  return result;
}

AlgElement map_coefficients(const AlgElement& element,
                            const std::function<CommPoly(const CommPoly&)>& fn) {
  AlgElement result(element.algebra());
  for (const auto& [word, coefficient] : element.terms())
    result.add_normal_term(word, fn(coefficient));
  return result;
}

AlgElement embed_left(const AlgebraPtr& product, const AlgElement& a) {
  if (!product->tensor() || product->tensor()->left != a.algebra())
    throw AlgebraMismatch("embed_left: element is not in the left tensor factor");
  AlgElement result(product);
  for (const auto& [word, coefficient] : a.terms()) result.add_normal_term(word, coefficient);
  return result;
}

AlgElement embed_right(const AlgebraPtr& product, const AlgElement& b) {
  if (!product->tensor() || product->tensor()->right != b.algebra())
    throw AlgebraMismatch("embed_right: element is not in the right tensor factor");
  const auto offset = static_cast<Generator>(product->split());
  AlgElement result(product);
  for (const auto& [word, coefficient] : b.terms()) {
    Word shifted;
    for (Generator g : word) shifted.push_back(g + offset);
    result.add_normal_term(shifted, coefficient);
  }
  return result;
}

std::pair<Word, Word> split_word(const PresentedAlgebra& product, const Word& word) {
  const std::size_t offset = product.split();
  auto boundary = std::find_if(word.begin(), word.end(),
                               [&](Generator g) { return g >= offset; });
  Word left(word.begin(), boundary);
  Word right;
  for (auto it = boundary; it != word.end(); ++it) {
    if (*it < offset) throw PreconditionError("split_word: word is not normal");
    right.push_back(*it - static_cast<Generator>(offset));
  }
  return {std::move(left), std::move(right)};
}

Word join_words(const PresentedAlgebra& product, const Word& left, const Word& right) {
  Word word = left;
  const auto offset = static_cast<Generator>(product.split());
  for (Generator g : right) word.push_back(g + offset);
  return word;
}

std::string to_string(const AlgElement& element, const BasisNamer& namer) {
  if (element.is_zero()) return "0";
  const PresentedAlgebra& algebra = *element.algebra();
  std::string out;
  for (const auto& [word, coefficient] : element.terms()) {
    std::string term;
    const bool tensor = algebra.tensor().has_value();
    if (word.empty() && !tensor) {
      term = to_string(coefficient, namer);
    } else {
      std::string word_text = algebra.word_to_string(word);
      const bool bare_left = tensor && split_word(algebra, word).first.empty();
      if (coefficient.is_one()) {
        term = word_text;
      } else if ((-coefficient).is_one()) {
        term = "-" + word_text;
      } else {
        std::string coefficient_text = to_string(coefficient, namer);
        if (needs_parentheses(coefficient))
          coefficient_text = "(" + coefficient_text + ")";
        // `c @ w` already means c*(1 ⊗ w); drop the redundant `1`.
        term = bare_left ? coefficient_text + word_text.substr(1)
                         : coefficient_text + "*" + word_text;
      }
    }
    if (out.empty()) {
      out = term;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

}  // namespace hopfpi
