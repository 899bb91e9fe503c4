#ifndef HOPFPI_NCALG_HPP
#define HOPFPI_NCALG_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hopfpi/commpoly.hpp"

namespace hopfpi {

using Generator = std::uint32_t;
using Word = std::vector<Generator>;

/// Degree-lexicographic order: shorter words first, then lexicographic on
/// generator ids.
struct DegLex {
  bool operator()(const Word& lhs, const Word& rhs) const {
    if (lhs.size() != rhs.size()) return lhs.size() < rhs.size();
    return lhs < rhs;
  }
};

/// Linear combination of words, keyed in deglex order.
using Terms = std::map<Word, CommPoly, DegLex>;

/// Oriented relation lhs -> rhs; every rhs word is deglex-smaller than lhs.
struct RewriteRule {
  Word lhs;
  std::vector<std::pair<Word, CommPoly>> rhs;
};

/// One overlap or inclusion ambiguity whose two reductions disagree.
struct Ambiguity {
  Word word;
  std::size_t first_rule = 0;
  std::size_t second_rule = 0;
  Terms via_first;
  Terms via_second;
};

struct ConfluenceReport {
  std::size_t ambiguities_checked = 0;
  std::vector<Ambiguity> unresolved;
  bool confluent() const { return unresolved.empty(); }
};

class PresentedAlgebra;
using AlgebraPtr = std::shared_ptr<const PresentedAlgebra>;

/// A finitely presented algebra k<generators | rules> over Q(zeta_order),
/// with structure parameters allowed in rule coefficients.
///
/// Immutable after construction. Normal forms are memoized behind a mutex, so
/// instances can be shared between threads.
class PresentedAlgebra {
 public:
  struct TensorInfo {
    AlgebraPtr left;
    AlgebraPtr right;
  };

  /// Throws PreconditionError if a rule is not order-decreasing, mentions an
  /// unknown generator, or (when `validate`) the rule set is not confluent.
  static AlgebraPtr create(std::string name, unsigned order,
                           std::vector<std::string> generator_names,
                           std::vector<RewriteRule> rules, bool validate = true);

  const std::string& name() const { return name_; }
  unsigned order() const { return order_; }
  std::size_t generator_count() const { return generator_names_.size(); }
  const std::string& generator_name(Generator g) const {
    return generator_names_.at(g);
  }
  const std::vector<std::string>& generator_names() const {
    return generator_names_;
  }
  std::optional<Generator> find_generator(std::string_view name) const;
  const std::vector<RewriteRule>& rules() const { return rules_; }

  /// Present when built by tensor_product: generators [0, left size) belong
  /// to the left factor, the rest to the right factor.
  const std::optional<TensorInfo>& tensor() const { return tensor_; }
  std::size_t split() const;

  /// Normal form of the concatenation of two normal words.
  Terms multiply_words(const Word& lhs, const Word& rhs) const;

  /// Leftmost-first reduction to normal form, memoized.
  Terms normal_form(const Word& word) const;
  bool is_normal(const Word& word) const;

  /// All normal words (finite-dimensional algebras only). Throws
  /// BudgetExceeded when more than `limit` normal words exist.
  std::vector<Word> normal_basis(std::size_t limit = 100000) const;
  /// Normal words of length <= max_length.
  std::vector<Word> normal_words_up_to(std::size_t max_length,
                                       std::size_t limit = 100000) const;

  /// Renders a word with `*` and `^`, `1` for the empty word; tensor words
  /// render as `left @ right`.
  std::string word_to_string(const Word& word) const;

  void clear_cache() const;

 private:
  PresentedAlgebra(std::string name, unsigned order,
                   std::vector<std::string> generator_names,
                   std::vector<RewriteRule> rules);

  struct Match {
    std::size_t position;
    std::size_t rule;
  };
  std::optional<Match> find_match(const Word& word, std::size_t start) const;
  Terms reduce(const Word& word, std::size_t start) const;
  std::string plain_word_to_string(const Word& word, Generator offset) const;

  friend AlgebraPtr tensor_product(const AlgebraPtr&, const AlgebraPtr&);
  friend ConfluenceReport check_confluence(const PresentedAlgebra&);

  std::string name_;
  unsigned order_;
  std::vector<std::string> generator_names_;
  std::vector<RewriteRule> rules_;
  std::vector<std::vector<std::size_t>> rules_by_first_;
  std::size_t max_lhs_ = 0;
  std::optional<TensorInfo> tensor_;

  struct WordHash {
    std::size_t operator()(const Word& w) const noexcept;
  };
  mutable std::mutex cache_mutex_;
  mutable std::unordered_map<Word, Terms, WordHash> cache_;
};

/// Reports every overlap/inclusion ambiguity between rule left-hand sides
/// that reduces to two different normal forms.
ConfluenceReport check_confluence(const PresentedAlgebra& algebra);

/// A ⊗ B: generators of A, then generators of B, with the rules of both and
/// b*a -> a*b for every pair of generators a of A, b of B.
AlgebraPtr tensor_product(const AlgebraPtr& left, const AlgebraPtr& right);
AlgebraPtr tensor_square(const AlgebraPtr& algebra);

/// Element of a presented algebra: normal words with nonzero coefficients.
class AlgElement {
 public:
  explicit AlgElement(AlgebraPtr algebra);

  static AlgElement one(AlgebraPtr algebra);
  static AlgElement scalar(AlgebraPtr algebra, const CommPoly& coefficient);
  static AlgElement generator(AlgebraPtr algebra, Generator g);
  /// Reduces `word` to normal form first.
  static AlgElement from_word(AlgebraPtr algebra, const Word& word,
                              const CommPoly& coefficient);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Terms& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  CommPoly coefficient(const Word& word) const;
  /// Longest word length; 0 for zero.
  std::size_t degree() const;

  AlgElement operator-() const;
  AlgElement& operator+=(const AlgElement& rhs);
  AlgElement& operator-=(const AlgElement& rhs);
  AlgElement& operator*=(const AlgElement& rhs);
  AlgElement& operator*=(const CommPoly& rhs);
  AlgElement pow(unsigned exponent) const;

  /// Adds coefficient * word where `word` is already normal.
  void add_normal_term(const Word& word, const CommPoly& coefficient);

  friend bool operator==(const AlgElement& lhs, const AlgElement& rhs) {
    return lhs.algebra_ == rhs.algebra_ && lhs.terms_ == rhs.terms_;
  }

 private:
  void check_algebra(const AlgElement& other) const;

  AlgebraPtr algebra_;
  Terms terms_;
};

inline AlgElement operator+(AlgElement lhs, const AlgElement& rhs) { return lhs += rhs; }
inline AlgElement operator-(AlgElement lhs, const AlgElement& rhs) { return lhs -= rhs; }
inline AlgElement operator*(AlgElement lhs, const AlgElement& rhs) { return lhs *= rhs; }
inline AlgElement operator*(AlgElement lhs, const CommPoly& rhs) { return lhs *= rhs; }
inline AlgElement operator*(const CommPoly& lhs, AlgElement rhs) { return rhs *= lhs; }

/// Normal form of w in A.
AlgElement normal_form(const AlgebraPtr& algebra, const Word& word);

/// Multiplies the images of the letters of `word` in `target`, reversed when
/// `anti` is set. The word is not reduced first, so this also evaluates
/// relation left-hand sides.
AlgElement evaluate_word(const Word& word, const AlgebraPtr& target,
                         const std::vector<AlgElement>& images, bool anti = false);

/// Linear extension of evaluate_word over the terms of `element`.
AlgElement apply_homomorphism(const AlgElement& element, const AlgebraPtr& target,
                              const std::vector<AlgElement>& images,
                              bool anti = false);

/// Applies `fn` to every coefficient.
AlgElement map_coefficients(const AlgElement& element,
                            const std::function<CommPoly(const CommPoly&)>& fn);

/// Embeddings a -> a⊗1 and b -> 1⊗b into a tensor product algebra.
AlgElement embed_left(const AlgebraPtr& product, const AlgElement& a);
AlgElement embed_right(const AlgebraPtr& product, const AlgElement& b);

/// Splits a normal word of a tensor product into its two factor words.
std::pair<Word, Word> split_word(const PresentedAlgebra& product, const Word& word);
Word join_words(const PresentedAlgebra& product, const Word& left, const Word& right);

/// Canonical rendering; parse_element(to_string(e)) == e.
std::string to_string(const AlgElement& element, const BasisNamer& namer = {});

}  // namespace hopfpi

#endif  // HOPFPI_NCALG_HPP
