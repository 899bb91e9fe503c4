#ifndef HOPFPI_HOPF_HPP
#define HOPFPI_HOPF_HPP

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "hopfpi/ncalg.hpp"

namespace hopfpi {

enum class HopfFamily { Trivial, Taft, En, Custom };

/// A presented algebra with coproduct, counit and antipode given on
/// generators. Values on composite elements are computed, never tabulated.
class HopfPresentation {
 public:
  struct Structure {
    /// Elements of tensor_square(algebra); the same AlgebraPtr must be passed
    /// as `square`.
    std::vector<AlgElement> coproduct;
    std::vector<CyclotomicNumber> counit;
    std::vector<AlgElement> antipode;
  };

  static std::shared_ptr<const HopfPresentation> create(
      HopfFamily family, unsigned rank, AlgebraPtr algebra, AlgebraPtr square,
      Structure structure);

  HopfFamily family() const { return family_; }
  /// n for taft(n) and en(n).
  unsigned rank() const { return rank_; }
  /// Order of the cyclotomic base field.
  unsigned order() const { return algebra_->order(); }
  /// The primitive root q of the base field.
  CyclotomicNumber root() const { return CyclotomicNumber::zeta(order()); }
  /// `taft:3`, `en:2`, `trivial`.
  std::string spec_name() const;

  const AlgebraPtr& algebra() const { return algebra_; }
  const AlgebraPtr& square() const { return square_; }
  const Structure& structure() const { return structure_; }

  /// Normal words of the algebra in deglex order; the index of a word here is
  /// the basis index r of t_i^{x_r} and X_i^{x_r}.
  const std::vector<Word>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }
  /// Throws PreconditionError for words outside the basis.
  std::uint32_t basis_index(const Word& word) const;
  std::string basis_name(std::uint32_t index) const;
  BasisNamer namer() const;

  /// Coproduct of a basis word, memoized.
  const AlgElement& coproduct_of_word(const Word& word) const;

 private:
  HopfPresentation(HopfFamily family, unsigned rank, AlgebraPtr algebra,
                   AlgebraPtr square, Structure structure);

  HopfFamily family_;
  unsigned rank_;
  AlgebraPtr algebra_;
  AlgebraPtr square_;
  Structure structure_;
  std::vector<Word> basis_;
  std::map<Word, std::uint32_t, DegLex> basis_index_;

  mutable std::mutex mutex_;
  mutable std::map<Word, std::unique_ptr<AlgElement>, DegLex> coproduct_cache_;
};

using HopfPtr = std::shared_ptr<const HopfPresentation>;

/// Taft algebra H_{n^2} over Q(zeta_n): x^n = 1, yx = q xy, y^n = 0, with
/// Δ(x) = x⊗x, Δ(y) = 1⊗y + y⊗x, S(x) = x^{n-1}, S(y) = -q^{-1} x^{n-1} y.
/// Requires n >= 2.
HopfPtr taft(unsigned n);

/// E(n) over Q: x^2 = 1, y_i^2 = 0, y_i x = -x y_i, y_j y_i = -y_i y_j, with
/// Δ(y_i) = 1⊗y_i + y_i⊗x and S(y_i) = -y_i x. Requires n >= 1.
HopfPtr en(unsigned n);

/// The one-dimensional Hopf algebra k over Q(zeta_order).
HopfPtr trivial_hopf(unsigned order = 1);

AlgElement coproduct(const HopfPresentation& hopf, const AlgElement& element);
/// Requires constant coefficients.
CyclotomicNumber counit(const HopfPresentation& hopf, const AlgElement& element);
/// Counit extended linearly over polynomial coefficients.
CommPoly counit_poly(const HopfPresentation& hopf, const AlgElement& element);
AlgElement antipode(const HopfPresentation& hopf, const AlgElement& element);

/// Gaussian binomial coefficient [m choose k] evaluated at q, via the
/// q-Pascal recurrence [m,k] = [m-1,k-1] + q^k [m-1,k].
CyclotomicNumber qbinom(unsigned m, unsigned k, const CyclotomicNumber& q);

enum class HopfAxiom {
  Coassociativity,
  CounitLeft,
  CounitRight,
  AntipodeLeft,
  AntipodeRight,
  CoproductRelations,
  CounitRelations,
  AntipodeRelations,
};

std::string to_string(HopfAxiom axiom);

struct HopfAxiomFailure {
  HopfAxiom axiom;
  /// Basis word or relation left-hand side that fails.
  std::string subject;
};

struct HopfAxiomReport {
  std::size_t checks = 0;
  std::vector<HopfAxiomFailure> failures;
  bool ok() const { return failures.empty(); }
  bool passed(HopfAxiom axiom) const;
};

/// Checks every axiom on every basis element, and compatibility of Δ, ε and S
/// with each defining relation.
HopfAxiomReport check_hopf_axioms(const HopfPresentation& hopf);

/// Tensor terms with one word per factor.
using TensorTerms = std::map<std::vector<Word>, CommPoly>;

/// Splits an element of a two-fold tensor product into (left, right) word pairs.
TensorTerms tensor_terms(const AlgElement& element);

}  // namespace hopfpi

#endif  // HOPFPI_HOPF_HPP
