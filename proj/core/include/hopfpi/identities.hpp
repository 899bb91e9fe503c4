#ifndef HOPFPI_IDENTITIES_HPP
#define HOPFPI_IDENTITIES_HPP

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/comodule.hpp"

namespace hopfpi {

/// The free comodule algebra T(X_H) on `copies` copies of H: a rule-less
/// algebra whose generator (i - 1) * dim H + r is the symbol X_i^{x_r},
/// rendered `X[i,<basis>]`.
class FreeAlgebra {
 public:
  static std::shared_ptr<const FreeAlgebra> create(HopfPtr hopf, unsigned copies = 2);

  const HopfPtr& hopf() const { return hopf_; }
  unsigned copies() const { return copies_; }
  unsigned order() const { return hopf_->order(); }
  const AlgebraPtr& algebra() const { return algebra_; }
  /// T⊗H, the codomain of the coaction.
  const AlgebraPtr& with_h() const { return with_h_; }
  const std::vector<AlgElement>& coaction_images() const { return coaction_; }

  /// X_copy^{x_r}; copy is 1-based.
  Generator generator(unsigned copy, std::uint32_t basis_index) const;
  /// (copy, basis index) of a generator.
  std::pair<unsigned, std::uint32_t> symbol(Generator g) const;

 private:
  FreeAlgebra(HopfPtr hopf, unsigned copies);

  HopfPtr hopf_;
  unsigned copies_;
  AlgebraPtr algebra_;
  AlgebraPtr with_h_;
  std::vector<AlgElement> coaction_;
};

using FreePtr = std::shared_ptr<const FreeAlgebra>;

/// X_copy^h, linear in h.
AlgElement x_symbol(const FreeAlgebra& free, unsigned copy, const AlgElement& h);
/// X_copy^{x_r} for a basis word.
AlgElement x_symbol(const FreeAlgebra& free, unsigned copy, const Word& basis_word);

/// δ(X_i^x) = X_i^{x_1} ⊗ x_2, extended multiplicatively.
AlgElement t_coaction(const FreeAlgebra& free, const AlgElement& p);
bool is_coinvariant(const FreeAlgebra& free, const AlgElement& p);

/// The universal map μ: T → S⊗A, X_i^x -> t_i^{x_1} u(x_2). Images are
/// elements of A whose coefficients carry the t-variables.
class UniversalMap {
 public:
  /// Throws PreconditionError if A and T are over different Hopf algebras.
  UniversalMap(FreePtr free, ComodulePtr object);

  const FreeAlgebra& free() const { return *free_; }
  const ComoduleAlgebra& object() const { return *object_; }
  const std::vector<AlgElement>& images() const { return images_; }

  AlgElement operator()(const AlgElement& p) const;

 private:
  FreePtr free_;
  ComodulePtr object_;
  std::vector<AlgElement> images_;
};

AlgElement mu(const FreePtr& free, const ComodulePtr& object, const AlgElement& p);
/// True iff μ(p) is exactly zero. With symbolic parameters a true result
/// holds for every value of the parameters.
bool is_identity(const FreePtr& free, const ComodulePtr& object, const AlgElement& p);

/// (YX - qXY)^n - (1-q)^n X^n Y^n + (1-q)^n c E^n X^n with E = X_1^1,
/// X = X_1^x, Y = X_1^y. `c` defaults to the symbolic parameter c.
AlgElement taft_identity(const FreeAlgebra& free);
AlgElement taft_identity(const FreeAlgebra& free, const CommPoly& c);

struct NamedIdentity {
  std::string name;
  AlgElement element;
};

/// For E(n), with X = X_1^x, Y_i = X_1^{y_i}:
///   en_ci:i    (XY_i + Y_iX)^2 - 4X^2Y_i^2 + 4c_i E^2X^2
///   en_dij:i,j 2(Y_iY_j + Y_jY_i)X^2 - (XY_i + Y_iX)(XY_j + Y_jX) - 2d_ij E^2X^2
/// for 1 <= i <= j <= n, with d_ii = 2c_i. Parameters are taken from `spec`;
/// by default all symbolic.
std::vector<NamedIdentity> en_identities(const FreeAlgebra& free);
std::vector<NamedIdentity> en_identities(const FreeAlgebra& free,
                                         const GaloisObjectSpec& spec);

/// P_h = X_1^{h_1} X_1^{S(h_2)}.
AlgElement coinvariant_P(const FreeAlgebra& free, const AlgElement& h);
/// Q_{h,h'} = X_1^{h_1} X_1^{h'_1} X_1^{S(h_2 h'_2)}.
AlgElement coinvariant_Q(const FreeAlgebra& free, const AlgElement& h,
                         const AlgElement& h_prime);
/// core * X_2^z - X_2^z * core. Requires at least two copies.
AlgElement commutator_identity(const FreeAlgebra& free, const AlgElement& core,
                               const AlgElement& z);

/// Σ_{σ ∈ S_m} sgn(σ) X_σ(1) ... X_σ(m) in T(X_k) with k = trivial_hopf();
/// `free` must be over the trivial Hopf algebra with at least m copies.
AlgElement standard_polynomial(const FreeAlgebra& free, unsigned m);

struct MatrixIdentityReport {
  bool holds = false;
  std::uint64_t substitutions = 0;
  /// First failing tuple of matrix units E_{row,col}, 0-based.
  std::vector<std::pair<unsigned, unsigned>> counterexample;
  /// The nonzero k x k value at the counterexample, row-major.
  std::vector<BigRational> value;
};

/// Evaluates S_m on every m-tuple of k x k matrix units. Since S_m is
/// multilinear this decides whether S_m is an identity of M_k(Q). Throws
/// BudgetExceeded when (k^2)^m * m! exceeds `budget`.
MatrixIdentityReport check_matrix_identity(unsigned m, unsigned k,
                                           std::uint64_t budget = 100'000'000);
bool verify_matrix_identity(unsigned m, unsigned k);

/// The identities known to hold for objects with parameters `spec`: taft_pc
/// for Taft; en_ci:i then en_dij:i,j (i <= j) for E(n).
std::vector<NamedIdentity> identity_catalog(const FreeAlgebra& free,
                                            const GaloisObjectSpec& spec);

/// How the parameters a and a' compare up to the rescaling a -> v^n a
/// (v^2 for E(n)) that identities cannot see.
enum class AClass { Same, Equivalent, Inequivalent, Undetermined, Symbolic };
std::string to_string(AClass a_class);

struct Verdict {
  /// No catalog identity of either object fails on the other.
  bool identities_agree = true;
  /// Name of the first failing identity.
  std::string identity;
  /// Nonzero image of that identity under μ of the other object.
  std::optional<AlgElement> witness;
  /// 1: an identity of the first object fails on the second; 2: the reverse.
  int direction = 0;
  AClass a_class = AClass::Same;

  bool isomorphic() const {
    return identities_agree && (a_class == AClass::Same || a_class == AClass::Equivalent);
  }
};

/// Evaluates each catalog identity of A under μ of A' in catalog order, then
/// the reverse. Equal symbolic parameters (same name and prime) denote equal
/// values. Throws PreconditionError if the objects are in different families.
Verdict distinguish(const ComodulePtr& first, const ComodulePtr& second);

}  // namespace hopfpi

#endif  // HOPFPI_IDENTITIES_HPP
