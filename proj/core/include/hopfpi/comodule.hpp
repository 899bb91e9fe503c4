#ifndef HOPFPI_COMODULE_HPP
#define HOPFPI_COMODULE_HPP

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hopfpi/hopf.hpp"

namespace hopfpi {

/// A parameter left as an indeterminate. Objects compared against each other
/// use different primes so their parameters stay distinct.
struct Symbolic {
  std::uint8_t prime = 0;
  friend bool operator==(const Symbolic&, const Symbolic&) = default;
};

using ParamValue = std::variant<Symbolic, CyclotomicNumber>;

bool is_symbolic(const ParamValue& value);

/// Parameters of A_{a,c} over taft(n) or A(a, c_1..c_n, d_ij) over en(n).
struct GaloisObjectSpec {
  HopfFamily family = HopfFamily::Taft;
  unsigned rank = 2;
  ParamValue a = Symbolic{};
  /// One entry for Taft, n entries (c_1..c_n) for E(n).
  std::vector<ParamValue> c;
  /// E(n) only, keyed by (i, j) with i < j. The diagonal is not free: see
  /// d_value.
  std::map<std::pair<unsigned, unsigned>, ParamValue> d;

  /// All parameters symbolic with the given prime.
  static GaloisObjectSpec taft(unsigned n, std::uint8_t prime = 0);
  static GaloisObjectSpec en(unsigned n, std::uint8_t prime = 0);

  unsigned order() const { return family == HopfFamily::En ? 2u : rank; }
  bool is_numeric() const;
  /// Throws PreconditionError on a malformed spec (wrong counts, numeric
  /// a = 0, orders differing from order()).
  void validate() const;

  CommPoly a_value() const;
  /// Taft: c (index ignored). E(n): c_i, 1 <= i <= n.
  CommPoly c_value(unsigned i = 1) const;
  /// d_ij for i != j. For i == j the relation u_i u_i + u_i u_i = d_ii
  /// forces d_ii = 2 c_i.
  CommPoly d_value(unsigned i, unsigned j) const;

  /// Replaces every symbolic parameter's prime.
  GaloisObjectSpec with_prime(std::uint8_t prime) const;

  /// Assignment of the numeric parameters, for CommPoly::specialize.
  std::map<Var, CyclotomicNumber> numeric_assignment(std::uint8_t prime = 0) const;
};

/// `taft:3;a=1;c=sym`, `en:2;a=1;c1=0;c2=sym;d12=1+z`.
std::string to_string(const GaloisObjectSpec& spec);

/// A Galois object given by its presentation, with coaction δ: A → A⊗H and
/// the section u: H → A sending a basis word of H to the A-word with the same
/// generator indices (x^i y^j -> x^i y^j, x^e y_S -> u^e u_S).
class ComoduleAlgebra {
 public:
  /// Throws PreconditionError if `hopf` does not belong to the spec's family.
  static std::shared_ptr<const ComoduleAlgebra> create(const GaloisObjectSpec& spec,
                                                       HopfPtr hopf);

  const GaloisObjectSpec& spec() const { return spec_; }
  const HopfPtr& hopf() const { return hopf_; }
  const AlgebraPtr& algebra() const { return algebra_; }
  /// The tensor product A⊗H.
  const AlgebraPtr& with_h() const { return with_h_; }
  const std::vector<AlgElement>& coaction_images() const { return coaction_; }

  /// u applied to H-basis element r.
  const AlgElement& section(std::uint32_t basis_index) const {
    return section_.at(basis_index);
  }

 private:
  ComoduleAlgebra(GaloisObjectSpec spec, HopfPtr hopf);

  GaloisObjectSpec spec_;
  HopfPtr hopf_;
  AlgebraPtr algebra_;
  AlgebraPtr with_h_;
  std::vector<AlgElement> coaction_;
  std::vector<AlgElement> section_;
};

using ComodulePtr = std::shared_ptr<const ComoduleAlgebra>;

/// Builds the Hopf algebra from the spec when `hopf` is null.
ComodulePtr galois_object(const GaloisObjectSpec& spec, HopfPtr hopf = nullptr);

AlgElement coaction(const ComoduleAlgebra& object, const AlgElement& element);

/// Linear extension of u to arbitrary elements of H.
AlgElement section_u(const ComoduleAlgebra& object, const AlgElement& h);

/// Basis of A^H = { v : δ(v) = v⊗1 }. Requires numeric parameters.
std::vector<AlgElement> coinvariants(const ComoduleAlgebra& object);

/// Whether a⊗a' -> (a⊗1)δ(a') is a bijection A⊗A → A⊗H. Requires numeric
/// parameters.
bool galois_map_bijective(const ComoduleAlgebra& object);

enum class ComoduleAxiom { AlgebraMap, Coassociativity, Counit, SectionColinear };

std::string to_string(ComoduleAxiom axiom);

struct ComoduleAxiomFailure {
  ComoduleAxiom axiom;
  std::string subject;
};

struct ComoduleAxiomReport {
  std::size_t checks = 0;
  std::vector<ComoduleAxiomFailure> failures;
  bool ok() const { return failures.empty(); }
};

/// δ respects every relation of A; coassociativity and counit on every basis
/// word; δ(u(h)) = (u⊗id)Δ(h) on every H-basis element.
ComoduleAxiomReport check_comodule_axioms(const ComoduleAlgebra& object);

}  // namespace hopfpi

#endif  // HOPFPI_COMODULE_HPP
