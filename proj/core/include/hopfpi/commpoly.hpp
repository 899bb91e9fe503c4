#ifndef HOPFPI_COMMPOLY_HPP
#define HOPFPI_COMMPOLY_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "hopfpi/exactnum.hpp"

namespace hopfpi {

/// Kinds of commuting indeterminates. Structure parameters sort before the
/// t-variables of the symmetric algebra.
enum class VarKind : std::uint8_t { A, C, CIndexed, D, T };

/// A commuting indeterminate: a structure parameter (a, c, c_i, d_ij) or a
/// t-variable t_i^{x_r} (copy index i, H-basis index r).
///
/// `prime` distinguishes otherwise equal parameters belonging to a second
/// object, rendered `c'`, `d[1,2]''`, ...
struct Var {
  VarKind kind = VarKind::A;
  std::uint8_t prime = 0;
  std::uint16_t i = 0;
  std::uint32_t j = 0;

  static Var a(std::uint8_t prime = 0) { return {VarKind::A, prime, 0, 0}; }
  static Var c(std::uint8_t prime = 0) { return {VarKind::C, prime, 0, 0}; }
  static Var c_indexed(unsigned index, std::uint8_t prime = 0) {
    return {VarKind::CIndexed, prime, static_cast<std::uint16_t>(index), 0};
  }
  /// Symmetric: d(i, j) == d(j, i).
  static Var d(unsigned first, unsigned second, std::uint8_t prime = 0) {
    if (first > second) std::swap(first, second);
    return {VarKind::D, prime, static_cast<std::uint16_t>(first), second};
  }
  static Var t(unsigned copy, std::uint32_t basis_index) {
    return {VarKind::T, 0, static_cast<std::uint16_t>(copy), basis_index};
  }

  bool is_param() const { return kind != VarKind::T; }
  unsigned copy() const { return i; }
  std::uint32_t basis_index() const { return j; }

  auto operator<=>(const Var&) const = default;
};

/// Names H-basis element r for rendering t-variables `t[i,<basis>]`.
using BasisNamer = std::function<std::string(std::uint32_t)>;

std::string to_string(const Var& var, const BasisNamer& namer = {});

/// Product of variables with positive exponents, sorted by variable.
class CommMonomial {
 public:
  using Factor = std::pair<Var, std::uint32_t>;

  CommMonomial() = default;
  explicit CommMonomial(Var var, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint64_t degree() const;
  std::uint32_t exponent(const Var& var) const;

  /// Throws Error if an exponent overflows.
  friend CommMonomial operator*(const CommMonomial& lhs,
                                const CommMonomial& rhs);
  friend auto operator<=>(const CommMonomial&, const CommMonomial&) = default;
  friend bool operator==(const CommMonomial&, const CommMonomial&) = default;

 private:
  std::vector<Factor> factors_;
};

/// Sparse polynomial in commuting variables over Q(zeta_order).
///
/// The zero polynomial is the empty term map. Coefficients are never zero.
class CommPoly {
 public:
  using TermMap = std::map<CommMonomial, CyclotomicNumber>;

  explicit CommPoly(unsigned order) : order_(order) {}
  CommPoly(const CyclotomicNumber& constant);
  CommPoly(unsigned order, long constant)
      : CommPoly(CyclotomicNumber(order, constant)) {}

  static CommPoly variable(unsigned order, Var var);
  static CommPoly term(const CyclotomicNumber& coefficient,
                       CommMonomial monomial);

  unsigned order() const { return order_; }
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  bool is_one() const;
  /// Coefficient of the unit monomial.
  CyclotomicNumber constant_term() const;
  /// Requires is_constant().
  CyclotomicNumber constant_value() const;
  CyclotomicNumber coefficient(const CommMonomial& monomial) const;
  std::uint64_t degree() const;
  bool has_t_variables() const;

  CommPoly operator-() const;
  CommPoly& operator+=(const CommPoly& rhs);
  CommPoly& operator-=(const CommPoly& rhs);
  CommPoly& operator*=(const CommPoly& rhs);
  CommPoly& operator*=(const CyclotomicNumber& rhs);
  CommPoly pow(unsigned exponent) const;

  /// Adds coefficient * monomial.
  void add_term(const CommMonomial& monomial, const CyclotomicNumber& coefficient);

  friend bool operator==(const CommPoly& lhs, const CommPoly& rhs) {
    return lhs.order_ == rhs.order_ && lhs.terms_ == rhs.terms_;
  }
  friend bool operator<(const CommPoly& lhs, const CommPoly& rhs);

 private:
  void check_order(unsigned other) const;

  unsigned order_;
  TermMap terms_;
};

inline CommPoly operator+(CommPoly lhs, const CommPoly& rhs) { return lhs += rhs; }
inline CommPoly operator-(CommPoly lhs, const CommPoly& rhs) { return lhs -= rhs; }
inline CommPoly operator*(CommPoly lhs, const CommPoly& rhs) { return lhs *= rhs; }
inline CommPoly operator*(CommPoly lhs, const CyclotomicNumber& rhs) {
  return lhs *= rhs;
}
inline CommPoly operator*(const CyclotomicNumber& lhs, CommPoly rhs) {
  return rhs *= lhs;
}

/// Substitutes numeric values for the assigned variables.
CommPoly specialize(const CommPoly& p, const std::map<Var, CyclotomicNumber>& assignment);

/// Substitutes arbitrary polynomials for the assigned variables.
CommPoly substitute(const CommPoly& p, const std::map<Var, CommPoly>& assignment);

/// Terms in canonical order, e.g. `4*c*t[1,1]^2 - (1 - z)*a`.
std::string to_string(const CommPoly& p, const BasisNamer& namer = {});

/// True when the rendering of `p` needs parentheses as a factor.
bool needs_parentheses(const CommPoly& p);

}  // namespace hopfpi

#endif  // HOPFPI_COMMPOLY_HPP
