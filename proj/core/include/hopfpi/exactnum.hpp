#ifndef HOPFPI_EXACTNUM_HPP
#define HOPFPI_EXACTNUM_HPP

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hopfpi {

using BigInteger = mpz_class;
/// Always kept canonical: gcd(num, den) = 1 and den > 0.
using BigRational = mpq_class;

/// Integer polynomial, coefficients stored from degree 0 upwards.
using IntPolynomial = std::vector<BigInteger>;

/// The n-th cyclotomic polynomial. Computed by exact division of x^n - 1 by
/// the cyclotomic polynomials of the proper divisors of n; memoized.
const IntPolynomial& cyclotomic_polynomial(unsigned n);

/// Euler's totient, i.e. deg cyclotomic_polynomial(n).
unsigned totient(unsigned n);

/// Exact element of Q(zeta_n) stored as its remainder modulo Phi_n.
///
/// The coefficient vector always has length totient(order). Values of
/// different orders never mix: every binary operation on two numbers checks
/// that the orders agree and throws OrderMismatch otherwise.
class CyclotomicNumber {
 public:
  /// The rational number `value` viewed in Q(zeta_order).
  explicit CyclotomicNumber(unsigned order, const BigRational& value = 0);
  CyclotomicNumber(unsigned order, long value)
      : CyclotomicNumber(order, BigRational(value)) {}

  /// Reduces an arbitrary polynomial in zeta modulo Phi_order.
  static CyclotomicNumber from_polynomial(unsigned order,
                                          std::vector<BigRational> coefficients);

  static CyclotomicNumber zeta(unsigned order);

  unsigned order() const { return order_; }
  std::span<const BigRational> coefficients() const { return coefficients_; }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// Requires is_rational().
  const BigRational& rational_value() const;
  /// Number of nonzero coefficients.
  std::size_t term_count() const;

  CyclotomicNumber operator-() const;
  CyclotomicNumber& operator+=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator-=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator*=(const CyclotomicNumber& rhs);
  CyclotomicNumber& operator/=(const CyclotomicNumber& rhs);

  /// Throws DivisionByZero on zero.
  CyclotomicNumber inverse() const;
  /// Negative exponents invert first.
  CyclotomicNumber pow(long exponent) const;

  /// Equality of values; numbers of different orders compare unequal.
  friend bool operator==(const CyclotomicNumber& lhs,
                         const CyclotomicNumber& rhs);

  /// Lexicographic order on coefficients; used only for canonical sorting.
  friend bool operator<(const CyclotomicNumber& lhs,
                        const CyclotomicNumber& rhs);

 private:
  CyclotomicNumber(unsigned order, std::vector<BigRational> coefficients,
                   bool already_reduced);
  void check_order(const CyclotomicNumber& other) const;

  unsigned order_;
  std::vector<BigRational> coefficients_;
};

inline CyclotomicNumber operator+(CyclotomicNumber lhs,
                                  const CyclotomicNumber& rhs) {
  return lhs += rhs;
}
inline CyclotomicNumber operator-(CyclotomicNumber lhs,
                                  const CyclotomicNumber& rhs) {
  return lhs -= rhs;
}
inline CyclotomicNumber operator*(CyclotomicNumber lhs,
                                  const CyclotomicNumber& rhs) {
  return lhs *= rhs;
}
inline CyclotomicNumber operator/(CyclotomicNumber lhs,
                                  const CyclotomicNumber& rhs) {
  return lhs /= rhs;
}

/// The canonical primitive n-th root of unity q = zeta_n.
inline CyclotomicNumber primitive_root(unsigned n) {
  return CyclotomicNumber::zeta(n);
}

/// Renders as a polynomial in `z`, lowest degree first: `1 - z + 2*z^2`.
std::string to_string(const CyclotomicNumber& value);
std::string to_string(const BigRational& value);

/// Parses the grammar produced by to_string (and any sum/product of rational
/// multiples of `z` or `q`). Throws ParseError.
CyclotomicNumber parse_cyclotomic(std::string_view text, unsigned order);

/// Dense matrix over Q(zeta_n), row-major.
class FieldMatrix {
 public:
  FieldMatrix(std::size_t rows, std::size_t cols, unsigned order);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  unsigned order() const { return order_; }

  CyclotomicNumber& at(std::size_t r, std::size_t c) {
    return data_[r * cols_ + c];
  }
  const CyclotomicNumber& at(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

 private:
  std::size_t rows_;
  std::size_t cols_;
  unsigned order_;
  std::vector<CyclotomicNumber> data_;
};

std::size_t rank(FieldMatrix matrix);

/// A basis of { v : matrix * v = 0 }, one vector per free column of the
/// reduced row echelon form.
std::vector<std::vector<CyclotomicNumber>> nullspace(FieldMatrix matrix);

}  // namespace hopfpi

#endif  // HOPFPI_EXACTNUM_HPP
