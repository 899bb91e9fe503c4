#include "hopfpi/exactnum.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <utility>

#include "hopfpi/error.hpp"

namespace hopfpi {

namespace {

using RationalPolynomial = std::vector<BigRational>;

void trim(RationalPolynomial& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of integer polynomials; the divisor must be monic.
IntPolynomial divide_exact(const IntPolynomial& dividend,
                           const IntPolynomial& divisor) {
  IntPolynomial remainder = dividend;
  const std::size_t d = divisor.size() - 1;
  IntPolynomial quotient(dividend.size() - d, 0);
  for (std::size_t k = remainder.size(); k-- > d;) {
    const BigInteger c = remainder[k];
    if (c == 0) continue;
    quotient[k - d] = c;
    for (std::size_t i = 0; i <= d; ++i) remainder[k - d + i] -= c * divisor[i];
  }
  return quotient;
}

// Reduces p in place modulo the monic polynomial phi; p is resized to deg phi.
void reduce_mod(RationalPolynomial& p, const IntPolynomial& phi) {
  const std::size_t d = phi.size() - 1;
  for (std::size_t k = p.size(); k-- > d;) {
    if (p[k] == 0) continue;
    const BigRational c = p[k];
    for (std::size_t i = 0; i < d; ++i) p[k - d + i] -= c * phi[i];
    p[k] = 0;
  }
  p.resize(d, BigRational(0));
}

// Quotient and remainder over Q[x]; divisor must be nonzero and trimmed.
std::pair<RationalPolynomial, RationalPolynomial> divmod(
    RationalPolynomial a, const RationalPolynomial& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  RationalPolynomial quotient(a.size() - b.size() + 1, BigRational(0));
  const BigRational lead = b.back();
  for (std::size_t k = a.size(); k-- >= b.size();) {
    if (a[k] == 0) continue;
    const BigRational c = a[k] / lead;
    quotient[k - (b.size() - 1)] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[k - (b.size() - 1) + i] -= c * b[i];
  }
  trim(a);
  trim(quotient);
  return {quotient, a};
}

RationalPolynomial multiply(const RationalPolynomial& a,
                            const RationalPolynomial& b) {
  if (a.empty() || b.empty()) return {};
  RationalPolynomial r(a.size() + b.size() - 1, BigRational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

RationalPolynomial subtract(RationalPolynomial a, const RationalPolynomial& b) {
  if (a.size() < b.size()) a.resize(b.size(), BigRational(0));
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

const IntPolynomial& cyclotomic_polynomial(unsigned n) {
  if (n == 0) throw PreconditionError("cyclotomic_polynomial: n must be >= 1");
  static std::mutex mutex;
  static std::map<unsigned, IntPolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  IntPolynomial result(n + 1, 0);
  result[0] = -1;
  result[n] = 1;
  for (unsigned d = 1; d < n; ++d) {
    if (n % d == 0) result = divide_exact(result, cyclotomic_polynomial(d));
  }
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(n, std::move(result)).first->second;
}

unsigned totient(unsigned n) {
  return static_cast<unsigned>(cyclotomic_polynomial(n).size() - 1);
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const BigRational& value)
    : order_(order), coefficients_(totient(order), BigRational(0)) {
  coefficients_[0] = value;
}

CyclotomicNumber::CyclotomicNumber(unsigned order,
                                   std::vector<BigRational> coefficients,
                                   bool already_reduced)
    : order_(order), coefficients_(std::move(coefficients)) {
  if (!already_reduced) reduce_mod(coefficients_, cyclotomic_polynomial(order_));
}

CyclotomicNumber CyclotomicNumber::from_polynomial(
    unsigned order, std::vector<BigRational> coefficients) {
  for (auto& c : coefficients) c.canonicalize();
  return CyclotomicNumber(order, std::move(coefficients), false);
}

CyclotomicNumber CyclotomicNumber::zeta(unsigned order) {
  return from_polynomial(order, {BigRational(0), BigRational(1)});
}

bool CyclotomicNumber::is_zero() const {
  for (const auto& c : coefficients_)
    if (c != 0) return false;
  return true;
}

bool CyclotomicNumber::is_one() const {
  return is_rational() && coefficients_[0] == 1;
}

bool CyclotomicNumber::is_rational() const {
  for (std::size_t i = 1; i < coefficients_.size(); ++i)
    if (coefficients_[i] != 0) return false;
  return true;
}

const BigRational& CyclotomicNumber::rational_value() const {
  if (!is_rational()) throw PreconditionError("cyclotomic number is not rational");
  return coefficients_[0];
}

std::size_t CyclotomicNumber::term_count() const {
  std::size_t count = 0;
  for (const auto& c : coefficients_) count += (c != 0);
  return count;
}

void CyclotomicNumber::check_order(const CyclotomicNumber& other) const {
  if (order_ != other.order_) throw OrderMismatch(order_, other.order_);
}

CyclotomicNumber CyclotomicNumber::operator-() const {
  CyclotomicNumber r = *this;
  for (auto& c : r.coefficients_) c = -c;
  return r;
}

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    coefficients_[i] += rhs.coefficients_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& rhs) {
  check_order(rhs);
  for (std::size_t i = 0; i < coefficients_.size(); ++i)
    coefficients_[i] -= rhs.coefficients_[i];
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& rhs) {
  check_order(rhs);
  if (coefficients_.size() == 1) {
    coefficients_[0] *= rhs.coefficients_[0];
    return *this;
  }
  if (rhs.is_rational()) {
    for (auto& c : coefficients_) c *= rhs.coefficients_[0];
    return *this;
  }
  auto product = multiply(coefficients_, rhs.coefficients_);
  if (product.empty()) product.assign(1, BigRational(0));
  reduce_mod(product, cyclotomic_polynomial(order_));
  coefficients_ = std::move(product);
  return *this;
}

CyclotomicNumber& CyclotomicNumber::operator/=(const CyclotomicNumber& rhs) {
  check_order(rhs);
  return *this *= rhs.inverse();
}

CyclotomicNumber CyclotomicNumber::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (is_rational()) return CyclotomicNumber(order_, 1 / coefficients_[0]);
  // Extended Euclid: s * self + t * phi = g with g a nonzero constant.
  const auto& phi_int = cyclotomic_polynomial(order_);
  RationalPolynomial phi(phi_int.begin(), phi_int.end());
  RationalPolynomial r0 = phi, r1 = coefficients_;
  trim(r1);
  RationalPolynomial s0, s1{BigRational(1)};
  while (r1.size() > 1) {
    auto [quotient, remainder] = divmod(r0, r1);
    RationalPolynomial s2 = subtract(s0, multiply(quotient, s1));
    r0 = std::move(r1);
    r1 = std::move(remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // r1 is a nonzero constant because Phi_n is irreducible.
  const BigRational scale = 1 / r1[0];
  for (auto& c : s1) c *= scale;
  return CyclotomicNumber(order_, std::move(s1), false);
}

CyclotomicNumber CyclotomicNumber::pow(long exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  CyclotomicNumber result(order_, 1);
  CyclotomicNumber base = *this;
  while (exponent > 0) {
    if (exponent & 1) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator==(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
  return lhs.order_ == rhs.order_ && lhs.coefficients_ == rhs.coefficients_;
}

bool operator<(const CyclotomicNumber& lhs, const CyclotomicNumber& rhs) {
  if (lhs.order_ != rhs.order_) return lhs.order_ < rhs.order_;
  return lhs.coefficients_ < rhs.coefficients_;
}

std::string to_string(const BigRational& value) { return value.get_str(); }

std::string to_string(const CyclotomicNumber& value) {
  std::ostringstream out;
  bool first = true;
  const auto coefficients = value.coefficients();
  for (std::size_t k = 0; k < coefficients.size(); ++k) {
    BigRational c = coefficients[k];
    if (c == 0) continue;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    c = abs(c);
    if (k == 0) {
      out << c.get_str();
      continue;
    }
    if (c != 1) out << c.get_str() << '*';
    out << 'z';
    if (k > 1) out << '^' << k;
  }
  if (first) return "0";
  return out.str();
}

FieldMatrix::FieldMatrix(std::size_t rows, std::size_t cols, unsigned order)
    : rows_(rows),
      cols_(cols),
      order_(order),
      data_(rows * cols, CyclotomicNumber(order)) {}

namespace {

// Row-reduces in place to reduced row echelon form; returns pivot columns.
std::vector<std::size_t> row_reduce(FieldMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t pivot = row;
    while (pivot < m.rows() && m.at(pivot, col).is_zero()) ++pivot;
    if (pivot == m.rows()) continue;
    if (pivot != row)
      for (std::size_t c = 0; c < m.cols(); ++c)
        std::swap(m.at(pivot, c), m.at(row, c));
    const CyclotomicNumber inv = m.at(row, col).inverse();
    for (std::size_t c = col; c < m.cols(); ++c)
      if (!m.at(row, c).is_zero()) m.at(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m.at(r, col).is_zero()) continue;
      const CyclotomicNumber factor = m.at(r, col);
      for (std::size_t c = col; c < m.cols(); ++c)
        if (!m.at(row, c).is_zero()) m.at(r, c) -= factor * m.at(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(FieldMatrix matrix) { return row_reduce(matrix).size(); }

std::vector<std::vector<CyclotomicNumber>> nullspace(FieldMatrix matrix) {
  const auto pivots = row_reduce(matrix);
  std::vector<bool> is_pivot(matrix.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<CyclotomicNumber>> basis;
  for (std::size_t free = 0; free < matrix.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<CyclotomicNumber> v(matrix.cols(),
                                    CyclotomicNumber(matrix.order()));
    v[free] = CyclotomicNumber(matrix.order(), 1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[pivots[r]] = -matrix.at(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hopfpi
