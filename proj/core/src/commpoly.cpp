#include "hopfpi/commpoly.hpp"

#include <limits>
#include <sstream>

#include "hopfpi/error.hpp"

namespace hopfpi {

std::string to_string(const Var& var, const BasisNamer& namer) {
  std::string s;
  switch (var.kind) {
    case VarKind::A:
      s = "a";
      break;
    case VarKind::C:
      s = "c";
      break;
    case VarKind::CIndexed:
      s = "c[" + std::to_string(var.i) + "]";
      break;
    case VarKind::D:
      s = "d[" + std::to_string(var.i) + "," + std::to_string(var.j) + "]";
      break;
    case VarKind::T:
      return "t[" + std::to_string(var.copy()) + "," +
             (namer ? namer(var.basis_index())
                    : "#" + std::to_string(var.basis_index())) +
             "]";
  }
  s.append(var.prime, '\'');
  return s;
}

CommMonomial::CommMonomial(Var var, std::uint32_t exponent) {
  if (exponent > 0) factors_.emplace_back(var, exponent);
}

std::uint64_t CommMonomial::degree() const {
  std::uint64_t d = 0;
  for (const auto& [var, e] : factors_) d += e;
  return d;
}

std::uint32_t CommMonomial::exponent(const Var& var) const {
  for (const auto& [v, e] : factors_)
    if (v == var) return e;
  return 0;
}

CommMonomial operator*(const CommMonomial& lhs, const CommMonomial& rhs) {
  CommMonomial result;
  auto& out = result.factors_;
  out.reserve(lhs.factors_.size() + rhs.factors_.size());
  auto a = lhs.factors_.begin(), b = rhs.factors_.begin();
  while (a != lhs.factors_.end() && b != rhs.factors_.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (b->first < a->first) {
      out.push_back(*b++);
    } else {
      const std::uint64_t sum = std::uint64_t{a->second} + b->second;
      if (sum > std::numeric_limits<std::uint32_t>::max())
        throw Error("monomial exponent overflow");
      out.emplace_back(a->first, static_cast<std::uint32_t>(sum));
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, lhs.factors_.end());
  out.insert(out.end(), b, rhs.factors_.end());
  return result;
}

CommPoly::CommPoly(const CyclotomicNumber& constant) : order_(constant.order()) {
  if (!constant.is_zero()) terms_.emplace(CommMonomial(), constant);
}

CommPoly CommPoly::variable(unsigned order, Var var) {
  return term(CyclotomicNumber(order, 1), CommMonomial(var));
}

CommPoly CommPoly::term(const CyclotomicNumber& coefficient, CommMonomial monomial) {
  CommPoly p(coefficient.order());
  if (!coefficient.is_zero()) p.terms_.emplace(std::move(monomial), coefficient);
  return p;
}

bool CommPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

bool CommPoly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->first.is_one() &&
         terms_.begin()->second.is_one();
}

CyclotomicNumber CommPoly::constant_term() const {
  return coefficient(CommMonomial());
}

CyclotomicNumber CommPoly::constant_value() const {
  if (!is_constant()) throw PreconditionError("polynomial is not constant");
  return constant_term();
}

CyclotomicNumber CommPoly::coefficient(const CommMonomial& monomial) const {
  auto it = terms_.find(monomial);
  return it == terms_.end() ? CyclotomicNumber(order_) : it->second;
}

std::uint64_t CommPoly::degree() const {
  std::uint64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool CommPoly::has_t_variables() const {
  for (const auto& [m, c] : terms_)
    for (const auto& [var, e] : m.factors())
      if (!var.is_param()) return true;
  return false;
}

void CommPoly::check_order(unsigned other) const {
  if (order_ != other) throw OrderMismatch(order_, other);
}

void CommPoly::add_term(const CommMonomial& monomial,
                        const CyclotomicNumber& coefficient) {
  check_order(coefficient.order());
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(monomial, coefficient);
  if (inserted) return;
  it->second += coefficient;
  if (it->second.is_zero()) terms_.erase(it);
}

CommPoly CommPoly::operator-() const {
  CommPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

CommPoly& CommPoly::operator+=(const CommPoly& rhs) {
  check_order(rhs.order_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

CommPoly& CommPoly::operator-=(const CommPoly& rhs) {
  check_order(rhs.order_);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

CommPoly& CommPoly::operator*=(const CommPoly& rhs) {
  check_order(rhs.order_);
  if (rhs.is_constant()) {
    if (rhs.is_zero()) {
      terms_.clear();
      return *this;
    }
    return *this *= rhs.terms_.begin()->second;
  }
  CommPoly product(order_);
  for (const auto& [ma, ca] : terms_)
    for (const auto& [mb, cb] : rhs.terms_) product.add_term(ma * mb, ca * cb);
  *this = std::move(product);
  return *this;
}

CommPoly& CommPoly::operator*=(const CyclotomicNumber& rhs) {
  check_order(rhs.order());
  if (rhs.is_zero()) {
    terms_.clear();
    return *this;
  }
  if (rhs.is_one()) return *this;
  for (auto& [m, c] : terms_) c *= rhs;
  return *this;
}

CommPoly CommPoly::pow(unsigned exponent) const {
  CommPoly result(order_, 1);
  CommPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1;
    if (exponent > 0) base *= base;
  }
  return result;
}

bool operator<(const CommPoly& lhs, const CommPoly& rhs) {
  if (lhs.order_ != rhs.order_) return lhs.order_ < rhs.order_;
  return std::lexicographical_compare(
      lhs.terms_.begin(), lhs.terms_.end(), rhs.terms_.begin(), rhs.terms_.end(),
      [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second < b.second;
      });
}

CommPoly substitute(const CommPoly& p, const std::map<Var, CommPoly>& assignment) {
  CommPoly result(p.order());
  for (const auto& [monomial, coefficient] : p.terms()) {
    CommPoly term(coefficient);
    CommMonomial kept;
    for (const auto& [var, e] : monomial.factors()) {
      auto it = assignment.find(var);
      if (it == assignment.end())
        kept = kept * CommMonomial(var, e);
      else
        term *= it->second.pow(e);
    }
    term *= CommPoly::term(CyclotomicNumber(p.order(), 1), kept);
    result += term;
  }
  return result;
}

CommPoly specialize(const CommPoly& p,
                    const std::map<Var, CyclotomicNumber>& assignment) {
  std::map<Var, CommPoly> as_polys;
  for (const auto& [var, value] : assignment) as_polys.emplace(var, CommPoly(value));
  return substitute(p, as_polys);
}

namespace {

std::string monomial_string(const CommMonomial& m, const BasisNamer& namer) {
  std::string s;
  for (const auto& [var, e] : m.factors()) {
    if (!s.empty()) s += '*';
    s += to_string(var, namer);
    if (e > 1) s += "^" + std::to_string(e);
  }
  return s;
}

}  // namespace

std::string to_string(const CommPoly& p, const BasisNamer& namer) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [monomial, coefficient] : p.terms()) {
    std::string term;
    if (monomial.is_one()) {
      term = to_string(coefficient);
    } else {
      const std::string mono = monomial_string(monomial, namer);
      if (coefficient.is_one()) {
        term = mono;
      } else if ((-coefficient).is_one()) {
        term = "-" + mono;
      } else if (coefficient.term_count() == 1) {
        term = to_string(coefficient) + "*" + mono;
      } else {
        term = "(" + to_string(coefficient) + ")*" + mono;
      }
    }
    if (first) {
      out = term;
      first = false;
    } else if (term.front() == '-') {
      out += " - " + term.substr(1);
    } else {
      out += " + " + term;
    }
  }
  return out;
}

bool needs_parentheses(const CommPoly& p) {
  if (p.term_count() > 1) return true;
  if (p.term_count() == 1) return p.terms().begin()->second.term_count() > 1;
  return false;
}

}  // namespace hopfpi
