#include "hopfpi/parse.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "hopfpi/error.hpp"

namespace hopfpi {

ParseContext scalar_context(unsigned order, HopfPtr hopf) {
  ParseContext context;
  context.order = order;
  context.hopf = std::move(hopf);
  return context;
}

ParseContext algebra_context(AlgebraPtr algebra, HopfPtr hopf) {
  ParseContext context;
  context.order = algebra->order();
  context.algebra = std::move(algebra);
  context.hopf = std::move(hopf);
  return context;
}

ParseContext free_context(const FreeAlgebra& free) {
  ParseContext context = algebra_context(free.algebra(), free.hopf());
  context.free = &free;
  return context;
}

namespace {

// A parsed value: a scalar until it meets an algebra element.
struct Value {
  CommPoly scalar;
  std::optional<AlgElement> element;
};

class Parser {
 public:
  Parser(std::string_view text, const ParseContext& context, std::size_t pos = 0)
      : text_(text), context_(context), pos_(pos) {}

  std::size_t position() const { return pos_; }

  Value parse_expression() {
    skip_space();
    Value result = parse_summand();
    while (true) {
      skip_space();
      if (peek() != '+' && peek() != '-') break;
      const bool negate = text_[pos_++] == '-';
      Value rhs = parse_summand();
      result = add(std::move(result), negate ? negate_value(std::move(rhs)) : std::move(rhs));
    }
    return result;
  }

  void expect_end() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
  }

  void expect(char c) {
    skip_space();
    if (peek() != c)
      fail(std::string("expected '") + c + "'" +
           (pos_ < text_.size() ? std::string(", found '") + text_[pos_] + "'"
                                : std::string(", found end of input")));
    ++pos_;
  }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  Value parse_summand() {
    const int saved_side = side_;
    Value result = parse_unary();
    while (true) {
      skip_space();
      const char op = peek();
      if (op != '*' && op != '@' && op != '/') break;
      const std::size_t op_pos = pos_++;
      if (op == '@') {
        if (!context_.algebra || !context_.algebra->tensor())
          throw ParseError(op_pos, "'@' is only valid in a tensor product");
        if (side_ == 1) throw ParseError(op_pos, "a summand has only two tensor factors");
        side_ = 1;
      }
      Value rhs = parse_unary();
      if (op == '/') {
        result = divide(std::move(result), rhs, op_pos);
      } else {
        result = multiply(std::move(result), rhs);
      }
    }
    side_ = saved_side;
    return result;
  }

  Value parse_unary() {
    skip_space();
    if (peek() == '-') {
      ++pos_;
      return negate_value(parse_unary());
    }
    if (peek() == '+') {
      ++pos_;
      return parse_unary();
    }
    return parse_power();
  }

  Value parse_power() {
    Value base = parse_atom();
    while (true) {
      skip_space();
      if (peek() != '^') break;
      ++pos_;
      skip_space();
      const std::size_t exponent_pos = pos_;
      bool negative = false;
      if (peek() == '-') {
        negative = true;
        ++pos_;
      }
      const BigInteger big = parse_integer();
      if (!big.fits_ulong_p() || big > 1'000'000)
        throw ParseError(exponent_pos, "exponent too large");
      const unsigned long exponent = big.get_ui();
      base = power(std::move(base), exponent, negative, exponent_pos);
    }
    return base;
  }

  BigInteger parse_integer() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInteger(std::string(text_.substr(start, pos_ - start)));
  }

  unsigned parse_index() {
    skip_space();
    const std::size_t start = pos_;
    const BigInteger value = parse_integer();
    if (!value.fits_uint_p() || value > 65535)
      throw ParseError(start, "index out of range");
    return static_cast<unsigned>(value.get_ui());
  }

  std::uint8_t parse_primes() {
    std::uint8_t primes = 0;
    while (peek() == '\'') {
      ++pos_;
      if (++primes == 0) fail("too many primes");
    }
    return primes;
  }

  std::string parse_identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_'))
      ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  Value parse_atom() {
    skip_space();
    const std::size_t start = pos_;
    const char c = peek();
    if (c == '(') {
      ++pos_;
      const int saved_side = side_;
      Value inner = parse_expression();
      side_ = saved_side;
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c)))
      return scalar(CommPoly(CyclotomicNumber(context_.order, BigRational(parse_integer()))));
    if (!std::isalpha(static_cast<unsigned char>(c)) && c != '_') {
      if (c == '\0') fail("unexpected end of input");
      fail("unexpected '" + std::string(1, c) + "'");
    }
    const std::string name = parse_identifier();

    if (name == "q" || name == "z") return scalar(CommPoly(CyclotomicNumber::zeta(context_.order)));
    if (name == "a") return scalar(param(Var::a(parse_primes())));
    if (name == "c") {
      if (peek() == '[') {
        ++pos_;
        const unsigned i = parse_index();
        expect(']');
        if (i == 0) throw ParseError(start, "parameter indices start at 1");
        return scalar(param(Var::c_indexed(i, parse_primes())));
      }
      return scalar(param(Var::c(parse_primes())));
    }
    if (name == "d" && peek() == '[') {
      ++pos_;
      const unsigned i = parse_index();
      expect(',');
      const unsigned j = parse_index();
      expect(']');
      if (i == 0 || j == 0) throw ParseError(start, "parameter indices start at 1");
      if (i == j) throw ParseError(start, "d[i,i] is not a parameter: it equals 2*c[i]");
      return scalar(param(Var::d(i, j, parse_primes())));
    }
    if (name == "t" && peek() == '[') return scalar(parse_t_variable(start));

    const AlgebraPtr side = side_algebra();
    const bool in_free = context_.free && side && side == context_.free->algebra();
    if (in_free && name == "X" && peek() == '[') return element(parse_x_symbol(start));
    if (in_free) {
      if (auto alias = free_alias(name)) return element(*alias);
    }
    if (side) {
      if (auto g = side->find_generator(name))
        return element(AlgElement::generator(side, *g));
    }
    throw ParseError(start, "unknown name '" + name + "'");
  }

  CommPoly parse_t_variable(std::size_t start) {
    if (!context_.hopf) throw ParseError(start, "t-variables need a Hopf algebra context");
    ++pos_;  // '['
    const unsigned copy = parse_index();
    if (copy == 0) throw ParseError(start, "copy indices start at 1");
    expect(',');
    const AlgElement h = parse_h_element();
    expect(']');
    CommPoly result(context_.order);
    for (const auto& [word, coefficient] : h.terms())
      result += coefficient *
                CommPoly::variable(context_.order,
                                   Var::t(copy, context_.hopf->basis_index(word)));
    return result;
  }

  AlgElement parse_x_symbol(std::size_t start) {
    ++pos_;  // '['
    const unsigned copy = parse_index();
    if (copy == 0 || copy > context_.free->copies())
      throw ParseError(start, "copy index must lie in 1.." +
                                  std::to_string(context_.free->copies()));
    expect(',');
    const AlgElement h = parse_h_element();
    expect(']');
    return x_symbol(*context_.free, copy, h);
  }

  AlgElement parse_h_element() {
    const HopfPtr& hopf = context_.hopf;
    ParseContext inner = algebra_context(hopf->algebra(), hopf);
    inner.max_degree = context_.max_degree;
    Parser sub(text_, inner, pos_);
    Value value = sub.parse_expression();
    pos_ = sub.position();
    return sub.to_element(std::move(value));
  }

  std::optional<AlgElement> free_alias(const std::string& name) const {
    const FreeAlgebra& free = *context_.free;
    const HopfPresentation& hopf = *free.hopf();
    if (hopf.family() != HopfFamily::Taft && hopf.family() != HopfFamily::En)
      return std::nullopt;
    if (name == "E") return x_symbol(free, 1, Word{});
    if (name == "X") return x_symbol(free, 1, Word{0});
    if (hopf.family() == HopfFamily::Taft && name == "Y") return x_symbol(free, 1, Word{1});
    if (hopf.family() == HopfFamily::En && name.size() > 1 && name[0] == 'Y') {
      unsigned k = 0;
      auto [end, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
      if (ec == std::errc() && end == name.data() + name.size() && k >= 1 &&
          k <= hopf.rank())
        return x_symbol(free, 1, Word{static_cast<Generator>(k)});
    }
    return std::nullopt;
  }

  AlgebraPtr side_algebra() const {
    const AlgebraPtr& algebra = context_.algebra;
    if (!algebra || !algebra->tensor()) return algebra;
    return side_ == 0 ? algebra->tensor()->left : algebra->tensor()->right;
  }

  CommPoly param(Var var) const { return CommPoly::variable(context_.order, var); }

  static Value scalar(CommPoly p) { return Value{std::move(p), std::nullopt}; }

  Value element(const AlgElement& e) const {
    const AlgebraPtr& algebra = context_.algebra;
    if (e.algebra() == algebra) return Value{CommPoly(context_.order), e};
    if (side_ == 0) return Value{CommPoly(context_.order), embed_left(algebra, e)};
    return Value{CommPoly(context_.order), embed_right(algebra, e)};
  }

 public:
  AlgElement to_element(Value v) const {
    if (v.element) return std::move(*v.element);
    if (!context_.algebra) fail("expected an algebra element");
    return AlgElement::scalar(context_.algebra, v.scalar);
  }

 private:
  Value add(Value lhs, Value rhs) const {
    if (!lhs.element && !rhs.element) return scalar(lhs.scalar + rhs.scalar);
    AlgElement sum = to_element(std::move(lhs));
    sum += to_element(std::move(rhs));
    return Value{CommPoly(context_.order), std::move(sum)};
  }

  static Value negate_value(Value v) {
    if (v.element) {
      *v.element = -*v.element;
    } else {
      v.scalar = -v.scalar;
    }
    return v;
  }

  Value multiply(Value lhs, const Value& rhs) const {
    if (!lhs.element && !rhs.element) {
      check_degree(lhs.scalar.degree() + rhs.scalar.degree());
      return scalar(lhs.scalar * rhs.scalar);
    }
    if (!rhs.element) return Value{CommPoly(context_.order), *lhs.element * rhs.scalar};
    if (!lhs.element) return Value{CommPoly(context_.order), lhs.scalar * *rhs.element};
    check_degree(lhs.element->degree() + rhs.element->degree());
    return Value{CommPoly(context_.order), *lhs.element * *rhs.element};
  }

  Value divide(Value lhs, const Value& rhs, std::size_t op_pos) const {
    if (rhs.element || !rhs.scalar.is_constant())
      throw ParseError(op_pos, "can only divide by a constant");
    if (rhs.scalar.is_zero()) throw ParseError(op_pos, "division by zero");
    return multiply(std::move(lhs), scalar(CommPoly(rhs.scalar.constant_value().inverse())));
  }

  Value power(Value base, unsigned long exponent, bool negative, std::size_t at) const {
    if (negative) {
      if (base.element || !base.scalar.is_constant() || base.scalar.is_zero())
        throw ParseError(at, "negative exponents need a nonzero constant base");
      return scalar(CommPoly(base.scalar.constant_value().pow(-static_cast<long>(exponent))));
    }
    if (base.element) {
      if (base.element->degree() * exponent > context_.max_degree)
        throw ParseError(at, "power exceeds the maximum degree " +
                                 std::to_string(context_.max_degree));
      return Value{CommPoly(context_.order),
                   base.element->pow(static_cast<unsigned>(exponent))};
    }
    if (base.scalar.degree() * exponent > context_.max_degree)
      throw ParseError(at, "power exceeds the maximum degree " +
                               std::to_string(context_.max_degree));
    return scalar(base.scalar.pow(static_cast<unsigned>(exponent)));
  }

  void check_degree(std::uint64_t degree) const {
    if (degree > context_.max_degree)
      fail("product exceeds the maximum degree " + std::to_string(context_.max_degree));
  }

  std::string_view text_;
  const ParseContext& context_;
  std::size_t pos_;
  int side_ = 0;
};

}  // namespace

AlgElement parse_element(std::string_view text, const ParseContext& context) {
  if (!context.algebra) throw PreconditionError("parse_element needs an algebra context");
  Parser parser(text, context);
  Value value = parser.parse_expression();
  parser.expect_end();
  return parser.to_element(std::move(value));
}

CommPoly parse_poly(std::string_view text, const ParseContext& context) {
  ParseContext scalar = context;
  scalar.algebra = nullptr;
  scalar.free = nullptr;
  Parser parser(text, scalar);
  Value value = parser.parse_expression();
  parser.expect_end();
  return value.scalar;
}

CyclotomicNumber parse_cyclotomic(std::string_view text, unsigned order) {
  const CommPoly p = parse_poly(text, scalar_context(order));
  if (!p.is_constant()) throw ParseError(0, "expected a number, found a polynomial");
  return p.constant_term();
}

namespace {

unsigned parse_rank(std::string_view text, std::size_t offset) {
  unsigned value = 0;
  auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || end != text.data() + text.size() || text.empty())
    throw ParseError(offset, "expected a positive integer, found '" + std::string(text) + "'");
  return value;
}

struct SpecHead {
  HopfFamily family;
  unsigned rank;
};

SpecHead parse_head(std::string_view head) {
  if (head == "trivial") return {HopfFamily::Trivial, 0};
  const auto colon = head.find(':');
  if (colon == std::string_view::npos)
    throw ParseError(0, "expected taft:<n>, en:<n> or trivial, found '" + std::string(head) + "'");
  const std::string_view family = head.substr(0, colon);
  const unsigned rank = parse_rank(head.substr(colon + 1), colon + 1);
  if (family == "taft") {
    if (rank < 2) throw ParseError(colon + 1, "taft:<n> needs n >= 2");
    return {HopfFamily::Taft, rank};
  }
  if (family == "en") {
    if (rank < 1) throw ParseError(colon + 1, "en:<n> needs n >= 1");
    return {HopfFamily::En, rank};
  }
  throw ParseError(0, "unknown family '" + std::string(family) + "'");
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

ParamValue parse_param_value(std::string_view text, unsigned order, std::size_t offset) {
  if (text.substr(0, 3) == "sym") {
    const std::string_view primes = text.substr(3);
    if (primes.find_first_not_of('\'') != std::string_view::npos)
      throw ParseError(offset, "expected sym, sym', ... or a number");
    return Symbolic{static_cast<std::uint8_t>(primes.size())};
  }
  try {
    return parse_cyclotomic(text, order);
  } catch (const ParseError& e) {
    throw ParseError(offset + e.position(), e.message());
  }
}

// "12" -> (1, 2); "1,2" or "[1,2]" -> (1, 2).
std::pair<unsigned, unsigned> parse_pair(std::string_view text, std::size_t offset) {
  if (text.size() >= 2 && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  const auto comma = text.find(',');
  if (comma != std::string_view::npos)
    return {parse_rank(text.substr(0, comma), offset),
            parse_rank(text.substr(comma + 1), offset + comma + 1)};
  if (text.size() == 2) return {parse_rank(text.substr(0, 1), offset),
                                parse_rank(text.substr(1), offset + 1)};
  throw ParseError(offset, "expected d<i><j>, d<i>,<j> or d[<i>,<j>]");
}

}  // namespace

HopfPtr parse_hopf_spec(std::string_view text) {
  text = trim(text);
  if (text.find(';') != std::string_view::npos)
    throw ParseError(text.find(';'), "a Hopf algebra spec takes no parameters");
  const SpecHead head = parse_head(text);
  switch (head.family) {
    case HopfFamily::Taft:
      return taft(head.rank);
    case HopfFamily::En:
      return en(head.rank);
    default:
      return trivial_hopf();
  }
}

GaloisObjectSpec parse_object_spec(std::string_view text) {
  text = trim(text);
  const auto first = text.find(';');
  const SpecHead head = parse_head(trim(text.substr(0, first)));
  GaloisObjectSpec spec;
  if (head.family == HopfFamily::Taft) {
    spec = GaloisObjectSpec::taft(head.rank);
  } else if (head.family == HopfFamily::En) {
    spec = GaloisObjectSpec::en(head.rank);
  } else {
    throw ParseError(0, "objects exist only over taft:<n> and en:<n>");
  }
  const unsigned order = spec.order();

  std::size_t pos = first;
  while (pos != std::string_view::npos) {
    const std::size_t start = pos + 1;
    const std::size_t next = text.find(';', start);
    const std::string_view item =
        text.substr(start, next == std::string_view::npos ? std::string_view::npos : next - start);
    pos = next;
    if (trim(item).empty()) continue;
    const auto eq = item.find('=');
    if (eq == std::string_view::npos)
      throw ParseError(start, "expected <name>=<value>, found '" + std::string(item) + "'");
    const std::string_view key = trim(item.substr(0, eq));
    const std::size_t value_offset = start + eq + 1;
    const ParamValue value = parse_param_value(trim(item.substr(eq + 1)), order, value_offset);

    if (key == "a") {
      spec.a = value;
    } else if (spec.family == HopfFamily::Taft && key == "c") {
      spec.c[0] = value;
    } else if (spec.family == HopfFamily::En && key.size() > 1 && key[0] == 'c') {
      std::string_view index = key.substr(1);
      if (index.size() >= 2 && index.front() == '[' && index.back() == ']')
        index = index.substr(1, index.size() - 2);
      const unsigned i = parse_rank(index, start + 1);
      if (i < 1 || i > spec.rank)
        throw ParseError(start, "c index must lie in 1.." + std::to_string(spec.rank));
      spec.c[i - 1] = value;
    } else if (spec.family == HopfFamily::En && key.size() > 1 && key[0] == 'd') {
      auto [i, j] = parse_pair(key.substr(1), start + 1);
      if (i == j)
        throw ParseError(start, "d" + std::to_string(i) + std::to_string(i) +
                                    " is not a free parameter: it equals 2*c" +
                                    std::to_string(i));
      if (i > j) std::swap(i, j);
      if (i < 1 || j > spec.rank)
        throw ParseError(start, "d indices must lie in 1.." + std::to_string(spec.rank));
      spec.d[{i, j}] = value;
    } else {
      throw ParseError(start, "unknown parameter '" + std::string(key) + "' for " +
                                  std::string(trim(text.substr(0, first))));
    }
  }
  spec.validate();
  return spec;
}

namespace {

// Splits at the first comma outside brackets and parentheses.
std::optional<std::pair<std::string_view, std::string_view>> split_top_level(
    std::string_view text, char separator) {
  int depth = 0;
  for (std::size_t k = 0; k < text.size(); ++k) {
    const char ch = text[k];
    if (ch == '(' || ch == '[') ++depth;
    if (ch == ')' || ch == ']') --depth;
    if (ch == separator && depth == 0) return std::pair{text.substr(0, k), text.substr(k + 1)};
  }
  return std::nullopt;
}

AlgElement parse_h(std::string_view text, const HopfPtr& hopf, std::size_t offset) {
  try {
    return parse_element(text, algebra_context(hopf->algebra(), hopf));
  } catch (const ParseError& e) {
    throw ParseError(offset + e.position(), e.message());
  }
}

}  // namespace

std::optional<NamedIdentity> find_identity(std::string_view name, const FreeAlgebra& free,
                                           const GaloisObjectSpec& spec) {
  const std::string text(trim(name));
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  const std::string_view args =
      colon == std::string::npos ? std::string_view{} : std::string_view(text).substr(colon + 1);
  const std::size_t offset = colon == std::string::npos ? 0 : colon + 1;

  if (head == "taft_pc" || head == "en_ci" || head == "en_dij") {
    for (auto& identity : identity_catalog(free, spec))
      if (identity.name == text) return std::move(identity);
    throw ParseError(0, "'" + text + "' is not in the catalog of " + free.hopf()->spec_name());
  }
  const HopfPtr& hopf = free.hopf();
  if (head == "coinv_P") return NamedIdentity{text, coinvariant_P(free, parse_h(args, hopf, offset))};
  if (head == "coinv_Q" || head == "comm_Q") {
    std::string_view pair_text = args;
    std::string_view z_text;
    if (head == "comm_Q") {
      auto parts = split_top_level(args, ';');
      if (!parts) throw ParseError(offset, "expected comm_Q:<h>,<h'>;<z>");
      pair_text = parts->first;
      z_text = parts->second;
    }
    auto pair = split_top_level(pair_text, ',');
    if (!pair) throw ParseError(offset, "expected <h>,<h'>");
    const AlgElement h = parse_h(pair->first, hopf, offset);
    const AlgElement h2 = parse_h(pair->second, hopf, offset + pair->first.size() + 1);
    AlgElement q = coinvariant_Q(free, h, h2);
    if (head == "coinv_Q") return NamedIdentity{text, std::move(q)};
    const AlgElement z = parse_h(z_text, hopf, offset + pair_text.size() + 1);
    return NamedIdentity{text, commutator_identity(free, q, z)};
  }
  if (head == "comm_P") {
    auto parts = split_top_level(args, ';');
    if (!parts) throw ParseError(offset, "expected comm_P:<h>;<z>");
    const AlgElement h = parse_h(parts->first, hopf, offset);
    const AlgElement z = parse_h(parts->second, hopf, offset + parts->first.size() + 1);
    return NamedIdentity{text, commutator_identity(free, coinvariant_P(free, h), z)};
  }
  return std::nullopt;
}

}  // namespace hopfpi
