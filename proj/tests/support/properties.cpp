#include "properties.hpp"

#include <sstream>

namespace hopfpi::testing {

BigRational random_rational(Rng& rng, long numerator_bound, long denominator_bound) {
  std::uniform_int_distribution<long> num(-numerator_bound, numerator_bound);
  std::uniform_int_distribution<long> den(1, denominator_bound);
  BigRational r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

CyclotomicNumber random_cyclotomic(Rng& rng, unsigned order) {
  std::vector<BigRational> coefficients(totient(order) + 1);
  std::bernoulli_distribution sparse(0.6);
  for (auto& c : coefficients) c = sparse(rng) ? random_rational(rng) : BigRational(0);
  return CyclotomicNumber::from_polynomial(order, std::move(coefficients));
}

CyclotomicNumber random_nonzero_cyclotomic(Rng& rng, unsigned order) {
  while (true) {
    CyclotomicNumber value = random_cyclotomic(rng, order);
    if (!value.is_zero()) return value;
  }
}

CommPoly random_poly(Rng& rng, unsigned order, const std::vector<Var>& vars,
                     std::size_t max_terms) {
  std::uniform_int_distribution<std::size_t> term_count(0, max_terms);
  std::uniform_int_distribution<unsigned> exponent(0, 2);
  CommPoly p(order);
  const std::size_t terms = term_count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    CommMonomial m;
    for (const Var& v : vars)
      if (unsigned e = exponent(rng); e > 0 && std::bernoulli_distribution(0.4)(rng))
        m = m * CommMonomial(v, e);
    p.add_term(m, random_cyclotomic(rng, order));
  }
  return p;
}

AlgElement random_element(Rng& rng, const AlgebraPtr& algebra, std::size_t max_terms,
                          std::size_t max_length, const std::vector<Var>& coefficient_vars) {
  std::uniform_int_distribution<std::size_t> term_count(1, max_terms);
  std::uniform_int_distribution<std::size_t> length(0, max_length);
  AlgElement result(algebra);
  const std::size_t generators = algebra->generator_count();
  const std::size_t terms = term_count(rng);
  for (std::size_t t = 0; t < terms; ++t) {
    Word word;
    if (generators > 0) {
      std::uniform_int_distribution<Generator> letter(0, static_cast<Generator>(generators - 1));
      const std::size_t len = length(rng);
      for (std::size_t k = 0; k < len; ++k) word.push_back(letter(rng));
    }
    CommPoly coefficient = coefficient_vars.empty()
                               ? CommPoly(random_cyclotomic(rng, algebra->order()))
                               : random_poly(rng, algebra->order(), coefficient_vars, 2);
    result += AlgElement::from_word(algebra, word, coefficient);
  }
  return result;
}

Zoo::Zoo() {
  std::vector<HopfPtr> hopfs{taft(2), taft(3), taft(4), taft(5), en(1), en(2), en(3),
                             trivial_hopf()};
  for (const auto& h : hopfs) {
    algebras_.push_back({h->spec_name(), h->algebra(), h});
    if (h->dimension() <= 16 && h->family() != HopfFamily::Trivial)
      algebras_.push_back({"square:" + h->spec_name(), h->square(), h});
  }
  for (unsigned n = 2; n <= 4; ++n) objects_.push_back(galois_object(GaloisObjectSpec::taft(n), hopfs[n - 2]));
  for (unsigned n = 1; n <= 3; ++n) objects_.push_back(galois_object(GaloisObjectSpec::en(n), hopfs[n + 3]));
  objects_.push_back(galois_object(parse_object_spec("taft:3;a=1;c=2"), hopfs[1]));
  objects_.push_back(galois_object(parse_object_spec("en:2;a=-1;c1=1;c2=0;d12=3"), hopfs[5]));
  for (const auto& object : objects_) {
    algebras_.push_back({to_string(object->spec()), object->algebra(), object->hopf()});
    if (object->hopf()->dimension() <= 8)
      algebras_.push_back({to_string(object->spec()) + " (x) H", object->with_h(), object->hopf()});
  }
  for (const auto& h : {hopfs[0], hopfs[1], hopfs[5]}) free_.push_back(FreeAlgebra::create(h, 2));
  for (const auto& f : free_) {
    algebras_.push_back({f->algebra()->name(), f->algebra(), f->hopf(), f.get()});
    algebras_.push_back({f->algebra()->name() + " (x) H", f->with_h(), f->hopf(), f.get()});
  }
}

namespace {

const Zoo& zoo() {
  static const Zoo instance;
  return instance;
}

std::vector<Var> parameter_vars() {
  return {Var::a(), Var::c(), Var::c_indexed(1), Var::d(1, 2), Var::c(1)};
}

void record(PropertyResult& result, bool ok, const std::string& description) {
  ++result.cases;
  if (ok) return;
  if (result.failures++ == 0) result.first_failure = description;
}

}  // namespace

PropertyResult ring_axioms(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"ring axioms"};
  Rng rng(seed);
  std::uniform_int_distribution<unsigned> order_dist(1, 12);
  const auto vars = parameter_vars();
  for (std::size_t k = 0; k < cases; ++k) {
    const unsigned n = order_dist(rng);
    const auto x = random_cyclotomic(rng, n), y = random_cyclotomic(rng, n),
               z = random_nonzero_cyclotomic(rng, n);
    bool ok = (x * y) * z == x * (y * z) && x * (y + z) == x * y + x * z && x + y == y + x &&
              x * y == y * x && z * z.inverse() == CyclotomicNumber(n, 1) &&
              (x - y) + y == x;

    const CommPoly p = random_poly(rng, n, vars), q = random_poly(rng, n, vars),
                   r = random_poly(rng, n, vars);
    ok = ok && (p * q) * r == p * (q * r) && p * q == q * p && p * (q + r) == p * q + p * r &&
         (p + q) - q == p;
    std::map<Var, CyclotomicNumber> assignment{{Var::a(), random_cyclotomic(rng, n)},
                                               {Var::c_indexed(1), random_cyclotomic(rng, n)}};
    ok = ok && specialize(p * q, assignment) ==
                   specialize(p, assignment) * specialize(q, assignment);
    record(result, ok, "order " + std::to_string(n) + ": x=" + to_string(x) + " p=" + to_string(p));
  }
  return result;
}

PropertyResult confluence_and_associativity(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"confluence and associativity"};
  for (const auto& shipped : zoo().algebras()) {
    if (shipped.free) continue;  // no rules
    const auto report = check_confluence(*shipped.algebra);
    if (!report.confluent()) {
      ++result.failures;
      if (result.first_failure.empty()) result.first_failure = shipped.label + " not confluent";
    }
  }
  Rng rng(seed);
  const auto& algebras = zoo().algebras();
  std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
  const auto vars = parameter_vars();
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& shipped = algebras[pick(rng)];
    const AlgElement a = random_element(rng, shipped.algebra, 3, 3, vars);
    const AlgElement b = random_element(rng, shipped.algebra, 3, 3);
    const AlgElement c = random_element(rng, shipped.algebra, 3, 3);
    record(result, (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c,
           shipped.label + ": a=" + to_string(a));
  }
  return result;
}

PropertyResult mu_multiplicativity(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"mu multiplicativity"};
  Rng rng(seed);
  std::vector<std::pair<FreePtr, std::vector<ComodulePtr>>> targets;
  for (const auto& free : zoo().free_algebras()) {
    std::vector<ComodulePtr> objects;
    for (const auto& object : zoo().objects())
      if (object->hopf() == free->hopf()) objects.push_back(object);
    targets.emplace_back(free, std::move(objects));
  }
  std::uniform_int_distribution<std::size_t> pick(0, targets.size() - 1);
  for (std::size_t k = 0; k < cases; ++k) {
    const auto& [free, objects] = targets[pick(rng)];
    const auto& object = objects[std::uniform_int_distribution<std::size_t>(0, objects.size() - 1)(rng)];
    const UniversalMap mu_map(free, object);
    const AlgElement p = random_element(rng, free->algebra(), 2, 3, {Var::c()});
    const AlgElement q = random_element(rng, free->algebra(), 2, 3);
    record(result, mu_map(p * q) == mu_map(p) * mu_map(q),
           to_string(object->spec()) + ": P=" + to_string(p) + " Q=" + to_string(q));
  }
  return result;
}

PropertyResult parse_render_roundtrip(std::uint64_t seed, std::size_t cases) {
  PropertyResult result{"parse/render round-trip"};
  Rng rng(seed);
  const auto& algebras = zoo().algebras();
  std::uniform_int_distribution<std::size_t> pick(0, algebras.size() - 1);
  std::uniform_int_distribution<unsigned> order_dist(1, 12);
  for (std::size_t k = 0; k < cases; ++k) {
    // Numbers first.
    const unsigned n = order_dist(rng);
    const CyclotomicNumber x = random_cyclotomic(rng, n);
    bool ok = parse_cyclotomic(to_string(x), n) == x;

    const auto& shipped = algebras[pick(rng)];
    std::vector<Var> vars = parameter_vars();
    const auto dim = static_cast<std::uint32_t>(shipped.hopf->dimension());
    vars.push_back(Var::t(1, dim - 1));
    vars.push_back(Var::t(2, 0));
    const AlgElement e = random_element(rng, shipped.algebra, 3, 3, vars);
    const BasisNamer namer = shipped.hopf->namer();
    const std::string text = to_string(e, namer);
    ParseContext context = algebra_context(shipped.algebra, shipped.hopf);
    context.free = shipped.free;
    std::string parsed_text;
    try {
      const AlgElement parsed = parse_element(text, context);
      ok = ok && parsed == e;
      if (!(parsed == e)) parsed_text = to_string(parsed, namer);
    } catch (const Error& error) {
      ok = false;
      parsed_text = error.what();
    }
    record(result, ok, shipped.label + ": " + text + " -> " + parsed_text);
  }
  return result;
}

}  // namespace hopfpi::testing
