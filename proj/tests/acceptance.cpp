// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "hopfpi/hopfpi.hpp"
#include "support/properties.hpp"

namespace {

using namespace hopfpi;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    if (pass) detail << "first failure: " << what;
    pass = false;
  }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

AlgElement in(const ComodulePtr& object, const std::string& text) {
  return parse_element(text, algebra_context(object->algebra(), object->hopf()));
}

AlgElement in_free(const FreePtr& free, const std::string& text) {
  return parse_element(text, free_context(*free));
}

std::string pw(const std::string& base, unsigned n) { return base + "^" + std::to_string(n); }

// 1. taft identity maps to zero under mu with symbolic parameters.
void taft_vanishing(Outcome& out) {
  double worst = 0;
  for (unsigned n = 2; n <= 5; ++n) {
    const auto start = Clock::now();
    const HopfPtr h = taft(n);
    const FreePtr free = FreeAlgebra::create(h, 2);
    const ComodulePtr object = galois_object(GaloisObjectSpec::taft(n), h);
    const AlgElement image = mu(free, object, taft_identity(*free));
    const double elapsed = seconds_since(start);
    worst = std::max(worst, elapsed);
    out.require(image.is_zero(), "n=" + std::to_string(n) + " image " + to_string(image, h->namer()));
    out.require(elapsed < 5.0, "n=" + std::to_string(n) + " took " + std::to_string(elapsed) + " s");
  }
  if (out.pass) out.detail << "n=2..5 exact 0, slowest " << worst << " s";
}

// 2. Intermediate images from the vanishing argument.
void taft_intermediate_images(Outcome& out) {
  for (unsigned n = 2; n <= 5; ++n) {
    const std::string tag = "n=" + std::to_string(n) + " ";
    const HopfPtr h = taft(n);
    const FreePtr free = FreeAlgebra::create(h, 2);
    const ComodulePtr object = galois_object(GaloisObjectSpec::taft(n), h);
    const AlgElement commutator = in_free(free, "Y*X - q*X*Y");

    const AlgElement step1 = mu(free, object, commutator);
    const AlgElement want1 = in(object, "(1-q)*t[1,x]*t[1,y]*x^2");
    out.require(step1 == want1 && step1.term_count() == 1 &&
                    step1.terms().begin()->second.term_count() == 1,
                tag + "mu(YX-qXY) = " + to_string(step1, h->namer()));

    const AlgElement step2 = mu(free, object, in_free(free, pw("Y", n)));
    const AlgElement want2 = in(object, "a*" + pw("t[1,y]", n) + " + c*" + pw("t[1,1]", n));
    out.require(step2 == want2 && step2.term_count() == 1 &&
                    step2.terms().begin()->second.term_count() == 2,
                tag + "mu(Y^n) = " + to_string(step2, h->namer()));

    const AlgElement step3 = mu(free, object, commutator.pow(n));
    const AlgElement want3 =
        in(object, "a^2*" + pw("(1-q)", n) + "*" + pw("t[1,x]", n) + "*" + pw("t[1,y]", n));
    out.require(step3 == want3 && step3.term_count() == 1 &&
                    step3.terms().begin()->second.term_count() == 1,
                tag + "mu((YX-qXY)^n) = " + to_string(step3, h->namer()));
  }
  if (out.pass) out.detail << "n=2..5, three images each, single/two-term matches";
}

// 3. The n = 2 identity in its familiar form.
void quadratic_form(Outcome& out) {
  const FreePtr free = FreeAlgebra::create(taft(2), 2);
  const AlgElement built = taft_identity(*free);
  const AlgElement expected = in_free(free, "(X*Y + Y*X)^2 - 4*X^2*Y^2 + 4*c*E^2*X^2");
  out.require(built == expected, "taft_identity(2) = " + to_string(built));
  if (out.pass) out.detail << built.term_count() << " terms, structurally equal";
}

// 4. Witness separating A_{1,c} from A_{1,c'}.
void distinguishing_witness(Outcome& out) {
  for (unsigned n = 2; n <= 4; ++n) {
    const HopfPtr h = taft(n);
    const FreePtr free = FreeAlgebra::create(h, 2);
    GaloisObjectSpec spec = GaloisObjectSpec::taft(n, 1);
    spec.a = CyclotomicNumber(n, 1);
    const ComodulePtr other = galois_object(spec, h);
    const AlgElement image = mu(free, other, taft_identity(*free));
    const AlgElement expected =
        in(other, "(c - c')*" + pw("(1-q)", n) + "*" + pw("t[1,1]", n) + "*" + pw("t[1,x]", n));
    out.require(image == expected,
                "n=" + std::to_string(n) + " image " + to_string(image, h->namer()));
  }
  if (out.pass) out.detail << "n=2..4 exact (c-c')(1-q)^n t_1^n t_x^n";
}

// 5. The E(n) catalog vanishes.
void en_vanishing(Outcome& out) {
  const std::size_t expected_counts[] = {0, 2, 5, 9};
  double worst = 0;
  for (unsigned n = 1; n <= 3; ++n) {
    const auto start = Clock::now();
    const HopfPtr h = en(n);
    const FreePtr free = FreeAlgebra::create(h, 2);
    const ComodulePtr object = galois_object(GaloisObjectSpec::en(n), h);
    const auto catalog = en_identities(*free);
    out.require(catalog.size() == expected_counts[n] && catalog.size() == n * (n + 3) / 2,
                "n=" + std::to_string(n) + " count " + std::to_string(catalog.size()));
    for (const auto& identity : catalog) {
      const AlgElement image = mu(free, object, identity.element);
      out.require(image.is_zero(), "n=" + std::to_string(n) + " " + identity.name + " image " +
                                       to_string(image, h->namer()));
    }
    const double elapsed = seconds_since(start);
    worst = std::max(worst, elapsed);
    out.require(elapsed < 5.0, "n=" + std::to_string(n) + " took " + std::to_string(elapsed) + " s");
  }
  if (out.pass) out.detail << "counts 2/5/9, all exact 0, slowest " << worst << " s";
}

// 6. Intermediate images for E(n).
void en_intermediate_images(Outcome& out) {
  for (unsigned n = 1; n <= 3; ++n) {
    const HopfPtr h = en(n);
    const FreePtr free = FreeAlgebra::create(h, 2);
    const ComodulePtr object = galois_object(GaloisObjectSpec::en(n), h);
    auto check = [&](const std::string& source, const std::string& target) {
      const AlgElement image = mu(free, object, in_free(free, source));
      out.require(image == in(object, target), "n=" + std::to_string(n) + " mu(" + source +
                                                   ") = " + to_string(image, h->namer()));
    };
    check("E^2", "t[1,1]^2");
    check("X^2", "a*t[1,x]^2");
    for (unsigned i = 1; i <= n; ++i) {
      const std::string yi = "Y" + std::to_string(i), ti = "t[1,y" + std::to_string(i) + "]";
      check(yi + "^2", "a*" + ti + "^2 + c[" + std::to_string(i) + "]*t[1,1]^2");
      check("X*" + yi + " + " + yi + "*X", "2*a*t[1,x]*" + ti);
      for (unsigned j = i + 1; j <= n; ++j) {
        const std::string yj = "Y" + std::to_string(j), tj = "t[1,y" + std::to_string(j) + "]";
        check(yi + "*" + yj + " + " + yj + "*" + yi,
              "2*a*" + ti + "*" + tj + " + d[" + std::to_string(i) + "," + std::to_string(j) +
                  "]*t[1,1]^2");
      }
    }
  }
  if (out.pass) out.detail << "n=1..3, all images exact";
}

// 7. q-binomials at roots of unity and the quantum plane.
void qbinomial_vanishing(Outcome& out) {
  for (unsigned n = 2; n <= 12; ++n)
    for (unsigned k = 1; k < n; ++k)
      out.require(qbinom(n, k, primitive_root(n)).is_zero(),
                  "qbinom(" + std::to_string(n) + "," + std::to_string(k) + ") != 0");
  for (unsigned n = 2; n <= 8; ++n) {
    RewriteRule rule{{1, 0}, {{{0, 1}, CommPoly(primitive_root(n))}}};
    const AlgebraPtr plane = PresentedAlgebra::create("plane", n, {"u", "v"}, {rule});
    const AlgElement u = AlgElement::generator(plane, 0), v = AlgElement::generator(plane, 1);
    const AlgElement lhs = (u + v).pow(n);
    out.require(lhs == u.pow(n) + v.pow(n),
                "(u+v)^" + std::to_string(n) + " = " + to_string(lhs));
  }
  if (out.pass) out.detail << "qbinom n<=12 all 0; (u+v)^n = u^n + v^n for n<=8";
}

// Independent q-binomial: count k-subsets by inversions, then evaluate at q.
CyclotomicNumber qbinom_by_inversions(unsigned m, unsigned k, const CyclotomicNumber& q) {
  std::vector<long> counts(k * (m - k) + 1, 0);
  for (unsigned mask = 0; mask < (1u << m); ++mask) {
    if (static_cast<unsigned>(__builtin_popcount(mask)) != k) continue;
    unsigned inversions = 0, ones = 0;
    for (unsigned bit = 0; bit < m; ++bit) {
      if (mask & (1u << bit)) ++ones;
      else inversions += ones;
    }
    ++counts[inversions];
  }
  CyclotomicNumber value(q.order(), 0);
  for (std::size_t e = 0; e < counts.size(); ++e)
    value += CyclotomicNumber(q.order(), counts[e]) * q.pow(static_cast<long>(e));
  return value;
}

// 8. Hopf axioms plus the closed coproduct formula for x^i y^j.
void hopf_axioms(Outcome& out) {
  std::size_t checks = 0;
  std::vector<HopfPtr> all{taft(2), taft(3), taft(4), en(1), en(2), en(3)};
  for (const auto& h : all) {
    const auto report = check_hopf_axioms(*h);
    checks += report.checks;
    out.require(report.ok(), h->spec_name() + " " +
                                 (report.ok() ? "" : to_string(report.failures[0].axiom) + " on " +
                                                         report.failures[0].subject));
  }
  for (unsigned n = 2; n <= 5; ++n) {
    const HopfPtr h = taft(n);
    const auto q = h->root();
    const AlgebraPtr& sq = h->square();
    for (unsigned i = 0; i < n; ++i) {
      for (unsigned j = 0; j < n; ++j) {
        Word word(i, 0);
        word.insert(word.end(), j, 1);
        AlgElement expected(sq);
        for (unsigned k = 0; k <= j; ++k) {
          Word left(i, 0), right((i + k) % n, 0);
          left.insert(left.end(), k, 1);
          right.insert(right.end(), j - k, 1);
          expected += AlgElement::from_word(sq, join_words(*sq, left, right),
                                            CommPoly(qbinom_by_inversions(j, k, q)));
        }
        out.require(h->coproduct_of_word(word) == expected,
                    "taft(" + std::to_string(n) + ") coproduct of " +
                        h->algebra()->word_to_string(word));
        ++checks;
      }
    }
  }
  if (out.pass) out.detail << checks << " checks";
}

// 9. Coinvariants and the canonical map.
void galois_properties(Outcome& out) {
  const char* specs[] = {"taft:2;a=1;c=0",       "taft:2;a=1;c=1",      "taft:3;a=1;c=0",
                         "taft:3;a=1;c=1",       "en:1;a=1;c1=0",       "en:1;a=1;c1=1",
                         "en:2;a=1;c1=0;c2=0;d12=0", "en:2;a=1;c1=1;c2=1;d12=0"};
  for (const char* text : specs) {
    const ComodulePtr object = galois_object(parse_object_spec(text));
    const auto invariants = coinvariants(*object);
    out.require(invariants.size() == 1 && invariants[0].term_count() == 1 &&
                    invariants[0].terms().begin()->first.empty(),
                std::string(text) + " coinvariants of dimension " + std::to_string(invariants.size()));
    out.require(galois_map_bijective(*object), std::string(text) + " canonical map not bijective");
  }
  if (out.pass) out.detail << std::size(specs) << " objects: A^H = k1, canonical map bijective";
}

// 10. Commutators of the coinvariants P_h, Q_{h,h'} with X_2^z.
void coinvariant_commutators(Outcome& out) {
  const HopfPtr h = taft(2);
  const FreePtr free = FreeAlgebra::create(h, 2);
  const ComodulePtr object = galois_object(GaloisObjectSpec::taft(2), h);
  std::vector<AlgElement> basis;
  for (const Word& w : h->basis()) basis.push_back(normal_form(h->algebra(), w));
  std::size_t total = 0;
  for (const auto& z : basis) {
    for (const auto& a : basis) {
      ++total;
      out.require(is_identity(free, object, commutator_identity(*free, coinvariant_P(*free, a), z)),
                  "[P_" + to_string(a) + ", X_2^" + to_string(z) + "]");
      for (const auto& b : basis) {
        ++total;
        out.require(
            is_identity(free, object, commutator_identity(*free, coinvariant_Q(*free, a, b), z)),
            "[Q_" + to_string(a) + "," + to_string(b) + ", X_2^" + to_string(z) + "]");
      }
    }
  }
  if (out.pass) out.detail << total << "/" << total << " commutators are identities";
}

// 11. Standard polynomials on 2x2 matrices.
void standard_polynomials(Outcome& out) {
  const auto s4 = check_matrix_identity(4, 2);
  out.require(s4.holds && s4.substitutions == 256,
              "S4 holds=" + std::to_string(s4.holds) + " after " + std::to_string(s4.substitutions));
  out.require(!verify_matrix_identity(2, 2), "S2 is an identity of M2");
  out.require(!verify_matrix_identity(3, 2), "S3 is an identity of M2");
  if (out.pass) out.detail << "S4 true over 256 substitutions; S2, S3 false";
}

// 12. Randomized property suites.
void property_suites(Outcome& out) {
  using namespace hopfpi::testing;
  const std::uint64_t seed = 20240611;
  for (const auto& result : {ring_axioms(seed, 1000), confluence_and_associativity(seed + 1, 1000),
                             mu_multiplicativity(seed + 2, 1000), parse_render_roundtrip(seed + 3, 1000)}) {
    out.require(result.ok() && result.cases == 1000,
                result.name + ": " + std::to_string(result.failures) + " failures, " +
                    result.first_failure);
    if (out.pass) out.detail << result.name << " " << result.cases << "/0; ";
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"taft identity vanishes", taft_vanishing},
      {"taft intermediate images", taft_intermediate_images},
      {"n=2 identity form", quadratic_form},
      {"distinguishing witness", distinguishing_witness},
      {"E(n) identities vanish", en_vanishing},
      {"E(n) intermediate images", en_intermediate_images},
      {"q-binomial vanishing", qbinomial_vanishing},
      {"Hopf axioms", hopf_axioms},
      {"Galois properties", galois_properties},
      {"coinvariant commutators", coinvariant_commutators},
      {"standard polynomials on M2", standard_polynomials},
      {"property suites", property_suites},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome outcome;
    try {
      criteria[k].second(outcome);
    } catch (const std::exception& error) {
      outcome.pass = false;
      outcome.detail << "exception: " << error.what();
    }
    if (!outcome.pass) ++failures;
    std::cout << (outcome.pass ? "[PASS] " : "[FAIL] ") << "AC" << k + 1 << " "
              << criteria[k].first << ": " << outcome.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
