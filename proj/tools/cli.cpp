#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <nlohmann/json.hpp>
#include <optional>
#include <random>

#include "hopfpi/hopfpi.hpp"

namespace hopfpi::cli {
namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string format = "text";
  std::optional<std::uint64_t> seed;
  std::size_t max_degree = 256;
  unsigned copies = 2;
  bool timings = false;
};

struct Report {
  std::string command;
  Json input = Json::object();
  Json result = Json::object();
  std::optional<Json> witness;
  std::vector<std::string> lines;
  int exit_code = kVerified;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool is_object_spec(const std::string& text) { return text.find(';') != std::string::npos; }

std::string parameter_summary(const GaloisObjectSpec& spec) {
  std::vector<std::string> symbolic, numeric;
  auto note = [&](const std::string& name, const ParamValue& v) {
    if (is_symbolic(v)) {
      symbolic.push_back(name);
    } else {
      std::string value = to_string(std::get<CyclotomicNumber>(v));
      std::erase(value, ' ');
      numeric.push_back(name + "=" + value);
    }
  };
  note("a", spec.a);
  if (spec.family == HopfFamily::Taft) {
    note("c", spec.c.at(0));
  } else {
    for (unsigned i = 1; i <= spec.c.size(); ++i) note("c" + std::to_string(i), spec.c[i - 1]);
    for (const auto& [key, v] : spec.d)
      note("d" + std::to_string(key.first) + std::to_string(key.second), v);
  }
  auto join = [](const std::vector<std::string>& items) {
    std::string s;
    for (const auto& item : items) s += (s.empty() ? "" : ", ") + item;
    return s;
  };
  if (symbolic.empty()) return join(numeric);
  if (numeric.empty()) return "symbolic " + join(symbolic);
  return "symbolic " + join(symbolic) + "; " + join(numeric);
}

ParseContext with_degree(ParseContext context, const Options& options) {
  context.max_degree = options.max_degree;
  return context;
}

HopfPtr hopf_matching(const GaloisObjectSpec& spec, const std::string& hopf_text) {
  HopfPtr hopf = parse_hopf_spec(hopf_text);
  if (hopf->family() != spec.family || hopf->rank() != spec.rank)
    throw UsageError("object " + to_string(spec) + " is not over " + hopf_text);
  return hopf;
}

AlgElement identity_or_expression(const std::string& text, const FreeAlgebra& free,
                                  const GaloisObjectSpec& spec, const Options& options,
                                  std::string* name) {
  if (auto named = find_identity(text, free, spec)) {
    *name = named->name;
    return std::move(named->element);
  }
  return parse_element(text, with_degree(free_context(free), options));
}

Report normal_form_command(const std::string& algebra_text, const std::string& expression,
                           const Options& options) {
  Report report{"normal-form"};
  report.input = {{"algebra", algebra_text}, {"expression", expression}};
  std::optional<AlgElement> element;
  BasisNamer namer;
  std::string name;
  HopfPtr hopf;
  FreePtr free;
  ComodulePtr object;
  if (algebra_text.rfind("T:", 0) == 0) {
    hopf = parse_hopf_spec(algebra_text.substr(2));
    free = FreeAlgebra::create(hopf, options.copies);
    element = parse_element(expression, with_degree(free_context(*free), options));
  } else if (algebra_text.rfind("square:", 0) == 0) {
    hopf = parse_hopf_spec(algebra_text.substr(7));
    element = parse_element(expression, with_degree(algebra_context(hopf->square(), hopf), options));
  } else if (is_object_spec(algebra_text)) {
    object = galois_object(parse_object_spec(algebra_text));
    hopf = object->hopf();
    element = parse_element(expression,
                            with_degree(algebra_context(object->algebra(), hopf), options));
  } else {
    hopf = parse_hopf_spec(algebra_text);
    element = parse_element(expression, with_degree(algebra_context(hopf->algebra(), hopf), options));
  }
  const std::string text = to_string(*element, hopf->namer());
  report.result = {{"normal_form", text}, {"terms", element->term_count()}};
  report.lines.push_back(text);
  return report;
}

Report coproduct_command(const std::string& hopf_text, const std::string& expression,
                         const Options& options) {
  Report report{"coproduct"};
  report.input = {{"hopf", hopf_text}, {"expression", expression}};
  HopfPtr hopf = parse_hopf_spec(hopf_text);
  const AlgElement h =
      parse_element(expression, with_degree(algebra_context(hopf->algebra(), hopf), options));
  const std::string text = to_string(coproduct(*hopf, h));
  report.result = {{"coproduct", text}};
  report.lines.push_back(text);
  return report;
}

Report mu_command(const std::string& hopf_text, const std::string& object_text,
                  const std::string& expression, const Options& options) {
  Report report{"mu"};
  report.input = {{"hopf", hopf_text}, {"object", object_text}, {"expression", expression}};
  const GaloisObjectSpec spec = parse_object_spec(object_text);
  HopfPtr hopf = hopf_matching(spec, hopf_text);
  auto object = galois_object(spec, hopf);
  auto free = FreeAlgebra::create(hopf, options.copies);
  std::string name;
  const AlgElement p = identity_or_expression(expression, *free, spec, options, &name);
  const AlgElement image = mu(free, object, p);
  const std::string text = to_string(image, hopf->namer());
  report.result = {{"image", text}, {"zero", image.is_zero()}, {"terms", image.term_count()}};
  report.lines.push_back(text);
  return report;
}

Report verify_matrix(unsigned k, const std::string& object_text, const std::string& target) {
  Report report{"verify"};
  report.input = {{"object", object_text}, {"identity", target}};
  if (target.rfind("standard:", 0) != 0)
    throw UsageError("matrix objects only support standard:<m>");
  const unsigned m = static_cast<unsigned>(std::stoul(target.substr(9)));
  const MatrixIdentityReport check = check_matrix_identity(m, k);
  report.result = {{"identity", target},
                   {"holds", check.holds},
                   {"substitutions", check.substitutions}};
  if (check.holds) {
    report.lines.push_back("identity verified: S_" + std::to_string(m) + " vanishes on all " +
                           std::to_string(check.substitutions) + " matrix-unit substitutions in M_" +
                           std::to_string(k));
    return report;
  }
  Json units = Json::array();
  std::string units_text;
  for (const auto& [r, c] : check.counterexample) {
    units.push_back({r + 1, c + 1});
    units_text += (units_text.empty() ? "" : ", ") + std::string("E") + std::to_string(r + 1) +
                  std::to_string(c + 1);
  }
  Json value = Json::array();
  for (const auto& v : check.value) value.push_back(to_string(v));
  report.witness = Json{{"matrix_units", units}, {"value", value}};
  report.lines.push_back("not an identity: S_" + std::to_string(m) + "(" + units_text +
                         ") != 0 in M_" + std::to_string(k));
  report.exit_code = kFalsified;
  return report;
}

Report verify_command(const std::string& object_text, const std::string& target,
                      const Options& options) {
  if (object_text.rfind("matrix:", 0) == 0)
    return verify_matrix(static_cast<unsigned>(std::stoul(object_text.substr(7))), object_text,
                         target);
  Report report{"verify"};
  report.input = {{"object", object_text}, {"identity", target}};
  const GaloisObjectSpec spec = parse_object_spec(object_text);
  auto object = galois_object(spec);
  auto free = FreeAlgebra::create(object->hopf(), options.copies);
  std::string name;
  const AlgElement p = identity_or_expression(target, *free, spec, options, &name);
  const AlgElement image = mu(free, object, p);
  const bool holds = image.is_zero();
  report.result = {{"identity", name.empty() ? target : name},
                   {"holds", holds},
                   {"parameters", parameter_summary(spec)}};
  if (holds) {
    report.lines.push_back("identity verified (" + parameter_summary(spec) + ")");
  } else {
    const std::string text = to_string(image, object->hopf()->namer());
    report.witness = Json{{"image", text}};
    report.lines.push_back("not an identity (" + parameter_summary(spec) + ")");
    report.lines.push_back("mu image: " + text);
    report.exit_code = kFalsified;
  }
  return report;
}

GaloisObjectSpec bump_primes(GaloisObjectSpec spec) {
  auto bump = [](ParamValue& v) {
    if (auto* s = std::get_if<Symbolic>(&v)) ++s->prime;
  };
  bump(spec.a);
  for (auto& v : spec.c) bump(v);
  for (auto& [key, v] : spec.d) bump(v);
  return spec;
}

Report distinguish_command(const std::string& first_text, const std::string& second_text) {
  Report report{"distinguish"};
  report.input = {{"first", first_text}, {"second", second_text}};
  const GaloisObjectSpec first = parse_object_spec(first_text);
  // Symbolic parameters of the two objects are independent indeterminates.
  const GaloisObjectSpec second = bump_primes(parse_object_spec(second_text));
  auto a = galois_object(first);
  auto b = galois_object(second, a->spec().family == second.family &&
                                         a->spec().rank == second.rank
                                     ? a->hopf()
                                     : nullptr);
  const Verdict verdict = distinguish(a, b);
  report.result = {{"isomorphic", verdict.isomorphic()},
                   {"identities_agree", verdict.identities_agree},
                   {"a_class", to_string(verdict.a_class)}};
  if (!verdict.identities_agree) {
    report.result["identity"] = verdict.identity;
    report.result["direction"] = verdict.direction == 1 ? "first_fails_on_second"
                                                        : "second_fails_on_first";
    const std::string text = to_string(*verdict.witness, a->hopf()->namer());
    report.witness = Json{{"image", text}};
    report.lines.push_back("distinguished by " + verdict.identity + " (identity of the " +
                           (verdict.direction == 1 ? "first" : "second") +
                           " object fails on the " +
                           (verdict.direction == 1 ? "second" : "first") + ")");
    report.lines.push_back("witness: " + text);
  } else {
    report.lines.push_back("identities agree");
  }
  report.lines.push_back("a-class: " + to_string(verdict.a_class));
  report.lines.push_back(verdict.isomorphic() ? "verdict: isomorphic" : "verdict: not isomorphic");
  report.exit_code = verdict.isomorphic() ? kVerified : kFalsified;
  return report;
}

Report catalog_command(const std::string& hopf_text, const Options& options) {
  Report report{"catalog"};
  report.input = {{"hopf", hopf_text}};
  HopfPtr hopf = parse_hopf_spec(hopf_text);
  Json entries = Json::array();
  if (hopf->family() == HopfFamily::Trivial) {
    entries.push_back({{"name", "standard:<m>"}, {"degree", "m"},
                       {"expression", "sum over permutations s of sgn(s) X[s(1),1]...X[s(m),1]"}});
    report.lines.push_back("standard:<m>  (verify with --object matrix:<k>)");
  } else {
    const GaloisObjectSpec spec = hopf->family() == HopfFamily::Taft
                                      ? GaloisObjectSpec::taft(hopf->rank())
                                      : GaloisObjectSpec::en(hopf->rank());
    auto free = FreeAlgebra::create(hopf, options.copies);
    for (const auto& identity : identity_catalog(*free, spec)) {
      const std::string text = to_string(identity.element);
      entries.push_back({{"name", identity.name},
                         {"degree", identity.element.degree()},
                         {"expression", text}});
      report.lines.push_back(identity.name + " = " + text);
    }
  }
  report.result = {{"identities", entries}};
  return report;
}

CyclotomicNumber small_number(std::mt19937_64& rng, unsigned order, bool nonzero) {
  std::uniform_int_distribution<long> dist(-3, 3);
  long v = dist(rng);
  while (nonzero && v == 0) v = dist(rng);
  return CyclotomicNumber(order, v);
}

Report selfcheck_command(const std::string& hopf_text, const Options& options) {
  Report report{"selfcheck"};
  report.input = {{"hopf", hopf_text}};
  if (options.seed) report.input["seed"] = *options.seed;
  HopfPtr hopf = parse_hopf_spec(hopf_text);
  Json suites = Json::array();
  bool all = true;
  auto suite = [&](const std::string& name, bool passed, std::size_t checks,
                   const std::string& detail = {}) {
    all = all && passed;
    Json entry = {{"name", name}, {"passed", passed}, {"checks", checks}};
    if (!detail.empty()) entry["detail"] = detail;
    suites.push_back(entry);
    report.lines.push_back(std::string(passed ? "[ok]   " : "[FAIL] ") + name + " (" +
                           std::to_string(checks) + (checks == 1 ? " check)" : " checks)") +
                           (detail.empty() ? "" : ": " + detail));
  };

  const HopfAxiomReport axioms = check_hopf_axioms(*hopf);
  suite("hopf axioms", axioms.ok(), axioms.checks,
        axioms.ok() ? "" : to_string(axioms.failures.front().axiom) + " at " +
                               axioms.failures.front().subject);

  if (hopf->family() == HopfFamily::Trivial) {
    suite("S_4 on M_2", verify_matrix_identity(4, 2), 1);
  } else {
    const bool is_taft = hopf->family() == HopfFamily::Taft;
    const GaloisObjectSpec symbolic =
        is_taft ? GaloisObjectSpec::taft(hopf->rank()) : GaloisObjectSpec::en(hopf->rank());
    auto object = galois_object(symbolic, hopf);
    const ComoduleAxiomReport comodule = check_comodule_axioms(*object);
    suite("coaction axioms (symbolic parameters)", comodule.ok(), comodule.checks,
          comodule.ok() ? "" : to_string(comodule.failures.front().axiom) + " at " +
                                   comodule.failures.front().subject);

    auto free = FreeAlgebra::create(hopf, options.copies);
    std::size_t vanished = 0;
    const auto catalog = identity_catalog(*free, symbolic);
    for (const auto& identity : catalog)
      if (is_identity(free, object, identity.element)) ++vanished;
    suite("catalog identities vanish (symbolic parameters)", vanished == catalog.size(),
          catalog.size());

    GaloisObjectSpec numeric = symbolic;
    const unsigned order = numeric.order();
    if (options.seed) {
      std::mt19937_64 rng(*options.seed);
      numeric.a = small_number(rng, order, true);
      for (auto& v : numeric.c) v = small_number(rng, order, false);
      for (auto& [key, v] : numeric.d) v = small_number(rng, order, false);
    } else {
      numeric.a = CyclotomicNumber(order, 1);
      for (auto& v : numeric.c) v = CyclotomicNumber(order, 0);
      for (auto& [key, v] : numeric.d) v = CyclotomicNumber(order, 0);
    }
    auto sample = galois_object(numeric, hopf);
    const auto coinv = coinvariants(*sample);
    const bool trivial_coinvariants = coinv.size() == 1 && coinv[0].term_count() == 1 &&
                                      coinv[0].terms().begin()->first.empty();
    suite("coinvariants = span{1} for " + to_string(numeric), trivial_coinvariants, 1);
    suite("Galois map bijective for " + to_string(numeric), galois_map_bijective(*sample), 1);
  }
  report.result = {{"passed", all}, {"suites", suites}};
  report.exit_code = all ? kVerified : kFalsified;
  return report;
}

void emit(const Report& report, const Options& options, double elapsed_ms, std::ostream& out) {
  if (options.format == "json") {
    Json json;
    json["command"] = report.command;
    json["input"] = report.input;
    json["result"] = report.result;
    if (report.witness) json["witness"] = *report.witness;
    json["timings"] = options.timings ? Json{{"total_ms", elapsed_ms}} : Json(nullptr);
    out << json.dump(2) << '\n';
    return;
  }
  for (const auto& line : report.lines) out << line << '\n';
  if (options.timings) out << "time: " << elapsed_ms << " ms\n";
}

void emit_error(const std::string& command, const std::string& message, const Options& options,
                std::ostream& out, std::ostream& err) {
  if (options.format == "json") {
    Json json;
    json["command"] = command;
    json["error"] = message;
    out << json.dump(2) << '\n';
  }
  err << "error: " << message << '\n';
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations with Taft and E(n) Hopf algebras, their Galois objects "
               "and polynomial H-identities.",
               "hopfpi"};
  app.require_subcommand(1);
  app.fallthrough();
  Options options;
  app.add_option("--format", options.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", options.seed, "Seed for randomized parameters (selfcheck)");
  app.add_option("--max-degree", options.max_degree, "Largest word length an expression may expand to")
      ->check(CLI::PositiveNumber);
  app.add_option("--copies", options.copies, "Copies of X_H in T(X_H)")->check(CLI::Range(1u, 64u));
  app.add_flag("--timings", options.timings, "Report wall-clock time");

  std::string first, second, third, object_text;
  auto* normal = app.add_subcommand("normal-form", "Normal form of an expression");
  normal->add_option("algebra", first, "taft:<n>, en:<n>, square:<hopf>, T:<hopf> or an object spec")->required();
  normal->add_option("expression", second)->required();
  auto* cop = app.add_subcommand("coproduct", "Coproduct of an element of H");
  cop->add_option("hopf", first)->required();
  cop->add_option("expression", second)->required();
  auto* mu_cmd = app.add_subcommand("mu", "Image of an element of T(X_H) under the universal map");
  mu_cmd->add_option("hopf", first)->required();
  mu_cmd->add_option("object", second)->required();
  mu_cmd->add_option("expression", third, "Expression in T(X_H) or a catalog name")->required();
  auto* verify = app.add_subcommand("verify", "Decide whether an element is an identity of an object");
  verify->add_option("--object", object_text, "Object spec or matrix:<k>")->required();
  verify->add_option("identity", first, "Catalog name or expression in T(X_H)")->required();
  auto* dist = app.add_subcommand("distinguish", "Compare two Galois objects by their identities");
  dist->add_option("first", first)->required();
  dist->add_option("second", second)->required();
  auto* cat = app.add_subcommand("catalog", "List the identity catalog of a Hopf algebra");
  cat->add_option("hopf", first)->required();
  auto* self = app.add_subcommand("selfcheck", "Run the axiom and identity suites");
  self->add_option("hopf", first)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kVerified : kUsage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    Report report;
    if (command == "normal-form") {
      report = normal_form_command(first, second, options);
    } else if (command == "coproduct") {
      report = coproduct_command(first, second, options);
    } else if (command == "mu") {
      report = mu_command(first, second, third, options);
    } else if (command == "verify") {
      report = verify_command(object_text, first, options);
    } else if (command == "distinguish") {
      report = distinguish_command(first, second);
    } else if (command == "catalog") {
      report = catalog_command(first, options);
    } else {
      report = selfcheck_command(first, options);
    }
    const double elapsed =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    emit(report, options, elapsed, out);
    return report.exit_code;
  } catch (const UsageError& e) {
    emit_error(command, e.what(), options, out, err);
  } catch (const Error& e) {
    emit_error(command, e.what(), options, out, err);
  } catch (const std::invalid_argument& e) {
    emit_error(command, std::string("invalid number: ") + e.what(), options, out, err);
  } catch (const std::out_of_range& e) {
    emit_error(command, std::string("number out of range: ") + e.what(), options, out, err);
  }
  return kUsage;
}

}  // namespace hopfpi::cli
