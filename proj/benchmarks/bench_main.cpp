#include <benchmark/benchmark.h>

#include "hopfpi/hopfpi.hpp"

namespace {

using namespace hopfpi;

void BM_NormalFormTaftWord(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto object = galois_object(GaloisObjectSpec::taft(n));
  Word word;
  for (unsigned k = 0; k < 2 * n; ++k) {
    word.push_back(1);
    word.push_back(0);
  }
  for (auto _ : state) {
    object->algebra()->clear_cache();
    benchmark::DoNotOptimize(object->algebra()->normal_form(word));
  }
}
BENCHMARK(BM_NormalFormTaftWord)->DenseRange(2, 5);

void BM_MuTaftIdentity(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto h = taft(n);
  const auto free = FreeAlgebra::create(h, 2);
  const auto object = galois_object(GaloisObjectSpec::taft(n), h);
  const auto identity = taft_identity(*free);
  for (auto _ : state) {
    object->algebra()->clear_cache();
    benchmark::DoNotOptimize(mu(free, object, identity));
  }
}
BENCHMARK(BM_MuTaftIdentity)->DenseRange(2, 5)->Unit(benchmark::kMillisecond);

void BM_MuEnCatalog(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto h = en(n);
  const auto free = FreeAlgebra::create(h, 2);
  const auto object = galois_object(GaloisObjectSpec::en(n), h);
  const auto catalog = en_identities(*free);
  for (auto _ : state)
    for (const auto& identity : catalog) benchmark::DoNotOptimize(mu(free, object, identity.element));
}
BENCHMARK(BM_MuEnCatalog)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_GaloisMapRank(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  const auto object = galois_object(parse_object_spec("taft:" + std::to_string(n) + ";a=1;c=1"));
  for (auto _ : state) benchmark::DoNotOptimize(galois_map_bijective(*object));
}
BENCHMARK(BM_GaloisMapRank)->DenseRange(2, 3)->Unit(benchmark::kMillisecond);

void BM_HopfAxioms(benchmark::State& state) {
  const auto h = taft(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(check_hopf_axioms(*h));
}
BENCHMARK(BM_HopfAxioms)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_StandardPolynomialM2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(check_matrix_identity(4, 2));
}
BENCHMARK(BM_StandardPolynomialM2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
