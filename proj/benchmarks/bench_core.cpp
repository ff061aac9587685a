#include <benchmark/benchmark.h>

#include "cyclosum/cyclotomic.hpp"
#include "cyclosum/height.hpp"
#include "cyclosum/oracle.hpp"
#include "cyclosum/solver.hpp"
#include "cyclosum/witness.hpp"

#include <random>

namespace {

cyclosum::ExponentMultiset random_multiset(std::uint64_t m, std::uint64_t n, unsigned seed) {
  std::mt19937 rng(seed);
  cyclosum::ExponentMultiset s(m);
  std::uniform_int_distribution<std::uint64_t> pick(0, m - 1);
  for (std::uint64_t i = 0; i < n; ++i) s.add(pick(rng));
  return s;
}

void ZeroTest(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  const auto s = random_multiset(m, 24, 7);
  cyclosum::cyclotomic_polynomial(m);  // warm the memo
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclosum::is_zero(cyclosum::from_power_map(s, 7)));
  }
}
BENCHMARK(ZeroTest)->Arg(12)->Arg(60)->Arg(210);

void CyclotomicPolynomialLookup(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  cyclosum::cyclotomic_polynomial(m);  // fill once; steady state is the memo hit
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclosum::cyclotomic_polynomial(m).degree());
  }
}
BENCHMARK(CyclotomicPolynomialLookup)->Arg(64)->Arg(360);

void DecideLargeModulus(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclosum::decide({1'000'003, 24, 720'720}));
  }
}
BENCHMARK(DecideLargeModulus);

void OracleRefutation(benchmark::State& state) {
  const std::uint64_t m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    cyclosum::SearchSpec spec;
    spec.m = m;
    spec.n = 23;
    spec.ell = 1;
    spec.max_multiplicity = 23;
    spec.node_budget = 200'000'000;
    benchmark::DoNotOptimize(cyclosum::exists_witness(spec).status);
  }
}
BENCHMARK(OracleRefutation)->Arg(13)->Arg(16);

void WitnessConstruction(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclosum::construct({18, 8, 24}, true));
  }
}
BENCHMARK(WitnessConstruction);

void HeightExhaustive(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclosum::compute_height(10, 1, 8).h);
  }
}
BENCHMARK(HeightExhaustive);

}  // namespace

BENCHMARK_MAIN();
