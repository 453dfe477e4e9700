#include <benchmark/benchmark.h>

#include <cstdint>

#include "primechi/basel.hpp"
#include "primechi/character.hpp"
#include "primechi/primes.hpp"
#include "primechi/series.hpp"
#include "primechi/tables.hpp"

namespace {

using namespace primechi;

void BM_SieveUpTo(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sieve_up_to(limit));
  }
}
BENCHMARK(BM_SieveUpTo)->Arg(100000)->Arg(1000000)->Arg(10000000);

void BM_NthPrimeCached(benchmark::State& state) {
  nth_prime(1000000);  // warm the cache; measures lookup, not sieving
  std::uint64_t m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(nth_prime(m).value);
    m = m % 1000000 + 1;
  }
}
BENCHMARK(BM_NthPrimeCached);

void BM_Factorize(benchmark::State& state) {
  std::uint64_t n = 2;
  for (auto _ : state) {
    benchmark::DoNotOptimize(factorize(n));
    n = n % 900000 + 2;
  }
}
BENCHMARK(BM_Factorize);

void BM_ChiPrime(benchmark::State& state) {
  nth_prime(100000);
  std::uint64_t m = 1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(chi_prime(m).chi);
    m = m % 100000 + 1;
  }
}
BENCHMARK(BM_ChiPrime);

void BM_CharacterTable(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state) {
    CharacterTable table(limit);
    benchmark::DoNotOptimize(table.chi(limit));
  }
}
BENCHMARK(BM_CharacterTable)->Arg(10000)->Arg(100000)->Arg(1000000);

void BM_DirichletPartial(benchmark::State& state) {
  const std::uint64_t N = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dirichlet_partial({0.5, 14.134725}, N));
  }
}
BENCHMARK(BM_DirichletPartial)->Arg(1000)->Arg(10000)->Arg(100000);

void BM_GeneratePrimeTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(generate_prime_table(180));
  }
}
BENCHMARK(BM_GeneratePrimeTable);

void BM_BaselPartial(benchmark::State& state) {
  const std::uint64_t N = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(basel_partial(N));
  }
}
BENCHMARK(BM_BaselPartial)->Arg(1000000);

}  // namespace

BENCHMARK_MAIN();
