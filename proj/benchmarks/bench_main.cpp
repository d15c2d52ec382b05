#include <random>

#include <benchmark/benchmark.h>

#include "unitring/abgroup.hpp"
#include "unitring/gf2ext.hpp"
#include "unitring/gf2poly.hpp"
#include "unitring/oracle.hpp"
#include "unitring/realize.hpp"

using namespace unitring;

static void BM_FactorRandom(benchmark::State& state) {
  const auto words = static_cast<std::size_t>(state.range(0));
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> w(words);
  for (auto& v : w) v = rng();
  w.back() |= 1ULL << 63;
  const auto f = PolyGF2::from_words(w);
  for (auto _ : state) benchmark::DoNotOptimize(factor(f));
  state.SetComplexityN(static_cast<std::int64_t>(64 * words));
}
BENCHMARK(BM_FactorRandom)->RangeMultiplier(2)->Range(1, 16)->Complexity();

static void BM_FactorXqMinus1(benchmark::State& state) {
  const auto q = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(factor_xq_minus_1(q));
}
BENCHMARK(BM_FactorXqMinus1)->Arg(243)->Arg(625)->Arg(2047)->Arg(59049);

static void BM_FieldMul(benchmark::State& state) {
  const auto ctx = FieldCtx::make(static_cast<unsigned>(state.range(0)));
  std::uint64_t a = 3;
  const std::uint64_t b = ctx->size_minus_one() / 3;
  for (auto _ : state) {
    a = ctx->mul(a, b) | 1;
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_FieldMul)->Arg(8)->Arg(16)->Arg(32);

static void BM_TensorSplitByFactorization(benchmark::State& state) {
  const auto a = static_cast<unsigned>(state.range(0));
  const auto b = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(tensor_split_by_factorization(a, b));
}
BENCHMARK(BM_TensorSplitByFactorization)->Args({4, 6})->Args({10, 10})->Args({16, 24});

static void BM_OddDecompositionSweep(benchmark::State& state) {
  const auto bound = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    std::uint64_t yes = 0;
    for (std::uint64_t k = 1; k < bound; k += 2) yes += odd_product_decomposition(k).has_value();
    benchmark::DoNotOptimize(yes);
  }
}
BENCHMARK(BM_OddDecompositionSweep)->Arg(1 << 12)->Arg(1 << 16)->Unit(benchmark::kMillisecond);

static void BM_FactorInteger(benchmark::State& state) {
  std::mt19937_64 rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(factor_integer(rng() | 1));
}
BENCHMARK(BM_FactorInteger);

static void BM_EnumerateUnits(benchmark::State& state) {
  const std::vector<unsigned> degrees(1, static_cast<unsigned>(state.range(0)));
  const auto a = build_product_of_fields(degrees);
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_units(a));
}
BENCHMARK(BM_EnumerateUnits)->DenseRange(8, 16, 4)->Unit(benchmark::kMillisecond);

static void BM_SubsetSearch(benchmark::State& state) {
  const auto g = parse_group(state.range(0) == 0 ? "C3 x C3 x C7 x C31" : "C3 x C3 x C3 x C5 x C17");
  for (auto _ : state) benchmark::DoNotOptimize(s_ring_subset_search(g));
}
BENCHMARK(BM_SubsetSearch)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

static void BM_R2mSurvey(benchmark::State& state) {
  const auto m = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(r2m_unit_survey(m));
}
BENCHMARK(BM_R2mSurvey)->Arg(1000)->Arg(100000)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
