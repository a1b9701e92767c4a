#include <benchmark/benchmark.h>

#include "weilhodge/hermform.hpp"
#include "weilhodge/rootweights.hpp"
#include "weilhodge/starform.hpp"
#include "weilhodge/wedge.hpp"

using namespace weilhodge;

namespace {

void BM_KernelCheck(benchmark::State& state) {
  const auto D = static_cast<std::size_t>(state.range(0));
  const auto m = static_cast<std::size_t>(state.range(1));
  const ScalarAction<Rational> scalar(D, Rational(-3));
  for (auto _ : state) benchmark::DoNotOptimize(kernel_characterization_check(D, m, scalar));
}
BENCHMARK(BM_KernelCheck)->Args({4, 2})->Args({6, 3})->Unit(benchmark::kMillisecond);

void BM_BuildStar(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMField tower(TotallyRealField::rationals(), E0Element(3));
  const DiagonalHermitianForm form = build_form(SignatureSpec(n, {{n, n}}), tower);
  for (auto _ : state) benchmark::DoNotOptimize(build_star(n, form));
}
BENCHMARK(BM_BuildStar)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_RealForm(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const CMField tower(TotallyRealField::real_quadratic(2), E0Element(1));
  const DiagonalHermitianForm form = build_form(SignatureSpec(n, {{n, n}, {1, 2 * n - 1}}), tower);
  const StarOperator star = build_star(n, form);
  for (auto _ : state) benchmark::DoNotOptimize(construct_real_form(star, n, form));
}
BENCHMARK(BM_RealForm)->Arg(3)->Unit(benchmark::kMillisecond);

void BM_HodgeNumbers(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state)
    for (int p = 1; p < 2 * n; ++p) benchmark::DoNotOptimize(hodge_numbers(DomainLabel{n, p}));
}
BENCHMARK(BM_HodgeNumbers)->Arg(5)->Arg(10)->Arg(30);

}  // namespace

BENCHMARK_MAIN();
