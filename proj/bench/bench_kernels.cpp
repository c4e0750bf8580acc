// OpenMP kernels against their serial references.

#include <benchmark/benchmark.h>

#include "operad/axioms.hpp"
#include "operad/endomorphism.hpp"
#include "operad/linalg.hpp"
#include "operad/presets.hpp"
#include "operad/quotient.hpp"

using namespace operad;

namespace {

struct EndoInput {
  MultilinearMap f;
  std::vector<MultilinearMap> args;
};

EndoInput endo_input(std::size_t dim) {
  Rng rng(7);
  EndoInput in{random_map(dim, 3, rng), {}};
  for (std::size_t a : {2, 1, 2}) in.args.push_back(random_map(dim, a, rng));
  return in;
}

template <auto Kernel>
void BM_compose(benchmark::State& state) {
  const auto in = endo_input(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(in.f, in.args));
}

// Ideal rows of Lie in arity n: a realistic sparse rank problem.
RowMatrix lie_rows(std::size_t n) { return ideal_spanning_set(*preset("lie"), n).spanning; }

template <auto Kernel>
void BM_rank(benchmark::State& state) {
  const RowMatrix m = lie_rows(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(m));
}

}  // namespace

BENCHMARK(BM_compose<compose_endo>)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_compose<compose_endo_reference>)->Arg(2)->Arg(3)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_rank<static_cast<std::size_t (*)(const RowMatrix&)>(rank)>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rank<rank_reference>)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
