#include <benchmark/benchmark.h>

#include "clif/dense.hpp"
#include "clif/dirac.hpp"
#include "clif/m8.hpp"
#include "clif/sampling.hpp"

using namespace clif;

namespace {

template <bool Parallel>
void BM_DenseProduct(benchmark::State& state) {
  int n = int(state.range(0));
  Signature s(n - n / 2, n / 2);
  Rng rng(1);
  auto a = dense::to_dense(random_multivector(rng, s)), b = dense::to_dense(random_multivector(rng, s));
  std::vector<cplx> out(a.size());
  for (auto _ : state) {
    if constexpr (Parallel) dense::product_omp(s, a.data(), b.data(), out.data());
    else dense::product_serial(s, a.data(), b.data(), out.data());
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * int64_t(a.size()) * int64_t(a.size()));
}

template <bool Parallel>
void BM_LounestoBatch(benchmark::State& state) {
  Rng rng(2);
  std::vector<DiracSpinor> v;
  for (int64_t t = 0; t < state.range(0); ++t)
    v.push_back(t % 2 ? random_singular_spinor(rng, 1.5) : random_spinor(rng));
  for (auto _ : state) {
    auto r = Parallel ? classify_lounesto_batch(v, 1e-10) : classify_lounesto_batch_serial(v, 1e-10);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

template <bool Parallel>
void BM_M8Batch(benchmark::State& state) {
  Rng rng(3);
  std::vector<std::pair<RVec, RVec>> v;
  for (int64_t t = 0; t < state.range(0); ++t) v.push_back({random_m8(rng), random_m8(rng)});
  for (auto _ : state) {
    auto r = Parallel ? classify_m8_batch(v, 1e-10) : classify_m8_batch_serial(v, 1e-10);
    benchmark::DoNotOptimize(r.data());
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

}  // namespace

BENCHMARK(BM_DenseProduct<false>)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_DenseProduct<true>)->DenseRange(6, 10, 2)->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_LounestoBatch<false>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_LounestoBatch<true>)->Arg(10000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_M8Batch<false>)->Arg(2000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_M8Batch<true>)->Arg(2000)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
