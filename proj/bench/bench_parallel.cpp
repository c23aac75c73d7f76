// Serial against OpenMP-parallel paths of the two fan-out kernels.

#include "nrf/algebra_file.hpp"
#include "nrf/ar.hpp"
#include "nrf/type_a.hpp"

#include <benchmark/benchmark.h>

#include <string>

using namespace nrf;

namespace {

AlgebraPtr load(const char* name) {
  return to_algebra(load_algebra_file(std::string(NRF_CORPUS_DIR) + "/" + name));
}

void decide(benchmark::State& st, const char* file, std::size_t n, bool parallel) {
  auto a = load(file);
  NrfOptions opt;
  opt.parallel = parallel;
  for (auto _ : st) benchmark::DoNotOptimize(decide_nrf(a, n, opt).b);
}

void type_a(benchmark::State& st, std::size_t n, std::size_t s, bool parallel) {
  TypeAOptions opt;
  opt.parallel = parallel;
  opt.nrf.parallel = false;
  for (auto _ : st) benchmark::DoNotOptimize(verify_type_a_cuts(n, s, opt).passed());
}

}  // namespace

BENCHMARK_CAPTURE(decide, e6_serial, "e6_symmetric.alg", 1, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide, e6_parallel, "e6_symmetric.alg", 1, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide, tensor_serial, "a3sink_x_a3sink.alg", 2, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(decide, tensor_parallel, "a3sink_x_a3sink.alg", 2, true)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(type_a, q24_serial, 2, 4, false)->Unit(benchmark::kMillisecond)->Iterations(2);
BENCHMARK_CAPTURE(type_a, q24_parallel, 2, 4, true)->Unit(benchmark::kMillisecond)->Iterations(2);

BENCHMARK_MAIN();
