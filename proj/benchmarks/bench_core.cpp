#include <benchmark/benchmark.h>

#include "cofrob/frobenius.hpp"
#include "cofrob/zoo.hpp"

using namespace cofrob;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime(5);

void bm_kernel(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  Coalgebra c = zoo::matrix_coalgebra(n, Q);
  Matrix w = omega(regular_comodule(c, Side::right),
                   regular_comodule(c, Side::left));
  for (auto _ : state) benchmark::DoNotOptimize(w.kernel());
}

void bm_cotensor(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CoalgebraMorphism lam =
      zoo::direct_sum_coring(zoo::dual_numbers(Q), n).lambda;
  for (auto _ : state) benchmark::DoNotOptimize(extension_cotensor(lam));
}

void bm_check_dual_route(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CoalgebraMorphism lam =
      zoo::direct_sum_coring(zoo::dual_numbers(Q), n).lambda;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_frobenius_extension(lam, {}));
}

void bm_check_primal_route(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CoalgebraMorphism lam =
      zoo::direct_sum_coring(zoo::dual_numbers(Q), n).lambda;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_frobenius_extension_primal(lam, {}));
}

void bm_check_prime_field(benchmark::State& state) {
  std::size_t n = static_cast<std::size_t>(state.range(0));
  CoalgebraMorphism lam =
      zoo::direct_sum_coring(zoo::dual_numbers(F5), n).lambda;
  for (auto _ : state)
    benchmark::DoNotOptimize(check_frobenius_extension(lam, {}));
}

BENCHMARK(bm_kernel)->Arg(2)->Arg(3);
BENCHMARK(bm_cotensor)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_check_dual_route)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_check_primal_route)->Arg(1)->Arg(2)->Arg(3);
BENCHMARK(bm_check_prime_field)->Arg(1)->Arg(2);

}  // namespace

BENCHMARK_MAIN();
