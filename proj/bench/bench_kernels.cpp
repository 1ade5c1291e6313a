// Serial against OpenMP versions of the hot loops.

#include <random>

#include <benchmark/benchmark.h>

#include "stronglie/conjecture.hpp"
#include "stronglie/kernels/echelon.hpp"
#include "stronglie/liering.hpp"
#include "stronglie/nilquot.hpp"

using namespace stronglie;

namespace {

Exec exec_of(const benchmark::State &state) {
  return state.range(0) ? Exec::parallel : Exec::serial;
}

void BM_Echelon(benchmark::State &state) {
  const PrimeField F(3);
  const std::size_t rows = 4000, cols = 400;
  std::mt19937_64 rng(1);
  std::vector<Residue> m(rows * cols, 0);
  for (auto &x : m)
    if (rng() % 20 == 0)
      x = 1 + rng() % 2;
  for (auto _ : state) {
    kernels::Echelon e(F, cols);
    e.insert_rows(m, rows, exec_of(state));
    benchmark::DoNotOptimize(e.rank());
  }
}
BENCHMARK(BM_Echelon)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_IdealBasisK5(benchmark::State &state) {
  const auto rs = paper_relation_set(5, 3, Which::all);
  for (auto _ : state) {
    IdealBasis B(rs, Multiweight{4, 4}, false, exec_of(state));
    benchmark::DoNotOptimize(B.rank());
  }
}
BENCHMARK(BM_IdealBasisK5)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_QuotientDims(benchmark::State &state) {
  const auto rs = paper_relation_set(5, 3, Which::all);
  for (auto _ : state)
    benchmark::DoNotOptimize(quotient_dimensions(rs, 8, exec_of(state)));
}
BENCHMARK(BM_QuotientDims)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_VariantII(benchmark::State &state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(check_variant_II(4, 3, {true, exec_of(state)}).passed());
}
BENCHMARK(BM_VariantII)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_OracleIdentity(benchmark::State &state) {
  const auto E = extend_scalars(heisenberg(3), ext_field_gf(3, 2, find_irreducible(PrimeField(3), 2)));
  Quantification q;
  q.exec = exec_of(state);
  for (auto _ : state)
    benchmark::DoNotOptimize(check_identity_I_on_ring(E, 2, q).holds);
}
BENCHMARK(BM_OracleIdentity)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
