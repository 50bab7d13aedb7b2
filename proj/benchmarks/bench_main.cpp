#include <benchmark/benchmark.h>

#include <random>

#include "parsmash/cohomology.hpp"
#include "parsmash/fixtures.hpp"
#include "parsmash/hochschild.hpp"
#include "parsmash/kpar.hpp"
#include "parsmash/spectral.hpp"

using namespace parsmash;

namespace {

Field field_for(int64_t p) { return p == 0 ? Field::rationals() : Field::prime(p); }

FiniteGroup group_for(int64_t n) {
  return n == 6 ? standard_group(GroupFamily::symmetric, 3) : standard_group(GroupFamily::cyclic, n);
}

// n x n with entries in -3..3, fixed seed
Matrix random_matrix(const Field& f, std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_int_distribution<int> d(-3, 3);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = f.from_int(d(rng));
  return m;
}

void BM_Rank(benchmark::State& st) {
  Field f = field_for(st.range(0));
  Matrix m = random_matrix(f, st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(rank(f, m));
}
BENCHMARK(BM_Rank)->ArgsProduct({{0, 2, 101}, {16, 64, 128}})->Unit(benchmark::kMillisecond);

void BM_BuildKpar(benchmark::State& st) {
  Field f = field_for(st.range(0));
  FiniteGroup g = group_for(st.range(1));
  for (auto _ : st) benchmark::DoNotOptimize(build_kpar(f, g).dim());
}
BENCHMARK(BM_BuildKpar)->ArgsProduct({{0, 2}, {2, 3, 4, 6}})->Unit(benchmark::kMillisecond);

void BM_HparB(benchmark::State& st) {
  Field f = field_for(st.range(0));
  Kpar k = build_kpar(f, group_for(st.range(1)));
  AlgModule b = b_module(k);
  HparOptions o;
  o.max_degree = st.range(2);
  for (auto _ : st) benchmark::DoNotOptimize(hpar(k, b, o));
}
BENCHMARK(BM_HparB)->Args({2, 2, 3})->Args({2, 3, 3})->Args({2, 4, 2})->Args({2, 6, 2})->Unit(benchmark::kMillisecond);

void BM_HomRegular(benchmark::State& st) {
  Kpar k = build_kpar(Field::prime(2), group_for(st.range(0)));
  AlgModule reg = regular_module(k.algebra());
  AlgModule b = b_module(k);
  for (auto _ : st) benchmark::DoNotOptimize(hom_dimension(b, reg));
}
BENCHMARK(BM_HomRegular)->Arg(3)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_HochschildSmash(benchmark::State& st) {
  Field f = field_for(st.range(0));
  Bimodule m = regular_bimodule(smash_product(kk_partial_z2(f)).algebra);
  HochschildOptions o;
  o.max_degree = st.range(1);
  for (auto _ : st) benchmark::DoNotOptimize(hochschild(m, o).dims);
}
BENCHMARK(BM_HochschildSmash)->ArgsProduct({{0, 2}, {2, 3}})->Unit(benchmark::kMillisecond);

void BM_SpectralDualNumbers(benchmark::State& st) {
  Field f = field_for(st.range(0));
  SmashContext c = make_smash_context(global_partial_action(dual_numbers_z2(f)));
  Bimodule m = regular_bimodule(c.s());
  for (auto _ : st) benchmark::DoNotOptimize(spectral_low_degree(c, m).f_dim);
}
BENCHMARK(BM_SpectralDualNumbers)->Arg(0)->Arg(3)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
