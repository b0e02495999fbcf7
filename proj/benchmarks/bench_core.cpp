#include <benchmark/benchmark.h>

#include "qmahler/eta_num.hpp"
#include "qmahler/hfun.hpp"
#include "qmahler/hyper.hpp"
#include "qmahler/lfun.hpp"
#include "qmahler/mahler.hpp"
#include "qmahler/qseries.hpp"

using namespace qm;

static void BM_EtaNum(benchmark::State& state) {
  double h = 0.05;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qseries::eta_num(h));
    h = h < 5 ? h * 1.01 : 0.05;
  }
}
BENCHMARK(BM_EtaNum);

static void BM_Hq(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hfun::H_q(5.0 / 3));
}
BENCHMARK(BM_Hq)->Unit(benchmark::kMillisecond);

static void BM_FLattice(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(lfun::F_lattice(qseries::Exponent(3), qseries::Exponent(5)));
}
BENCHMARK(BM_FLattice)->Unit(benchmark::kMillisecond);

static void BM_Mahler2Torus(benchmark::State& state) {
  const auto p = mahler::parse_poly("1+x+1/x+y+1/y");
  for (auto _ : state) benchmark::DoNotOptimize(mahler::mahler_2var(p));
}
BENCHMARK(BM_Mahler2Torus)->Unit(benchmark::kMillisecond);

static void BM_Mahler2Knot(benchmark::State& state) {
  const auto p = mahler::knot_a_poly();
  for (auto _ : state) benchmark::DoNotOptimize(mahler::mahler_2var(p));
}
BENCHMARK(BM_Mahler2Knot)->Unit(benchmark::kMillisecond);

static void BM_CubicIdentity(benchmark::State& state) {
  const auto order = static_cast<std::int64_t>(state.range(0));
  for (auto _ : state) {
    const auto a = qseries::a_at(qseries::Exponent(1), qseries::Exponent(order));
    const auto b = qseries::b_at(qseries::Exponent(1), qseries::Exponent(order));
    const auto c = qseries::c_at(qseries::Exponent(1), qseries::Exponent(order));
    benchmark::DoNotOptimize(qseries::assert_series_identity(a.pow(3), b.pow(3) + c.pow(3), qseries::Exponent(order)));
  }
}
BENCHMARK(BM_CubicIdentity)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

static void BM_Pfq3F2(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(hyper::pfq({{0.5, 0.5, 0.5}, {1.0, 1.5}, 1.0 / 16}));
}
BENCHMARK(BM_Pfq3F2);
BENCHMARK_MAIN();
