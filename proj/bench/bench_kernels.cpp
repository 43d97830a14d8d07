// Serial vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include <vector>

#include "extbinom/congruences.hpp"
#include "extbinom/exact.hpp"
#include "extbinom/kernels.hpp"

using namespace extbinom;
using kernels::Exec;

namespace {

const WeightSpec kWeights = WeightSpec::table({{0, 3}, {1, 2}, {2, 1}});

void BM_triangle(benchmark::State& state, bool parallel) {
  auto k = static_cast<std::uint64_t>(state.range(0));
  for (auto _ : state) {
    auto t = parallel ? triangle(kWeights, k, 2 * k)
                      : triangle_serial(kWeights, k, 2 * k);
    benchmark::DoNotOptimize(t.at(k, k));
  }
}

void BM_next_row(benchmark::State& state, Exec exec) {
  auto width = static_cast<std::size_t>(state.range(0));
  auto id = WeightSpec::identity();
  auto prev = ext_binom_row(width / 8, id, width);
  auto points = support_points(id, width);
  std::vector<Natural> out(width + 1);
  for (auto _ : state) {
    kernels::next_row(prev, points, out, exec);
    benchmark::DoNotOptimize(out.back());
  }
}

void BM_truncated_power(benchmark::State& state, Exec exec) {
  auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Natural> base{3, 2, 1};
  for (auto _ : state) {
    auto row = kernels::truncated_power(base, 4 * n, n, exec);
    benchmark::DoNotOptimize(row.back());
  }
}

void BM_sweep(benchmark::State& state, bool parallel) {
  auto plan = desk_plan(TheoremId::Divisibility);
  for (auto _ : state) {
    auto s = parallel ? sweep(TheoremId::Divisibility, plan.ranges, plan.corpus)
                      : sweep_serial(TheoremId::Divisibility, plan.ranges,
                                     plan.corpus);
    benchmark::DoNotOptimize(s.total_cases);
  }
}

}  // namespace

BENCHMARK_CAPTURE(BM_triangle, serial, false)->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_triangle, parallel, true)->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_next_row, serial, Exec::Serial)->Arg(256)->Arg(2048);
BENCHMARK_CAPTURE(BM_next_row, parallel, Exec::Parallel)->Arg(256)->Arg(2048);
BENCHMARK_CAPTURE(BM_truncated_power, serial, Exec::Serial)->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_truncated_power, parallel, Exec::Parallel)->Arg(100)->Arg(400);
BENCHMARK_CAPTURE(BM_sweep, serial, false)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_sweep, parallel, true)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
