#include <cstdint>
#include <vector>

#include <benchmark/benchmark.h>

#include "derange/bijection.hpp"
#include "derange/enumerate.hpp"
#include "derange/verify.hpp"

using namespace derange;

namespace {

std::vector<CycleForm> class_forms(int n, PermClass cls) {
  std::vector<CycleForm> out;
  for (const Permutation& p : collect_class(n, cls)) {
    out.push_back(to_cycle_form(p));
  }
  return out;
}

}  // namespace

static void BM_map(benchmark::State& state) {
  const auto forms = class_forms(static_cast<int>(state.range(0)),
                                 PermClass::DStar);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi(forms[i]));
    if (++i == forms.size()) i = 0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_map)->Arg(5)->Arg(7);

static void BM_unmap(benchmark::State& state) {
  const auto forms = class_forms(static_cast<int>(state.range(0)),
                                 PermClass::FStar);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_inverse(forms[i]));
    if (++i == forms.size()) i = 0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_unmap)->Arg(5)->Arg(7);

static void BM_round_trip(benchmark::State& state) {
  const auto forms = class_forms(static_cast<int>(state.range(0)),
                                 PermClass::DStar);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(psi_inverse(psi(forms[i])));
    if (++i == forms.size()) i = 0;
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_round_trip)->Arg(6);

static void BM_stream_derangements(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    ClassStream stream(n, PermClass::D);
    std::uint64_t count = 0;
    while (stream.next()) ++count;
    benchmark::DoNotOptimize(count);
  }
}
BENCHMARK(BM_stream_derangements)->Arg(6)->Arg(7)->Arg(8);

static void BM_verify(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int jobs = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_n(n, jobs));
  }
}
BENCHMARK(BM_verify)->Args({6, 1})->Args({7, 1})->Args({7, 4});

static void BM_recurrence(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(count_d_rec1(n));
  }
}
BENCHMARK(BM_recurrence)->Arg(30)->Arg(300);

BENCHMARK_MAIN();
