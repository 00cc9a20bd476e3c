#include <benchmark/benchmark.h>

#include "sl2c/design_builder.hpp"
#include "sl2c/kernels.hpp"
#include "sl2c/verification.hpp"

namespace {

const sl2c::SL2CDesign& design_for(int t) {
  static const sl2c::SL2CDesign d2 = sl2c::build_sl2c_design(2, sl2c::Variant::Standard);
  static const sl2c::SL2CDesign d3 = sl2c::build_sl2c_design(3, sl2c::Variant::Standard);
  return t == 2 ? d2 : d3;
}

sl2c::CVec probe(int t) {
  return sl2c::make_probes(std::size_t{1} << (2 * t), 1, 7).front().v;
}

void BM_Serial(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const auto& d = design_for(t);
  const auto v = probe(t);
  for (auto _ : state) benchmark::DoNotOptimize(sl2c::kernels::serial::weighted_tensor_sum(d.elements, t, v));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(d.elements.size()));
}

void BM_Blocked(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const auto& d = design_for(t);
  const auto v = probe(t);
  for (auto _ : state) benchmark::DoNotOptimize(sl2c::kernels::weighted_tensor_sum(d.elements, t, v));
  state.SetItemsProcessed(state.iterations() * static_cast<long>(d.elements.size()));
}

void BM_BlockedBatch10(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  const auto& d = design_for(t);
  const auto probes = sl2c::make_probes(std::size_t{1} << (2 * t), 10, 7);
  sl2c::CVec packed(probes.front().v.size() * 10);
  for (std::size_t p = 0; p < 10; ++p)
    for (std::size_t k = 0; k < probes[p].v.size(); ++k) packed[k * 10 + p] = probes[p].v[k];
  for (auto _ : state)
    benchmark::DoNotOptimize(sl2c::kernels::weighted_tensor_sum_batch(d.elements, t, packed, 10));
  state.SetItemsProcessed(state.iterations() * 10 * static_cast<long>(d.elements.size()));
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Blocked)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_BlockedBatch10)->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
