#include <benchmark/benchmark.h>

#include <random>

#include "tsa/blobdetect.hpp"
#include "tsa/framegrid.hpp"
#include "tsa/pipeline.hpp"
#include "tsa/synth.hpp"

namespace {

using namespace tsa;

ThermalFrame sample_frame() {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> amb(20.0, 0.3);
  ThermalFrame f;
  for (auto& v : f.cells) v = amb(rng);
  for (int r = 4; r <= 6; ++r)
    for (int c = 3; c <= 5; ++c) f.at(r, c) = 34.0;
  return f;
}

void BM_Otsu(benchmark::State& state) {
  const auto gray = to_gray(sample_frame());
  for (auto _ : state) benchmark::DoNotOptimize(otsu_threshold(gray));
}
BENCHMARK(BM_Otsu);

void BM_ConnectedComponents(benchmark::State& state) {
  std::mt19937_64 rng(2);
  BinaryFrame mask(kGridCols, kGridRows);
  std::bernoulli_distribution on(0.4);
  for (auto& v : mask.warm) v = on(rng) ? 1 : 0;
  for (auto _ : state) benchmark::DoNotOptimize(connected_components(mask, 1));
}
BENCHMARK(BM_ConnectedComponents);

void BM_Detect(benchmark::State& state) {
  const auto frame = sample_frame();
  const DetectConfig cfg;
  for (auto _ : state) benchmark::DoNotOptimize(detect(frame, cfg));
}
BENCHMARK(BM_Detect);

void BM_Interpolate(benchmark::State& state) {
  const auto gray = to_gray(sample_frame());
  for (auto _ : state) benchmark::DoNotOptimize(interpolate(gray));
}
BENCHMARK(BM_Interpolate);

void BM_ProcessDay(benchmark::State& state) {
  Scenario s = make_clean_scenario(1, 1);
  s.heater = default_heater();
  const auto em = emit(s);
  const auto cfg = s.zone_config();
  PipelineOptions opt;
  opt.zones = cfg.zones;
  opt.static_zones = cfg.static_zones;
  for (auto _ : state) benchmark::DoNotOptimize(process_day(s.start_date, em.series.samples, opt));
}
BENCHMARK(BM_ProcessDay)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
