// Copyright 2026 The HRI Toolkit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference kernel against the OpenMP kernel on synthetic corridors.

#include "hri/scoring.hpp"
#include "hri/scoring_kernels.hpp"

#include <benchmark/benchmark.h>

#include <random>

namespace
{

hri::AdequacyMatrix random_matrix(std::size_t segments)
{
  auto p = hri::make_uniform_corridor("bench", static_cast<double>(segments) / 10.0, 100.0, 0);
  std::mt19937_64 g(42);
  std::uniform_int_distribution<int> v(0, hri::kMaxAdequacy);
  for (auto & s : p.segments) {
    for (auto & x : s.values) {
      x = static_cast<hri::Adequacy>(v(g));
    }
  }
  return hri::to_adequacy_matrix(p);
}

template <void (*Kernel)(const hri::AdequacyMatrix &, std::span<const double>, std::span<double>)>
void run(benchmark::State & state)
{
  const auto m = random_matrix(static_cast<std::size_t>(state.range(0)));
  const auto w = hri::builtin_weight_table().group_weights(hri::AutomationLevelGroup::AuD);
  std::vector<double> out(m.rows);
  for (auto _ : state) {
    Kernel(m, w, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(m.rows));
}

void BM_Serial(benchmark::State & state) { run<hri::readiness_scores_serial>(state); }
void BM_Parallel(benchmark::State & state) { run<hri::readiness_scores_parallel>(state); }

void BM_ScoreCorridorD08Size(benchmark::State & state)
{
  auto p = hri::make_uniform_corridor("d08", 24.0, 100.0, 2);
  for (auto _ : state) {
    benchmark::DoNotOptimize(hri::score_corridor(p, hri::builtin_weight_table()));
  }
}

}  // namespace

BENCHMARK(BM_Serial)->Arg(240)->Arg(24000)->Arg(2400000);
BENCHMARK(BM_Parallel)->Arg(240)->Arg(24000)->Arg(2400000);
BENCHMARK(BM_ScoreCorridorD08Size);

BENCHMARK_MAIN();
