// Copyright 2026 The k3mw Authors
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

#include <benchmark/benchmark.h>

#include "k3mw/constructions/igusa_surfaces.hpp"
#include "k3mw/constructions/two_ivstar.hpp"
#include "k3mw/ellsurf/fibers.hpp"
#include "k3mw/genus2/point_count.hpp"

namespace {

using namespace k3mw;

const HParams kParams{make_rational(-1, 1), make_rational(1, 7), make_rational(-6, 7)};

void BM_IgusaClebsch(benchmark::State& state) {
  Genus2Curve curve = genus2_from_hparams(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(igusa_clebsch(curve));
}
BENCHMARK(BM_IgusaClebsch);

void BM_CountPoints(benchmark::State& state) {
  Genus2Curve curve = genus2_from_hparams(kParams);
  auto p = static_cast<std::uint64_t>(state.range(0));
  PrimeFieldCtx ctx = PrimeFieldCtx::with_extension(p);
  for (auto _ : state) benchmark::DoNotOptimize(count_points(curve, ctx, 2));
}
BENCHMARK(BM_CountPoints)->Arg(37)->Arg(101)->Arg(1009);

void BM_FrobeniusCharpoly(benchmark::State& state) {
  Genus2Curve curve = genus2_from_hparams(kParams);
  for (auto _ : state) benchmark::DoNotOptimize(frobenius_charpoly(curve, 41));
}
BENCHMARK(BM_FrobeniusCharpoly);

void BM_ClassifyG(benchmark::State& state) {
  IgusaClebsch ic = igusa_clebsch(genus2_from_hparams(kParams));
  WeierstrassSurface s = g_surface(ic, static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_fibers(s));
}
BENCHMARK(BM_ClassifyG)->DenseRange(1, 4);

void BM_ClassifyH(benchmark::State& state) {
  WeierstrassSurface s = h_surface(kParams, static_cast<long>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(classify_fibers(s));
}
BENCHMARK(BM_ClassifyH)->DenseRange(1, 3);

}  // namespace

BENCHMARK_MAIN();
