// Copyright 2026 The mirs Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.


#include <vector>

#include <benchmark/benchmark.h>

#include "mirs/channel.hpp"
#include "mirs/mobility.hpp"
#include "mirs/optimizer.hpp"
#include "mirs/rng.hpp"
#include "mirs/scenario.hpp"

namespace {

std::vector<mirs::Vec2> users_for(const mirs::ScenarioConfig& c) {
  mirs::Rng rng(mirs::derive_seed(c.seed, mirs::streams::kMobility));
  const auto trace = mirs::mobility::generate_trace(c, rng);
  const auto slot = trace.slot(trace.num_slots() - 1);
  return {slot.begin(), slot.end()};
}

void BM_LinkGains(benchmark::State& state) {
  mirs::ScenarioConfig c;
  c.num_users = state.range(0);
  const auto users = users_for(c);
  const mirs::channel::Placement p{{120, 140, 150}, {60, 70}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(mirs::channel::compute_link_gains(p, users, c));
  }
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_LinkGains)->Arg(10)->Arg(100);

void BM_Fitness(benchmark::State& state) {
  const mirs::ScenarioConfig c;
  const auto users = users_for(c);
  mirs::Rng rng(1);
  const auto genome = mirs::ga::random_genome(12, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(mirs::ga::fitness(genome, users, c));
  }
}
BENCHMARK(BM_Fitness);

void BM_OptimizeSlot(benchmark::State& state) {
  const mirs::ScenarioConfig c;
  const auto users = users_for(c);
  std::uint64_t seed = 0;
  for (auto _ : state) {
    mirs::Rng rng(seed++);
    benchmark::DoNotOptimize(mirs::ga::optimize_slot(users, c, {}, rng));
  }
}
BENCHMARK(BM_OptimizeSlot)->Unit(benchmark::kMillisecond);

void BM_Trace(benchmark::State& state) {
  const mirs::ScenarioConfig c;
  for (auto _ : state) {
    mirs::Rng rng(7);
    benchmark::DoNotOptimize(mirs::mobility::generate_trace(c, rng));
  }
}
BENCHMARK(BM_Trace)->Unit(benchmark::kMicrosecond);

}  // namespace
BENCHMARK_MAIN();
