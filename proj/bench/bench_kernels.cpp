// Copyright 2026 The umlsonic Authors
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

// Serial reference against the OpenMP kernels. Both paths give identical
// results (asserted in the unit tests); this only measures them.

#include <benchmark/benchmark.h>

#include <vector>

#include "umlsonic/acoustics/distance.hpp"
#include "umlsonic/catalogue/builtin.hpp"
#include "umlsonic/catalogue/realize.hpp"
#include "umlsonic/principles/linter.hpp"
#include "umlsonic/sonifier/sonifier.hpp"
#include "umlsonic/uml/parser.hpp"

using namespace umlsonic;

namespace {

Execution mode_of(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

const std::vector<audio::AudioBuffer>& earcons() {
    static const auto sounds = [] {
        std::vector<audio::AudioBuffer> out;
        for (const auto& cat : {catalogue::builtin_proposed(), catalogue::builtin_baseline()}) {
            for (const auto& b : cat.bindings) out.push_back(catalogue::realize_earcon(b.recipe, cat).audio);
        }
        return out;
    }();
    return sounds;
}

void BM_DiscriminabilityMatrix(benchmark::State& state) {
    const auto& sounds = earcons();
    for (auto _ : state) benchmark::DoNotOptimize(acoustics::discriminability_matrix(sounds, mode_of(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(sounds.size()));
}

void BM_RenderTimeline(benchmark::State& state) {
    static const auto model = uml::load_diagram(UMLSONIC_FIXTURES "/library.uml");
    static const auto cat = catalogue::builtin_proposed();
    const sonifier::RenderProfile profile;
    const auto tl = sonifier::plan_walkthrough(model, cat, profile);
    for (auto _ : state) benchmark::DoNotOptimize(sonifier::render_timeline(tl, cat, profile, mode_of(state)));
    state.SetItemsProcessed(state.iterations() * static_cast<long>(tl.events.size()));
}

void BM_ValidateBaseline(benchmark::State& state) {
    const auto cat = catalogue::builtin_baseline();
    principles::LintConfig cfg;
    cfg.execution = mode_of(state);
    for (auto _ : state) benchmark::DoNotOptimize(principles::validate(cat, cfg));
}

}  // namespace

BENCHMARK(BM_DiscriminabilityMatrix)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RenderTimeline)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ValidateBaseline)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
