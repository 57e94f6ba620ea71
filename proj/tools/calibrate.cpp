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

// Prints the pairwise timbre distances of a catalogue's earcons, the
// smallest pair, and how the pairs fall around a threshold. Used to tune the
// procedural stand-ins so same-family sounds land below it and everything
// else above.
//
//   umlsonic-calibrate [catalogue-ref ...] [--tau 1.0]

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <string>
#include <vector>

#include "umlsonic/acoustics/distance.hpp"
#include "umlsonic/catalogue/manifest.hpp"
#include "umlsonic/catalogue/realize.hpp"

namespace {

void report(const std::string& ref, double tau) {
    using namespace umlsonic;
    const auto cat = catalogue::load_catalogue(ref);
    std::vector<audio::AudioBuffer> sounds;
    for (const auto& b : cat.bindings) sounds.push_back(catalogue::realize_earcon(b.recipe, cat).audio);
    const auto m = acoustics::discriminability_matrix(sounds);

    std::printf("%s (%zu earcons, tau %.2f)\n", ref.c_str(), sounds.size(), tau);
    std::printf("%-18s", "");
    for (std::size_t j = 0; j < m.size(); ++j) std::printf("%6.6s", cat.bindings[j].concept_id.c_str());
    std::printf("\n");
    std::size_t below = 0;
    double min_d = 1e300;
    std::pair<std::size_t, std::size_t> argmin{0, 0};
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::printf("%-18s", cat.bindings[i].concept_id.c_str());
        for (std::size_t j = 0; j < m.size(); ++j) {
            std::printf("%6.2f", m.distance[i][j]);
            if (j > i) {
                if (m.distance[i][j] < tau) ++below;
                if (m.distance[i][j] < min_d) min_d = m.distance[i][j], argmin = {i, j};
            }
        }
        std::printf("\n");
    }
    std::printf("closest pair: %s / %s = %.3f; pairs below tau: %zu\n\n", cat.bindings[argmin.first].concept_id.c_str(),
                cat.bindings[argmin.second].concept_id.c_str(), min_d, below);
}

}  // namespace

int main(int argc, char** argv) {
    double tau = 1.0;
    std::vector<std::string> refs;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--tau" && i + 1 < argc) tau = std::atof(argv[++i]);
        else refs.push_back(a);
    }
    if (refs.empty()) refs = {"builtin:proposed", "builtin:baseline"};
    try {
        for (const auto& r : refs) report(r, tau);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 1;
    }
    return 0;
}
