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

#ifndef UMLSONIC_ACOUSTICS_DISTANCE_HPP
#define UMLSONIC_ACOUSTICS_DISTANCE_HPP

#include <array>
#include <span>
#include <string>
#include <vector>

#include "umlsonic/acoustics/features.hpp"
#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/parallel.hpp"

namespace umlsonic::acoustics {

// Coordinates the distance is computed in: the 13 mel energies with their
// per-sound mean removed (spectral shape), then centroid, flatness and
// zero-crossing rate. Overall level (the mel mean and rms) is left out so
// that a louder copy of a sound is not a different sound.
inline constexpr std::size_t kTimbreDims = kMelBands + 3;

std::array<double, kTimbreDims> timbre_coordinates(const FeatureVector& f);
const std::array<std::string, kTimbreDims>& timbre_dimension_names();

/// Per-dimension mean and population standard deviation over a set of
/// sounds. Dimensions whose spread is (numerically) zero are dropped.
struct NormalizationStats {
    std::array<double, kTimbreDims> mean{};
    std::array<double, kTimbreDims> stddev{};
    std::array<bool, kTimbreDims> dropped{};

    static NormalizationStats from(std::span<const FeatureVector> features);
    std::vector<std::string> dropped_dimensions() const;
};

/// Euclidean distance between z-scored timbre coordinates. A pseudometric:
/// symmetric, zero on identical vectors, obeys the triangle inequality.
double feature_distance(const FeatureVector& a, const FeatureVector& b, const NormalizationStats& norm);

struct DiscriminabilityMatrix {
    std::vector<std::vector<double>> distance;
    std::vector<FeatureVector> features;
    NormalizationStats norm;

    std::size_t size() const noexcept { return distance.size(); }
};

/// Pairwise distances with normalization taken from the sounds themselves.
/// Extraction runs per sound (OpenMP in parallel mode); failures are
/// rethrown as IndexedError naming the sound. Both modes are bit-identical.
DiscriminabilityMatrix discriminability_matrix(std::span<const audio::AudioBuffer> sounds,
                                               Execution mode = Execution::parallel);

}  // namespace umlsonic::acoustics

#endif  // UMLSONIC_ACOUSTICS_DISTANCE_HPP
