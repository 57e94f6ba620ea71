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

#include "umlsonic/acoustics/distance.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "umlsonic/error.hpp"

namespace umlsonic::acoustics {

std::array<double, kTimbreDims> timbre_coordinates(const FeatureVector& f) {
    // Bands more than 80 dB under the loudest one are clamped to that
    // relative floor, which keeps the shape independent of overall level.
    constexpr double kShapeRangeDb = 80.0;
    std::array<double, kMelBands> shape = f.mel_band_log_energies;
    const double loudest = *std::max_element(shape.begin(), shape.end());
    for (auto& v : shape) v = std::max(v, loudest - kShapeRangeDb);
    const double level = std::accumulate(shape.begin(), shape.end(), 0.0) / static_cast<double>(kMelBands);

    std::array<double, kTimbreDims> c{};
    for (std::size_t b = 0; b < kMelBands; ++b) c[b] = shape[b] - level;
    c[kMelBands] = f.spectral_centroid_hz;
    c[kMelBands + 1] = f.spectral_flatness;
    c[kMelBands + 2] = f.zero_crossing_rate;
    return c;
}

const std::array<std::string, kTimbreDims>& timbre_dimension_names() {
    static const std::array<std::string, kTimbreDims> names = [] {
        std::array<std::string, kTimbreDims> n;
        for (std::size_t b = 0; b < kMelBands; ++b) n[b] = "mel_shape_" + std::to_string(b);
        n[kMelBands] = "spectral_centroid_hz";
        n[kMelBands + 1] = "spectral_flatness";
        n[kMelBands + 2] = "zero_crossing_rate";
        return n;
    }();
    return names;
}

NormalizationStats NormalizationStats::from(std::span<const FeatureVector> features) {
    NormalizationStats s;
    if (features.empty()) {
        s.dropped.fill(true);
        return s;
    }
    const double n = static_cast<double>(features.size());
    std::vector<std::array<double, kTimbreDims>> coords;
    coords.reserve(features.size());
    for (const auto& f : features) coords.push_back(timbre_coordinates(f));

    for (std::size_t d = 0; d < kTimbreDims; ++d) {
        double mean = 0.0;
        for (const auto& c : coords) mean += c[d];
        mean /= n;
        double var = 0.0;
        for (const auto& c : coords) var += (c[d] - mean) * (c[d] - mean);
        const double sd = std::sqrt(var / n);
        s.mean[d] = mean;
        s.stddev[d] = sd;
        s.dropped[d] = !(sd > 1e-9 * std::max(1.0, std::abs(mean)));
    }
    return s;
}

std::vector<std::string> NormalizationStats::dropped_dimensions() const {
    std::vector<std::string> out;
    for (std::size_t d = 0; d < kTimbreDims; ++d)
        if (dropped[d]) out.push_back(timbre_dimension_names()[d]);
    return out;
}

double feature_distance(const FeatureVector& a, const FeatureVector& b, const NormalizationStats& norm) {
    const auto ca = timbre_coordinates(a);
    const auto cb = timbre_coordinates(b);
    double acc = 0.0;
    for (std::size_t d = 0; d < kTimbreDims; ++d) {
        if (norm.dropped[d]) continue;
        const double z = (ca[d] - cb[d]) / norm.stddev[d];
        acc += z * z;
    }
    return std::sqrt(acc);
}

DiscriminabilityMatrix discriminability_matrix(std::span<const audio::AudioBuffer> sounds, Execution mode) {
    if (sounds.size() < 2) throw InvalidArgument("discriminability_matrix: need at least two sounds");

    DiscriminabilityMatrix m;
    m.features.resize(sounds.size());
    for_each_index(sounds.size(), mode, [&](std::size_t i) {
        try {
            m.features[i] = extract_features(sounds[i]);
        } catch (const Error& e) {
            throw IndexedError(i, e.what());
        }
    });

    m.norm = NormalizationStats::from(m.features);

    const std::size_t n = sounds.size();
    m.distance.assign(n, std::vector<double>(n, 0.0));
    // Row i fills the upper triangle (i, j > i); the mirror is written after.
    for_each_index(n, mode, [&](std::size_t i) {
        for (std::size_t j = i + 1; j < n; ++j) m.distance[i][j] = feature_distance(m.features[i], m.features[j], m.norm);
    });
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) m.distance[j][i] = m.distance[i][j];
    return m;
}

}  // namespace umlsonic::acoustics
