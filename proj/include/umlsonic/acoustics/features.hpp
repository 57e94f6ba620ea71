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

#ifndef UMLSONIC_ACOUSTICS_FEATURES_HPP
#define UMLSONIC_ACOUSTICS_FEATURES_HPP

#include <array>
#include <cstddef>

#include "umlsonic/audio/buffer.hpp"

namespace umlsonic::acoustics {

inline constexpr std::size_t kMelBands = 13;
inline constexpr std::size_t kFeatureDims = kMelBands + 4;

inline constexpr std::size_t kFrameSize = 2048;
inline constexpr std::size_t kHopSize = 512;
inline constexpr double kMelMaxHz = 8000.0;
inline constexpr double kSilenceFloorDb = -60.0;
inline constexpr double kMinDurationS = 0.05;

/// Timbre summary of one sound, averaged over its non-silent frames.
struct FeatureVector {
    std::array<double, kMelBands> mel_band_log_energies{};  // dB
    double spectral_centroid_hz = 0.0;
    double spectral_flatness = 0.0;   // [0, 1]
    double zero_crossing_rate = 0.0;  // crossings per sample
    double rms = 0.0;

    std::array<double, kFeatureDims> as_array() const;

    bool operator==(const FeatureVector&) const = default;
};

/// Hann-windowed 2048/512 analysis. Stereo input is averaged to mono.
/// Frames below -60 dBFS RMS are skipped (all frames are used when every
/// frame is that quiet). Throws InvalidArgument below 0.05 s.
FeatureVector extract_features(const audio::AudioBuffer& buf);

}  // namespace umlsonic::acoustics

#endif  // UMLSONIC_ACOUSTICS_FEATURES_HPP
