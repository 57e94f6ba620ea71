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

#ifndef UMLSONIC_AUDIO_SYNTH_HPP
#define UMLSONIC_AUDIO_SYNTH_HPP

#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "umlsonic/audio/buffer.hpp"

namespace umlsonic::audio {

enum class Generator { sine, square, noise, filtered_noise, chirp, pluck };

std::string_view to_string(Generator g);
std::optional<Generator> generator_from_string(std::string_view name);

/// Procedural description of a sound asset.
///
/// Generator-specific params:
///   sine            harmonics (count of 1/n overtones), vibrato_hz, vibrato_semitones
///   square          -
///   filtered_noise  cutoff_hz (4th-order low-pass), highpass_hz (2nd-order high-pass)
///   chirp           end_hz (exponential sweep from base_freq_hz)
///   pluck           damping (0..1, default 0.5)
/// Modifiers accepted by every generator:
///   amp             output peak (default 0.8)
///   seed            noise seed (default 1)
///   am_hz, am_depth amplitude modulation
///   pulse_hz, pulse_duty   gate into repeated bursts; each burst restarts decay_per_s
///   decay_per_s     exponential amplitude decay rate
///   noise_mix, noise_cutoff_hz   blend of a low-passed noise layer
struct SynthSpec {
    Generator generator = Generator::sine;
    double base_freq_hz = 440.0;
    std::map<std::string, double> params;

    double param(const std::string& key, double fallback) const;

    bool operator==(const SynthSpec&) const = default;
};

/// Mono buffer of round(duration_s * sample_rate) samples with peak <= 1.
/// Deterministic for a given spec.
AudioBuffer synth(const SynthSpec& spec, double duration_s, int sample_rate = kDefaultSampleRate);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_SYNTH_HPP
