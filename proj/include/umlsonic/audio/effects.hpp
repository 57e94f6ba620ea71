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

#ifndef UMLSONIC_AUDIO_EFFECTS_HPP
#define UMLSONIC_AUDIO_EFFECTS_HPP

#include <array>
#include <utility>

#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/audio/variables.hpp"

namespace umlsonic::audio {

struct PanGains {
    double left;
    double right;
};

// Equal-power law: theta = (pan + 1) * pi / 4, gains (cos, sin).
PanGains pan_gains(double pan);

// Resamples by 2^(semitones/12); length becomes round(len / rate).
AudioBuffer pitch_shift(const AudioBuffer& in, double semitones);

// Keeps the first round(len * scale) frames, zero-padding when longer.
AudioBuffer scale_duration(const AudioBuffer& in, double scale);

// Linear attack over attack_s, then exponential decay reaching -60 dB
// decay_s after the attack ends.
AudioBuffer apply_envelope(const AudioBuffer& in, double attack_s, double decay_s);

AudioBuffer apply_gain(const AudioBuffer& in, double gain_db);

/// Schroeder comb-bank reverb.
struct ReverbSettings {
    std::array<double, 4> comb_delays_ms{29.7, 37.1, 41.1, 43.7};
    double feedback = 0.75;
    double tail_s = 0.5;     // appended so the decay is audible
    double fade_out_s = 0.05;
};

// w = min(0.15 * depth, 0.6)
double reverb_wet_mix(int depth);

// depth 0 returns the input unchanged (same samples, same length).
AudioBuffer apply_reverb(const AudioBuffer& in, int depth, const ReverbSettings& settings = {});

// Downmixes to mono, then places it with pan_gains().
AudioBuffer pan_to_stereo(const AudioBuffer& in, double pan);

/// pitch -> duration -> envelope -> gain -> reverb -> pan; always returns
/// stereo.
AudioBuffer apply_variables(const AudioBuffer& in, const AuditoryVariables& v);

// Soft knee: samples with |x| <= knee pass through; above it they follow
// knee + (ceiling - knee) * tanh((|x| - knee) / (ceiling - knee)), which stays
// below ceiling.
double soft_limit_sample(double x, double knee = 0.99, double ceiling = 1.0);
AudioBuffer soft_limit(const AudioBuffer& in, double knee = 0.99, double ceiling = 1.0);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_EFFECTS_HPP
