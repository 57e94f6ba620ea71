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

#include "umlsonic/audio/buffer.hpp"

#include <algorithm>
#include <cmath>

#include "umlsonic/audio/variables.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::audio {

AudioBuffer::AudioBuffer(int channels, std::size_t frames, int sample_rate)
    : sample_rate_(sample_rate) {
    if (channels != 1 && channels != 2) throw InvalidArgument("AudioBuffer: channels must be 1 or 2");
    if (sample_rate <= 0) throw InvalidArgument("AudioBuffer: sample rate must be positive");
    channels_.assign(static_cast<std::size_t>(channels), std::vector<double>(frames, 0.0));
}

AudioBuffer AudioBuffer::mono(std::vector<double> samples, int sample_rate) {
    AudioBuffer out(1, 0, sample_rate);
    out.channels_[0] = std::move(samples);
    return out;
}

AudioBuffer AudioBuffer::stereo(std::vector<double> left, std::vector<double> right, int sample_rate) {
    if (left.size() != right.size()) throw InvalidArgument("AudioBuffer: channel lengths differ");
    AudioBuffer out(2, 0, sample_rate);
    out.channels_[0] = std::move(left);
    out.channels_[1] = std::move(right);
    return out;
}

void AudioBuffer::resize(std::size_t frames) {
    for (auto& ch : channels_) ch.resize(frames, 0.0);
}

double AudioBuffer::peak() const noexcept {
    double p = 0.0;
    for (const auto& ch : channels_)
        for (double s : ch) p = std::max(p, std::abs(s));
    return p;
}

double AudioBuffer::rms() const noexcept {
    double acc = 0.0;
    std::size_t n = 0;
    for (const auto& ch : channels_) {
        for (double s : ch) acc += s * s;
        n += ch.size();
    }
    return n == 0 ? 0.0 : std::sqrt(acc / static_cast<double>(n));
}

AudioBuffer AudioBuffer::to_mono() const {
    if (channel_count() == 1) return *this;
    std::vector<double> m(frames());
    for (std::size_t i = 0; i < m.size(); ++i) m[i] = 0.5 * (channels_[0][i] + channels_[1][i]);
    return mono(std::move(m), sample_rate_);
}

AudioBuffer AudioBuffer::to_stereo() const {
    if (channel_count() == 2) return *this;
    return stereo(channels_[0], channels_[0], sample_rate_);
}

std::size_t seconds_to_frames(double seconds, int sample_rate) {
    if (seconds <= 0.0) return 0;
    return static_cast<std::size_t>(std::llround(seconds * static_cast<double>(sample_rate)));
}

double db_to_gain(double db) { return std::pow(10.0, db / 20.0); }

double gain_to_db(double gain) { return 20.0 * std::log10(gain); }

void validate(const AuditoryVariables& v) {
    if (!(v.pan >= -1.0 && v.pan <= 1.0)) throw InvalidArgument("pan must lie in [-1, 1]");
    if (!(v.duration_scale > 0.0)) throw InvalidArgument("duration_scale must be positive");
    if (!(v.attack_s >= 0.0) || !(v.decay_s >= 0.0))
        throw InvalidArgument("attack and decay times must be non-negative");
    if (v.reverb_depth < 0) throw InvalidArgument("reverb_depth must be non-negative");
    if (!(v.start_offset_s >= 0.0)) throw InvalidArgument("start_offset_s must be non-negative");
    if (!std::isfinite(v.loudness_db) || !std::isfinite(v.pitch_semitones))
        throw InvalidArgument("loudness and pitch must be finite");
}

}  // namespace umlsonic::audio
