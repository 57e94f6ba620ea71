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

#ifndef UMLSONIC_AUDIO_BUFFER_HPP
#define UMLSONIC_AUDIO_BUFFER_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace umlsonic::audio {

inline constexpr int kDefaultSampleRate = 44100;

/// PCM container, one vector per channel, samples nominally in [-1, 1].
///
/// Mono and stereo only. All channels always have the same length; the
/// mutating accessors never change lengths, resize() does so for every
/// channel at once.
class AudioBuffer {
public:
    AudioBuffer() : AudioBuffer(1, 0, kDefaultSampleRate) {}
    AudioBuffer(int channels, std::size_t frames, int sample_rate = kDefaultSampleRate);

    static AudioBuffer mono(std::vector<double> samples, int sample_rate = kDefaultSampleRate);
    static AudioBuffer stereo(std::vector<double> left, std::vector<double> right,
                              int sample_rate = kDefaultSampleRate);

    int channel_count() const noexcept { return static_cast<int>(channels_.size()); }
    int sample_rate() const noexcept { return sample_rate_; }
    std::size_t frames() const noexcept { return channels_.front().size(); }
    bool empty() const noexcept { return frames() == 0; }
    double duration_s() const noexcept {
        return static_cast<double>(frames()) / static_cast<double>(sample_rate_);
    }

    std::span<double> channel(int c) { return channels_.at(static_cast<std::size_t>(c)); }
    std::span<const double> channel(int c) const { return channels_.at(static_cast<std::size_t>(c)); }

    void resize(std::size_t frames);

    double peak() const noexcept;
    double rms() const noexcept;

    // Average of the channels.
    AudioBuffer to_mono() const;
    // Mono is duplicated to both sides; stereo is returned unchanged.
    AudioBuffer to_stereo() const;

    bool operator==(const AudioBuffer&) const = default;

private:
    int sample_rate_;
    std::vector<std::vector<double>> channels_;
};

std::size_t seconds_to_frames(double seconds, int sample_rate);

double db_to_gain(double db);
double gain_to_db(double gain);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_BUFFER_HPP
