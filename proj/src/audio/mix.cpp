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

#include "umlsonic/audio/mix.hpp"

#include <algorithm>

#include "umlsonic/audio/effects.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::audio {

AudioBuffer sum_at_offsets(std::span<const Placement> parts) {
    if (parts.empty()) return AudioBuffer{};
    const int sr = parts.front().buffer.sample_rate();
    int channels = 1;
    std::size_t len = 0;
    for (const auto& p : parts) {
        if (p.buffer.sample_rate() != sr) throw InvalidArgument("mix: sample rates differ");
        if (!(p.start_offset_s >= 0.0)) throw InvalidArgument("mix: negative start offset");
        channels = std::max(channels, p.buffer.channel_count());
        len = std::max(len, seconds_to_frames(p.start_offset_s, sr) + p.buffer.frames());
    }

    AudioBuffer out(channels, len, sr);
    for (const auto& p : parts) {
        const auto start = seconds_to_frames(p.start_offset_s, sr);
        for (int c = 0; c < channels; ++c) {
            auto src = p.buffer.channel(std::min(c, p.buffer.channel_count() - 1));
            auto dst = out.channel(c);
            for (std::size_t i = 0; i < src.size(); ++i) dst[start + i] += src[i];
        }
    }
    return out;
}

AudioBuffer mix(std::span<const Placement> parts) { return soft_limit(sum_at_offsets(parts)); }

AudioBuffer normalize(const AudioBuffer& buf, double target_peak_db) {
    const double peak = buf.peak();
    if (peak == 0.0) throw CannotNormalize("cannot normalize a silent buffer");
    const double g = db_to_gain(target_peak_db) / peak;
    AudioBuffer out = buf;
    for (int c = 0; c < out.channel_count(); ++c)
        for (auto& s : out.channel(c)) s *= g;
    return out;
}

}  // namespace umlsonic::audio
