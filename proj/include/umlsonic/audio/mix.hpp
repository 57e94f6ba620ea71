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

#ifndef UMLSONIC_AUDIO_MIX_HPP
#define UMLSONIC_AUDIO_MIX_HPP

#include <span>

#include "umlsonic/audio/buffer.hpp"

namespace umlsonic::audio {

struct Placement {
    AudioBuffer buffer;
    double start_offset_s = 0.0;
};

// Plain sample-wise sum. The result is stereo if any input is stereo.
// Throws InvalidArgument on mixed sample rates or negative offsets.
AudioBuffer sum_at_offsets(std::span<const Placement> parts);

// sum_at_offsets() followed by the soft limiter, so the peak stays <= 1.
AudioBuffer mix(std::span<const Placement> parts);

// Scales to the given peak in dBFS. Throws CannotNormalize on silence.
AudioBuffer normalize(const AudioBuffer& buf, double target_peak_db);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_MIX_HPP
