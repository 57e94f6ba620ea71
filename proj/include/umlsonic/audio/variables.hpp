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

#ifndef UMLSONIC_AUDIO_VARIABLES_HPP
#define UMLSONIC_AUDIO_VARIABLES_HPP

namespace umlsonic::audio {

/// The auditory variables one cue can be shaped with. Timbre is not here: it
/// lives in the asset. Order and rate of change are expressed by placing
/// components at start_offset_s.
struct AuditoryVariables {
    double loudness_db = 0.0;
    double pitch_semitones = 0.0;
    double pan = 0.0;             // -1 left .. +1 right
    double duration_scale = 1.0;  // truncates or pads the tail, never stretches
    double attack_s = 0.0;
    double decay_s = 0.0;         // time to reach -60 dB; 0 = no decay
    int reverb_depth = 0;
    double start_offset_s = 0.0;

    bool operator==(const AuditoryVariables&) const = default;
};

// Throws InvalidArgument when an invariant (pan range, positive scale,
// non-negative times and depth) is broken.
void validate(const AuditoryVariables& v);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_VARIABLES_HPP
