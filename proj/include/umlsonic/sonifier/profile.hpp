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

#ifndef UMLSONIC_SONIFIER_PROFILE_HPP
#define UMLSONIC_SONIFIER_PROFILE_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umlsonic::sonifier {

enum class Audience { novice, expert };

std::string_view to_string(Audience a);
std::optional<Audience> audience_from_string(std::string_view s);

/// How a diagram is rendered. Novices hear the same events with the
/// secondary variables (level tilt, depth reverb) left out and fuller
/// captions; experts get everything.
struct RenderProfile {
    Audience audience = Audience::expert;
    // Audience levels the deployment offers.
    std::vector<Audience> audience_levels = {Audience::novice, Audience::expert};
    bool motif_enabled = true;
    bool captions_enabled = true;
    // External text-to-speech command; "{text}" is replaced by the quoted
    // caption and the command must write a WAV stream to stdout.
    std::string tts_hook;
    bool pan_from_x = true;
    bool reverb_from_depth = true;
    double inter_cue_gap_s = 0.35;
    double loudness_window_db = 1.0;

    bool operator==(const RenderProfile&) const = default;
};

// Throws InvalidArgument for a negative gap or window, or fewer than one
// audience level.
void validate(const RenderProfile& p);

}  // namespace umlsonic::sonifier

#endif  // UMLSONIC_SONIFIER_PROFILE_HPP
