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

#ifndef UMLSONIC_SONIFIER_SONIFIER_HPP
#define UMLSONIC_SONIFIER_SONIFIER_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/audio/variables.hpp"
#include "umlsonic/catalogue/catalogue.hpp"
#include "umlsonic/parallel.hpp"
#include "umlsonic/sonifier/profile.hpp"
#include "umlsonic/uml/model.hpp"

namespace umlsonic::sonifier {

// Level every cue is brought to before the spatial tilt, and the ceiling
// no cue may exceed.
inline constexpr double kCueRmsDb = -23.0;
inline constexpr double kCuePeakDb = -1.5;
inline constexpr double kSpeechUnderDb = -6.0;

/// Position and package depth to auditory variables: pan = 2x/100 - 1,
/// loudness_db = -2 (y/100 - 0.5) (upper elements slightly louder),
/// reverb_depth = depth. Throws InvalidArgument outside the bounds.
audio::AuditoryVariables spatialize(const uml::Position& pos, std::size_t depth);

// FNV-1a 64 of the name; its three lowest base-5 digits pick notes from a
// major pentatonic scale.
std::uint64_t fnv1a64(std::string_view s);
std::array<int, 3> motif_notes(std::string_view name);

/// Three 0.4 s notes (1.2 s in all), mono. Throws InvalidArgument for an
/// empty name.
audio::AudioBuffer diagram_motif(std::string_view name);

inline constexpr const char* kMotifConcept = "motif";

struct TimelineEvent {
    double start_s = 0.0;
    double duration_s = 0.0;
    std::string concept_id;                 // kMotifConcept for the motif
    std::optional<uml::ElementRef> element;  // empty for the motif
    std::string element_name;
    audio::AuditoryVariables variables;
    std::string caption;
};

struct SonicTimeline {
    std::string diagram;
    std::vector<TimelineEvent> events;

    double duration_s() const;
};

struct Caption {
    double start_s = 0.0;
    double end_s = 0.0;
    std::string text;
};

using CaptionTrack = std::vector<Caption>;

std::string to_webvtt(const CaptionTrack& track);

/// One event per model element (plus the motif first when enabled), in
/// walk order: the package tree depth first in declaration order, each
/// classifier followed by its members, then relationships. Starts are
/// sequential with the profile gap. Cue durations come from rendering, so
/// the catalogue must be realizable. Throws UnboundConcept.
SonicTimeline plan_walkthrough(const uml::ClassModel& model, const catalogue::SoundCatalogue& cat,
                               const RenderProfile& profile, Execution mode = Execution::parallel);

struct Cue {
    audio::AudioBuffer audio;  // stereo
    std::string caption;
    std::vector<std::string> warnings;
};

/// A single event rendered the way the walkthrough renders it: earcon at
/// the spatial variables (loudness aside), equalized to kCueRmsDb, speech
/// mixed kSpeechUnderDb under it when a TTS hook is set, then the level
/// tilt and a soft guard at kCuePeakDb.
Cue render_event(const TimelineEvent& event, const catalogue::SoundCatalogue& cat, const RenderProfile& profile);

struct RenderedWalkthrough {
    audio::AudioBuffer audio;
    CaptionTrack captions;
    std::vector<double> cue_rms_db;  // per event
    std::vector<std::string> warnings;
};

// Failures are rethrown as IndexedError naming the event.
RenderedWalkthrough render_timeline(const SonicTimeline& timeline, const catalogue::SoundCatalogue& cat,
                                    const RenderProfile& profile, Execution mode = Execution::parallel);

/// The walkthrough event for one element, rendered alone. Throws NotFound
/// for an unknown element and UnboundConcept when it has no binding.
TimelineEvent element_event(const uml::ClassModel& model, const uml::ElementRef& ref,
                            const catalogue::SoundCatalogue& cat, const RenderProfile& profile);
Cue element_cue(const uml::ClassModel& model, const uml::ElementRef& ref, const catalogue::SoundCatalogue& cat,
                const RenderProfile& profile);

}  // namespace umlsonic::sonifier

#endif  // UMLSONIC_SONIFIER_SONIFIER_HPP
