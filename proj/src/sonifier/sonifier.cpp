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

#include "umlsonic/sonifier/sonifier.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

#include "umlsonic/audio/effects.hpp"
#include "umlsonic/audio/synth.hpp"
#include "umlsonic/catalogue/realize.hpp"
#include "umlsonic/error.hpp"
#include "umlsonic/sonifier/tts.hpp"

namespace umlsonic::sonifier {

std::string_view to_string(Audience a) { return a == Audience::novice ? "novice" : "expert"; }

std::optional<Audience> audience_from_string(std::string_view s) {
    if (s == "novice") return Audience::novice;
    if (s == "expert") return Audience::expert;
    return std::nullopt;
}

void validate(const RenderProfile& p) {
    if (!(p.inter_cue_gap_s >= 0.0)) throw InvalidArgument("inter-cue gap must be >= 0");
    if (!(p.loudness_window_db > 0.0)) throw InvalidArgument("loudness window must be > 0");
    if (p.audience_levels.empty()) throw InvalidArgument("a profile needs at least one audience level");
}

audio::AuditoryVariables spatialize(const uml::Position& pos, std::size_t depth) {
    if (!uml::in_bounds(pos)) throw InvalidArgument("position outside [0, 100] x [0, 100]");
    audio::AuditoryVariables v;
    v.pan = 2.0 * pos.x / 100.0 - 1.0;
    v.loudness_db = -2.0 * (pos.y / 100.0 - 0.5);
    v.reverb_depth = static_cast<int>(depth);
    return v;
}

std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::array<int, 3> motif_notes(std::string_view name) {
    std::uint64_t h = fnv1a64(name);
    std::array<int, 3> out{};
    for (auto& n : out) {
        n = static_cast<int>(h % 5);
        h /= 5;
    }
    return out;
}

audio::AudioBuffer diagram_motif(std::string_view name) {
    if (name.empty()) throw InvalidArgument("motif needs a diagram name");
    static constexpr int kPentatonic[5] = {0, 2, 4, 7, 9};
    constexpr double kNoteS = 0.4;
    std::vector<double> samples;
    for (int n : motif_notes(name)) {
        const double f = 523.25 * std::pow(2.0, kPentatonic[n] / 12.0);
        const auto note = audio::synth({audio::Generator::sine, f, {{"harmonics", 2}, {"decay_per_s", 4}}}, kNoteS);
        samples.insert(samples.end(), note.channel(0).begin(), note.channel(0).end());
    }
    return audio::AudioBuffer::mono(std::move(samples));
}

double SonicTimeline::duration_s() const {
    return events.empty() ? 0.0 : events.back().start_s + events.back().duration_s;
}

namespace {

std::string timestamp(double s) {
    const auto ms = static_cast<long long>(std::llround(s * 1000.0));
    char buf[32];
    std::snprintf(buf, sizeof buf, "%02lld:%02lld:%02lld.%03lld", ms / 3600000, ms / 60000 % 60, ms / 1000 % 60, ms % 1000);
    return buf;
}

std::string concept_label(const std::string& id) {
    if (id == "AssociationClass") return "Association class";
    return id;
}

std::string element_label(const uml::ClassModel& m, const uml::ElementRef& r) {
    using K = uml::ElementRef::Kind;
    switch (r.kind) {
        case K::package: return m.packages[r.index].qualified_name();
        case K::classifier: return m.classifiers[r.index].name;
        case K::attribute: return m.classifiers[r.index].name + "." + m.classifiers[r.index].attributes[r.member].name;
        case K::operation:
            return m.classifiers[r.index].name + "." + m.classifiers[r.index].operations[r.member].name + "()";
        case K::relationship: {
            const auto& rel = m.relationships[r.index];
            std::string s = m.classifiers[rel.source].name + " to " + m.classifiers[rel.target].name;
            if (rel.assoc_class) s += " through " + m.classifiers[*rel.assoc_class].name;
            if (!rel.label.empty()) s += " (" + rel.label + ")";
            return s;
        }
    }
    return {};
}

std::string caption_for(const uml::ClassModel& m, const uml::ElementRef& r, const catalogue::ConceptBinding& b,
                        const RenderProfile& profile) {
    const bool iface = r.kind == uml::ElementRef::Kind::classifier &&
                       m.classifiers[r.index].kind == uml::ClassifierKind::interface;
    std::string text = (iface ? std::string("Interface") : concept_label(b.concept_id)) + " " + element_label(m, r);
    if (profile.audience == Audience::novice) {
        // Beginners get the location and what the sound depicts.
        if (const auto parent = uml::parent_of(m, r); parent && parent->kind == uml::ElementRef::Kind::package)
            text += ", in package " + m.packages[parent->index].qualified_name();
        if (!b.recipe.caption.empty()) text += ". " + b.recipe.caption;
    }
    return text;
}

audio::AudioBuffer level_to(const audio::AudioBuffer& b, double rms_db) {
    const double rms = b.rms();
    if (rms <= 0.0) return b;
    return audio::apply_gain(b, rms_db - audio::gain_to_db(rms));
}

void check_bound(const uml::ClassModel& m, const catalogue::SoundCatalogue& cat) {
    for (const auto& e : uml::walk_elements(m)) {
        const auto concept_id = uml::concept_of(m, e);
        if (!cat.find_binding(concept_id)) throw UnboundConcept(concept_id);
    }
}

TimelineEvent event_for(const uml::ClassModel& laid, const uml::ElementRef& ref, const catalogue::SoundCatalogue& cat,
                        const RenderProfile& profile) {
    TimelineEvent ev;
    ev.concept_id = uml::concept_of(laid, ref);
    const auto* binding = cat.find_binding(ev.concept_id);
    if (!binding) throw UnboundConcept(ev.concept_id);
    ev.element = ref;
    ev.element_name = uml::to_string(laid, ref);
    ev.variables = spatialize(uml::anchor_of(laid, ref), uml::depth_of(laid, ref));
    if (!profile.pan_from_x) ev.variables.pan = 0.0;
    if (!profile.reverb_from_depth) ev.variables.reverb_depth = 0;
    if (profile.audience == Audience::novice) {
        ev.variables.loudness_db = 0.0;
        ev.variables.reverb_depth = 0;
    }
    ev.caption = profile.captions_enabled ? caption_for(laid, ref, *binding, profile) : std::string();
    return ev;
}

TimelineEvent motif_event(const std::string& diagram) {
    TimelineEvent ev;
    ev.concept_id = kMotifConcept;
    ev.element_name = diagram;
    ev.caption = "Diagram " + diagram;
    return ev;
}

std::string diagram_name(const uml::ClassModel& m) { return m.name.empty() ? "untitled" : m.name; }

}  // namespace

std::string to_webvtt(const CaptionTrack& track) {
    std::string out = "WEBVTT\n";
    for (std::size_t i = 0; i < track.size(); ++i) {
        out += "\n" + std::to_string(i + 1) + "\n" + timestamp(track[i].start_s) + " --> " + timestamp(track[i].end_s) +
               "\n" + track[i].text + "\n";
    }
    return out;
}

Cue render_event(const TimelineEvent& event, const catalogue::SoundCatalogue& cat, const RenderProfile& profile) {
    Cue cue;
    cue.caption = event.caption;
    audio::AudioBuffer sound;
    if (event.concept_id == kMotifConcept) {
        sound = audio::pan_to_stereo(diagram_motif(event.element_name), 0.0);
    } else {
        const auto* binding = cat.find_binding(event.concept_id);
        if (!binding) throw UnboundConcept(event.concept_id);
        auto extra = event.variables;
        extra.loudness_db = 0.0;  // applied after equalization
        sound = catalogue::realize_earcon(binding->recipe, cat, extra, 1e9).audio;
    }
    sound = level_to(sound, kCueRmsDb);

    if (!profile.tts_hook.empty() && !event.caption.empty()) {
        std::string error;
        if (auto speech = run_tts(profile.tts_hook, event.caption, error)) {
            auto voice = level_to(speech->to_stereo(), kCueRmsDb + kSpeechUnderDb);
            audio::AudioBuffer both(2, std::max(sound.frames(), voice.frames()));
            for (int c = 0; c < 2; ++c) {
                auto out = both.channel(c);
                auto a = sound.channel(c), b = voice.channel(c);
                for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
                for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
            }
            sound = level_to(both, kCueRmsDb);
        } else {
            cue.warnings.push_back("text-to-speech failed for '" + event.caption + "': " + error + "; caption is text only");
        }
    }

    sound = audio::apply_gain(sound, event.variables.loudness_db);
    cue.audio = audio::soft_limit(sound, audio::db_to_gain(kCuePeakDb - 1.5), audio::db_to_gain(kCuePeakDb));
    return cue;
}

TimelineEvent element_event(const uml::ClassModel& model, const uml::ElementRef& ref,
                            const catalogue::SoundCatalogue& cat, const RenderProfile& profile) {
    const auto laid = uml::assign_layout(model);
    // Validates the reference.
    const auto all = uml::walk_elements(laid);
    if (std::find(all.begin(), all.end(), ref) == all.end()) throw NotFound("no such model element");
    return event_for(laid, ref, cat, profile);
}

Cue element_cue(const uml::ClassModel& model, const uml::ElementRef& ref, const catalogue::SoundCatalogue& cat,
                const RenderProfile& profile) {
    return render_event(element_event(model, ref, cat, profile), cat, profile);
}

SonicTimeline plan_walkthrough(const uml::ClassModel& model, const catalogue::SoundCatalogue& cat,
                               const RenderProfile& profile, Execution mode) {
    validate(profile);
    const auto laid = uml::assign_layout(model);
    check_bound(laid, cat);

    SonicTimeline t;
    t.diagram = diagram_name(laid);
    if (profile.motif_enabled) t.events.push_back(motif_event(t.diagram));
    for (const auto& ref : uml::walk_elements(laid)) t.events.push_back(event_for(laid, ref, cat, profile));

    std::vector<double> durations(t.events.size());
    for_each_index(t.events.size(), mode, [&](std::size_t i) {
        durations[i] = render_event(t.events[i], cat, profile).audio.duration_s();
    });
    double at = 0.0;
    for (std::size_t i = 0; i < t.events.size(); ++i) {
        t.events[i].start_s = at;
        t.events[i].duration_s = durations[i];
        at += durations[i] + profile.inter_cue_gap_s;
    }
    return t;
}

RenderedWalkthrough render_timeline(const SonicTimeline& timeline, const catalogue::SoundCatalogue& cat,
                                    const RenderProfile& profile, Execution mode) {
    validate(profile);
    const auto n = timeline.events.size();
    std::vector<Cue> cues(n);
    for_each_index(n, mode, [&](std::size_t i) {
        try {
            cues[i] = render_event(timeline.events[i], cat, profile);
        } catch (const std::exception& e) {
            throw IndexedError(i, e.what());
        }
    });

    RenderedWalkthrough out;
    std::size_t frames = 0;
    std::vector<std::size_t> starts(n);
    for (std::size_t i = 0; i < n; ++i) {
        starts[i] = audio::seconds_to_frames(timeline.events[i].start_s, audio::kDefaultSampleRate);
        frames = std::max(frames, starts[i] + cues[i].audio.frames());
    }
    out.audio = audio::AudioBuffer(2, frames);
    for (std::size_t i = 0; i < n; ++i) {
        for (int c = 0; c < 2; ++c) {
            auto dst = out.audio.channel(c);
            auto src = cues[i].audio.channel(c);
            for (std::size_t k = 0; k < src.size(); ++k) dst[starts[i] + k] += src[k];
        }
        const auto& ev = timeline.events[i];
        out.captions.push_back({ev.start_s, ev.start_s + cues[i].audio.duration_s(), ev.caption});
        out.cue_rms_db.push_back(audio::gain_to_db(cues[i].audio.rms()));
        out.warnings.insert(out.warnings.end(), cues[i].warnings.begin(), cues[i].warnings.end());
    }
    return out;
}

}  // namespace umlsonic::sonifier
