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

#include "umlsonic/catalogue/realize.hpp"

#include <algorithm>
#include <vector>

#include "umlsonic/audio/effects.hpp"
#include "umlsonic/audio/mix.hpp"
#include "umlsonic/audio/synth.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::catalogue {

audio::AudioBuffer render_asset(const SoundAsset& asset, const SoundCatalogue& cat) {
    if (const auto* spec = std::get_if<audio::SynthSpec>(&asset.source))
        return audio::synth(*spec, asset.nominal_duration_s);
    const auto& rel = std::get<std::filesystem::path>(asset.source);
    const auto path = rel.is_absolute() ? rel : cat.base_dir / rel;
    auto buf = audio::read_wav(path).to_mono();
    if (buf.sample_rate() != audio::kDefaultSampleRate)
        throw FormatError("asset '" + asset.id + "' is not sampled at 44100 Hz");
    return buf;
}

audio::AuditoryVariables compose(const audio::AuditoryVariables& c, const audio::AuditoryVariables& e) {
    audio::AuditoryVariables v = c;
    v.loudness_db = c.loudness_db + e.loudness_db;
    v.pitch_semitones = c.pitch_semitones + e.pitch_semitones;
    v.pan = std::clamp(c.pan + e.pan, -1.0, 1.0);
    v.duration_scale = c.duration_scale * e.duration_scale;
    v.attack_s = c.attack_s != 0.0 ? c.attack_s : e.attack_s;
    v.decay_s = c.decay_s != 0.0 ? c.decay_s : e.decay_s;
    v.reverb_depth = c.reverb_depth + e.reverb_depth;
    // Offsets place a component inside its recipe; the extra does not move it.
    v.start_offset_s = c.start_offset_s;
    return v;
}

RealizedEarcon realize_earcon(const EarconRecipe& recipe, const SoundCatalogue& cat,
                              const audio::AuditoryVariables& extra, double max_earcon_s) {
    if (recipe.components.empty()) throw InvalidArgument("earcon recipe has no components");

    std::vector<audio::Placement> parts;
    parts.reserve(recipe.components.size());
    double cursor = 0.0;
    for (const auto& comp : recipe.components) {
        const auto* asset = cat.find_asset(comp.asset_id);
        if (!asset) throw NotFound("unknown asset '" + comp.asset_id + "'");
        const auto v = compose(comp.variables, extra);
        auto shaped = audio::apply_variables(render_asset(*asset, cat), v);
        double start = 0.0;
        switch (recipe.mode) {
            case CompositionMode::sequence:
                start = cursor + v.start_offset_s;
                cursor = start + shaped.duration_s();
                break;
            case CompositionMode::overlay: start = 0.0; break;
            case CompositionMode::mixed: start = v.start_offset_s; break;
        }
        parts.push_back({std::move(shaped), start});
    }

    RealizedEarcon out;
    // Plain sum then peak normalization: no limiter, so a single component
    // comes out as exactly its normalized rendering.
    out.audio = audio::normalize(audio::sum_at_offsets(parts), kEarconPeakDb);
    out.duration_s = out.audio.duration_s();
    out.duration_violation = out.duration_s > max_earcon_s;
    return out;
}

}  // namespace umlsonic::catalogue
