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

#ifndef UMLSONIC_CATALOGUE_REALIZE_HPP
#define UMLSONIC_CATALOGUE_REALIZE_HPP

#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/audio/variables.hpp"
#include "umlsonic/catalogue/catalogue.hpp"

namespace umlsonic::catalogue {

inline constexpr double kDefaultMaxEarconS = 3.0;
inline constexpr double kEarconPeakDb = -3.0;

// Mono rendering of one asset at the catalogue sample rate. Throws IoError
// when a file asset cannot be read.
audio::AudioBuffer render_asset(const SoundAsset& asset, const SoundCatalogue& cat);

// Combines a component's variables with cue-wide extras: gains and
// semitones and reverb depths add, pans add then clamp, duration scales
// multiply, envelope times come from the component unless it leaves them 0.
audio::AuditoryVariables compose(const audio::AuditoryVariables& component, const audio::AuditoryVariables& extra);

struct RealizedEarcon {
    audio::AudioBuffer audio;  // stereo, peak at -3 dBFS
    double duration_s = 0.0;
    bool duration_violation = false;  // duration_s > max_earcon_s
};

/// Renders a recipe: each component is shaped with compose(component,
/// extra), placed per the recipe mode, summed and normalized. An over-long
/// result is flagged, not rejected.
RealizedEarcon realize_earcon(const EarconRecipe& recipe, const SoundCatalogue& cat,
                              const audio::AuditoryVariables& extra = {},
                              double max_earcon_s = kDefaultMaxEarconS);

}  // namespace umlsonic::catalogue

#endif  // UMLSONIC_CATALOGUE_REALIZE_HPP
