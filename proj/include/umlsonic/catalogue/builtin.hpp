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

#ifndef UMLSONIC_CATALOGUE_BUILTIN_HPP
#define UMLSONIC_CATALOGUE_BUILTIN_HPP

#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/catalogue/catalogue.hpp"

namespace umlsonic::catalogue {

/// Catalogue designed around the auditory principles: book opening for
/// classes, baby crying for dependencies, and so on. Every sound is a
/// procedural stand-in for the recording it names.
SoundCatalogue builtin_proposed();

/// Deliberately poor catalogue: a shared car engine, two near-identical
/// running-water sounds, two near-identical winds, a six-sound inheritance
/// cue longer than three seconds, and unrelated sounds elsewhere.
SoundCatalogue builtin_baseline();

// Reserved navigation cue for "no move possible". Not a catalogue asset and
// outside the concept namespace.
audio::AudioBuffer boundary_click();

}  // namespace umlsonic::catalogue

#endif  // UMLSONIC_CATALOGUE_BUILTIN_HPP
