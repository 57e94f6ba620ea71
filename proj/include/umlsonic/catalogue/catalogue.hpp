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

#ifndef UMLSONIC_CATALOGUE_CATALOGUE_HPP
#define UMLSONIC_CATALOGUE_CATALOGUE_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "umlsonic/audio/synth.hpp"
#include "umlsonic/audio/variables.hpp"

namespace umlsonic::catalogue {

// The eleven UML class-diagram concepts, in table order.
const std::vector<std::string>& uml_concept_ids();
bool is_uml_concept(std::string_view id);

struct Concept {
    std::string id;
    std::string description;

    bool operator==(const Concept&) const = default;
};

/// A sound the catalogue composes earcons from. The source is either a WAV
/// file (relative to the manifest directory) or a procedural spec. `symbol`
/// names what the sound depicts ("running water"); two different recordings
/// of the same thing share a symbol. Empty means "same as id".
struct SoundAsset {
    std::string id;
    std::variant<std::filesystem::path, audio::SynthSpec> source;
    double nominal_duration_s = 1.0;
    std::string symbol;

    const std::string& symbol_or_id() const { return symbol.empty() ? id : symbol; }
    bool is_file() const { return std::holds_alternative<std::filesystem::path>(source); }

    bool operator==(const SoundAsset&) const = default;
};

enum class CompositionMode { sequence, overlay, mixed };
enum class SignMode { icon, index, symbol };

std::string_view to_string(CompositionMode m);
std::string_view to_string(SignMode m);
std::optional<CompositionMode> composition_mode_from_string(std::string_view s);
std::optional<SignMode> sign_mode_from_string(std::string_view s);

struct Component {
    std::string asset_id;
    audio::AuditoryVariables variables;

    bool operator==(const Component&) const = default;
};

struct EarconRecipe {
    std::vector<Component> components;
    std::string caption;
    CompositionMode mode = CompositionMode::sequence;

    bool operator==(const EarconRecipe&) const = default;
};

struct ConceptBinding {
    std::string concept_id;
    EarconRecipe recipe;
    SignMode sign_mode = SignMode::symbol;
    std::string rationale;
    std::map<std::string, std::string> metadata;

    bool operator==(const ConceptBinding&) const = default;
};

/// The central document: concepts, the assets available, and the
/// concept -> earcon bindings. The loader guarantees asset references
/// resolve; one-to-one correspondence is not enforced (that is for the
/// linter to report).
struct SoundCatalogue {
    std::string name;
    std::string version;
    std::vector<Concept> concepts;
    std::vector<SoundAsset> assets;
    std::vector<ConceptBinding> bindings;
    // Which column of a preference study describes this catalogue
    // ("proposed" or "baseline"); used to pick transparency evidence.
    std::string study_role = "proposed";
    std::map<std::string, std::string> metadata;
    // Directory file assets are resolved against. Not part of the document.
    std::filesystem::path base_dir;

    const SoundAsset* find_asset(std::string_view id) const;
    const Concept* find_concept(std::string_view id) const;
    // First binding for the concept, or nullptr.
    const ConceptBinding* find_binding(std::string_view concept_id) const;

    // Document equality; base_dir is ignored.
    bool operator==(const SoundCatalogue& other) const;
};

}  // namespace umlsonic::catalogue

#endif  // UMLSONIC_CATALOGUE_CATALOGUE_HPP
