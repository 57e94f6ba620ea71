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

#include "umlsonic/catalogue/catalogue.hpp"

#include <algorithm>

namespace umlsonic::catalogue {

const std::vector<std::string>& uml_concept_ids() {
    static const std::vector<std::string> ids = {
        "Class",       "Attribute",   "Operation",   "Association",      "Inheritance", "Realization",
        "Dependency",  "Aggregation", "Composition", "AssociationClass", "Package"};
    return ids;
}

bool is_uml_concept(std::string_view id) {
    const auto& ids = uml_concept_ids();
    return std::find(ids.begin(), ids.end(), id) != ids.end();
}

std::string_view to_string(CompositionMode m) {
    switch (m) {
        case CompositionMode::sequence: return "sequence";
        case CompositionMode::overlay: return "overlay";
        case CompositionMode::mixed: return "mixed";
    }
    return "sequence";
}

std::string_view to_string(SignMode m) {
    switch (m) {
        case SignMode::icon: return "icon";
        case SignMode::index: return "index";
        case SignMode::symbol: return "symbol";
    }
    return "symbol";
}

std::optional<CompositionMode> composition_mode_from_string(std::string_view s) {
    for (auto m : {CompositionMode::sequence, CompositionMode::overlay, CompositionMode::mixed})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

std::optional<SignMode> sign_mode_from_string(std::string_view s) {
    for (auto m : {SignMode::icon, SignMode::index, SignMode::symbol})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

const SoundAsset* SoundCatalogue::find_asset(std::string_view id) const {
    auto it = std::find_if(assets.begin(), assets.end(), [&](const auto& a) { return a.id == id; });
    return it == assets.end() ? nullptr : &*it;
}

const Concept* SoundCatalogue::find_concept(std::string_view id) const {
    auto it = std::find_if(concepts.begin(), concepts.end(), [&](const auto& c) { return c.id == id; });
    return it == concepts.end() ? nullptr : &*it;
}

const ConceptBinding* SoundCatalogue::find_binding(std::string_view concept_id) const {
    auto it = std::find_if(bindings.begin(), bindings.end(), [&](const auto& b) { return b.concept_id == concept_id; });
    return it == bindings.end() ? nullptr : &*it;
}

bool SoundCatalogue::operator==(const SoundCatalogue& o) const {
    return name == o.name && version == o.version && concepts == o.concepts && assets == o.assets &&
           bindings == o.bindings && study_role == o.study_role && metadata == o.metadata;
}

}  // namespace umlsonic::catalogue
