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

#ifndef UMLSONIC_CATALOGUE_MANIFEST_HPP
#define UMLSONIC_CATALOGUE_MANIFEST_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "umlsonic/catalogue/catalogue.hpp"

namespace umlsonic::catalogue {

// JSON manifest with top-level keys name, version, concepts, assets,
// bindings (optional: study_role, metadata). Throws ParseError with a line
// number for malformed JSON, duplicate concept ids, unknown asset references
// and schema violations.
SoundCatalogue parse_manifest(std::string_view text, const std::filesystem::path& base_dir = {});

std::string serialize_manifest(const SoundCatalogue& cat);

// Reads a manifest file; file assets resolve relative to its directory.
SoundCatalogue load_manifest(const std::filesystem::path& path);

// "builtin:proposed", "builtin:baseline", or a manifest path.
SoundCatalogue load_catalogue(std::string_view ref);

}  // namespace umlsonic::catalogue

#endif  // UMLSONIC_CATALOGUE_MANIFEST_HPP
