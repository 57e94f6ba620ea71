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

#include "umlsonic/catalogue/manifest.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "umlsonic/catalogue/builtin.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::catalogue {

using nlohmann::json;

namespace {

std::size_t line_at(std::string_view text, std::size_t offset) {
    offset = std::min(offset, text.size());
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(offset), '\n'));
}

// nlohmann/json does not keep source positions, so semantic errors are
// located by searching for the offending token: the `occurrence`-th
// appearance of "token" after the first appearance of "section".
std::size_t locate(std::string_view text, std::string_view section, std::string_view token, std::size_t occurrence = 0) {
    std::size_t from = 0;
    if (!section.empty()) {
        const auto s = text.find("\"" + std::string(section) + "\"");
        if (s != std::string_view::npos) from = s;
    }
    const std::string quoted = "\"" + std::string(token) + "\"";
    std::size_t pos = text.find(quoted, from);
    for (std::size_t k = 0; k < occurrence && pos != std::string_view::npos; ++k) pos = text.find(quoted, pos + 1);
    if (pos == std::string_view::npos) pos = from;
    return line_at(text, pos);
}

struct Reader {
    std::string_view text;

    [[noreturn]] void fail(const std::string& msg, std::string_view section, std::string_view token = {},
                           std::size_t occurrence = 0) const {
        throw ParseError(msg, token.empty() ? locate(text, {}, section) : locate(text, section, token, occurrence));
    }

    const json& member(const json& obj, const char* key, std::string_view section) const {
        if (!obj.is_object()) fail(std::string("expected an object in '") + std::string(section) + "'", section);
        auto it = obj.find(key);
        if (it == obj.end()) fail(std::string("missing key '") + key + "' in '" + std::string(section) + "'", section);
        return *it;
    }

    std::string string_of(const json& obj, const char* key, std::string_view section, std::string fallback = {},
                          bool required = false) const {
        auto it = obj.find(key);
        if (it == obj.end()) {
            if (required) fail(std::string("missing key '") + key + "' in '" + std::string(section) + "'", section);
            return fallback;
        }
        if (!it->is_string()) fail(std::string("'") + key + "' must be a string", section, key);
        return it->get<std::string>();
    }

    double number_of(const json& obj, const char* key, std::string_view section, double fallback) const {
        auto it = obj.find(key);
        if (it == obj.end()) return fallback;
        if (!it->is_number()) fail(std::string("'") + key + "' must be a number", section, key);
        return it->get<double>();
    }

    std::map<std::string, std::string> metadata_of(const json& obj, std::string_view section) const {
        std::map<std::string, std::string> out;
        auto it = obj.find("metadata");
        if (it == obj.end()) return out;
        if (!it->is_object()) fail("'metadata' must be an object", section, "metadata");
        for (const auto& [k, v] : it->items()) out[k] = v.is_string() ? v.get<std::string>() : v.dump();
        return out;
    }
};

audio::AuditoryVariables variables_of(const Reader& r, const json& c) {
    audio::AuditoryVariables v;
    v.loudness_db = r.number_of(c, "loudness_db", "bindings", 0.0);
    v.pitch_semitones = r.number_of(c, "pitch_semitones", "bindings", 0.0);
    v.pan = r.number_of(c, "pan", "bindings", 0.0);
    v.duration_scale = r.number_of(c, "duration_scale", "bindings", 1.0);
    v.attack_s = r.number_of(c, "attack_s", "bindings", 0.0);
    v.decay_s = r.number_of(c, "decay_s", "bindings", 0.0);
    v.reverb_depth = static_cast<int>(r.number_of(c, "reverb_depth", "bindings", 0.0));
    v.start_offset_s = r.number_of(c, "start_offset_s", "bindings", 0.0);
    try {
        audio::validate(v);
    } catch (const InvalidArgument& e) {
        r.fail(std::string("invalid auditory variables: ") + e.what(), "bindings", r.string_of(c, "asset", "bindings"));
    }
    return v;
}

json variables_json(const audio::AuditoryVariables& v) {
    json j = json::object();
    const audio::AuditoryVariables d;
    if (v.loudness_db != d.loudness_db) j["loudness_db"] = v.loudness_db;
    if (v.pitch_semitones != d.pitch_semitones) j["pitch_semitones"] = v.pitch_semitones;
    if (v.pan != d.pan) j["pan"] = v.pan;
    if (v.duration_scale != d.duration_scale) j["duration_scale"] = v.duration_scale;
    if (v.attack_s != d.attack_s) j["attack_s"] = v.attack_s;
    if (v.decay_s != d.decay_s) j["decay_s"] = v.decay_s;
    if (v.reverb_depth != d.reverb_depth) j["reverb_depth"] = v.reverb_depth;
    if (v.start_offset_s != d.start_offset_s) j["start_offset_s"] = v.start_offset_s;
    return j;
}

}  // namespace

SoundCatalogue parse_manifest(std::string_view text, const std::filesystem::path& base_dir) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what(), line_at(text, e.byte == 0 ? 0 : e.byte - 1));
    }
    const Reader r{text};
    if (!doc.is_object()) throw ParseError("manifest must be a JSON object", 1);

    SoundCatalogue cat;
    cat.base_dir = base_dir;
    cat.name = r.string_of(doc, "name", "name", {}, true);
    cat.version = r.string_of(doc, "version", "version", "1");
    cat.study_role = r.string_of(doc, "study_role", "study_role", "proposed");
    cat.metadata = r.metadata_of(doc, "name");

    const auto& concepts = r.member(doc, "concepts", "manifest");
    if (!concepts.is_array()) r.fail("'concepts' must be an array", "concepts");
    std::map<std::string, std::size_t> seen_concepts;
    for (const auto& c : concepts) {
        Concept concept_entry{r.string_of(c, "id", "concepts", {}, true), r.string_of(c, "description", "concepts")};
        if (seen_concepts.count(concept_entry.id))
            r.fail("duplicate concept id '" + concept_entry.id + "'", "concepts", concept_entry.id, seen_concepts[concept_entry.id]);
        seen_concepts[concept_entry.id] = 1;
        cat.concepts.push_back(std::move(concept_entry));
    }

    const auto& assets = r.member(doc, "assets", "manifest");
    if (!assets.is_array()) r.fail("'assets' must be an array", "assets");
    for (const auto& a : assets) {
        SoundAsset asset;
        asset.id = r.string_of(a, "id", "assets", {}, true);
        if (cat.find_asset(asset.id)) r.fail("duplicate asset id '" + asset.id + "'", "assets", asset.id, 1);
        asset.symbol = r.string_of(a, "symbol", "assets");
        const bool has_file = a.contains("file");
        const bool has_synth = a.contains("synth");
        if (has_file == has_synth) r.fail("asset '" + asset.id + "' needs exactly one of 'file' or 'synth'", "assets", asset.id);
        if (has_file) {
            asset.source = std::filesystem::path(r.string_of(a, "file", "assets"));
            asset.nominal_duration_s = r.number_of(a, "duration_s", "assets", 0.0);
            if (asset.nominal_duration_s < 0.0) r.fail("negative duration for asset '" + asset.id + "'", "assets", asset.id);
        } else {
            const auto& s = a["synth"];
            audio::SynthSpec spec;
            const auto gen_name = r.string_of(s, "generator", "assets", {}, true);
            const auto gen = audio::generator_from_string(gen_name);
            if (!gen) r.fail("unknown generator '" + gen_name + "'", "assets", gen_name);
            spec.generator = *gen;
            spec.base_freq_hz = r.number_of(s, "base_freq_hz", "assets", spec.base_freq_hz);
            if (auto p = s.find("params"); p != s.end()) {
                if (!p->is_object()) r.fail("'params' must be an object", "assets", asset.id);
                for (const auto& [k, v] : p->items()) {
                    if (!v.is_number()) r.fail("synth param '" + k + "' must be a number", "assets", k);
                    spec.params[k] = v.get<double>();
                }
            }
            asset.source = std::move(spec);
            asset.nominal_duration_s = r.number_of(a, "duration_s", "assets", 1.0);
            if (!(asset.nominal_duration_s > 0.0)) r.fail("asset '" + asset.id + "' needs a positive duration", "assets", asset.id);
        }
        cat.assets.push_back(std::move(asset));
    }

    const auto& bindings = r.member(doc, "bindings", "manifest");
    if (!bindings.is_array()) r.fail("'bindings' must be an array", "bindings");
    std::map<std::string, std::size_t> asset_mentions;
    for (const auto& b : bindings) {
        ConceptBinding binding;
        binding.concept_id = r.string_of(b, "concept", "bindings", {}, true);
        const auto sign = r.string_of(b, "sign_mode", "bindings", {}, true);
        if (auto m = sign_mode_from_string(sign)) binding.sign_mode = *m;
        else r.fail("unknown sign_mode '" + sign + "'", "bindings", sign);
        binding.rationale = r.string_of(b, "rationale", "bindings");
        binding.metadata = r.metadata_of(b, "bindings");
        binding.recipe.caption = r.string_of(b, "caption", "bindings");
        const auto mode = r.string_of(b, "mode", "bindings", "sequence");
        if (auto m = composition_mode_from_string(mode)) binding.recipe.mode = *m;
        else r.fail("unknown composition mode '" + mode + "'", "bindings", mode);

        const auto& comps = r.member(b, "components", "bindings");
        if (!comps.is_array() || comps.empty())
            r.fail("binding for '" + binding.concept_id + "' needs at least one component", "bindings", binding.concept_id);
        for (const auto& c : comps) {
            Component comp;
            comp.asset_id = r.string_of(c, "asset", "bindings", {}, true);
            const std::size_t mention = asset_mentions[comp.asset_id]++;
            if (!cat.find_asset(comp.asset_id))
                r.fail("unknown asset '" + comp.asset_id + "'", "bindings", comp.asset_id, mention);
            comp.variables = variables_of(r, c);
            binding.recipe.components.push_back(std::move(comp));
        }
        cat.bindings.push_back(std::move(binding));
    }
    return cat;
}

std::string serialize_manifest(const SoundCatalogue& cat) {
    json doc;
    doc["name"] = cat.name;
    doc["version"] = cat.version;
    doc["study_role"] = cat.study_role;
    if (!cat.metadata.empty()) doc["metadata"] = cat.metadata;

    doc["concepts"] = json::array();
    for (const auto& c : cat.concepts) doc["concepts"].push_back({{"id", c.id}, {"description", c.description}});

    doc["assets"] = json::array();
    for (const auto& a : cat.assets) {
        json ja{{"id", a.id}};
        if (!a.symbol.empty()) ja["symbol"] = a.symbol;
        if (const auto* path = std::get_if<std::filesystem::path>(&a.source)) {
            ja["file"] = path->generic_string();
            if (a.nominal_duration_s > 0.0) ja["duration_s"] = a.nominal_duration_s;
        } else {
            const auto& spec = std::get<audio::SynthSpec>(a.source);
            ja["duration_s"] = a.nominal_duration_s;
            ja["synth"] = {{"generator", std::string(audio::to_string(spec.generator))}, {"base_freq_hz", spec.base_freq_hz}};
            if (!spec.params.empty()) ja["synth"]["params"] = spec.params;
        }
        doc["assets"].push_back(std::move(ja));
    }

    doc["bindings"] = json::array();
    for (const auto& b : cat.bindings) {
        json jb{{"concept", b.concept_id},
                {"sign_mode", std::string(to_string(b.sign_mode))},
                {"mode", std::string(to_string(b.recipe.mode))},
                {"caption", b.recipe.caption},
                {"rationale", b.rationale}};
        if (!b.metadata.empty()) jb["metadata"] = b.metadata;
        jb["components"] = json::array();
        for (const auto& c : b.recipe.components) {
            json jc = variables_json(c.variables);
            jc["asset"] = c.asset_id;
            jb["components"].push_back(std::move(jc));
        }
        doc["bindings"].push_back(std::move(jb));
    }
    return doc.dump(2) + "\n";
}

SoundCatalogue load_manifest(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open catalogue manifest " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_manifest(ss.str(), path.parent_path());
}

SoundCatalogue load_catalogue(std::string_view ref) {
    if (ref == "builtin:proposed") return builtin_proposed();
    if (ref == "builtin:baseline") return builtin_baseline();
    if (ref.starts_with("builtin:")) throw NotFound("unknown built-in catalogue '" + std::string(ref) + "'");
    return load_manifest(std::filesystem::path(ref));
}

}  // namespace umlsonic::catalogue
