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

#include "umlsonic/catalogue/builtin.hpp"

#include <initializer_list>
#include <utility>

#include "umlsonic/audio/synth.hpp"

namespace umlsonic::catalogue {

namespace {

using audio::Generator;
using Params = std::initializer_list<std::pair<const std::string, double>>;

SoundAsset synth_asset(std::string id, std::string symbol, Generator g, double f0, double dur, Params params) {
    return SoundAsset{std::move(id), audio::SynthSpec{g, f0, std::map<std::string, double>(params)}, dur,
                      std::move(symbol)};
}

Component part(std::string asset, audio::AuditoryVariables v = {}) { return Component{std::move(asset), v}; }

audio::AuditoryVariables shifted(double semitones, double gap_s = 0.0) {
    audio::AuditoryVariables v;
    v.pitch_semitones = semitones;
    v.start_offset_s = gap_s;
    return v;
}

audio::AuditoryVariables at(double offset_s, double loudness_db = 0.0) {
    audio::AuditoryVariables v;
    v.start_offset_s = offset_s;
    v.loudness_db = loudness_db;
    return v;
}

std::vector<Concept> uml_concepts() {
    static const std::pair<const char*, const char*> table[] = {
        {"Class", "a classifier with attributes and operations"},
        {"Attribute", "a typed property of a class"},
        {"Operation", "a behaviour a class offers"},
        {"Association", "a structural link between classes"},
        {"Inheritance", "generalization from a child to its parent"},
        {"Realization", "a class implementing an interface"},
        {"Dependency", "a class relying on another"},
        {"Aggregation", "a whole loosely holding parts"},
        {"Composition", "a whole owning its parts"},
        {"AssociationClass", "an association carrying its own class"},
        {"Package", "a namespace grouping elements"},
    };
    std::vector<Concept> out;
    for (const auto& [id, desc] : table) out.push_back({id, desc});
    return out;
}

ConceptBinding bind(std::string concept_id, SignMode mode, std::string caption, std::string rationale,
                    std::vector<Component> comps, CompositionMode cm = CompositionMode::sequence) {
    ConceptBinding b;
    b.concept_id = std::move(concept_id);
    b.sign_mode = mode;
    b.recipe.caption = std::move(caption);
    b.recipe.components = std::move(comps);
    b.recipe.mode = cm;
    b.rationale = std::move(rationale);
    return b;
}

}  // namespace

SoundCatalogue builtin_proposed() {
    SoundCatalogue cat;
    cat.name = "proposed";
    cat.version = "1.0";
    cat.study_role = "proposed";
    cat.metadata = {{"assets", "procedural stand-ins for the named recordings"},
                    {"sign_modes", "interpretive; the source assigns no explicit labels"}};
    cat.concepts = uml_concepts();

    cat.assets = {
        synth_asset("book_opening", "book opening", Generator::chirp, 300, 0.6,
                    {{"end_hz", 1200}, {"noise_mix", 0.45}, {"noise_cutoff_hz", 2500}, {"decay_per_s", 3}, {"seed", 3}}),
        synth_asset("positive_chime", "positive chime", Generator::sine, 880, 0.7,
                    {{"harmonics", 3}, {"decay_per_s", 5}}),
        synth_asset("wooden_bricks", "wooden bricks", Generator::filtered_noise, 0, 0.6,
                    {{"cutoff_hz", 900}, {"highpass_hz", 250}, {"pulse_hz", 5}, {"pulse_duty", 0.25},
                     {"decay_per_s", 25}, {"seed", 5}}),
        synth_asset("notification_beeps", "notification beeps", Generator::square, 1320, 0.6,
                    {{"pulse_hz", 4}, {"pulse_duty", 0.5}}),
        synth_asset("keyboard_typing", "keyboard typing", Generator::filtered_noise, 0, 1.2,
                    {{"cutoff_hz", 9000}, {"highpass_hz", 2500}, {"pulse_hz", 11}, {"pulse_duty", 0.15},
                     {"decay_per_s", 60}, {"seed", 7}}),
        synth_asset("arrow_shot", "arrow shot", Generator::chirp, 2000, 0.5,
                    {{"end_hz", 400}, {"noise_mix", 0.3}, {"noise_cutoff_hz", 6000}, {"seed", 9}}),
        synth_asset("coins_falling", "coins falling", Generator::sine, 3200, 0.8,
                    {{"harmonics", 2}, {"pulse_hz", 9}, {"pulse_duty", 0.3}, {"decay_per_s", 30}}),
        synth_asset("construction_bed", "construction site", Generator::filtered_noise, 0, 1.4,
                    {{"cutoff_hz", 400}, {"seed", 13}, {"am_hz", 1.5}, {"am_depth", 0.3}}),
        synth_asset("hammering", "hammering", Generator::square, 180, 1.4,
                    {{"pulse_hz", 3}, {"pulse_duty", 0.2}, {"decay_per_s", 18}}),
        synth_asset("baby_crying", "baby crying", Generator::sine, 450, 1.6,
                    {{"harmonics", 4}, {"am_hz", 2.5}, {"am_depth", 0.8}, {"vibrato_hz", 6}, {"vibrato_semitones", 0.7}}),
        synth_asset("sports_crowd", "sports crowd", Generator::filtered_noise, 0, 1.5,
                    {{"cutoff_hz", 2500}, {"highpass_hz", 300}, {"am_hz", 0.7}, {"am_depth", 0.4}, {"seed", 17}}),
        synth_asset("fire_burning", "fire burning", Generator::filtered_noise, 0, 1.2,
                    {{"cutoff_hz", 7000}, {"highpass_hz", 1500}, {"pulse_hz", 23}, {"pulse_duty", 0.08},
                     {"decay_per_s", 90}, {"seed", 19}}),
        synth_asset("page_turn", "page turn", Generator::filtered_noise, 0, 0.5,
                    {{"cutoff_hz", 8000}, {"highpass_hz", 3000}, {"decay_per_s", 6}, {"seed", 23}}),
        synth_asset("envelope_opening", "envelope opening", Generator::filtered_noise, 0, 0.7,
                    {{"cutoff_hz", 5000}, {"highpass_hz", 1000}, {"am_hz", 4}, {"am_depth", 0.7}, {"seed", 29}}),
        synth_asset("zip", "zip", Generator::square, 90, 0.6,
                    {{"noise_mix", 0.5}, {"noise_cutoff_hz", 6000}, {"seed", 31}}),
    };

    const auto seq = CompositionMode::sequence;
    cat.bindings = {
        bind("Class", SignMode::symbol, "Class: a book opening, then a positive chime",
             "a class is the book that holds the model's knowledge", {part("book_opening"), part("positive_chime")}),
        bind("Attribute", SignMode::symbol, "Attribute: wooden bricks, then notification beeps",
             "attributes are the building blocks of a class", {part("wooden_bricks"), part("notification_beeps")}),
        bind("Operation", SignMode::index, "Operation: keyboard typing",
             "an operation is something the class does", {part("keyboard_typing")}),
        bind("Association", SignMode::icon, "Association: an arrow shot",
             "the arrow travels from one class to another", {part("arrow_shot")}),
        bind("Inheritance", SignMode::symbol, "Inheritance: a low book, falling coins, a high book",
             "the parent's book passes its value down to the child",
             {part("book_opening", shifted(-5)), part("coins_falling"), part("book_opening", shifted(5))}),
        bind("Realization", SignMode::index, "Realization: a construction site with hammering",
             "an interface is built into a concrete class",
             {part("construction_bed"), part("hammering")}, CompositionMode::overlay),
        bind("Dependency", SignMode::index, "Dependency: a baby crying",
             "a dependant cannot manage on its own", {part("baby_crying")}),
        bind("Aggregation", SignMode::icon, "Aggregation: a sports crowd",
             "a crowd is many independent people gathered", {part("sports_crowd")}),
        bind("Composition", SignMode::index, "Composition: a sports crowd, then a fire",
             "the parts burn with the whole", {part("sports_crowd", at(0, -4)), part("fire_burning")}, seq),
        bind("AssociationClass", SignMode::symbol, "Association class: an arrow, a book, a page turning",
             "an association that carries a class of its own",
             {part("arrow_shot"), part("book_opening"), part("page_turn")}),
        bind("Package", SignMode::icon, "Package: an envelope opening, then a zip",
             "a package is opened to reach what it contains", {part("envelope_opening"), part("zip")}),
    };
    for (auto& b : cat.bindings) b.metadata["sign_mode_source"] = "interpretive";
    return cat;
}

SoundCatalogue builtin_baseline() {
    SoundCatalogue cat;
    cat.name = "baseline";
    cat.version = "1.0";
    cat.study_role = "baseline";
    cat.metadata = {{"assets", "procedural stand-ins for the named recordings"},
                    {"purpose", "catalogue of bad practices"}};
    cat.concepts = uml_concepts();

    cat.assets = {
        synth_asset("car_engine", "car engine", Generator::square, 55, 1.2,
                    {{"am_hz", 8}, {"am_depth", 0.5}, {"noise_mix", 0.3}, {"noise_cutoff_hz", 600}, {"seed", 41}}),
        synth_asset("car_engine_b", "car engine", Generator::square, 62, 1.0,
                    {{"am_hz", 10}, {"am_depth", 0.4}, {"noise_mix", 0.3}, {"noise_cutoff_hz", 700}, {"seed", 43}}),
        synth_asset("running_water_a", "running water", Generator::filtered_noise, 0, 1.2,
                    {{"cutoff_hz", 1200}, {"seed", 11}}),
        synth_asset("running_water_b", "running water", Generator::filtered_noise, 0, 1.2,
                    {{"cutoff_hz", 1260}, {"seed", 12}}),
        synth_asset("wind_a", "wind", Generator::filtered_noise, 0, 1.5,
                    {{"cutoff_hz", 500}, {"am_hz", 0.5}, {"am_depth", 0.6}, {"seed", 51}}),
        synth_asset("wind_b", "wind", Generator::filtered_noise, 0, 1.5,
                    {{"cutoff_hz", 520}, {"am_hz", 0.45}, {"am_depth", 0.6}, {"seed", 52}}),
        synth_asset("farm_animals", "farm animals", Generator::sine, 220, 0.9,
                    {{"harmonics", 5}, {"vibrato_hz", 4}, {"vibrato_semitones", 2}, {"am_hz", 3}, {"am_depth", 0.6}}),
        synth_asset("piano_notes", "piano notes", Generator::pluck, 262, 0.9, {{"damping", 0.3}, {"seed", 61}}),
        synth_asset("window_cleaning", "window being cleaned", Generator::sine, 1800, 0.9,
                    {{"vibrato_hz", 7}, {"vibrato_semitones", 3}, {"noise_mix", 0.4}, {"noise_cutoff_hz", 5000}}),
        synth_asset("tyres_braking", "tyres braking", Generator::chirp, 1500, 0.9,
                    {{"end_hz", 900}, {"noise_mix", 0.5}, {"noise_cutoff_hz", 4000}}),
        synth_asset("bottle_crushed", "plastic bottle crushed", Generator::filtered_noise, 0, 0.9,
                    {{"cutoff_hz", 6000}, {"highpass_hz", 800}, {"pulse_hz", 14}, {"pulse_duty", 0.2}, {"seed", 67}}),
        synth_asset("elephant", "elephant", Generator::chirp, 320, 1.1,
                    {{"end_hz", 520}, {"noise_mix", 0.25}, {"noise_cutoff_hz", 2000}, {"seed", 71}}),
        synth_asset("cartoon_running", "cartoon running", Generator::pluck, 520, 1.0,
                    {{"damping", 0.8}, {"pulse_hz", 8}, {"pulse_duty", 0.4}, {"seed", 73}}),
        synth_asset("doorbell", "doorbell", Generator::sine, 660, 1.2,
                    {{"harmonics", 2}, {"decay_per_s", 2.5}}),
        synth_asset("explosion", "explosion", Generator::filtered_noise, 0, 1.5,
                    {{"cutoff_hz", 250}, {"decay_per_s", 2.5}, {"seed", 79}}),
    };

    // Six sounds staggered so the whole lasts well beyond three seconds.
    std::vector<Component> inheritance = {
        part("farm_animals", at(0.0)),   part("piano_notes", at(0.6)),    part("window_cleaning", at(1.2)),
        part("tyres_braking", at(1.8)),  part("bottle_crushed", at(2.4)), part("car_engine_b", at(2.9)),
    };

    const auto sym = SignMode::symbol;
    cat.bindings = {
        bind("Class", sym, "Class: a car engine", "no particular reason", {part("car_engine")}),
        bind("Attribute", sym, "Attribute: a car engine", "no particular reason", {part("car_engine")}),
        bind("Operation", sym, "Operation: running water", "no particular reason", {part("running_water_a")}),
        bind("Association", sym, "Association: running water", "no particular reason", {part("running_water_b")}),
        bind("Inheritance", sym, "Inheritance: six everyday sounds", "no particular reason", std::move(inheritance),
             CompositionMode::mixed),
        bind("Realization", sym, "Realization: wind", "no particular reason", {part("wind_a")}),
        bind("Dependency", sym, "Dependency: wind", "no particular reason", {part("wind_b")}),
        bind("Aggregation", sym, "Aggregation: an elephant", "no particular reason", {part("elephant")}),
        bind("Composition", sym, "Composition: cartoon running", "no particular reason", {part("cartoon_running")}),
        bind("AssociationClass", sym, "Association class: a doorbell", "no particular reason", {part("doorbell")}),
        bind("Package", sym, "Package: an explosion", "no particular reason", {part("explosion")}),
    };
    // Listeners could not tell the two winds apart; keep that on record
    // next to the measured distance.
    for (const char* id : {"Realization", "Dependency"})
        for (auto& b : cat.bindings)
            if (b.concept_id == id) b.metadata["note"] = "listeners could not tell the two wind sounds apart";
    return cat;
}

audio::AudioBuffer boundary_click() {
    // Short bright tick, far from every catalogue sound.
    audio::SynthSpec spec{Generator::square, 2400, {{"decay_per_s", 80}, {"amp", 0.5}}};
    return audio::synth(spec, 0.06);
}

}  // namespace umlsonic::catalogue
