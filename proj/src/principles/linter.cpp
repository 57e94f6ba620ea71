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

#include "umlsonic/principles/linter.hpp"

#include <algorithm>
#include <charconv>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "json.hpp"
#include "umlsonic/acoustics/distance.hpp"
#include "umlsonic/catalogue/realize.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::principles {

using catalogue::SoundCatalogue;
using nlohmann::json;

namespace {

constexpr std::array<std::string_view, kPrincipleCount> kNames = {
    "SemioticClarity",      "PerceptualDiscriminability", "SemanticTransparency",
    "ComplexityManagement", "CognitiveIntegration",       "AuditoryExpressiveness",
    "DualCoding",           "AuditoryEconomy",            "CognitiveFit",
};

std::string fmt(double v, int prec = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

Violation make(PrincipleId p, Severity s, std::string rule, std::vector<std::string> subjects, std::string detail,
               std::optional<double> measured = std::nullopt) {
    std::sort(subjects.begin(), subjects.end());
    subjects.erase(std::unique(subjects.begin(), subjects.end()), subjects.end());
    return {p, s, std::move(rule), std::move(subjects), std::move(detail), measured};
}

std::string join(const std::vector<std::string>& v, std::string_view sep = ", ") {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += v[i];
    }
    return out;
}

struct Realized {
    std::vector<audio::AudioBuffer> audio;
    std::vector<double> duration_s;
};

Realized realize_all(const SoundCatalogue& cat, const LintConfig& config) {
    const auto n = cat.bindings.size();
    Realized r{std::vector<audio::AudioBuffer>(n), std::vector<double>(n, 0.0)};
    for_each_index(n, config.execution, [&](std::size_t i) {
        try {
            auto e = catalogue::realize_earcon(cat.bindings[i].recipe, cat, {}, config.max_earcon_s);
            r.audio[i] = std::move(e.audio);
            r.duration_s[i] = e.duration_s;
        } catch (const std::exception& ex) {
            throw IndexedError(i, cat.bindings[i].concept_id + ": " + ex.what());
        }
    });
    return r;
}

CheckResult discriminability_from(const SoundCatalogue& cat, const acoustics::DiscriminabilityMatrix& m,
                                  const LintConfig& config) {
    CheckResult out;
    const auto& b = cat.bindings;
    std::vector<std::string> sig;
    for (const auto& x : b) sig.push_back(recipe_signature(x.recipe, cat, false));
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = i + 1; j < m.size(); ++j) {
            // Two bindings of one concept are a clarity matter, not a
            // confusion between concepts.
            if (b[i].concept_id == b[j].concept_id) continue;
            // The same assets with the same variables are one sound used
            // twice: an overload, which the clarity check reports.
            if (sig[i] == sig[j]) continue;
            const double d = m.distance[i][j];
            if (!(d < config.discriminability_threshold)) continue;
            std::string detail = "earcons of " + b[i].concept_id + " and " + b[j].concept_id + " lie " + fmt(d) +
                                 " apart (threshold " + fmt(config.discriminability_threshold) + ")";
            std::set<std::string> notes;
            for (const auto* x : {&b[i], &b[j]}) {
                if (auto it = x->metadata.find("note"); it != x->metadata.end()) notes.insert(it->second);
            }
            for (const auto& n : notes) detail += "; " + n;
            out.violations.push_back(make(PrincipleId::PerceptualDiscriminability, Severity::error, "below-threshold",
                                          {b[i].concept_id, b[j].concept_id}, std::move(detail), d));
        }
    }
    return out;
}

CheckResult duration_from(const SoundCatalogue& cat, const std::vector<double>& durations, const LintConfig& config) {
    CheckResult out;
    for (std::size_t i = 0; i < durations.size(); ++i) {
        if (durations[i] > config.max_earcon_s) {
            out.violations.push_back(make(PrincipleId::AuditoryEconomy, Severity::error, "duration",
                                          {cat.bindings[i].concept_id},
                                          "earcon lasts " + fmt(durations[i], 2) + " s, limit " +
                                              fmt(config.max_earcon_s, 2) + " s",
                                          durations[i]));
        }
    }
    return out;
}

void append(std::vector<Violation>& into, CheckResult&& r) {
    for (auto& v : r.violations) into.push_back(std::move(v));
}

}  // namespace

const std::array<PrincipleId, kPrincipleCount>& all_principles() {
    static const std::array<PrincipleId, kPrincipleCount> all = {
        PrincipleId::SemioticClarity,        PrincipleId::PerceptualDiscriminability,
        PrincipleId::SemanticTransparency,   PrincipleId::ComplexityManagement,
        PrincipleId::CognitiveIntegration,   PrincipleId::AuditoryExpressiveness,
        PrincipleId::DualCoding,             PrincipleId::AuditoryEconomy,
        PrincipleId::CognitiveFit,
    };
    return all;
}

std::string_view to_string(PrincipleId p) { return kNames[static_cast<std::size_t>(p)]; }

std::optional<PrincipleId> principle_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kNames.size(); ++i) {
        if (kNames[i] == s) return static_cast<PrincipleId>(i);
    }
    return std::nullopt;
}

std::string_view to_string(Severity s) {
    switch (s) {
        case Severity::error: return "error";
        case Severity::warning: return "warning";
        case Severity::info: return "info";
    }
    return "?";
}

void validate(const LintConfig& c) {
    if (!(c.discriminability_threshold > 0) || c.max_earcons == 0 || c.max_components_per_earcon == 0 ||
        !(c.max_earcon_s > 0) || !(c.transparency_majority > 0 && c.transparency_majority <= 1)) {
        throw InvalidArgument("lint thresholds must be positive (majority in (0, 1])");
    }
}

std::size_t ValidationReport::count(Severity s) const {
    return static_cast<std::size_t>(
        std::count_if(violations.begin(), violations.end(), [s](const Violation& v) { return v.severity == s; }));
}

std::string recipe_signature(const catalogue::EarconRecipe& r, const SoundCatalogue& cat, bool by_symbol) {
    std::string sig{catalogue::to_string(r.mode)};
    for (const auto& c : r.components) {
        const auto* a = by_symbol ? cat.find_asset(c.asset_id) : nullptr;
        const auto& v = c.variables;
        sig += "|" + (a ? a->symbol_or_id() : c.asset_id);
        for (double x : {v.loudness_db, v.pitch_semitones, v.pan, v.duration_scale, v.attack_s, v.decay_s,
                         static_cast<double>(v.reverb_depth), v.start_offset_s}) {
            sig += "," + fmt(x + 0.0);  // + 0.0 folds -0 into 0
        }
    }
    return sig;
}

CheckResult check_semiotic_clarity(const SoundCatalogue& cat) {
    CheckResult out;
    std::map<std::string, std::vector<std::string>> by_signature;
    std::map<std::string, std::size_t> per_concept;
    for (const auto& b : cat.bindings) {
        by_signature[recipe_signature(b.recipe, cat)].push_back(b.concept_id);
        ++per_concept[b.concept_id];
    }
    for (const auto& [sig, concepts] : by_signature) {
        std::set<std::string> distinct(concepts.begin(), concepts.end());
        if (distinct.size() < 2) continue;
        std::vector<std::string> subjects(distinct.begin(), distinct.end());
        out.violations.push_back(make(PrincipleId::SemioticClarity, Severity::error, "overload", subjects,
                                      "one sign stands for " + std::to_string(subjects.size()) +
                                          " concepts: " + join(subjects)));
    }
    for (const auto& [id, n] : per_concept) {
        if (n > 1) {
            out.violations.push_back(make(PrincipleId::SemioticClarity, Severity::error, "redundancy", {id},
                                          std::to_string(n) + " earcons stand for " + id,
                                          static_cast<double>(n)));
        }
        if (!cat.find_concept(id)) {
            out.violations.push_back(make(PrincipleId::SemioticClarity, Severity::error, "excess", {id},
                                          "earcon bound to undeclared concept " + id));
        }
    }
    for (const auto& c : cat.concepts) {
        if (!per_concept.count(c.id)) {
            out.violations.push_back(
                make(PrincipleId::SemioticClarity, Severity::error, "deficit", {c.id}, c.id + " has no earcon"));
        }
    }
    return out;
}

CheckResult check_discriminability(const SoundCatalogue& cat, const LintConfig& config) {
    validate(config);
    const auto r = realize_all(cat, config);
    return discriminability_from(cat, acoustics::discriminability_matrix(r.audio, config.execution), config);
}

CheckResult check_economy(const SoundCatalogue& cat, const LintConfig& config) {
    validate(config);
    CheckResult out;
    std::set<std::string> distinct;
    for (const auto& b : cat.bindings) distinct.insert(recipe_signature(b.recipe, cat, false));
    if (distinct.size() > config.max_earcons) {
        out.violations.push_back(make(PrincipleId::AuditoryEconomy, Severity::error, "earcon-count",
                                      {cat.name.empty() ? std::string("catalogue") : cat.name},
                                      std::to_string(distinct.size()) + " distinct earcons, limit " +
                                          std::to_string(config.max_earcons),
                                      static_cast<double>(distinct.size())));
    }
    for (const auto& b : cat.bindings) {
        const auto n = b.recipe.components.size();
        if (n > config.max_components_per_earcon) {
            out.violations.push_back(make(PrincipleId::AuditoryEconomy, Severity::error, "component-count",
                                          {b.concept_id},
                                          b.concept_id + " combines " + std::to_string(n) + " sounds, limit " +
                                              std::to_string(config.max_components_per_earcon),
                                          static_cast<double>(n)));
        }
    }
    return out;
}

CheckResult check_duration(const SoundCatalogue& cat, const LintConfig& config) {
    validate(config);
    return duration_from(cat, realize_all(cat, config).duration_s, config);
}

CheckResult check_dual_coding(const SoundCatalogue& cat) {
    CheckResult out;
    for (const auto& b : cat.bindings) {
        const bool blank = std::all_of(b.recipe.caption.begin(), b.recipe.caption.end(),
                                       [](unsigned char ch) { return std::isspace(ch); });
        if (blank) {
            out.violations.push_back(make(PrincipleId::DualCoding, Severity::warning, "empty-caption",
                                          {b.concept_id}, b.concept_id + " has no text caption"));
        }
    }
    return out;
}

CheckResult check_semantic_transparency(const SoundCatalogue& cat, const stats::TransparencyEvidence* evidence,
                                        const LintConfig& config) {
    validate(config);
    CheckResult out;
    if (!evidence) {
        out.unchecked = "requires human-subject evidence";
        return out;
    }
    const std::map<std::string, double>* column = nullptr;
    if (cat.study_role == "proposed") column = &evidence->proposed;
    else if (cat.study_role == "baseline") column = &evidence->baseline;
    else throw EvidenceMismatch("catalogue study role '" + cat.study_role + "' has no evidence column");

    for (const auto& [id, fraction] : *column) {
        if (!cat.find_concept(id) && !cat.find_binding(id)) {
            throw EvidenceMismatch("evidence names concept '" + id + "' absent from catalogue " + cat.name);
        }
    }
    for (const auto& [id, fraction] : *column) {
        if (fraction < config.transparency_majority) {
            out.violations.push_back(make(PrincipleId::SemanticTransparency, Severity::warning, "evidence", {id},
                                          "preferred by " + fmt(100.0 * fraction, 1) + "% of " +
                                              std::to_string(evidence->respondents) + " respondents",
                                          fraction));
        }
    }
    return out;
}

CheckResult check_profile_principles(const sonifier::RenderProfile& profile) {
    CheckResult out;
    if (!profile.reverb_from_depth) {
        out.violations.push_back(make(PrincipleId::ComplexityManagement, Severity::info, "profile", {"profile"},
                                      "package depth is not conveyed (reverb_from_depth off)"));
    }
    if (!profile.motif_enabled || !profile.captions_enabled) {
        std::vector<std::string> off;
        if (!profile.motif_enabled) off.push_back("motif");
        if (!profile.captions_enabled) off.push_back("captions");
        out.violations.push_back(make(PrincipleId::CognitiveIntegration, Severity::info, "profile", {"profile"},
                                      "orientation aids disabled: " + join(off)));
    }
    std::set<sonifier::Audience> levels(profile.audience_levels.begin(), profile.audience_levels.end());
    if (levels.size() < 2) {
        out.violations.push_back(make(PrincipleId::CognitiveFit, Severity::info, "profile", {"profile"},
                                      "only one audience level is offered"));
    }
    return out;
}

CheckResult check_expressiveness(const SoundCatalogue& cat) {
    static const std::array<std::string_view, 8> names = {"loudness", "pitch",  "pan",    "duration",
                                                          "attack",   "decay", "reverb", "onset"};
    const audio::AuditoryVariables def;
    std::set<std::string_view> used;
    std::set<std::string> timbres;
    for (const auto& b : cat.bindings) {
        for (const auto& c : b.recipe.components) {
            const auto& v = c.variables;
            if (v.loudness_db != def.loudness_db) used.insert(names[0]);
            if (v.pitch_semitones != def.pitch_semitones) used.insert(names[1]);
            if (v.pan != def.pan) used.insert(names[2]);
            if (v.duration_scale != def.duration_scale) used.insert(names[3]);
            if (v.attack_s != def.attack_s) used.insert(names[4]);
            if (v.decay_s != def.decay_s) used.insert(names[5]);
            if (v.reverb_depth != def.reverb_depth) used.insert(names[6]);
            if (v.start_offset_s != def.start_offset_s) used.insert(names[7]);
            const auto* a = cat.find_asset(c.asset_id);
            timbres.insert(a ? a->symbol_or_id() : c.asset_id);
        }
    }
    std::vector<std::string> list;
    if (timbres.size() > 1) list.emplace_back("timbre");
    for (auto n : names) {
        if (used.count(n)) list.emplace_back(n);
    }
    CheckResult out;
    out.violations.push_back(make(PrincipleId::AuditoryExpressiveness, Severity::info, "expressiveness",
                                  {cat.name.empty() ? std::string("catalogue") : cat.name},
                                  std::to_string(list.size()) + " auditory variables exercised" +
                                      (list.empty() ? std::string() : ": " + join(list)),
                                  static_cast<double>(list.size())));
    return out;
}

ValidationReport validate(const SoundCatalogue& cat, const LintConfig& config,
                          const stats::TransparencyEvidence* evidence, const sonifier::RenderProfile* profile) {
    validate(config);
    ValidationReport rep;
    rep.catalogue = cat.name;
    rep.version = cat.version;
    rep.discriminability.threshold = config.discriminability_threshold;
    std::set<PrincipleId> checked;
    std::map<PrincipleId, std::string> unchecked;

    auto run = [&](std::initializer_list<PrincipleId> ps, auto&& fn) {
        try {
            CheckResult r = fn();
            if (r.unchecked) {
                for (auto p : ps) unchecked.emplace(p, *r.unchecked);
            } else {
                for (auto p : ps) checked.insert(p);
            }
            append(rep.violations, std::move(r));
        } catch (const std::exception& e) {
            for (auto p : ps) unchecked.emplace(p, e.what());
        }
    };

    run({PrincipleId::SemioticClarity}, [&] { return check_semiotic_clarity(cat); });

    // Discriminability and duration share one rendering of the catalogue.
    std::optional<Realized> realized;
    std::string realize_error;
    try {
        realized = realize_all(cat, config);
    } catch (const std::exception& e) {
        realize_error = std::string("earcons could not be rendered: ") + e.what();
    }
    run({PrincipleId::PerceptualDiscriminability}, [&] {
        if (!realized) return CheckResult{{}, realize_error};
        const auto m = acoustics::discriminability_matrix(realized->audio, config.execution);
        for (const auto& b : cat.bindings) rep.discriminability.concepts.push_back(b.concept_id);
        rep.discriminability.distance = m.distance;
        rep.discriminability.dropped_dimensions = m.norm.dropped_dimensions();
        return discriminability_from(cat, m, config);
    });
    run({PrincipleId::AuditoryEconomy}, [&] {
        CheckResult r = check_economy(cat, config);
        if (!realized) {
            r.unchecked = realize_error;
            return r;
        }
        append(r.violations, duration_from(cat, realized->duration_s, config));
        return r;
    });
    run({PrincipleId::DualCoding}, [&] { return check_dual_coding(cat); });
    run({PrincipleId::SemanticTransparency}, [&] { return check_semantic_transparency(cat, evidence, config); });
    run({PrincipleId::ComplexityManagement, PrincipleId::CognitiveIntegration, PrincipleId::CognitiveFit}, [&] {
        if (!profile) return CheckResult{{}, std::string("requires a rendering profile")};
        sonifier::validate(*profile);
        return check_profile_principles(*profile);
    });
    run({PrincipleId::AuditoryExpressiveness}, [&] { return check_expressiveness(cat); });

    // A check that failed part way keeps no partial findings.
    std::erase_if(rep.violations, [&](const Violation& v) { return unchecked.count(v.principle) > 0; });
    std::stable_sort(rep.violations.begin(), rep.violations.end(), [](const Violation& a, const Violation& b) {
        if (a.principle != b.principle) return a.principle < b.principle;
        if (a.subjects != b.subjects) return a.subjects < b.subjects;
        return a.rule < b.rule;
    });
    rep.checked.assign(checked.begin(), checked.end());
    for (auto& [p, reason] : unchecked) rep.unchecked.push_back({p, reason});
    return rep;
}

std::string report_json(const ValidationReport& r) {
    json j;
    j["catalogue"] = r.catalogue;
    j["version"] = r.version;
    j["checked"] = json::array();
    for (auto p : r.checked) j["checked"].push_back(to_string(p));
    j["unchecked"] = json::array();
    for (const auto& u : r.unchecked) j["unchecked"].push_back({{"principle", to_string(u.principle)}, {"reason", u.reason}});
    j["violations"] = json::array();
    for (const auto& v : r.violations) {
        json x{{"principle", to_string(v.principle)},
               {"severity", to_string(v.severity)},
               {"rule", v.rule},
               {"subjects", v.subjects},
               {"detail", v.detail}};
        x["measured"] = v.measured ? json(*v.measured) : json(nullptr);
        j["violations"].push_back(std::move(x));
    }
    j["summary"] = {{"error", r.count(Severity::error)},
                    {"warning", r.count(Severity::warning)},
                    {"info", r.count(Severity::info)}};
    j["discriminability"] = {{"concepts", r.discriminability.concepts},
                             {"distance", r.discriminability.distance},
                             {"threshold", r.discriminability.threshold},
                             {"dropped_dimensions", r.discriminability.dropped_dimensions}};
    return j.dump(2);
}

std::string report_text(const ValidationReport& r) {
    std::string out = "catalogue " + (r.catalogue.empty() ? std::string("(unnamed)") : r.catalogue);
    if (!r.version.empty()) out += " " + r.version;
    out += "\n";
    char line[512];
    for (const auto& v : r.violations) {
        std::snprintf(line, sizeof line, "  %-7s %-26s %-16s {%s}  %s\n", std::string(to_string(v.severity)).c_str(),
                      std::string(to_string(v.principle)).c_str(), v.rule.c_str(), join(v.subjects).c_str(),
                      v.detail.c_str());
        out += line;
    }
    for (const auto& u : r.unchecked) {
        out += "  unchecked " + std::string(to_string(u.principle)) + ": " + u.reason + "\n";
    }
    out += std::to_string(r.count(Severity::error)) + " errors, " + std::to_string(r.count(Severity::warning)) +
           " warnings, " + std::to_string(r.count(Severity::info)) + " notes; " + std::to_string(r.checked.size()) +
           " of " + std::to_string(kPrincipleCount) + " principles checked\n";
    return out;
}

}  // namespace umlsonic::principles
