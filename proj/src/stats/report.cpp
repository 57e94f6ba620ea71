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

#include "umlsonic/stats/report.hpp"

#include <cstdio>

#include "json.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::stats {

using nlohmann::json;

StudyReport study_report(const StudyDataset& data, double alpha) {
    StudyReport r;
    r.respondents = data.respondents;
    r.alpha = alpha;
    r.free_text = data.free_text;
    r.evidence.respondents = data.respondents;

    std::vector<double> pref_p;
    for (std::size_t i = 0; i < data.elements.size(); ++i) {
        PreferenceRow row;
        row.element = data.elements[i];
        row.counts = data.preferences[i];
        const long obs[] = {row.counts.proposed, row.counts.baseline, row.counts.none};
        if (row.counts.answered() > 0) {
            row.chi = chi_square_gof(obs);
            row.significant = row.chi.p < alpha;
        }
        r.low_n = r.low_n || row.chi.low_n || row.counts.answered() == 0;
        pref_p.push_back(row.chi.p);
        if (data.respondents > 0) {
            const double n = static_cast<double>(data.respondents);
            r.evidence.proposed[row.element] = static_cast<double>(row.counts.proposed) / n;
            r.evidence.baseline[row.element] = static_cast<double>(row.counts.baseline) / n;
        }
        r.preference.push_back(std::move(row));
    }
    const auto pref_holm = holm_bonferroni(pref_p, alpha);
    for (std::size_t i = 0; i < r.preference.size(); ++i) {
        r.preference[i].holm_significant = pref_holm.entries[i].significant;
        r.preference[i].holm_threshold = pref_holm.entries[i].threshold;
    }

    std::vector<double> rel_p;
    for (std::size_t i = 0; i < data.principles.size(); ++i) {
        RelevanceRow row;
        row.principle = data.principles[i];
        for (int v : data.ratings[i]) ++row.counts[static_cast<std::size_t>(v - 1)];
        if (!data.ratings[i].empty()) {
            row.descriptive = descriptive_stats(data.ratings[i]);
            row.chi = chi_square_gof(row.counts);
            row.significant = row.chi.p < alpha;
        }
        r.low_n = r.low_n || row.chi.low_n || data.ratings[i].empty();
        rel_p.push_back(row.chi.p);
        r.relevance.push_back(std::move(row));
    }
    const auto rel_holm = holm_bonferroni(rel_p, alpha);
    for (std::size_t i = 0; i < r.relevance.size(); ++i) {
        r.relevance[i].holm_significant = rel_holm.entries[i].significant;
        r.relevance[i].holm_threshold = rel_holm.entries[i].threshold;
    }
    return r;
}

namespace {

json chi_json(const ChiSquareResult& c) {
    return {{"chi_square", c.statistic}, {"df", c.df}, {"p", c.p}, {"observed", c.observed},
            {"expected", c.expected}, {"low_n", c.low_n}};
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

std::string pad(std::string s, std::size_t w, bool right = false) {
    if (s.size() >= w) return s;
    return right ? std::string(w - s.size(), ' ') + s : s + std::string(w - s.size(), ' ');
}

std::string marks(bool raw, bool holm) { return holm ? "**" : raw ? "*" : ""; }

}  // namespace

std::string report_json(const StudyReport& r) {
    json j;
    j["respondents"] = r.respondents;
    j["alpha"] = r.alpha;
    j["low_n"] = r.low_n;
    j["preference"] = json::array();
    for (const auto& p : r.preference) {
        json row = chi_json(p.chi);
        row["element"] = p.element;
        row["counts"] = {{"proposed", p.counts.proposed}, {"baseline", p.counts.baseline}, {"none", p.counts.none}};
        row["significant"] = p.significant;
        row["holm_significant"] = p.holm_significant;
        row["holm_threshold"] = p.holm_threshold;
        j["preference"].push_back(std::move(row));
    }
    j["relevance"] = json::array();
    for (const auto& p : r.relevance) {
        json row = chi_json(p.chi);
        row["principle"] = p.principle;
        row["counts"] = p.counts;
        row["n"] = p.descriptive.n;
        row["mean"] = p.descriptive.mean;
        row["stddev"] = p.descriptive.stddev;
        row["min"] = p.descriptive.min;
        row["max"] = p.descriptive.max;
        row["significant"] = p.significant;
        row["holm_significant"] = p.holm_significant;
        row["holm_threshold"] = p.holm_threshold;
        j["relevance"].push_back(std::move(row));
    }
    j["transparency_evidence"] = {{"respondents", r.evidence.respondents},
                                  {"proposed", r.evidence.proposed},
                                  {"baseline", r.evidence.baseline}};
    j["free_text"] = json::array();
    for (const auto& f : r.free_text)
        j["free_text"].push_back(
            {{"respondent", f.respondent}, {"element", f.element}, {"text", f.text}, {"unsolicited", f.unsolicited}});
    return j.dump(2) + "\n";
}

std::string report_text(const StudyReport& r) {
    std::string out;
    out += "Respondents: " + std::to_string(r.respondents) + ", alpha " + fmt("%.3g", r.alpha) +
           " (* p < alpha, ** also after Holm-Bonferroni)\n";
    if (r.low_n) out += "Caveat: some expected counts are below 5; chi-square p-values are approximate.\n";

    out += "\nSound preference\n";
    out += pad("", 20) + pad("proposed", 9, true) + pad("baseline", 9, true) + pad("none", 6, true) +
           pad("chi-square", 12, true) + pad("df", 4, true) + pad("sig.", 8, true) + "\n";
    for (const auto& p : r.preference) {
        out += pad(p.element, 20) + pad(std::to_string(p.counts.proposed), 9, true) +
               pad(std::to_string(p.counts.baseline), 9, true) + pad(std::to_string(p.counts.none), 6, true) +
               pad(fmt("%.3f", p.chi.statistic), 12, true) + pad(std::to_string(p.chi.df), 4, true) +
               pad(fmt("%.3f", p.chi.p), 8, true) + " " + marks(p.significant, p.holm_significant) + "\n";
    }

    out += "\nPerceived relevance\n";
    out += pad("", 28) + pad("N", 4, true) + pad("mean", 8, true) + pad("stddev", 9, true) + pad("min", 5, true) +
           pad("max", 5, true) + pad("chi-square", 12, true) + pad("df", 4, true) + pad("sig.", 8, true) + "\n";
    for (const auto& p : r.relevance) {
        out += pad(p.principle, 28) + pad(std::to_string(p.descriptive.n), 4, true) +
               pad(fmt("%.4f", p.descriptive.mean), 8, true) + pad(fmt("%.5f", p.descriptive.stddev), 9, true) +
               pad(fmt("%.0f", p.descriptive.min), 5, true) + pad(fmt("%.0f", p.descriptive.max), 5, true) +
               pad(fmt("%.3f", p.chi.statistic), 12, true) + pad(std::to_string(p.chi.df), 4, true) +
               pad(fmt("%.3f", p.chi.p), 8, true) + " " + marks(p.significant, p.holm_significant) + "\n";
    }

    std::size_t kept = 0;
    for (const auto& f : r.free_text) kept += f.unsolicited ? 0 : 1;
    if (!r.free_text.empty())
        out += "\nSuggestions: " + std::to_string(kept) + " analysed, " + std::to_string(r.free_text.size() - kept) +
               " unsolicited (kept, not analysed)\n";
    return out;
}

TransparencyEvidence evidence_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("malformed evidence JSON: ") + e.what(), 1);
    }
    if (j.is_object() && j.contains("transparency_evidence")) j = j["transparency_evidence"];
    if (!j.is_object() || !j.contains("proposed"))
        throw ParseError("no transparency evidence (expected a 'proposed' fraction map)", 1);
    TransparencyEvidence e;
    try {
        e.respondents = j.value("respondents", std::size_t{0});
        e.proposed = j.at("proposed").get<std::map<std::string, double>>();
        if (j.contains("baseline")) e.baseline = j.at("baseline").get<std::map<std::string, double>>();
    } catch (const json::exception& ex) {
        throw ParseError(std::string("malformed evidence: ") + ex.what(), 1);
    }
    for (const auto* m : {&e.proposed, &e.baseline})
        for (const auto& [k, v] : *m)
            if (!(v >= 0.0 && v <= 1.0)) throw ParseError("evidence fraction for " + k + " outside [0, 1]", 1);
    return e;
}

}  // namespace umlsonic::stats
