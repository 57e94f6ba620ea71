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

#ifndef UMLSONIC_STATS_REPORT_HPP
#define UMLSONIC_STATS_REPORT_HPP

#include <array>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "umlsonic/stats/dataset.hpp"
#include "umlsonic/stats/tests.hpp"

namespace umlsonic::stats {

struct PreferenceRow {
    std::string element;
    PreferenceCounts counts;
    ChiSquareResult chi;
    bool significant = false;       // raw p < alpha
    bool holm_significant = false;
    double holm_threshold = 0.0;
};

struct RelevanceRow {
    std::string principle;
    Descriptive descriptive;
    std::array<long, 5> counts{};  // ratings 1..5
    ChiSquareResult chi;
    bool significant = false;
    bool holm_significant = false;
    double holm_threshold = 0.0;
};

/// Fraction of respondents preferring each catalogue's sound, per element.
/// This is what the linter checks semantic transparency against.
struct TransparencyEvidence {
    std::size_t respondents = 0;
    std::map<std::string, double> proposed;
    std::map<std::string, double> baseline;

    bool empty() const { return proposed.empty() && baseline.empty(); }
    bool operator==(const TransparencyEvidence&) const = default;
};

struct StudyReport {
    std::size_t respondents = 0;
    double alpha = 0.05;
    std::vector<PreferenceRow> preference;
    std::vector<RelevanceRow> relevance;
    TransparencyEvidence evidence;
    std::vector<FreeText> free_text;
    bool low_n = false;  // any chi-square row has an expected count below 5
};

StudyReport study_report(const StudyDataset& data, double alpha = 0.05);

std::string report_json(const StudyReport& r);
std::string report_text(const StudyReport& r);

// Reads the "transparency_evidence" object of a report_json document (or a
// bare evidence object). Throws ParseError.
TransparencyEvidence evidence_from_json(std::string_view text);

}  // namespace umlsonic::stats

#endif  // UMLSONIC_STATS_REPORT_HPP
