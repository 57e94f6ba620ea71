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

#ifndef UMLSONIC_STATS_DATASET_HPP
#define UMLSONIC_STATS_DATASET_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace umlsonic::stats {

// RFC 4180 style: quoted fields may hold commas, doubled quotes and
// newlines. Each row records the line it starts on. Throws ParseError on an
// unterminated quote.
struct CsvRow {
    std::size_t line = 0;
    std::vector<std::string> fields;
};
std::vector<CsvRow> parse_csv(std::string_view text);

struct PreferenceCounts {
    long proposed = 0;
    long baseline = 0;
    long none = 0;

    long answered() const { return proposed + baseline + none; }
    bool operator==(const PreferenceCounts&) const = default;
};

struct FreeText {
    std::size_t respondent = 0;  // 0-based row index
    std::string element;
    std::string text;
    bool unsolicited = false;  // the respondent picked a sound anyway; not analysed

    bool operator==(const FreeText&) const = default;
};

/// Responses in the column order of the file. Columns: pref_<Element>
/// (proposed | baseline | none, blank = unanswered), relevance_<Principle>
/// (1..5, blank = unanswered), suggest_<Element> (free text); anything
/// else is ignored.
struct StudyDataset {
    std::size_t respondents = 0;
    std::vector<std::string> elements;
    std::vector<PreferenceCounts> preferences;  // parallel to elements
    std::vector<std::string> principles;
    std::vector<std::vector<int>> ratings;      // parallel to principles
    std::vector<FreeText> free_text;
};

// Throws ParseError with the offending line for malformed rows, unknown
// preference values and ratings outside 1..5.
StudyDataset load_responses(std::string_view csv_text);
StudyDataset load_responses_file(const std::filesystem::path& path);

}  // namespace umlsonic::stats

#endif  // UMLSONIC_STATS_DATASET_HPP
