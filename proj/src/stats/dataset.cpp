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

#include "umlsonic/stats/dataset.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "umlsonic/error.hpp"

namespace umlsonic::stats {

std::vector<CsvRow> parse_csv(std::string_view text) {
    std::vector<CsvRow> rows;
    CsvRow row{1, {}};
    std::string field;
    std::size_t line = 1;
    bool quoted = false, field_started = false;
    std::size_t quote_line = 0;

    auto end_field = [&] {
        row.fields.push_back(std::move(field));
        field.clear();
        field_started = false;
    };
    auto end_row = [&] {
        end_field();
        // A physically empty line is not a record.
        if (!(row.fields.size() == 1 && row.fields[0].empty())) rows.push_back(std::move(row));
        row = CsvRow{line, {}};
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        const char c = text[i];
        if (quoted) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    quoted = false;
                }
            } else {
                if (c == '\n') ++line;
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                if (field_started) throw ParseError("quote inside an unquoted field", line);
                quoted = true;
                field_started = true;
                quote_line = line;
                break;
            case ',': end_field(); break;
            case '\r': break;
            case '\n':
                ++line;
                end_row();
                break;
            default:
                field += c;
                field_started = true;
        }
    }
    if (quoted) throw ParseError("unterminated quoted field", quote_line);
    if (!field.empty() || !row.fields.empty()) end_row();
    return rows;
}

StudyDataset load_responses(std::string_view csv_text) {
    const auto rows = parse_csv(csv_text);
    if (rows.empty()) throw ParseError("missing header row", 1);

    enum class Col { ignore, pref, relevance, suggest };
    const auto& header = rows[0].fields;
    std::vector<std::pair<Col, std::size_t>> cols;
    StudyDataset d;
    std::vector<std::string> suggest_names;
    for (const auto& h : header) {
        if (h.starts_with("pref_") && h.size() > 5) {
            cols.push_back({Col::pref, d.elements.size()});
            d.elements.push_back(h.substr(5));
        } else if (h.starts_with("relevance_") && h.size() > 10) {
            cols.push_back({Col::relevance, d.principles.size()});
            d.principles.push_back(h.substr(10));
        } else if (h.starts_with("suggest_") && h.size() > 8) {
            cols.push_back({Col::suggest, suggest_names.size()});
            suggest_names.push_back(h.substr(8));
        } else {
            cols.push_back({Col::ignore, 0});
        }
    }
    d.preferences.resize(d.elements.size());
    d.ratings.resize(d.principles.size());

    for (std::size_t r = 1; r < rows.size(); ++r) {
        const auto& row = rows[r];
        if (row.fields.size() != header.size())
            throw ParseError("expected " + std::to_string(header.size()) + " fields, found " +
                                 std::to_string(row.fields.size()),
                             row.line);
        const std::size_t respondent = r - 1;
        std::vector<std::pair<std::string, std::string>> suggestions;
        std::vector<std::string> chose_sound;
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const auto& v = row.fields[c];
            const auto [kind, idx] = cols[c];
            switch (kind) {
                case Col::pref: {
                    auto& counts = d.preferences[idx];
                    if (v == "proposed") counts.proposed++, chose_sound.push_back(d.elements[idx]);
                    else if (v == "baseline") counts.baseline++, chose_sound.push_back(d.elements[idx]);
                    else if (v == "none") counts.none++;
                    else if (!v.empty())
                        throw ParseError("preference for " + d.elements[idx] + " must be proposed, baseline or none, not '" + v + "'",
                                         row.line);
                    break;
                }
                case Col::relevance: {
                    if (v.empty()) break;
                    if (v.size() != 1 || v[0] < '1' || v[0] > '5')
                        throw ParseError("rating '" + v + "' for " + d.principles[idx] + " outside 1..5", row.line);
                    d.ratings[idx].push_back(v[0] - '0');
                    break;
                }
                case Col::suggest:
                    if (!v.empty()) suggestions.push_back({suggest_names[idx], v});
                    break;
                case Col::ignore: break;
            }
        }
        for (auto& [element, text] : suggestions) {
            const bool unsolicited = std::find(chose_sound.begin(), chose_sound.end(), element) != chose_sound.end();
            d.free_text.push_back({respondent, element, std::move(text), unsolicited});
        }
    }
    d.respondents = rows.size() - 1;
    return d;
}

StudyDataset load_responses_file(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open responses " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return load_responses(ss.str());
}

}  // namespace umlsonic::stats
