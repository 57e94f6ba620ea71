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

#ifndef UMLSONIC_UML_PARSER_HPP
#define UMLSONIC_UML_PARSER_HPP

#include <filesystem>
#include <string>
#include <string_view>

#include "umlsonic/uml/model.hpp"

namespace umlsonic::uml {

/// Parses the diagram language:
///
///   diagram Library
///   package Library {
///     interface Loanable { op checkout() }
///     class Book @ (25, 40) { attr isbn: String; op describe(): String }
///   }
///   Book <|-- Novel : label
///
/// Statements end at a newline or ';'. Arrows: --> association,
/// <|-- inheritance (parent on the left), <|.. realization (interface on the
/// left), ..> dependency, o-- aggregation, *-- composition, and
/// (A, B) .. C for an association class. `//` starts a comment.
/// Throws ParseError (first error, with line and column).
ClassModel parse_diagram(std::string_view text);
ClassModel load_diagram(const std::filesystem::path& path);

// Canonical text; parse_diagram(serialize_diagram(m)) == m.
std::string serialize_diagram(const ClassModel& m);

}  // namespace umlsonic::uml

#endif  // UMLSONIC_UML_PARSER_HPP
