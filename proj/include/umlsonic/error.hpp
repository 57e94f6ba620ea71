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

#ifndef UMLSONIC_ERROR_HPP
#define UMLSONIC_ERROR_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace umlsonic {

// Every failure raised by the library derives from Error. The concrete type
// carries the category; callers that only care about "something failed"
// catch Error.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
public:
    using Error::Error;
};

class CannotNormalize : public Error {
public:
    using Error::Error;
};

class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

class NotFound : public Error {
public:
    using Error::Error;
};

class Forbidden : public Error {
public:
    using Error::Error;
};

class EvidenceMismatch : public Error {
public:
    using Error::Error;
};

class UnboundConcept : public Error {
public:
    UnboundConcept(std::string concept_id)
        : Error("no catalogue binding for concept '" + concept_id + "'"),
          concept_(std::move(concept_id)) {}

    const std::string& concept_id() const noexcept { return concept_; }

private:
    std::string concept_;
};

// Text-format errors (manifest, diagram, CSV). Line and column are 1-based;
// column 0 means "unknown".
class ParseError : public Error {
public:
    ParseError(const std::string& message, std::size_t line, std::size_t column = 0)
        : Error(format(message, line, column)), line_(line), column_(column) {}

    std::size_t line() const noexcept { return line_; }
    std::size_t column() const noexcept { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        std::string where = "line " + std::to_string(line);
        if (column > 0) where += ", column " + std::to_string(column);
        return where + ": " + message;
    }

    std::size_t line_;
    std::size_t column_;
};

// Failure tied to one element of a batch (e.g. the k-th sound of a
// discriminability matrix, the k-th event of a timeline).
class IndexedError : public Error {
public:
    IndexedError(std::size_t index, const std::string& what)
        : Error("item " + std::to_string(index) + ": " + what), index_(index) {}

    std::size_t index() const noexcept { return index_; }

private:
    std::size_t index_;
};

}  // namespace umlsonic

#endif  // UMLSONIC_ERROR_HPP
