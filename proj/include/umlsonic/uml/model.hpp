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

#ifndef UMLSONIC_UML_MODEL_HPP
#define UMLSONIC_UML_MODEL_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace umlsonic::uml {

// Abstract layout units; both axes span [0, 100].
struct Position {
    double x = 50.0;
    double y = 50.0;

    bool operator==(const Position&) const = default;
};

bool in_bounds(const Position& p);

enum class ClassifierKind { class_, interface };

enum class RelationshipKind { association, inheritance, realization, dependency, aggregation, composition, association_class };

std::string_view to_string(RelationshipKind k);

struct Attribute {
    std::string name;
    std::string type;  // may be empty

    bool operator==(const Attribute&) const = default;
};

struct Operation {
    std::string name;
    std::string params;  // raw text between the parentheses
    std::string return_type;

    bool operator==(const Operation&) const = default;
};

struct Package {
    std::vector<std::string> path;  // full path, last entry is the name
    std::optional<Position> position;
    std::size_t decl = 0;           // declaration sequence number

    const std::string& name() const { return path.back(); }
    std::string qualified_name() const;
    std::vector<std::string> parent_path() const { return {path.begin(), path.end() - 1}; }

    bool operator==(const Package&) const = default;
};

struct Classifier {
    std::string name;
    ClassifierKind kind = ClassifierKind::class_;
    std::vector<Attribute> attributes;
    std::vector<Operation> operations;
    std::vector<std::string> package_path;
    std::optional<Position> position;
    std::size_t decl = 0;

    std::string qualified_name() const;

    bool operator==(const Classifier&) const = default;
};

// Endpoints index ClassModel::classifiers. Arrows are stored in the
// child-to-parent sense: an inheritance's source is the subclass, a
// realization's source is the implementing class.
struct Relationship {
    RelationshipKind kind = RelationshipKind::association;
    std::size_t source = 0;
    std::size_t target = 0;
    std::optional<std::size_t> assoc_class;
    std::string label;

    bool operator==(const Relationship&) const = default;
};

struct ClassModel {
    std::string name;
    std::vector<Package> packages;
    std::vector<Classifier> classifiers;
    std::vector<Relationship> relationships;

    bool operator==(const ClassModel&) const = default;
};

/// A model element: a package, a classifier, one of its members, or a
/// relationship. The text form is a dotted qualified path
/// ("Library.Catalog.Book", "Library.Catalog.Book.isbn",
/// "Library.Lending.Loan.renew()") or "rel#k" for relationships.
struct ElementRef {
    enum class Kind { package, classifier, attribute, operation, relationship };
    Kind kind = Kind::package;
    std::size_t index = 0;   // into packages / classifiers / relationships
    std::size_t member = 0;  // attribute or operation index

    bool operator==(const ElementRef&) const = default;
    auto operator<=>(const ElementRef&) const = default;
};

std::string to_string(const ClassModel& m, const ElementRef& ref);

// Accepts qualified paths and, where unambiguous, unqualified classifier
// names ("Book", "Book.isbn"). Throws NotFound.
ElementRef resolve_element(const ClassModel& m, std::string_view text);

// The concept an element is sonified as. Interfaces use "Class".
std::string concept_of(const ClassModel& m, const ElementRef& ref);

// Number of packages enclosing the element (for a package: its ancestors).
std::size_t depth_of(const ClassModel& m, const ElementRef& ref);

// Anchor position: classifiers and members use the classifier position,
// packages the mean of the classifiers they contain (centre when empty or
// unpositioned), relationships the midpoint of their endpoints. Missing
// classifier positions count as the centre; run assign_layout first.
Position anchor_of(const ClassModel& m, const ElementRef& ref);

/// Structural children in declaration order. The root scope (nullopt)
/// holds top-level packages and classifiers; a package holds its
/// sub-packages and classifiers; a classifier holds attributes then
/// operations; members have no children.
std::vector<ElementRef> children_of(const ClassModel& m, const std::optional<ElementRef>& parent);
std::optional<ElementRef> parent_of(const ClassModel& m, const ElementRef& ref);

// Relationships with the classifier as source, target or association class,
// in declaration order.
std::vector<std::size_t> relationships_of(const ClassModel& m, std::size_t classifier);

/// Every element once: depth-first over the package tree in declaration
/// order (package, then its contents; a classifier is followed by its
/// attributes and operations), then relationships in declaration order.
std::vector<ElementRef> walk_elements(const ClassModel& m);

std::optional<std::size_t> find_package(const ClassModel& m, const std::vector<std::string>& path);

struct ModelStats {
    std::size_t packages = 0;
    std::size_t max_package_depth = 0;  // length of the longest package path
    std::size_t classifiers = 0;
    std::size_t classes = 0;
    std::size_t interfaces = 0;
    std::size_t attributes = 0;
    std::size_t operations = 0;
    std::size_t relationships[7] = {};  // indexed by RelationshipKind

    std::size_t relationship_count(RelationshipKind k) const { return relationships[static_cast<int>(k)]; }
    std::size_t element_count() const;

    bool operator==(const ModelStats&) const = default;
};

ModelStats model_stats(const ClassModel& m);

/// Gives every unpositioned classifier a grid slot: n unpositioned
/// classifiers fill cols = ceil(sqrt(n)) columns and ceil(n / cols) rows,
/// row-major in declaration order, at cell centres
/// x = (col + 0.5) * 100 / cols, y = (row + 0.5) * 100 / rows.
ClassModel assign_layout(ClassModel m);

}  // namespace umlsonic::uml

#endif  // UMLSONIC_UML_MODEL_HPP
