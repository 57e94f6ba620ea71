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

#include "umlsonic/uml/model.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "umlsonic/error.hpp"

namespace umlsonic::uml {

namespace {

std::string join(const std::vector<std::string>& parts) {
    std::string out;
    for (const auto& p : parts) {
        if (!out.empty()) out += '.';
        out += p;
    }
    return out;
}

std::vector<std::string> split(std::string_view text) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto dot = text.find('.', start);
        out.emplace_back(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
        if (dot == std::string_view::npos) break;
        start = dot + 1;
    }
    return out;
}

bool has_prefix(const std::vector<std::string>& path, const std::vector<std::string>& prefix) {
    return path.size() >= prefix.size() && std::equal(prefix.begin(), prefix.end(), path.begin());
}

// Classifier by qualified name, or by a suffix of it when exactly one
// classifier matches.
std::optional<std::size_t> find_classifier(const ClassModel& m, const std::vector<std::string>& parts) {
    std::optional<std::size_t> hit;
    int hits = 0;
    for (std::size_t i = 0; i < m.classifiers.size(); ++i) {
        const auto& c = m.classifiers[i];
        std::vector<std::string> q = c.package_path;
        q.push_back(c.name);
        if (q == parts) return i;
        if (parts.size() < q.size() && std::equal(parts.rbegin(), parts.rend(), q.rbegin())) {
            hit = i;
            ++hits;
        }
    }
    return hits == 1 ? hit : std::nullopt;
}

}  // namespace

bool in_bounds(const Position& p) {
    return std::isfinite(p.x) && std::isfinite(p.y) && p.x >= 0.0 && p.x <= 100.0 && p.y >= 0.0 && p.y <= 100.0;
}

std::string_view to_string(RelationshipKind k) {
    switch (k) {
        case RelationshipKind::association: return "association";
        case RelationshipKind::inheritance: return "inheritance";
        case RelationshipKind::realization: return "realization";
        case RelationshipKind::dependency: return "dependency";
        case RelationshipKind::aggregation: return "aggregation";
        case RelationshipKind::composition: return "composition";
        case RelationshipKind::association_class: return "association_class";
    }
    return "association";
}

std::string Package::qualified_name() const { return join(path); }

std::string Classifier::qualified_name() const {
    auto p = package_path;
    p.push_back(name);
    return join(p);
}

std::string to_string(const ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::package: return m.packages.at(r.index).qualified_name();
        case ElementRef::Kind::classifier: return m.classifiers.at(r.index).qualified_name();
        case ElementRef::Kind::attribute: {
            const auto& c = m.classifiers.at(r.index);
            return c.qualified_name() + "." + c.attributes.at(r.member).name;
        }
        case ElementRef::Kind::operation: {
            const auto& c = m.classifiers.at(r.index);
            return c.qualified_name() + "." + c.operations.at(r.member).name + "()";
        }
        case ElementRef::Kind::relationship: return "rel#" + std::to_string(r.index);
    }
    return {};
}

std::optional<std::size_t> find_package(const ClassModel& m, const std::vector<std::string>& path) {
    for (std::size_t i = 0; i < m.packages.size(); ++i)
        if (m.packages[i].path == path) return i;
    return std::nullopt;
}

ElementRef resolve_element(const ClassModel& m, std::string_view text) {
    const std::string t(text);
    if (t.starts_with("rel#")) {
        try {
            std::size_t used = 0;
            const auto k = std::stoul(t.substr(4), &used);
            if (used == t.size() - 4 && k < m.relationships.size()) return {ElementRef::Kind::relationship, k, 0};
        } catch (const std::exception&) {
        }
        throw NotFound("no relationship '" + t + "'");
    }
    auto parts = split(text);
    if (std::any_of(parts.begin(), parts.end(), [](const auto& p) { return p.empty(); }))
        throw NotFound("malformed element reference '" + t + "'");
    if (auto p = find_package(m, parts)) return {ElementRef::Kind::package, *p, 0};
    if (auto c = find_classifier(m, parts)) return {ElementRef::Kind::classifier, *c, 0};
    if (parts.size() >= 2) {
        std::string member = parts.back();
        parts.pop_back();
        if (auto c = find_classifier(m, parts)) {
            const auto& cl = m.classifiers[*c];
            const bool op = member.ends_with("()");
            if (op) member.resize(member.size() - 2);
            if (!op)
                for (std::size_t i = 0; i < cl.attributes.size(); ++i)
                    if (cl.attributes[i].name == member) return {ElementRef::Kind::attribute, *c, i};
            for (std::size_t i = 0; i < cl.operations.size(); ++i)
                if (cl.operations[i].name == member) return {ElementRef::Kind::operation, *c, i};
        }
    }
    throw NotFound("no model element '" + t + "'");
}

std::string concept_of(const ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::package: return "Package";
        case ElementRef::Kind::classifier: return "Class";
        case ElementRef::Kind::attribute: return "Attribute";
        case ElementRef::Kind::operation: return "Operation";
        case ElementRef::Kind::relationship:
            switch (m.relationships.at(r.index).kind) {
                case RelationshipKind::association: return "Association";
                case RelationshipKind::inheritance: return "Inheritance";
                case RelationshipKind::realization: return "Realization";
                case RelationshipKind::dependency: return "Dependency";
                case RelationshipKind::aggregation: return "Aggregation";
                case RelationshipKind::composition: return "Composition";
                case RelationshipKind::association_class: return "AssociationClass";
            }
    }
    return {};
}

std::size_t depth_of(const ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::package: return m.packages.at(r.index).path.size() - 1;
        case ElementRef::Kind::relationship: {
            // The shallower endpoint: the relationship is audible from there.
            const auto& rel = m.relationships.at(r.index);
            return std::min(m.classifiers.at(rel.source).package_path.size(),
                            m.classifiers.at(rel.target).package_path.size());
        }
        default: return m.classifiers.at(r.index).package_path.size();
    }
}

Position anchor_of(const ClassModel& m, const ElementRef& r) {
    auto pos = [&](std::size_t c) { return m.classifiers.at(c).position.value_or(Position{}); };
    switch (r.kind) {
        case ElementRef::Kind::package: {
            const auto& pkg = m.packages.at(r.index);
            if (pkg.position) return *pkg.position;
            double x = 0, y = 0;
            std::size_t n = 0;
            for (std::size_t i = 0; i < m.classifiers.size(); ++i)
                if (has_prefix(m.classifiers[i].package_path, pkg.path)) {
                    const auto p = pos(i);
                    x += p.x, y += p.y, ++n;
                }
            return n == 0 ? Position{} : Position{x / static_cast<double>(n), y / static_cast<double>(n)};
        }
        case ElementRef::Kind::relationship: {
            const auto& rel = m.relationships.at(r.index);
            const auto a = pos(rel.source), b = pos(rel.target);
            return {(a.x + b.x) / 2.0, (a.y + b.y) / 2.0};
        }
        default: return pos(r.index);
    }
}

std::vector<ElementRef> children_of(const ClassModel& m, const std::optional<ElementRef>& parent) {
    std::vector<ElementRef> out;
    if (parent && parent->kind == ElementRef::Kind::classifier) {
        const auto& c = m.classifiers.at(parent->index);
        for (std::size_t i = 0; i < c.attributes.size(); ++i) out.push_back({ElementRef::Kind::attribute, parent->index, i});
        for (std::size_t i = 0; i < c.operations.size(); ++i) out.push_back({ElementRef::Kind::operation, parent->index, i});
        return out;
    }
    if (parent && parent->kind != ElementRef::Kind::package) return out;
    const std::vector<std::string> scope = parent ? m.packages.at(parent->index).path : std::vector<std::string>{};
    std::vector<std::pair<std::size_t, ElementRef>> found;
    for (std::size_t i = 0; i < m.packages.size(); ++i)
        if (m.packages[i].parent_path() == scope) found.push_back({m.packages[i].decl, {ElementRef::Kind::package, i, 0}});
    for (std::size_t i = 0; i < m.classifiers.size(); ++i)
        if (m.classifiers[i].package_path == scope) found.push_back({m.classifiers[i].decl, {ElementRef::Kind::classifier, i, 0}});
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& f : found) out.push_back(f.second);
    return out;
}

std::optional<ElementRef> parent_of(const ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::attribute:
        case ElementRef::Kind::operation: return ElementRef{ElementRef::Kind::classifier, r.index, 0};
        case ElementRef::Kind::relationship: return std::nullopt;
        case ElementRef::Kind::package: {
            const auto pp = m.packages.at(r.index).parent_path();
            if (pp.empty()) return std::nullopt;
            return ElementRef{ElementRef::Kind::package, find_package(m, pp).value(), 0};
        }
        case ElementRef::Kind::classifier: {
            const auto& pp = m.classifiers.at(r.index).package_path;
            if (pp.empty()) return std::nullopt;
            return ElementRef{ElementRef::Kind::package, find_package(m, pp).value(), 0};
        }
    }
    return std::nullopt;
}

std::vector<std::size_t> relationships_of(const ClassModel& m, std::size_t classifier) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < m.relationships.size(); ++i) {
        const auto& r = m.relationships[i];
        if (r.source == classifier || r.target == classifier || r.assoc_class == classifier) out.push_back(i);
    }
    return out;
}

std::vector<ElementRef> walk_elements(const ClassModel& m) {
    std::vector<ElementRef> out;
    auto visit = [&](auto&& self, const std::optional<ElementRef>& scope) -> void {
        for (const auto& child : children_of(m, scope)) {
            out.push_back(child);
            self(self, child);
        }
    };
    visit(visit, std::nullopt);
    for (std::size_t i = 0; i < m.relationships.size(); ++i) out.push_back({ElementRef::Kind::relationship, i, 0});
    return out;
}

std::size_t ModelStats::element_count() const {
    std::size_t n = packages + classifiers + attributes + operations;
    for (auto r : relationships) n += r;
    return n;
}

ModelStats model_stats(const ClassModel& m) {
    ModelStats s;
    s.packages = m.packages.size();
    for (const auto& p : m.packages) s.max_package_depth = std::max(s.max_package_depth, p.path.size());
    s.classifiers = m.classifiers.size();
    for (const auto& c : m.classifiers) {
        (c.kind == ClassifierKind::interface ? s.interfaces : s.classes)++;
        s.attributes += c.attributes.size();
        s.operations += c.operations.size();
    }
    for (const auto& r : m.relationships) ++s.relationships[static_cast<int>(r.kind)];
    return s;
}

ClassModel assign_layout(ClassModel m) {
    std::vector<Classifier*> open;
    for (auto& c : m.classifiers)
        if (!c.position) open.push_back(&c);
    std::sort(open.begin(), open.end(), [](auto* a, auto* b) { return a->decl < b->decl; });
    const std::size_t n = open.size();
    if (n == 0) return m;
    const auto cols = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
    const std::size_t rows = (n + cols - 1) / cols;
    for (std::size_t k = 0; k < n; ++k) {
        const auto col = static_cast<double>(k % cols), row = static_cast<double>(k / cols);
        open[k]->position = Position{(col + 0.5) * 100.0 / static_cast<double>(cols),
                                     (row + 0.5) * 100.0 / static_cast<double>(rows)};
    }
    return m;
}

}  // namespace umlsonic::uml
