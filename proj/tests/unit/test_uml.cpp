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

#include <algorithm>
#include <random>
#include <sstream>
#include <set>
#include <string>

#include "doctest.h"
#include "umlsonic/error.hpp"
#include "umlsonic/uml/model.hpp"
#include "umlsonic/uml/parser.hpp"

using namespace umlsonic;
using namespace umlsonic::uml;

namespace {

ClassModel library() { return load_diagram(std::string(UMLSONIC_FIXTURES) + "/library.uml"); }

template <class F>
void check_parse_error(const std::string& text, std::size_t line, const std::string& needle, F&& extra) {
    try {
        parse_diagram(text);
        FAIL("expected ParseError for: " << text);
    } catch (const ParseError& e) {
        INFO(e.what());
        CHECK(e.line() == line);
        CHECK(std::string(e.what()).find(needle) != std::string::npos);
        extra(e);
    }
}

void check_parse_error(const std::string& text, std::size_t line, const std::string& needle) {
    check_parse_error(text, line, needle, [](const ParseError&) {});
}

// Random well-formed model: nested packages, classifiers with members,
// a mix of relationships, some explicit positions.
ClassModel random_model(std::mt19937& rng) {
    std::uniform_int_distribution<int> small(0, 3);
    std::uniform_real_distribution<double> coord(0.0, 100.0);
    std::ostringstream src;
    src << "diagram R" << rng() % 1000 << "\n";
    int counter = 0;
    std::vector<std::string> names;
    std::vector<std::string> interfaces;
    auto emit = [&](auto&& self, int depth, const std::string& prefix) -> void {
        const int classes = 1 + small(rng);
        for (int i = 0; i < classes; ++i) {
            const bool iface = small(rng) == 0;
            const std::string n = (iface ? "I" : "C") + std::to_string(counter++);
            src << (iface ? "interface " : "class ") << n;
            if (small(rng) < 2) src << " @ (" << coord(rng) << ", " << coord(rng) << ")";
            src << " {";
            for (int a = small(rng); a > 0; --a) src << " attr a" << a << ": T" << a << ";";
            for (int o = small(rng); o > 0; --o) src << " op f" << o << "(x: Int)" << (o % 2 ? ": Bool" : "") << ";";
            src << " }\n";
            names.push_back(prefix + n);
            if (iface) interfaces.push_back(prefix + n);
        }
        if (depth < 2)
            for (int p = small(rng) % 3; p > 0; --p) {
                const std::string pn = "P" + std::to_string(counter++);
                src << "package " << pn << " {\n";
                self(self, depth + 1, prefix + pn + ".");
                src << "}\n";
            }
    };
    emit(emit, 0, "");
    std::uniform_int_distribution<std::size_t> pick(0, names.size() - 1);
    static const char* arrows[] = {"-->", "..>", "o--", "*--", "<|--"};
    for (int r = 0; r < 6; ++r) {
        src << names[pick(rng)] << " " << arrows[small(rng)] << " " << names[pick(rng)];
        if (r % 2) src << " : label " << r;
        src << "\n";
    }
    if (!interfaces.empty()) src << interfaces.front() << " <|.. " << names[pick(rng)] << "\n";
    src << "(" << names[pick(rng)] << ", " << names[pick(rng)] << ") .. " << names[pick(rng)] << "\n";
    return parse_diagram(src.str());
}

}  // namespace

TEST_CASE("class with one attribute and one operation") {
    const auto m = parse_diagram("class A { attr x; op f() }");
    REQUIRE(m.classifiers.size() == 1);
    CHECK(m.classifiers[0].attributes.size() == 1);
    CHECK(m.classifiers[0].operations.size() == 1);
    CHECK(m.classifiers[0].attributes[0].name == "x");
    CHECK(m.classifiers[0].operations[0].name == "f");
}

TEST_CASE("inheritance arrow points from child to parent") {
    const auto m = parse_diagram("class A; class B; A <|-- B");
    REQUIRE(m.relationships.size() == 1);
    const auto& r = m.relationships[0];
    CHECK(r.kind == RelationshipKind::inheritance);
    CHECK(m.classifiers[r.source].name == "B");
    CHECK(m.classifiers[r.target].name == "A");
}

TEST_CASE("dangling endpoint is reported by name") {
    check_parse_error("class A\nA --> Missing", 2, "Missing", [](const ParseError& e) { CHECK(e.column() == 7); });
}

TEST_CASE("syntax and semantic errors carry locations") {
    check_parse_error("class A\nclass A", 2, "duplicate classifier");
    check_parse_error("class A @ (10, 120)", 1, "outside");
    check_parse_error("class A @ (x, 1)", 1, "malformed coordinate");
    check_parse_error("package P {\n class A\n", 3, "missing '}'");
    check_parse_error("}", 1, "unmatched");
    check_parse_error("class A { field x }", 1, "expected 'attr' or 'op'");
    check_parse_error("class A; class B\nA ~~ B", 2, "arrow");
    check_parse_error("class A; class B\nA .. B", 2, "association class");
    check_parse_error("class A; class B\nB <|.. A", 2, "not an interface");
    check_parse_error("package P { class A }\npackage Q { class A }\nA --> A", 3, "ambiguous");
    check_parse_error("class A\ndiagram X", 2, "first statement");
    check_parse_error("class A extra", 1, "unexpected");
}

TEST_CASE("every concept of the catalogue is expressible") {
    const auto m = parse_diagram(R"(
        package P {
          interface I { op run() }
          class A { attr x: Int; op f(): Int }
          class B
          class C
        }
        A --> B
        A <|-- B
        I <|.. A
        A ..> C
        A o-- B
        A *-- C
        (A, B) .. C
    )");
    std::set<std::string> concepts;
    for (const auto& e : walk_elements(m)) concepts.insert(concept_of(m, e));
    CHECK(concepts == std::set<std::string>{"Package", "Class", "Attribute", "Operation", "Association", "Inheritance",
                                            "Realization", "Dependency", "Aggregation", "Composition",
                                            "AssociationClass"});
    CHECK(parse_diagram(serialize_diagram(m)) == m);
}

TEST_CASE("library fixture statistics") {
    const auto m = library();
    const auto s = model_stats(m);
    CHECK(m.name == "Library");
    CHECK(s.packages == 3);
    CHECK(s.max_package_depth == 2);
    CHECK(s.classifiers == 6);
    CHECK(s.interfaces == 1);
    CHECK(s.attributes == 6);
    CHECK(s.operations == 5);
    for (int k = 0; k < 7; ++k) CHECK(s.relationships[k] == 1);
    CHECK(s.element_count() == 27);
    CHECK(walk_elements(m).size() == 27);
    CHECK(model_stats(parse_diagram(serialize_diagram(m))) == s);
}

TEST_CASE("empty model has zero statistics") {
    const auto s = model_stats(parse_diagram(""));
    CHECK(s == ModelStats{});
    CHECK(s.element_count() == 0);
}

TEST_CASE("grid layout") {
    SUBCASE("single classifier is centred") {
        const auto m = assign_layout(parse_diagram("class A"));
        CHECK(*m.classifiers[0].position == Position{50, 50});
    }
    SUBCASE("four classifiers fill a 2x2 grid") {
        const auto m = assign_layout(parse_diagram("class A; class B; class C; class D"));
        CHECK(*m.classifiers[0].position == Position{25, 25});
        CHECK(*m.classifiers[1].position == Position{75, 25});
        CHECK(*m.classifiers[2].position == Position{25, 75});
        CHECK(*m.classifiers[3].position == Position{75, 75});
    }
    SUBCASE("five classifiers use three columns and two rows") {
        const auto m = assign_layout(parse_diagram("class A; class B; class C; class D; class E"));
        CHECK(m.classifiers[3].position->x == doctest::Approx(100.0 / 6));
        CHECK(m.classifiers[4].position->y == doctest::Approx(75));
    }
    SUBCASE("explicit positions are kept") {
        const auto m = parse_diagram("class A @ (10, 20); class B @ (0, 100)");
        CHECK(assign_layout(m) == m);
    }
}

TEST_CASE("random models round-trip and lay out idempotently") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
        const auto m = random_model(rng);
        const auto text = serialize_diagram(m);
        INFO(text);
        const auto again = parse_diagram(text);
        CHECK(again == m);
        CHECK(serialize_diagram(again) == text);
        CHECK(model_stats(again) == model_stats(m));
        const auto laid = assign_layout(m);
        CHECK(assign_layout(laid) == laid);
        CHECK(assign_layout(m) == laid);
        for (const auto& c : laid.classifiers) CHECK(in_bounds(*c.position));
        CHECK(walk_elements(m).size() == model_stats(m).element_count());
    }
}

TEST_CASE("element references") {
    const auto m = library();
    for (const auto& e : walk_elements(m)) CHECK(resolve_element(m, to_string(m, e)) == e);

    const auto book = resolve_element(m, "Book");
    CHECK(book.kind == ElementRef::Kind::classifier);
    CHECK(to_string(m, book) == "Library.Catalog.Book");
    CHECK(resolve_element(m, "Catalog.Book.isbn").kind == ElementRef::Kind::attribute);
    CHECK(to_string(m, resolve_element(m, "Loan.renew()")) == "Library.Lending.Loan.renew()");
    CHECK(resolve_element(m, "Library.Lending").kind == ElementRef::Kind::package);
    CHECK(resolve_element(m, "rel#6").kind == ElementRef::Kind::relationship);
    CHECK_THROWS_AS(resolve_element(m, "rel#7"), NotFound);
    CHECK_THROWS_AS(resolve_element(m, "Nope"), NotFound);
    CHECK_THROWS_AS(resolve_element(m, "Book.nope"), NotFound);
    CHECK_THROWS_AS(resolve_element(m, "Book..isbn"), NotFound);
}

TEST_CASE("traversal structure") {
    const auto m = library();
    const auto roots = children_of(m, std::nullopt);
    REQUIRE(roots.size() == 1);
    CHECK(to_string(m, roots[0]) == "Library");

    const auto lib = children_of(m, roots[0]);
    std::vector<std::string> names;
    for (const auto& e : lib) names.push_back(to_string(m, e));
    CHECK(names == std::vector<std::string>{"Library.Loanable", "Library.Member", "Library.Catalog", "Library.Lending"});
    for (const auto& e : walk_elements(m)) {
        if (e.kind == ElementRef::Kind::relationship) continue;
        const auto p = parent_of(m, e);
        const auto siblings = children_of(m, p);
        CHECK(std::find(siblings.begin(), siblings.end(), e) != siblings.end());
    }

    const auto member = resolve_element(m, "Member").index;
    CHECK(relationships_of(m, member).size() == 4);
    CHECK(depth_of(m, roots[0]) == 0);
    CHECK(depth_of(m, resolve_element(m, "Library.Catalog")) == 1);
    CHECK(depth_of(m, resolve_element(m, "Book.isbn")) == 2);

    const auto walk = walk_elements(m);
    CHECK(to_string(m, walk[0]) == "Library");
    CHECK(to_string(m, walk[1]) == "Library.Loanable");
    CHECK(to_string(m, walk[2]) == "Library.Loanable.checkout()");
}

TEST_CASE("anchors") {
    const auto m = assign_layout(library());
    const auto member = resolve_element(m, "Member");
    CHECK(anchor_of(m, member) == Position{15, 40});
    CHECK(anchor_of(m, resolve_element(m, "Member.name")) == Position{15, 40});
    const auto rel = resolve_element(m, "rel#3");  // Member ..> Loanable
    CHECK(anchor_of(m, rel) == Position{32.5, 27.5});
    const auto empty = parse_diagram("package Empty {}");
    CHECK(anchor_of(empty, {ElementRef::Kind::package, 0, 0}) == Position{50, 50});
}
