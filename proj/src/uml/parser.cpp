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

#include "umlsonic/uml/parser.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "umlsonic/error.hpp"

namespace umlsonic::uml {

namespace {

struct NameRef {
    std::vector<std::string> parts;
    std::string text;
    std::size_t line = 0, col = 0;
};

struct PendingRelationship {
    RelationshipKind kind;
    NameRef source, target;
    std::optional<NameRef> assoc_class;
    std::string label;
    std::vector<std::string> scope;
};

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

class Parser {
public:
    explicit Parser(std::string_view text) : s_(text) {}

    ClassModel run() {
        skip_separators();
        if (word_ahead("diagram")) {
            take_word();
            skip_blank();
            model_.name = raw_until("\n;");
            if (model_.name.empty()) fail("expected a diagram name");
        }
        statements(false);
        resolve();
        return std::move(model_);
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0, line_ = 1, col_ = 1;
    ClassModel model_;
    std::size_t decl_ = 0;
    std::vector<std::string> scope_;
    std::vector<PendingRelationship> pending_;

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] static void fail_at(const std::string& msg, std::size_t line, std::size_t col) {
        throw ParseError(msg, line, col);
    }

    bool eof() const { return pos_ >= s_.size(); }
    char peek(std::size_t k = 0) const { return pos_ + k < s_.size() ? s_[pos_ + k] : '\0'; }
    bool ahead(std::string_view t) const { return s_.substr(pos_).starts_with(t); }

    void advance(std::size_t n = 1) {
        for (; n > 0 && !eof(); --n, ++pos_) {
            if (s_[pos_] == '\n') ++line_, col_ = 1;
            else ++col_;
        }
    }

    void skip_blank() {
        while (!eof()) {
            if (peek() == ' ' || peek() == '\t' || peek() == '\r') advance();
            else if (ahead("//")) while (!eof() && peek() != '\n') advance();
            else break;
        }
    }

    void skip_separators() {
        while (true) {
            skip_blank();
            if (peek() == '\n' || peek() == ';') advance();
            else break;
        }
    }

    void expect(char c, const char* what) {
        skip_blank();
        if (peek() != c) fail(std::string("expected ") + what);
        advance();
    }

    bool word_ahead(std::string_view w) const {
        return ahead(w) && !ident_char(pos_ + w.size() < s_.size() ? s_[pos_ + w.size()] : '\0');
    }

    std::string take_word() {
        std::size_t b = pos_;
        while (!eof() && ident_char(peek())) advance();
        return std::string(s_.substr(b, pos_ - b));
    }

    std::string name(const char* what) {
        skip_blank();
        if (!ident_start(peek())) fail(std::string("expected ") + what);
        return take_word();
    }

    // Raw text up to (not including) any stop character, newline always stops.
    std::string raw_until(std::string_view stops) {
        std::size_t b = pos_;
        while (!eof() && peek() != '\n' && stops.find(peek()) == std::string_view::npos && !ahead("//")) advance();
        return trim(s_.substr(b, pos_ - b));
    }

    void end_of_statement() {
        skip_blank();
        if (eof() || peek() == '\n' || peek() == ';' || peek() == '}') return;
        fail(std::string("unexpected '") + peek() + "'");
    }

    void statements(bool in_package) {
        while (true) {
            skip_separators();
            if (eof()) {
                if (in_package) fail("missing '}' to close package " + scope_.back());
                return;
            }
            if (peek() == '}') {
                if (!in_package) fail("unmatched '}'");
                advance();
                return;
            }
            statement();
            end_of_statement();
        }
    }

    void check_free(const std::string& n, std::size_t line, std::size_t col) {
        std::vector<std::string> path = scope_;
        path.push_back(n);
        if (find_package(model_, path)) fail_at("duplicate name '" + n + "' (a package)", line, col);
        for (const auto& c : model_.classifiers)
            if (c.package_path == scope_ && c.name == n) fail_at("duplicate classifier '" + n + "'", line, col);
    }

    void statement() {
        if (peek() == '(') return association_class();
        if (word_ahead("package")) return package();
        if (word_ahead("class")) return classifier(ClassifierKind::class_);
        if (word_ahead("interface")) return classifier(ClassifierKind::interface);
        if (word_ahead("diagram")) fail("'diagram' must be the first statement");
        if (ident_start(peek())) return relationship();
        fail(std::string("unexpected '") + peek() + "'");
    }

    std::optional<Position> position() {
        skip_blank();
        if (peek() != '@') return std::nullopt;
        advance();
        expect('(', "'(' after '@'");
        const double x = number();
        expect(',', "',' between coordinates");
        const double y = number();
        expect(')', "')' after coordinates");
        if (!in_bounds({x, y})) fail("position outside [0, 100] x [0, 100]");
        return Position{x, y};
    }

    double number() {
        skip_blank();
        double v = 0.0;
        const auto [end, ec] = std::from_chars(s_.data() + pos_, s_.data() + s_.size(), v);
        if (ec != std::errc()) fail("malformed coordinate");
        advance(static_cast<std::size_t>(end - (s_.data() + pos_)));
        return v;
    }

    void package() {
        take_word();
        const std::size_t line = line_, col = col_ + 1;
        const auto n = name("a package name");
        check_free(n, line, col);
        Package p;
        p.path = scope_;
        p.path.push_back(n);
        p.position = position();
        p.decl = decl_++;
        model_.packages.push_back(p);
        expect('{', "'{' after package name");
        scope_.push_back(n);
        statements(true);
        scope_.pop_back();
    }

    void classifier(ClassifierKind kind) {
        take_word();
        skip_blank();
        const std::size_t line = line_, col = col_;
        Classifier c;
        c.kind = kind;
        c.name = name(kind == ClassifierKind::interface ? "an interface name" : "a class name");
        check_free(c.name, line, col);
        c.package_path = scope_;
        c.position = position();
        c.decl = decl_++;
        skip_blank();
        if (peek() == '{') {
            advance();
            members(c);
        }
        model_.classifiers.push_back(std::move(c));
    }

    void members(Classifier& c) {
        while (true) {
            skip_separators();
            if (eof()) fail("missing '}' to close " + c.name);
            if (peek() == '}') {
                advance();
                return;
            }
            if (word_ahead("attr")) {
                take_word();
                Attribute a;
                a.name = name("an attribute name");
                skip_blank();
                if (peek() == ':') {
                    advance();
                    a.type = raw_until(";}");
                }
                for (const auto& o : c.attributes)
                    if (o.name == a.name) fail("duplicate attribute '" + a.name + "'");
                c.attributes.push_back(std::move(a));
            } else if (word_ahead("op")) {
                take_word();
                Operation o;
                o.name = name("an operation name");
                expect('(', "'(' after operation name");
                o.params = raw_until(")");
                expect(')', "')' to close parameters");
                skip_blank();
                if (peek() == ':') {
                    advance();
                    o.return_type = raw_until(";}");
                }
                c.operations.push_back(std::move(o));
            } else {
                fail("expected 'attr' or 'op'");
            }
            skip_blank();
            if (!(eof() || peek() == '\n' || peek() == ';' || peek() == '}')) fail(std::string("unexpected '") + peek() + "'");
        }
    }

    NameRef reference() {
        skip_blank();
        NameRef r;
        r.line = line_, r.col = col_;
        const std::size_t b = pos_;
        r.parts.push_back(name("a classifier name"));
        while (peek() == '.' && ident_start(peek(1))) {
            advance();
            r.parts.push_back(take_word());
        }
        r.text = std::string(s_.substr(b, pos_ - b));
        return r;
    }

    std::string label() {
        skip_blank();
        if (peek() != ':') return {};
        advance();
        return raw_until(";}");
    }

    void relationship() {
        auto left = reference();
        skip_blank();
        static const std::pair<std::string_view, RelationshipKind> arrows[] = {
            {"<|--", RelationshipKind::inheritance}, {"<|..", RelationshipKind::realization},
            {"-->", RelationshipKind::association},  {"..>", RelationshipKind::dependency},
            {"o--", RelationshipKind::aggregation},  {"*--", RelationshipKind::composition},
        };
        for (const auto& [tok, kind] : arrows) {
            if (!ahead(tok)) continue;
            advance(tok.size());
            auto right = reference();
            PendingRelationship p{kind, std::move(left), std::move(right), std::nullopt, label(), scope_};
            // Generalization arrows point at the parent on the left.
            if (kind == RelationshipKind::inheritance || kind == RelationshipKind::realization) std::swap(p.source, p.target);
            pending_.push_back(std::move(p));
            return;
        }
        if (ahead("..")) fail("'..' links an association class: write (A, B) .. C");
        fail("expected a relationship arrow");
    }

    void association_class() {
        advance();
        auto a = reference();
        expect(',', "',' between association ends");
        auto b = reference();
        expect(')', "')' after association ends");
        skip_blank();
        if (!ahead("..") || ahead("..>")) fail("expected '..' before the association class");
        advance(2);
        auto c = reference();
        pending_.push_back({RelationshipKind::association_class, std::move(a), std::move(b), std::move(c), label(), scope_});
    }

    std::size_t lookup(const NameRef& r, const std::vector<std::string>& scope) const {
        // Innermost scope first, then the unique classifier ending in r.
        for (std::size_t k = scope.size() + 1; k-- > 0;) {
            std::vector<std::string> q(scope.begin(), scope.begin() + static_cast<long>(k));
            q.insert(q.end(), r.parts.begin(), r.parts.end());
            for (std::size_t i = 0; i < model_.classifiers.size(); ++i) {
                auto full = model_.classifiers[i].package_path;
                full.push_back(model_.classifiers[i].name);
                if (full == q) return i;
            }
        }
        std::optional<std::size_t> hit;
        for (std::size_t i = 0; i < model_.classifiers.size(); ++i) {
            auto full = model_.classifiers[i].package_path;
            full.push_back(model_.classifiers[i].name);
            if (full.size() >= r.parts.size() && std::equal(r.parts.rbegin(), r.parts.rend(), full.rbegin())) {
                if (hit) fail_at("ambiguous classifier '" + r.text + "'", r.line, r.col);
                hit = i;
            }
        }
        if (!hit) fail_at("unknown classifier '" + r.text + "'", r.line, r.col);
        return *hit;
    }

    void resolve() {
        for (const auto& p : pending_) {
            Relationship r;
            r.kind = p.kind;
            r.source = lookup(p.source, p.scope);
            r.target = lookup(p.target, p.scope);
            if (p.assoc_class) r.assoc_class = lookup(*p.assoc_class, p.scope);
            r.label = p.label;
            if (r.kind == RelationshipKind::realization && model_.classifiers[r.target].kind != ClassifierKind::interface)
                fail_at("realization target '" + p.target.text + "' is not an interface", p.target.line, p.target.col);
            model_.relationships.push_back(std::move(r));
        }
    }
};

std::string number_text(double v) {
    char buf[32];
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
    (void)ec;
    return std::string(buf, end);
}

void write_scope(const ClassModel& m, const std::optional<ElementRef>& scope, int indent, std::ostringstream& out) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    for (const auto& child : children_of(m, scope)) {
        if (child.kind == ElementRef::Kind::package) {
            const auto& p = m.packages[child.index];
            out << pad << "package " << p.name();
            if (p.position) out << " @ (" << number_text(p.position->x) << ", " << number_text(p.position->y) << ")";
            out << " {\n";
            write_scope(m, child, indent + 1, out);
            out << pad << "}\n";
            continue;
        }
        const auto& c = m.classifiers[child.index];
        out << pad << (c.kind == ClassifierKind::interface ? "interface " : "class ") << c.name;
        if (c.position) out << " @ (" << number_text(c.position->x) << ", " << number_text(c.position->y) << ")";
        if (c.attributes.empty() && c.operations.empty()) {
            out << "\n";
            continue;
        }
        out << " {\n";
        for (const auto& a : c.attributes) {
            out << pad << "  attr " << a.name;
            if (!a.type.empty()) out << ": " << a.type;
            out << "\n";
        }
        for (const auto& o : c.operations) {
            out << pad << "  op " << o.name << "(" << o.params << ")";
            if (!o.return_type.empty()) out << ": " << o.return_type;
            out << "\n";
        }
        out << pad << "}\n";
    }
}

}  // namespace

ClassModel parse_diagram(std::string_view text) { return Parser(text).run(); }

ClassModel load_diagram(const std::filesystem::path& path) {
    std::ifstream f(path);
    if (!f) throw IoError("cannot open diagram " + path.string());
    std::stringstream ss;
    ss << f.rdbuf();
    return parse_diagram(ss.str());
}

std::string serialize_diagram(const ClassModel& m) {
    std::ostringstream out;
    if (!m.name.empty()) out << "diagram " << m.name << "\n";
    write_scope(m, std::nullopt, 0, out);
    for (const auto& r : m.relationships) {
        const auto src = m.classifiers[r.source].qualified_name();
        const auto dst = m.classifiers[r.target].qualified_name();
        switch (r.kind) {
            case RelationshipKind::association: out << src << " --> " << dst; break;
            case RelationshipKind::dependency: out << src << " ..> " << dst; break;
            case RelationshipKind::aggregation: out << src << " o-- " << dst; break;
            case RelationshipKind::composition: out << src << " *-- " << dst; break;
            case RelationshipKind::inheritance: out << dst << " <|-- " << src; break;
            case RelationshipKind::realization: out << dst << " <|.. " << src; break;
            case RelationshipKind::association_class:
                out << "(" << src << ", " << dst << ") .. " << m.classifiers[*r.assoc_class].qualified_name();
                break;
        }
        if (!r.label.empty()) out << " : " << r.label;
        out << "\n";
    }
    return out.str();
}

}  // namespace umlsonic::uml
