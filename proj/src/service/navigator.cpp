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

#include "umlsonic/service/navigator.hpp"

#include <array>
#include <cstdio>

#include "umlsonic/audio/mix.hpp"
#include "umlsonic/catalogue/builtin.hpp"
#include "umlsonic/catalogue/manifest.hpp"
#include "umlsonic/error.hpp"
#include "umlsonic/sonifier/sonifier.hpp"
#include "umlsonic/uml/parser.hpp"

namespace umlsonic::service {

using uml::ElementRef;

namespace {

constexpr std::array<std::string_view, 7> kMoveNames = {
    "next_sibling", "prev_sibling", "into", "out", "follow_relationship", "repeat_cue", "where_am_i",
};

std::string hex64(std::uint64_t v) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

std::string display_name(const uml::ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::package: return m.packages[r.index].name();
        case ElementRef::Kind::classifier: return m.classifiers[r.index].name;
        case ElementRef::Kind::attribute: return m.classifiers[r.index].attributes[r.member].name;
        case ElementRef::Kind::operation: return m.classifiers[r.index].operations[r.member].name + "()";
        case ElementRef::Kind::relationship: return uml::to_string(m, r);
    }
    return {};
}

std::string diagram_name(const uml::ClassModel& m) { return m.name.empty() ? "untitled" : m.name; }

std::string profile_key(const sonifier::RenderProfile& p) {
    std::string k{sonifier::to_string(p.audience)};
    k += p.motif_enabled ? "|m" : "|-";
    k += p.captions_enabled ? "c" : "-";
    k += p.pan_from_x ? "p" : "-";
    k += p.reverb_from_depth ? "r" : "-";
    char buf[64];
    std::snprintf(buf, sizeof buf, "|%.6g|%.6g|", p.inter_cue_gap_s, p.loudness_window_db);
    return k + buf + p.tts_hook;
}

}  // namespace

std::string_view to_string(NavMove::Kind k) { return kMoveNames[static_cast<std::size_t>(k)]; }

std::optional<NavMove::Kind> move_kind_from_string(std::string_view s) {
    for (std::size_t i = 0; i < kMoveNames.size(); ++i) {
        if (kMoveNames[i] == s) return static_cast<NavMove::Kind>(i);
    }
    return std::nullopt;
}

bool requires_expert(NavMove::Kind k) { return k == NavMove::Kind::follow_relationship; }

std::shared_ptr<const Workspace> make_workspace(uml::ClassModel model, catalogue::SoundCatalogue cat,
                                                std::string model_id) {
    if (model.packages.empty() && model.classifiers.empty()) {
        throw InvalidArgument("model has no packages or classifiers to navigate");
    }
    model = uml::assign_layout(std::move(model));
    for (const auto& ref : uml::walk_elements(model)) {
        const auto c = uml::concept_of(model, ref);
        if (!cat.find_binding(c)) throw UnboundConcept(c);
    }
    auto ws = std::make_shared<Workspace>();
    ws->model_id = std::move(model_id);
    ws->catalogue_id = cat.name;
    ws->fingerprint = hex64(sonifier::fnv1a64(uml::serialize_diagram(model) + "\n" + catalogue::serialize_manifest(cat)));
    ws->model = std::move(model);
    ws->catalogue = std::move(cat);
    return ws;
}

std::shared_ptr<const CueAudio> CueCache::find(const std::string& id) const {
    std::shared_lock lock(mutex_);
    auto it = cues_.find(id);
    return it == cues_.end() ? nullptr : it->second;
}

std::shared_ptr<const CueAudio> CueCache::get_or_render(const std::string& id,
                                                        const std::function<CueAudio()>& render) {
    if (auto hit = find(id)) return hit;
    auto fresh = std::make_shared<const CueAudio>(render());
    std::unique_lock lock(mutex_);
    ++renders_;
    return cues_.emplace(id, std::move(fresh)).first->second;
}

std::size_t CueCache::size() const {
    std::shared_lock lock(mutex_);
    return cues_.size();
}

std::size_t CueCache::renders() const {
    std::shared_lock lock(mutex_);
    return renders_;
}

Navigator::Navigator(std::shared_ptr<const Workspace> ws, sonifier::RenderProfile profile,
                     std::shared_ptr<CueCache> cache)
    : ws_(std::move(ws)), profile_(std::move(profile)), cache_(std::move(cache)) {
    sonifier::validate(profile_);
    const auto top = uml::children_of(ws_->model, std::nullopt);
    if (top.empty()) throw InvalidArgument("model has nothing to navigate");
    // Prefer the first package even when a loose classifier was declared first.
    focus_ = top.front();
    for (const auto& r : top) {
        if (r.kind == ElementRef::Kind::package) {
            focus_ = r;
            break;
        }
    }
    history_.push_back(focus_);
}

std::vector<std::string> Navigator::breadcrumb() const {
    std::vector<std::string> out;
    for (std::optional<ElementRef> r = focus_; r; r = uml::parent_of(ws_->model, *r)) {
        out.insert(out.begin(), display_name(ws_->model, *r));
    }
    return out;
}

std::string Navigator::cue_id(std::string_view what) const {
    return "c" + hex64(sonifier::fnv1a64(ws_->fingerprint + "|" + profile_key(profile_) + "|" + std::string(what)));
}

void Navigator::move_to(const ElementRef& ref) {
    focus_ = ref;
    history_.push_back(ref);
}

NavEvent Navigator::element_event(const NavMove& move, bool moved) {
    const auto& m = ws_->model;
    const auto id = uml::to_string(m, focus_);
    const auto cid = cue_id("element|" + id);
    auto cue = cache_->get_or_render(cid, [&] {
        auto c = sonifier::element_cue(m, focus_, ws_->catalogue, profile_);
        return CueAudio{std::move(c.audio), std::move(c.caption)};
    });
    return {move, moved, false, focus_, id, breadcrumb(), cue->caption, cid};
}

NavEvent Navigator::boundary_event(const NavMove& move, const std::string& scope) {
    const auto cid = cue_id("boundary");
    cache_->get_or_render(cid, [] { return CueAudio{catalogue::boundary_click().to_stereo(), "edge"}; });
    return {move, false, true, focus_, uml::to_string(ws_->model, focus_), breadcrumb(), "edge of " + scope, cid};
}

NavEvent Navigator::follow(const NavMove& move) {
    const auto& m = ws_->model;
    if (focus_.kind != ElementRef::Kind::classifier) return boundary_event(move, display_name(m, focus_));
    const auto rels = uml::relationships_of(m, focus_.index);
    if (move.index >= rels.size()) return boundary_event(move, display_name(m, focus_) + " relationships");

    const ElementRef rel{ElementRef::Kind::relationship, rels[move.index], 0};
    const auto& r = m.relationships[rel.index];
    const std::size_t other = r.source == focus_.index ? r.target : r.source;
    const ElementRef target{ElementRef::Kind::classifier, other, 0};

    const auto cid = cue_id("follow|" + uml::to_string(m, rel) + "|" + uml::to_string(m, target));
    auto cue = cache_->get_or_render(cid, [&] {
        auto a = sonifier::element_cue(m, rel, ws_->catalogue, profile_);
        auto b = sonifier::element_cue(m, target, ws_->catalogue, profile_);
        const double second = a.audio.duration_s() + profile_.inter_cue_gap_s;
        const audio::Placement parts[] = {{std::move(a.audio), 0.0}, {std::move(b.audio), second}};
        return CueAudio{audio::sum_at_offsets(parts), a.caption + ", then " + b.caption};
    });
    move_to(target);
    return {move, true, false, focus_, uml::to_string(m, focus_), breadcrumb(), cue->caption, cid};
}

NavEvent Navigator::current() { return element_event({NavMove::Kind::repeat_cue, 0}, false); }

NavEvent Navigator::navigate(const NavMove& move) {
    using K = NavMove::Kind;
    if (requires_expert(move.kind) && profile_.audience != sonifier::Audience::expert) {
        throw Forbidden(std::string(to_string(move.kind)) + " is not available to novice sessions");
    }
    const auto& m = ws_->model;
    switch (move.kind) {
        case K::next_sibling:
        case K::prev_sibling: {
            const auto parent = uml::parent_of(m, focus_);
            const auto sibs = uml::children_of(m, parent);
            std::size_t i = 0;
            while (i < sibs.size() && sibs[i] != focus_) ++i;
            const bool next = move.kind == K::next_sibling;
            if ((next && i + 1 >= sibs.size()) || (!next && i == 0)) {
                return boundary_event(move, parent ? display_name(m, *parent) : diagram_name(m));
            }
            move_to(sibs[next ? i + 1 : i - 1]);
            return element_event(move, true);
        }
        case K::into: {
            const auto kids = uml::children_of(m, focus_);
            if (kids.empty()) return boundary_event(move, display_name(m, focus_));
            move_to(kids.front());
            return element_event(move, true);
        }
        case K::out: {
            const auto parent = uml::parent_of(m, focus_);
            if (!parent) return boundary_event(move, diagram_name(m));
            move_to(*parent);
            return element_event(move, true);
        }
        case K::follow_relationship: return follow(move);
        case K::repeat_cue: return element_event(move, false);
        case K::where_am_i: {
            auto e = element_event(move, false);
            std::string where;
            for (const auto& s : e.breadcrumb) where += (where.empty() ? "" : " > ") + s;
            if (profile_.audience == sonifier::Audience::expert && focus_.kind == ElementRef::Kind::classifier) {
                const auto n = uml::relationships_of(m, focus_.index).size();
                where += ", " + std::to_string(n) + (n == 1 ? " relationship" : " relationships");
            }
            e.caption = where + ". " + e.caption;
            return e;
        }
    }
    throw InvalidArgument("unknown move");
}

SessionTable::SessionTable(std::shared_ptr<const Workspace> ws, std::shared_ptr<CueCache> cache,
                           std::chrono::seconds idle_timeout, Clock clock)
    : ws_(std::move(ws)), cache_(std::move(cache)), idle_(idle_timeout), clock_(std::move(clock)) {}

std::chrono::steady_clock::time_point SessionTable::now() const {
    return clock_ ? clock_() : std::chrono::steady_clock::now();
}

std::string SessionTable::create(const sonifier::RenderProfile& profile) {
    auto s = std::make_shared<Session>(Navigator(ws_, profile, cache_));
    s->last_used = now();
    std::unique_lock lock(mutex_);
    auto id = "s" + std::to_string(next_++);
    sessions_.emplace(id, std::move(s));
    return id;
}

void SessionTable::expire() {
    const auto t = now();
    std::unique_lock lock(mutex_);
    std::erase_if(sessions_, [&](const auto& kv) {
        // A session someone holds right now is in use, not idle.
        std::unique_lock held(kv.second->mutex, std::try_to_lock);
        return held.owns_lock() && t - kv.second->last_used > idle_;
    });
}

std::shared_ptr<SessionTable::Session> SessionTable::acquire(const std::string& id) {
    expire();
    std::shared_lock lock(mutex_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw NotFound("no session '" + id + "'");
    return it->second;
}

std::size_t SessionTable::size() const {
    std::shared_lock lock(mutex_);
    return sessions_.size();
}

}  // namespace umlsonic::service
