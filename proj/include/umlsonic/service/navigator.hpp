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

#ifndef UMLSONIC_SERVICE_NAVIGATOR_HPP
#define UMLSONIC_SERVICE_NAVIGATOR_HPP

#include <chrono>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/catalogue/catalogue.hpp"
#include "umlsonic/sonifier/profile.hpp"
#include "umlsonic/uml/model.hpp"

namespace umlsonic::service {

struct NavMove {
    enum class Kind { next_sibling, prev_sibling, into, out, follow_relationship, repeat_cue, where_am_i };
    Kind kind = Kind::repeat_cue;
    std::size_t index = 0;  // follow_relationship only

    bool operator==(const NavMove&) const = default;
};

std::string_view to_string(NavMove::Kind k);
std::optional<NavMove::Kind> move_kind_from_string(std::string_view s);
// follow_relationship is the only move a novice session may not make.
bool requires_expert(NavMove::Kind k);

/// The shared, immutable part of every session: the model (with layout
/// assigned) and the catalogue. `fingerprint` keys cues so two workspaces
/// never share cache entries.
struct Workspace {
    std::string model_id;
    std::string catalogue_id;
    uml::ClassModel model;
    catalogue::SoundCatalogue catalogue;
    std::string fingerprint;
};

// Throws UnboundConcept when an element's concept has no binding and
// InvalidArgument for a model without packages or classifiers.
std::shared_ptr<const Workspace> make_workspace(uml::ClassModel model, catalogue::SoundCatalogue cat,
                                                std::string model_id = "default");

struct CueAudio {
    audio::AudioBuffer audio;  // stereo
    std::string caption;
};

/// Rendered cues by id. Lookups take a shared lock; a miss renders outside
/// any lock and inserts under an exclusive one, keeping the first insert
/// when two renders race.
class CueCache {
public:
    std::shared_ptr<const CueAudio> find(const std::string& id) const;
    std::shared_ptr<const CueAudio> get_or_render(const std::string& id, const std::function<CueAudio()>& render);
    std::size_t size() const;
    std::size_t renders() const;

private:
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<const CueAudio>> cues_;
    std::size_t renders_ = 0;
};

struct NavEvent {
    NavMove move;
    bool moved = false;
    bool boundary = false;
    uml::ElementRef focus;
    std::string focus_id;                 // to_string(model, focus)
    std::vector<std::string> breadcrumb;  // outermost scope first
    std::string caption;
    std::string cue_id;
};

/// One session's navigation state. Not thread-safe; SessionTable
/// serializes access.
class Navigator {
public:
    // Focus starts on the first top-level package, or the first classifier.
    Navigator(std::shared_ptr<const Workspace> ws, sonifier::RenderProfile profile, std::shared_ptr<CueCache> cache);

    // Throws Forbidden for an expert-only move in a novice session. Moves
    // past an edge return a boundary event and leave the focus alone.
    NavEvent navigate(const NavMove& move);
    // The cue for the current focus, as repeat_cue would give it.
    NavEvent current();

    const uml::ElementRef& focus() const { return focus_; }
    const std::vector<uml::ElementRef>& history() const { return history_; }
    std::vector<std::string> breadcrumb() const;
    const sonifier::RenderProfile& profile() const { return profile_; }
    const Workspace& workspace() const { return *ws_; }

private:
    NavEvent element_event(const NavMove& move, bool moved);
    NavEvent boundary_event(const NavMove& move, const std::string& scope);
    NavEvent follow(const NavMove& move);
    std::string cue_id(std::string_view what) const;
    void move_to(const uml::ElementRef& ref);

    std::shared_ptr<const Workspace> ws_;
    sonifier::RenderProfile profile_;
    std::shared_ptr<CueCache> cache_;
    uml::ElementRef focus_;
    std::vector<uml::ElementRef> history_;
};

/// Sessions by id ("s1", "s2", ...). Sessions idle longer than the
/// timeout are dropped on the next table access.
class SessionTable {
public:
    using Clock = std::function<std::chrono::steady_clock::time_point()>;

    SessionTable(std::shared_ptr<const Workspace> ws, std::shared_ptr<CueCache> cache,
                 std::chrono::seconds idle_timeout = std::chrono::minutes(30), Clock clock = {});

    std::string create(const sonifier::RenderProfile& profile);

    // Runs fn with the session locked. Throws NotFound for an unknown or
    // expired id.
    template <typename Fn>
    auto with(const std::string& id, Fn&& fn) {
        auto s = acquire(id);
        std::lock_guard lock(s->mutex);
        s->last_used = now();
        return fn(s->nav);
    }

    std::size_t size() const;
    void expire();
    const std::shared_ptr<CueCache>& cache() const { return cache_; }

private:
    struct Session {
        explicit Session(Navigator n) : nav(std::move(n)) {}
        std::mutex mutex;
        Navigator nav;
        std::chrono::steady_clock::time_point last_used;
    };

    std::shared_ptr<Session> acquire(const std::string& id);
    std::chrono::steady_clock::time_point now() const;

    std::shared_ptr<const Workspace> ws_;
    std::shared_ptr<CueCache> cache_;
    std::chrono::seconds idle_;
    Clock clock_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t next_ = 1;
};

}  // namespace umlsonic::service

#endif  // UMLSONIC_SERVICE_NAVIGATOR_HPP
