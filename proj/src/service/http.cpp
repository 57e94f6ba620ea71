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

#include "umlsonic/service/http.hpp"

#include "httplib.h"
#include "json.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/error.hpp"
#include "umlsonic/sonifier/sonifier.hpp"

namespace umlsonic::service {

using nlohmann::json;
using uml::ElementRef;

namespace {

std::string_view kind_name(const uml::ClassModel& m, const ElementRef& r) {
    switch (r.kind) {
        case ElementRef::Kind::package: return "package";
        case ElementRef::Kind::classifier:
            return m.classifiers[r.index].kind == uml::ClassifierKind::interface ? "interface" : "class";
        case ElementRef::Kind::attribute: return "attribute";
        case ElementRef::Kind::operation: return "operation";
        case ElementRef::Kind::relationship: return "relationship";
    }
    return "?";
}

json element_tree(const uml::ClassModel& m, const ElementRef& r) {
    const auto pos = uml::anchor_of(m, r);
    json node{{"id", uml::to_string(m, r)},
              {"kind", kind_name(m, r)},
              {"concept", uml::concept_of(m, r)},
              {"position", {{"x", pos.x}, {"y", pos.y}}},
              {"children", json::array()}};
    for (const auto& c : uml::children_of(m, r)) node["children"].push_back(element_tree(m, c));
    return node;
}

std::string error_json(const std::string& what) { return json{{"error", what}}.dump(); }

sonifier::Audience parse_audience(const std::string& s) {
    auto a = sonifier::audience_from_string(s);
    if (!a) throw InvalidArgument("unknown audience '" + s + "'");
    return *a;
}

json parse_body(const httplib::Request& req) {
    if (req.body.empty()) return json::object();
    auto j = json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw InvalidArgument("request body must be a JSON object");
    return j;
}

// Maps library errors to status codes; every handler runs inside this.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
    return [fn](const httplib::Request& req, httplib::Response& res) {
        int status = 500;
        std::string msg;
        try {
            fn(req, res);
            return;
        } catch (const Forbidden& e) {
            status = 403, msg = e.what();
        } catch (const NotFound& e) {
            status = 404, msg = e.what();
        } catch (const UnboundConcept& e) {
            status = 409, msg = e.what();
        } catch (const InvalidArgument& e) {
            status = 400, msg = e.what();
        } catch (const json::exception& e) {
            status = 400, msg = e.what();
        } catch (const std::exception& e) {
            msg = e.what();
        }
        res.status = status;
        res.set_content(error_json(msg), "application/json");
    };
}

json session_json(const std::string& id, const Navigator& nav) {
    const auto& m = nav.workspace().model;
    json history = json::array();
    for (const auto& r : nav.history()) history.push_back(uml::to_string(m, r));
    return {{"id", id},
            {"audience", sonifier::to_string(nav.profile().audience)},
            {"focus", uml::to_string(m, nav.focus())},
            {"breadcrumb", nav.breadcrumb()},
            {"history", std::move(history)}};
}

}  // namespace

std::string model_json(const uml::ClassModel& m) {
    json j{{"name", m.name}, {"elements", json::array()}, {"relationships", json::array()}};
    for (const auto& r : uml::children_of(m, std::nullopt)) j["elements"].push_back(element_tree(m, r));
    for (std::size_t k = 0; k < m.relationships.size(); ++k) {
        const auto& rel = m.relationships[k];
        const ElementRef ref{ElementRef::Kind::relationship, k, 0};
        json x{{"id", uml::to_string(m, ref)},
               {"kind", uml::to_string(rel.kind)},
               {"source", m.classifiers[rel.source].qualified_name()},
               {"target", m.classifiers[rel.target].qualified_name()},
               {"label", rel.label}};
        if (rel.assoc_class) x["assoc_class"] = m.classifiers[*rel.assoc_class].qualified_name();
        j["relationships"].push_back(std::move(x));
    }
    return j.dump();
}

std::string event_json(const NavEvent& e) {
    return json{{"move", {{"kind", to_string(e.move.kind)}, {"index", e.move.index}}},
                {"moved", e.moved},
                {"boundary", e.boundary},
                {"focus", e.focus_id},
                {"breadcrumb", e.breadcrumb},
                {"caption", e.caption},
                {"cue_id", e.cue_id},
                {"cue_url", "/audio/" + e.cue_id + ".wav"}}
        .dump();
}

HttpApi::HttpApi(std::shared_ptr<const Workspace> ws, sonifier::RenderProfile base, std::chrono::seconds idle_timeout)
    : ws_(ws), base_(std::move(base)), sessions_(ws, std::make_shared<CueCache>(), idle_timeout) {
    sonifier::validate(base_);
}

sonifier::RenderProfile HttpApi::profile_for(sonifier::Audience a) const {
    auto p = base_;
    p.audience = a;
    return p;
}

std::shared_ptr<const HttpApi::Walkthrough> HttpApi::walkthrough(sonifier::Audience a) {
    std::lock_guard lock(walk_mutex_);
    if (auto it = walks_.find(a); it != walks_.end()) return it->second;
    const auto profile = profile_for(a);
    const auto tl = sonifier::plan_walkthrough(ws_->model, ws_->catalogue, profile);
    const auto r = sonifier::render_timeline(tl, ws_->catalogue, profile);
    auto w = std::make_shared<const Walkthrough>(Walkthrough{audio::encode_wav(r.audio), sonifier::to_webvtt(r.captions)});
    walks_.emplace(a, w);
    return w;
}

void HttpApi::install(httplib::Server& srv) {
    srv.Post("/sessions", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto body = parse_body(req);
        if (body.contains("model") && body["model"].get<std::string>() != ws_->model_id)
            throw NotFound("unknown model '" + body["model"].get<std::string>() + "'");
        if (body.contains("catalogue") && body["catalogue"].get<std::string>() != ws_->catalogue_id)
            throw NotFound("unknown catalogue '" + body["catalogue"].get<std::string>() + "'");
        const auto audience = parse_audience(body.value("audience", std::string("expert")));
        const auto id = sessions_.create(profile_for(audience));
        auto out = sessions_.with(id, [&](Navigator& nav) {
            auto j = session_json(id, nav);
            j["event"] = json::parse(event_json(nav.current()));
            return j;
        });
        res.status = 201;
        res.set_content(out.dump(), "application/json");
    }));
    srv.Get(R"(/sessions/([^/]+))", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        auto out = sessions_.with(id, [&](Navigator& nav) { return session_json(id, nav); });
        res.set_content(out.dump(), "application/json");
    }));
    srv.Post(R"(/sessions/([^/]+)/move)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        const auto body = parse_body(req);
        if (!body.contains("move")) throw InvalidArgument("missing 'move'");
        const auto name = body["move"].get<std::string>();
        const auto kind = move_kind_from_string(name);
        if (!kind) throw InvalidArgument("unknown move '" + name + "'");
        NavMove move{*kind, 0};
        if (body.contains("index")) {
            const auto k = body["index"].get<long long>();
            if (k < 0) throw InvalidArgument("index must be non-negative");
            move.index = static_cast<std::size_t>(k);
        }
        auto e = sessions_.with(id, [&](Navigator& nav) { return nav.navigate(move); });
        res.set_content(event_json(e), "application/json");
    }));
    srv.Get(R"(/audio/([^/]+)\.wav)", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        auto cue = sessions_.cache()->find(id);
        if (!cue) throw NotFound("no cue '" + id + "'");
        const auto bytes = audio::encode_wav(cue->audio);
        res.set_content(std::string(bytes.begin(), bytes.end()), "audio/wav");
    }));
    srv.Get("/model", guarded([this](const httplib::Request&, httplib::Response& res) {
        res.set_content(model_json(ws_->model), "application/json");
    }));
    srv.Get("/walkthrough.wav", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto w = walkthrough(parse_audience(req.has_param("audience") ? req.get_param_value("audience") : "expert"));
        res.set_content(std::string(w->wav.begin(), w->wav.end()), "audio/wav");
    }));
    srv.Get("/walkthrough.vtt", guarded([this](const httplib::Request& req, httplib::Response& res) {
        const auto w = walkthrough(parse_audience(req.has_param("audience") ? req.get_param_value("audience") : "expert"));
        res.set_content(w->vtt, "text/vtt");
    }));
}

}  // namespace umlsonic::service
