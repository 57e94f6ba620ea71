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
#include <atomic>
#include <chrono>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "doctest.h"
#include "httplib.h"
#include "json.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/catalogue/builtin.hpp"
#include "umlsonic/error.hpp"
#include "umlsonic/service/http.hpp"
#include "umlsonic/service/navigator.hpp"
#include "umlsonic/sonifier/sonifier.hpp"
#include "umlsonic/uml/parser.hpp"

using namespace umlsonic;
using namespace umlsonic::service;
using K = NavMove::Kind;
using uml::ElementRef;

namespace {

std::shared_ptr<const Workspace> library() {
    static const auto ws =
        make_workspace(uml::load_diagram(UMLSONIC_FIXTURES "/library.uml"), catalogue::builtin_proposed());
    return ws;
}

sonifier::RenderProfile profile(sonifier::Audience a = sonifier::Audience::expert) {
    sonifier::RenderProfile p;
    p.audience = a;
    return p;
}

Navigator fresh(sonifier::Audience a = sonifier::Audience::expert) {
    return Navigator(library(), profile(a), std::make_shared<CueCache>());
}

NavEvent go(Navigator& n, K k, std::size_t i = 0) { return n.navigate({k, i}); }

// Walks the tree from the initial focus to `target` with sibling and into moves.
void reach(Navigator& nav, const ElementRef& target) {
    const auto& m = nav.workspace().model;
    std::vector<ElementRef> chain;
    for (std::optional<ElementRef> r = target; r; r = uml::parent_of(m, *r)) chain.insert(chain.begin(), *r);
    while (uml::parent_of(m, nav.focus())) go(nav, K::out);
    for (std::size_t level = 0; level < chain.size(); ++level) {
        if (level > 0) REQUIRE(go(nav, K::into).moved);
        while (!go(nav, K::prev_sibling).boundary) {}
        while (nav.focus() != chain[level]) REQUIRE(go(nav, K::next_sibling).moved);
    }
    REQUIRE(nav.focus() == target);
}

const std::vector<NavMove> kScript = {
    {K::into},         {K::next_sibling}, {K::next_sibling}, {K::into},       {K::next_sibling},
    {K::next_sibling}, {K::out},          {K::prev_sibling}, {K::into},       {K::next_sibling},
    {K::out},          {K::follow_relationship, 1},          {K::into},       {K::next_sibling},
    {K::next_sibling}, {K::repeat_cue},   {K::out},          {K::where_am_i}, {K::out},
    {K::prev_sibling},
};

std::vector<std::pair<std::string, std::string>> run_script() {
    auto nav = fresh();
    std::vector<std::pair<std::string, std::string>> path;
    for (const auto& m : kScript) {
        const auto e = nav.navigate(m);
        path.emplace_back(e.focus_id, e.cue_id);
    }
    return path;
}

}  // namespace

TEST_CASE("session starts on the first package with history") {
    auto nav = fresh();
    CHECK(nav.focus() == ElementRef{ElementRef::Kind::package, 0, 0});
    CHECK(nav.history().size() == 1);
    CHECK(nav.breadcrumb() == std::vector<std::string>{"Library"});
    const auto e = nav.current();
    CHECK_FALSE(e.moved);
    CHECK(e.caption.find("Library") != std::string::npos);
}

TEST_CASE("moves follow declaration order and report boundaries") {
    auto nav = fresh();
    auto e = go(nav, K::next_sibling);
    CHECK(e.boundary);
    CHECK_FALSE(e.moved);
    CHECK(e.caption == "edge of Library");  // the only top-level element; scope is the diagram
    e = go(nav, K::out);
    CHECK(e.boundary);
    CHECK(e.caption == "edge of Library");

    e = go(nav, K::into);
    REQUIRE(e.moved);
    CHECK(e.focus_id == "Library.Loanable");
    e = go(nav, K::next_sibling);
    CHECK(e.focus_id == "Library.Member");
    e = go(nav, K::into);
    CHECK(e.focus_id == "Library.Member.name");  // first attribute
    e = go(nav, K::into);
    CHECK(e.boundary);
    CHECK(e.caption == "edge of name");
    e = go(nav, K::prev_sibling);
    CHECK(e.boundary);
    CHECK(e.caption == "edge of Member");
    e = go(nav, K::next_sibling);
    e = go(nav, K::next_sibling);
    CHECK(e.focus_id == "Library.Member.borrow()");
    CHECK(e.breadcrumb == std::vector<std::string>{"Library", "Member", "borrow()"});
}

TEST_CASE("boundary events carry the reserved click") {
    auto cache = std::make_shared<CueCache>();
    Navigator nav(library(), profile(), cache);
    const auto e = go(nav, K::out);
    REQUIRE(e.boundary);
    const auto cue = cache->find(e.cue_id);
    REQUIRE(cue);
    CHECK(cue->audio == catalogue::boundary_click().to_stereo());
}

TEST_CASE("every event has audio in the cache") {
    auto cache = std::make_shared<CueCache>();
    Navigator nav(library(), profile(), cache);
    for (const auto& m : kScript) {
        const auto e = nav.navigate(m);
        const auto cue = cache->find(e.cue_id);
        REQUIRE(cue);
        CHECK(cue->audio.frames() > 0);
        CHECK(cue->audio.peak() > 0.0);
    }
}

TEST_CASE("follow_relationship plays the relationship then the target") {
    auto cache = std::make_shared<CueCache>();
    Navigator nav(library(), profile(), cache);
    reach(nav, uml::resolve_element(nav.workspace().model, "Library.Member"));
    // Member: browses (association), uses (dependency), favourites, association class.
    const auto e = go(nav, K::follow_relationship, 1);
    REQUIRE(e.moved);
    CHECK(e.focus_id == "Library.Loanable");
    CHECK(e.caption.find("then Interface Loanable") != std::string::npos);

    const auto& m = nav.workspace().model;
    const auto& cat = nav.workspace().catalogue;
    const auto rel = sonifier::element_cue(m, {ElementRef::Kind::relationship, 3, 0}, cat, nav.profile());
    const auto tgt = sonifier::element_cue(m, uml::resolve_element(m, "Loanable"), cat, nav.profile());
    const auto cue = cache->find(e.cue_id);
    REQUIRE(cue);
    const auto gap = audio::seconds_to_frames(nav.profile().inter_cue_gap_s, cue->audio.sample_rate());
    CHECK(cue->audio.frames() == rel.audio.frames() + gap + tgt.audio.frames());
    // The head of the cue is the dependency earcon untouched.
    for (std::size_t i = 0; i < rel.audio.frames(); i += 97) CHECK(cue->audio.channel(0)[i] == rel.audio.channel(0)[i]);

    CHECK(go(nav, K::follow_relationship, 9).boundary);
}

TEST_CASE("novice sessions may not follow relationships") {
    auto nav = fresh(sonifier::Audience::novice);
    go(nav, K::into);
    CHECK_THROWS_AS(go(nav, K::follow_relationship, 0), Forbidden);
    // The first moves and the two informational ones stay available.
    for (auto k : {K::next_sibling, K::prev_sibling, K::into, K::out, K::repeat_cue, K::where_am_i}) {
        CHECK_NOTHROW(go(nav, k));
    }
}

TEST_CASE("where_am_i gives the breadcrumb without moving") {
    auto nav = fresh();
    reach(nav, uml::resolve_element(nav.workspace().model, "Library.Catalog.Book"));
    const auto before = nav.history().size();
    const auto e = go(nav, K::where_am_i);
    CHECK_FALSE(e.moved);
    CHECK(nav.history().size() == before);
    CHECK(e.caption.rfind("Library > Catalog > Book, 2 relationships. ", 0) == 0);

    auto novice = fresh(sonifier::Audience::novice);
    reach(novice, uml::resolve_element(novice.workspace().model, "Library.Catalog.Book"));
    CHECK(go(novice, K::where_am_i).caption.rfind("Library > Catalog > Book. ", 0) == 0);
}

TEST_CASE("a scripted 20-move walk is deterministic") {
    REQUIRE(kScript.size() == 20);
    const auto a = run_script();
    const auto b = run_script();
    CHECK(a == b);
    std::set<std::string> foci;
    for (const auto& [f, c] : a) foci.insert(f);
    CHECK(foci.size() >= 6);
}

TEST_CASE("into then out restores the focus for every element") {
    const auto& m = library()->model;
    for (const auto& ref : uml::walk_elements(m)) {
        if (ref.kind == ElementRef::Kind::relationship) continue;  // not tree nodes
        auto nav = fresh();
        reach(nav, ref);
        const auto e = go(nav, K::into);
        if (e.moved) go(nav, K::out);
        CHECK_MESSAGE(nav.focus() == ref, uml::to_string(m, ref));
    }
}

TEST_CASE("history is append-only and grows with each move") {
    auto nav = fresh();
    std::vector<ElementRef> seen = nav.history();
    for (const auto& mv : kScript) {
        const auto e = nav.navigate(mv);
        const auto& h = nav.history();
        REQUIRE(h.size() >= seen.size());
        CHECK(std::equal(seen.begin(), seen.end(), h.begin()));
        CHECK(h.size() == seen.size() + (e.moved ? 1 : 0));
        CHECK(h.back() == nav.focus());
        seen = h;
    }
}

TEST_CASE("cue cache renders each cue once") {
    auto cache = std::make_shared<CueCache>();
    Navigator a(library(), profile(), cache);
    Navigator b(library(), profile(), cache);
    const auto ea = a.current();
    const auto eb = b.current();
    CHECK(ea.cue_id == eb.cue_id);
    CHECK(cache->renders() == 1);
    Navigator n(library(), profile(sonifier::Audience::novice), cache);
    CHECK(n.current().cue_id != ea.cue_id);  // keyed by profile too
}

TEST_CASE("cue cache tolerates concurrent lookups") {
    auto cache = std::make_shared<CueCache>();
    std::atomic<int> rendered{0};
    std::vector<std::thread> threads;
    for (int t = 0; t < 8; ++t) {
        threads.emplace_back([&, t] {
            for (int i = 0; i < 50; ++i) {
                const auto id = "k" + std::to_string((i + t) % 10);
                auto c = cache->get_or_render(id, [&] {
                    ++rendered;
                    return CueAudio{audio::AudioBuffer::mono(std::vector<double>(8, 0.1), 44100), id};
                });
                CHECK(c->caption == id);
            }
        });
    }
    for (auto& th : threads) th.join();
    CHECK(cache->size() == 10);
    CHECK(cache->renders() == 10);
}

TEST_CASE("workspace creation checks bindings") {
    auto cat = catalogue::builtin_proposed();
    std::erase_if(cat.bindings, [](const auto& b) { return b.concept_id == "Package"; });
    CHECK_THROWS_AS(make_workspace(uml::load_diagram(UMLSONIC_FIXTURES "/library.uml"), cat), UnboundConcept);
    CHECK_THROWS_AS(make_workspace(uml::ClassModel{}, catalogue::builtin_proposed()), InvalidArgument);
}

TEST_CASE("sessions get distinct ids, independent focus and expire when idle") {
    auto t = std::chrono::steady_clock::time_point{};
    SessionTable table(library(), std::make_shared<CueCache>(), std::chrono::minutes(30), [&] { return t; });
    const auto a = table.create(profile());
    const auto b = table.create(profile());
    CHECK(a == "s1");
    CHECK(b == "s2");
    table.with(a, [](Navigator& n) { return n.navigate({K::into, 0}); });
    CHECK(table.with(b, [](Navigator& n) { return n.focus(); }) == ElementRef{ElementRef::Kind::package, 0, 0});

    t += std::chrono::minutes(20);
    table.with(a, [](Navigator& n) { return n.focus(); });
    t += std::chrono::minutes(15);  // b idle 35 min, a idle 15 min
    table.expire();
    CHECK(table.size() == 1);
    CHECK_THROWS_AS(table.with(b, [](Navigator& n) { return n.focus(); }), NotFound);
    CHECK_NOTHROW(table.with(a, [](Navigator& n) { return n.focus(); }));
}

TEST_CASE("model json lists the tree and relationships") {
    const auto j = nlohmann::json::parse(model_json(library()->model));
    CHECK(j["name"] == "Library");
    REQUIRE(j["elements"].size() == 1);
    CHECK(j["elements"][0]["id"] == "Library");
    CHECK(j["relationships"].size() == 7);
    CHECK(j["relationships"][6]["assoc_class"] == "Library.Lending.Loan");
}

namespace {

struct TestServer {
    TestServer() : api(library(), sonifier::RenderProfile{}) {
        api.install(server);
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~TestServer() {
        server.stop();
        thread.join();
    }
    httplib::Client client() const { return httplib::Client("127.0.0.1", port); }

    httplib::Server server;
    HttpApi api;
    int port = 0;
    std::thread thread;
};

nlohmann::json body(const httplib::Result& r) { return nlohmann::json::parse(r->body); }

}  // namespace

TEST_CASE("http api drives a session end to end") {
    TestServer srv;
    auto cli = srv.client();

    auto r = cli.Post("/sessions", R"({"audience": "expert"})", "application/json");
    REQUIRE(r);
    REQUIRE(r->status == 201);
    const auto created = body(r);
    const std::string id = created["id"];
    CHECK(created["focus"] == "Library");
    CHECK(created["event"]["cue_url"].get<std::string>().rfind("/audio/", 0) == 0);

    r = cli.Post("/sessions/" + id + "/move", R"({"move": "into"})", "application/json");
    REQUIRE(r);
    REQUIRE(r->status == 200);
    auto ev = body(r);
    CHECK(ev["focus"] == "Library.Loanable");
    CHECK(ev["moved"] == true);

    auto audio_res = cli.Get(ev["cue_url"].get<std::string>());
    REQUIRE(audio_res);
    CHECK(audio_res->status == 200);
    const std::vector<std::uint8_t> bytes(audio_res->body.begin(), audio_res->body.end());
    CHECK(audio::decode_wav(bytes).frames() > 0);

    r = cli.Get("/sessions/" + id);
    REQUIRE(r);
    CHECK(body(r)["breadcrumb"] == nlohmann::json::array({"Library", "Loanable"}));
    CHECK(body(r)["history"].size() == 2);

    r = cli.Post("/sessions/" + id + "/move", R"({"move": "next_sibling"})", "application/json");
    r = cli.Post("/sessions/" + id + "/move", R"({"move": "follow_relationship", "index": 1})", "application/json");
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(body(r)["focus"] == "Library.Loanable");
}

TEST_CASE("http api maps errors to status codes") {
    TestServer srv;
    auto cli = srv.client();
    auto r = cli.Post("/sessions", R"({"audience": "novice"})", "application/json");
    REQUIRE(r);
    const std::string id = body(r)["id"];

    r = cli.Post("/sessions/" + id + "/move", R"({"move": "follow_relationship", "index": 0})", "application/json");
    REQUIRE(r);
    CHECK(r->status == 403);
    CHECK(body(r).contains("error"));
    r = cli.Post("/sessions/" + id + "/move", R"({"move": "jump"})", "application/json");
    CHECK(r->status == 400);
    r = cli.Post("/sessions/" + id + "/move", "not json", "application/json");
    CHECK(r->status == 400);
    r = cli.Post("/sessions/s999/move", R"({"move": "into"})", "application/json");
    CHECK(r->status == 404);
    r = cli.Get("/audio/cdeadbeef.wav");
    CHECK(r->status == 404);
    r = cli.Post("/sessions", R"({"audience": "guru"})", "application/json");
    CHECK(r->status == 400);
    r = cli.Post("/sessions", R"({"catalogue": "baseline"})", "application/json");
    CHECK(r->status == 404);
}

TEST_CASE("http api serves the model and the walkthrough") {
    TestServer srv;
    auto cli = srv.client();
    auto r = cli.Get("/model");
    REQUIRE(r);
    CHECK(body(r)["relationships"].size() == 7);
    r = cli.Get("/walkthrough.vtt?audience=novice");
    REQUIRE(r);
    CHECK(r->status == 200);
    CHECK(r->body.rfind("WEBVTT", 0) == 0);
    r = cli.Get("/walkthrough.wav?audience=novice");
    REQUIRE(r);
    const std::vector<std::uint8_t> bytes(r->body.begin(), r->body.end());
    CHECK(audio::decode_wav(bytes).duration_s() > 10.0);
}
