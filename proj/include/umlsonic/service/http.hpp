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

#ifndef UMLSONIC_SERVICE_HTTP_HPP
#define UMLSONIC_SERVICE_HTTP_HPP

#include <chrono>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "umlsonic/service/navigator.hpp"

namespace httplib {
class Server;
}

namespace umlsonic::service {

// Element tree with positions and concepts, then relationships.
std::string model_json(const uml::ClassModel& m);
std::string event_json(const NavEvent& e);

/// The JSON API over one workspace:
///
///   POST /sessions                {"audience": "novice"}  -> 201 session
///   GET  /sessions/{id}           focus, breadcrumb, history
///   POST /sessions/{id}/move      {"move": "into"} or {"move": "follow_relationship", "index": 0}
///   GET  /audio/{cue}.wav
///   GET  /model
///   GET  /walkthrough.wav, /walkthrough.vtt   (?audience=novice)
///
/// Errors are {"error": "..."} with 400, 403, 404 or 409.
class HttpApi {
public:
    HttpApi(std::shared_ptr<const Workspace> ws, sonifier::RenderProfile base,
            std::chrono::seconds idle_timeout = std::chrono::minutes(30));

    void install(httplib::Server& server);
    SessionTable& sessions() { return sessions_; }

private:
    struct Walkthrough {
        std::vector<std::uint8_t> wav;
        std::string vtt;
    };
    std::shared_ptr<const Walkthrough> walkthrough(sonifier::Audience a);
    sonifier::RenderProfile profile_for(sonifier::Audience a) const;

    std::shared_ptr<const Workspace> ws_;
    sonifier::RenderProfile base_;
    SessionTable sessions_;
    std::mutex walk_mutex_;
    std::map<sonifier::Audience, std::shared_ptr<const Walkthrough>> walks_;
};

}  // namespace umlsonic::service

#endif  // UMLSONIC_SERVICE_HTTP_HPP
