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

#include "umlsonic/sonifier/tts.hpp"

#include <cstdio>
#include <vector>

#include <sys/wait.h>

#include "umlsonic/audio/wav.hpp"

namespace umlsonic::sonifier {

std::string shell_quote(std::string_view s) {
    std::string out = "'";
    for (char c : s) {
        if (c == '\'') out += "'\\''";
        else out += c;
    }
    return out + "'";
}

std::optional<audio::AudioBuffer> run_tts(const std::string& hook, std::string_view text, std::string& error) {
    std::string cmd = hook;
    const auto quoted = shell_quote(text);
    if (const auto at = cmd.find("{text}"); at != std::string::npos) cmd.replace(at, 6, quoted);
    else cmd += " " + quoted;

    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe) {
        error = "could not start the command";
        return std::nullopt;
    }
    std::vector<std::uint8_t> bytes;
    std::uint8_t buf[8192];
    for (std::size_t got; (got = std::fread(buf, 1, sizeof buf, pipe)) > 0;) bytes.insert(bytes.end(), buf, buf + got);
    const int status = ::pclose(pipe);
    if (status == -1 || !WIFEXITED(status) || WEXITSTATUS(status) != 0) {
        error = "command exited with status " + std::to_string(WIFEXITED(status) ? WEXITSTATUS(status) : -1);
        return std::nullopt;
    }
    try {
        auto wav = audio::decode_wav(bytes);
        if (wav.sample_rate() != audio::kDefaultSampleRate) {
            error = "speech is not sampled at 44100 Hz";
            return std::nullopt;
        }
        if (wav.peak() <= 0.0) {
            error = "speech is silent";
            return std::nullopt;
        }
        return wav;
    } catch (const std::exception& e) {
        error = e.what();
        return std::nullopt;
    }
}

}  // namespace umlsonic::sonifier
