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

#ifndef UMLSONIC_SONIFIER_TTS_HPP
#define UMLSONIC_SONIFIER_TTS_HPP

#include <optional>
#include <string>
#include <string_view>

#include "umlsonic/audio/buffer.hpp"

namespace umlsonic::sonifier {

// Single-quoted for a POSIX shell.
std::string shell_quote(std::string_view s);

/// Runs the hook with "{text}" replaced by the quoted caption (appended
/// when the template has no placeholder) and decodes its stdout as WAV.
/// Any failure yields nullopt and a reason in `error`.
std::optional<audio::AudioBuffer> run_tts(const std::string& hook, std::string_view text, std::string& error);

}  // namespace umlsonic::sonifier

#endif  // UMLSONIC_SONIFIER_TTS_HPP
