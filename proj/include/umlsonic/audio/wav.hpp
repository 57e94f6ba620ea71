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

#ifndef UMLSONIC_AUDIO_WAV_HPP
#define UMLSONIC_AUDIO_WAV_HPP

#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "umlsonic/audio/buffer.hpp"

namespace umlsonic::audio {

// RIFF/WAVE, PCM (format tag 1), 16-bit little-endian, interleaved.
// Samples are clamped to [-1, 1) and quantized as round(x * 32768).
std::vector<std::uint8_t> encode_wav(const AudioBuffer& buf);

// Accepts 16-bit PCM mono/stereo; skips unknown chunks. Throws FormatError.
AudioBuffer decode_wav(std::span<const std::uint8_t> bytes);

void write_wav(const AudioBuffer& buf, const std::filesystem::path& path);
AudioBuffer read_wav(const std::filesystem::path& path);

}  // namespace umlsonic::audio

#endif  // UMLSONIC_AUDIO_WAV_HPP
