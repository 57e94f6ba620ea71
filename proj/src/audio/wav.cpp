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

#include "umlsonic/audio/wav.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <fstream>
#include <iterator>
#include <string_view>

#include "umlsonic/error.hpp"

namespace umlsonic::audio {

namespace {

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
    out.push_back(static_cast<std::uint8_t>(v & 0xff));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
    for (int i = 0; i < 4; ++i) out.push_back(static_cast<std::uint8_t>((v >> (8 * i)) & 0xff));
}

void put_tag(std::vector<std::uint8_t>& out, std::string_view tag) { out.insert(out.end(), tag.begin(), tag.end()); }

std::uint16_t get_u16(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint16_t>(b[at] | (b[at + 1] << 8));
}

std::uint32_t get_u32(std::span<const std::uint8_t> b, std::size_t at) {
    return static_cast<std::uint32_t>(b[at]) | (static_cast<std::uint32_t>(b[at + 1]) << 8) |
           (static_cast<std::uint32_t>(b[at + 2]) << 16) | (static_cast<std::uint32_t>(b[at + 3]) << 24);
}

bool tag_is(std::span<const std::uint8_t> b, std::size_t at, std::string_view tag) {
    return std::memcmp(b.data() + at, tag.data(), 4) == 0;
}

std::int16_t quantize(double x) {
    const double q = std::round(std::clamp(x, -1.0, 1.0) * 32768.0);
    return static_cast<std::int16_t>(std::clamp(q, -32768.0, 32767.0));
}

}  // namespace

std::vector<std::uint8_t> encode_wav(const AudioBuffer& buf) {
    const auto channels = static_cast<std::uint16_t>(buf.channel_count());
    const auto rate = static_cast<std::uint32_t>(buf.sample_rate());
    const std::uint16_t block_align = channels * 2;
    const auto data_size = static_cast<std::uint32_t>(buf.frames() * block_align);

    std::vector<std::uint8_t> out;
    out.reserve(44 + data_size);
    put_tag(out, "RIFF");
    put_u32(out, 36 + data_size);
    put_tag(out, "WAVE");
    put_tag(out, "fmt ");
    put_u32(out, 16);
    put_u16(out, 1);  // PCM
    put_u16(out, channels);
    put_u32(out, rate);
    put_u32(out, rate * block_align);
    put_u16(out, block_align);
    put_u16(out, 16);
    put_tag(out, "data");
    put_u32(out, data_size);
    for (std::size_t i = 0; i < buf.frames(); ++i) {
        for (int c = 0; c < channels; ++c) put_u16(out, static_cast<std::uint16_t>(quantize(buf.channel(c)[i])));
    }
    return out;
}

AudioBuffer decode_wav(std::span<const std::uint8_t> b) {
    if (b.size() < 12 || !tag_is(b, 0, "RIFF") || !tag_is(b, 8, "WAVE"))
        throw FormatError("wav: missing RIFF/WAVE header");

    bool have_fmt = false;
    std::uint16_t channels = 0, bits = 0;
    std::uint32_t rate = 0;
    std::size_t at = 12;
    while (at + 8 <= b.size()) {
        const std::uint32_t size = get_u32(b, at + 4);
        const std::size_t body = at + 8;
        if (size > b.size() - body) throw FormatError("wav: chunk runs past end of file");
        if (tag_is(b, at, "fmt ")) {
            if (size < 16) throw FormatError("wav: fmt chunk too short");
            const std::uint16_t format = get_u16(b, body);
            channels = get_u16(b, body + 2);
            rate = get_u32(b, body + 4);
            bits = get_u16(b, body + 14);
            if (format != 1) throw FormatError("wav: unsupported encoding (only PCM)");
            if (bits != 16) throw FormatError("wav: unsupported bit depth " + std::to_string(bits));
            if (channels != 1 && channels != 2) throw FormatError("wav: unsupported channel count");
            if (rate == 0) throw FormatError("wav: zero sample rate");
            have_fmt = true;
        } else if (tag_is(b, at, "data")) {
            if (!have_fmt) throw FormatError("wav: data chunk before fmt chunk");
            const std::size_t block = channels * 2u;
            if (size % block != 0) throw FormatError("wav: data size is not a whole number of frames");
            const std::size_t frames = size / block;
            AudioBuffer out(channels, frames, static_cast<int>(rate));
            for (std::size_t i = 0; i < frames; ++i) {
                for (int c = 0; c < channels; ++c) {
                    const auto raw = static_cast<std::int16_t>(get_u16(b, body + i * block + 2u * c));
                    out.channel(c)[i] = raw / 32768.0;
                }
            }
            return out;
        }
        at = body + size + (size & 1u);
    }
    throw FormatError(have_fmt ? "wav: no data chunk" : "wav: no fmt chunk");
}

void write_wav(const AudioBuffer& buf, const std::filesystem::path& path) {
    const auto bytes = encode_wav(buf);
    std::ofstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string() + " for writing");
    f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
    if (!f) throw IoError("write failed: " + path.string());
}

AudioBuffer read_wav(const std::filesystem::path& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path.string());
    std::vector<std::uint8_t> bytes((std::istreambuf_iterator<char>(f)), std::istreambuf_iterator<char>());
    return decode_wav(bytes);
}

}  // namespace umlsonic::audio
