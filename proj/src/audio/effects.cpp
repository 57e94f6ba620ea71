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

#include "umlsonic/audio/effects.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "umlsonic/error.hpp"

namespace umlsonic::audio {

PanGains pan_gains(double pan) {
    const double p = std::clamp(pan, -1.0, 1.0);
    const double theta = (p + 1.0) * std::numbers::pi / 4.0;
    return {std::cos(theta), std::sin(theta)};
}

AudioBuffer pitch_shift(const AudioBuffer& in, double semitones) {
    if (semitones == 0.0 || in.empty()) return in;
    const double rate = std::exp2(semitones / 12.0);
    const auto in_len = in.frames();
    const auto out_len = static_cast<std::size_t>(std::llround(static_cast<double>(in_len) / rate));
    AudioBuffer out(in.channel_count(), out_len, in.sample_rate());
    for (int c = 0; c < in.channel_count(); ++c) {
        auto src = in.channel(c);
        auto dst = out.channel(c);
        for (std::size_t j = 0; j < out_len; ++j) {
            const double pos = static_cast<double>(j) * rate;
            const auto k = static_cast<std::size_t>(pos);
            if (k + 1 < in_len) {
                const double frac = pos - static_cast<double>(k);
                dst[j] = src[k] + frac * (src[k + 1] - src[k]);
            } else {
                dst[j] = src[in_len - 1];
            }
        }
    }
    return out;
}

AudioBuffer scale_duration(const AudioBuffer& in, double scale) {
    if (!(scale > 0.0)) throw InvalidArgument("duration scale must be positive");
    if (scale == 1.0) return in;
    AudioBuffer out = in;
    out.resize(static_cast<std::size_t>(std::llround(static_cast<double>(in.frames()) * scale)));
    return out;
}

AudioBuffer apply_envelope(const AudioBuffer& in, double attack_s, double decay_s) {
    if (attack_s <= 0.0 && decay_s <= 0.0) return in;
    AudioBuffer out = in;
    const double sr = in.sample_rate();
    const double attack_frames = attack_s * sr;
    // 10^(-3) = -60 dB after decay_s.
    const double decay_rate = decay_s > 0.0 ? 3.0 * std::numbers::ln10 / decay_s : 0.0;
    for (int c = 0; c < out.channel_count(); ++c) {
        auto ch = out.channel(c);
        for (std::size_t i = 0; i < ch.size(); ++i) {
            const double fi = static_cast<double>(i);
            double g = 1.0;
            if (fi < attack_frames) {
                g = fi / attack_frames;
            } else if (decay_rate > 0.0) {
                g = std::exp(-decay_rate * (fi - attack_frames) / sr);
            }
            ch[i] *= g;
        }
    }
    return out;
}

AudioBuffer apply_gain(const AudioBuffer& in, double gain_db) {
    if (gain_db == 0.0) return in;
    const double g = db_to_gain(gain_db);
    AudioBuffer out = in;
    for (int c = 0; c < out.channel_count(); ++c)
        for (auto& s : out.channel(c)) s *= g;
    return out;
}

double reverb_wet_mix(int depth) { return std::min(0.15 * std::max(depth, 0), 0.6); }

AudioBuffer apply_reverb(const AudioBuffer& in, int depth, const ReverbSettings& settings) {
    const double wet = reverb_wet_mix(depth);
    if (wet == 0.0) return in;

    const int sr = in.sample_rate();
    const std::size_t dry_len = in.frames();
    const std::size_t tail = seconds_to_frames(settings.tail_s, sr);
    const std::size_t len = dry_len + tail;
    // Comb outputs are averaged and scaled so a broadband input keeps
    // roughly its level in the wet path.
    constexpr double kWetScale = 0.35;

    AudioBuffer out(in.channel_count(), len, sr);
    for (int c = 0; c < in.channel_count(); ++c) {
        auto src = in.channel(c);
        auto dst = out.channel(c);
        std::vector<double> wet_sum(len, 0.0);
        for (double delay_ms : settings.comb_delays_ms) {
            const auto d = std::max<std::size_t>(1, seconds_to_frames(delay_ms / 1000.0, sr));
            std::vector<double> y(len, 0.0);
            for (std::size_t n = 0; n < len; ++n) {
                const double x = n < dry_len ? src[n] : 0.0;
                y[n] = x + (n >= d ? settings.feedback * y[n - d] : 0.0);
                wet_sum[n] += y[n];
            }
        }
        const double comb_count = static_cast<double>(settings.comb_delays_ms.size());
        for (std::size_t n = 0; n < len; ++n) {
            const double x = n < dry_len ? src[n] : 0.0;
            dst[n] = (1.0 - wet) * x + wet * kWetScale * wet_sum[n] / comb_count;
        }
        // Fade the truncated tail.
        const std::size_t fade = std::min(tail, seconds_to_frames(settings.fade_out_s, sr));
        for (std::size_t k = 0; k < fade; ++k) dst[len - 1 - k] *= static_cast<double>(k) / static_cast<double>(fade);
    }
    return out;
}

AudioBuffer pan_to_stereo(const AudioBuffer& in, double pan) {
    const auto mono = in.to_mono();
    const auto g = pan_gains(pan);
    auto src = mono.channel(0);
    std::vector<double> left(src.size()), right(src.size());
    for (std::size_t i = 0; i < src.size(); ++i) {
        left[i] = src[i] * g.left;
        right[i] = src[i] * g.right;
    }
    return AudioBuffer::stereo(std::move(left), std::move(right), in.sample_rate());
}

AudioBuffer apply_variables(const AudioBuffer& in, const AuditoryVariables& v) {
    validate(v);
    AudioBuffer x = in.to_mono();
    x = pitch_shift(x, v.pitch_semitones);
    x = scale_duration(x, v.duration_scale);
    x = apply_envelope(x, v.attack_s, v.decay_s);
    x = apply_gain(x, v.loudness_db);
    x = apply_reverb(x, v.reverb_depth);
    return pan_to_stereo(x, v.pan);
}

double soft_limit_sample(double x, double knee, double ceiling) {
    const double a = std::abs(x);
    if (a <= knee) return x;
    const double span = ceiling - knee;
    const double y = knee + span * std::tanh((a - knee) / span);
    return x < 0.0 ? -y : y;
}

AudioBuffer soft_limit(const AudioBuffer& in, double knee, double ceiling) {
    if (in.peak() <= knee) return in;
    AudioBuffer out = in;
    for (int c = 0; c < out.channel_count(); ++c)
        for (auto& s : out.channel(c)) s = soft_limit_sample(s, knee, ceiling);
    return out;
}

}  // namespace umlsonic::audio
