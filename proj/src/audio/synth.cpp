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

#include "umlsonic/audio/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "umlsonic/error.hpp"

namespace umlsonic::audio {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// RBJ cookbook biquad, direct form I.
struct Biquad {
    double b0 = 1, b1 = 0, b2 = 0, a1 = 0, a2 = 0;
    double x1 = 0, x2 = 0, y1 = 0, y2 = 0;

    static Biquad lowpass(double fc, double q, int sr) {
        const double w = kTwoPi * fc / sr;
        const double alpha = std::sin(w) / (2.0 * q);
        const double cw = std::cos(w);
        const double a0 = 1.0 + alpha;
        Biquad f;
        f.b0 = (1.0 - cw) / 2.0 / a0;
        f.b1 = (1.0 - cw) / a0;
        f.b2 = f.b0;
        f.a1 = -2.0 * cw / a0;
        f.a2 = (1.0 - alpha) / a0;
        return f;
    }

    static Biquad highpass(double fc, double q, int sr) {
        const double w = kTwoPi * fc / sr;
        const double alpha = std::sin(w) / (2.0 * q);
        const double cw = std::cos(w);
        const double a0 = 1.0 + alpha;
        Biquad f;
        f.b0 = (1.0 + cw) / 2.0 / a0;
        f.b1 = -(1.0 + cw) / a0;
        f.b2 = f.b0;
        f.a1 = -2.0 * cw / a0;
        f.a2 = (1.0 - alpha) / a0;
        return f;
    }

    double operator()(double x) {
        const double y = b0 * x + b1 * x1 + b2 * x2 - a1 * y1 - a2 * y2;
        x2 = x1;
        x1 = x;
        y2 = y1;
        y1 = y;
        return y;
    }
};

// mt19937 output is fully specified by the standard; the distributions are
// not, so the mapping to [-1, 1) is done by hand.
std::vector<double> white_noise(std::size_t n, std::uint32_t seed) {
    std::mt19937 gen(seed);
    std::vector<double> out(n);
    for (auto& s : out) s = (static_cast<double>(gen()) + 0.5) / 4294967296.0 * 2.0 - 1.0;
    return out;
}

void lowpass4(std::vector<double>& x, double fc, int sr) {
    fc = std::min(fc, 0.45 * sr);
    // Butterworth 4th order as two sections.
    auto s1 = Biquad::lowpass(fc, 0.54119610, sr);
    auto s2 = Biquad::lowpass(fc, 1.30656296, sr);
    for (auto& v : x) v = s2(s1(v));
}

void highpass2(std::vector<double>& x, double fc, int sr) {
    auto f = Biquad::highpass(std::min(fc, 0.45 * sr), std::numbers::sqrt2 / 2.0, sr);
    for (auto& v : x) v = f(v);
}

void scale_to_peak(std::vector<double>& x, double target) {
    double p = 0.0;
    for (double v : x) p = std::max(p, std::abs(v));
    if (p <= 0.0) return;
    const double g = target / p;
    for (auto& v : x) v *= g;
}

std::vector<double> generate(const SynthSpec& spec, std::size_t n, int sr, std::uint32_t seed) {
    std::vector<double> out(n, 0.0);
    const double f0 = spec.base_freq_hz;
    switch (spec.generator) {
        case Generator::sine: {
            const int harmonics = static_cast<int>(spec.param("harmonics", 0.0));
            const double vib_hz = spec.param("vibrato_hz", 0.0);
            const double vib_st = spec.param("vibrato_semitones", 0.0);
            double phase = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / sr;
                double s = 0.0;
                for (int h = 1; h <= harmonics + 1; ++h) s += std::sin(h * phase) / h;
                out[i] = s;
                double f = f0;
                if (vib_hz > 0.0) f *= std::exp2(vib_st * std::sin(kTwoPi * vib_hz * t) / 12.0);
                phase += kTwoPi * f / sr;
                if (phase > kTwoPi * 1024.0) phase = std::fmod(phase, kTwoPi);
            }
            break;
        }
        case Generator::square: {
            double phase = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                out[i] = phase < std::numbers::pi ? 1.0 : -1.0;
                phase = std::fmod(phase + kTwoPi * f0 / sr, kTwoPi);
            }
            break;
        }
        case Generator::noise:
            out = white_noise(n, seed);
            break;
        case Generator::filtered_noise: {
            out = white_noise(n, seed);
            const double hp = spec.param("highpass_hz", 0.0);
            if (hp > 0.0) highpass2(out, hp, sr);
            lowpass4(out, spec.param("cutoff_hz", 1000.0), sr);
            break;
        }
        case Generator::chirp: {
            const double f1 = spec.param("end_hz", 2.0 * f0);
            if (!(f1 > 0.0)) throw InvalidArgument("chirp end_hz must be positive");
            const double total = static_cast<double>(n) / sr;
            double phase = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                const double t = static_cast<double>(i) / sr;
                out[i] = std::sin(phase);
                phase += kTwoPi * f0 * std::pow(f1 / f0, t / total) / sr;
            }
            break;
        }
        case Generator::pluck: {
            // Karplus-Strong.
            const auto period = std::max<std::size_t>(2, static_cast<std::size_t>(std::llround(sr / f0)));
            auto line = white_noise(period, seed);
            const double loss = 0.999 - 0.02 * std::clamp(spec.param("damping", 0.5), 0.0, 1.0);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t k = i % period;
                out[i] = line[k];
                line[k] = loss * 0.5 * (line[k] + line[(k + 1) % period]);
            }
            break;
        }
    }
    return out;
}

}  // namespace

std::string_view to_string(Generator g) {
    switch (g) {
        case Generator::sine: return "sine";
        case Generator::square: return "square";
        case Generator::noise: return "noise";
        case Generator::filtered_noise: return "filtered_noise";
        case Generator::chirp: return "chirp";
        case Generator::pluck: return "pluck";
    }
    return "sine";
}

std::optional<Generator> generator_from_string(std::string_view name) {
    for (auto g : {Generator::sine, Generator::square, Generator::noise, Generator::filtered_noise,
                   Generator::chirp, Generator::pluck}) {
        if (to_string(g) == name) return g;
    }
    return std::nullopt;
}

double SynthSpec::param(const std::string& key, double fallback) const {
    auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

AudioBuffer synth(const SynthSpec& spec, double duration_s, int sample_rate) {
    if (!(duration_s > 0.0)) throw InvalidArgument("synth: duration must be positive");
    if (sample_rate <= 0) throw InvalidArgument("synth: sample rate must be positive");
    const bool needs_freq = spec.generator != Generator::noise && spec.generator != Generator::filtered_noise;
    if (needs_freq && !(spec.base_freq_hz > 0.0)) throw InvalidArgument("synth: base frequency must be positive");

    const std::size_t n = seconds_to_frames(duration_s, sample_rate);
    const auto seed = static_cast<std::uint32_t>(spec.param("seed", 1.0));
    const double sr = sample_rate;

    auto x = generate(spec, n, sample_rate, seed);
    scale_to_peak(x, 1.0);

    if (const double mix = std::clamp(spec.param("noise_mix", 0.0), 0.0, 1.0); mix > 0.0) {
        auto layer = white_noise(n, seed + 7919u);
        lowpass4(layer, spec.param("noise_cutoff_hz", 4000.0), sample_rate);
        scale_to_peak(layer, 1.0);
        for (std::size_t i = 0; i < n; ++i) x[i] = (1.0 - mix) * x[i] + mix * layer[i];
    }

    const double am_hz = spec.param("am_hz", 0.0);
    const double am_depth = std::clamp(spec.param("am_depth", 0.0), 0.0, 1.0);
    const double pulse_hz = spec.param("pulse_hz", 0.0);
    const double duty = std::clamp(spec.param("pulse_duty", 0.5), 0.0, 1.0);
    const double decay = spec.param("decay_per_s", 0.0);
    const std::size_t edge = std::min<std::size_t>(seconds_to_frames(0.002, sample_rate), n / 2);

    for (std::size_t i = 0; i < n; ++i) {
        const double t = static_cast<double>(i) / sr;
        double g = 1.0;
        if (am_hz > 0.0) g *= 1.0 - am_depth * 0.5 * (1.0 + std::sin(kTwoPi * am_hz * t));
        double local = t;
        if (pulse_hz > 0.0) {
            const double period = 1.0 / pulse_hz;
            local = std::fmod(t, period);
            if (local >= duty * period) g = 0.0;
        }
        if (decay > 0.0) g *= std::exp(-decay * local);
        if (i < edge) g *= static_cast<double>(i) / edge;
        if (n - 1 - i < edge) g *= static_cast<double>(n - 1 - i) / edge;
        x[i] *= g;
    }

    scale_to_peak(x, std::clamp(spec.param("amp", 0.8), 0.0, 1.0));
    return AudioBuffer::mono(std::move(x), sample_rate);
}

}  // namespace umlsonic::audio
