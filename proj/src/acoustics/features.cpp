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

#include "umlsonic/acoustics/features.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <vector>

#include "umlsonic/acoustics/fft.hpp"
#include "umlsonic/error.hpp"

namespace umlsonic::acoustics {

namespace {

constexpr double kEps = 1e-30;

double hz_to_mel(double hz) { return 2595.0 * std::log10(1.0 + hz / 700.0); }
double mel_to_hz(double mel) { return 700.0 * (std::pow(10.0, mel / 2595.0) - 1.0); }

// Triangular filters, edges equally spaced in mel between 0 Hz and 8 kHz.
std::vector<std::array<double, kMelBands>> mel_filterbank(int sample_rate) {
    std::array<double, kMelBands + 2> edges{};
    const double top = hz_to_mel(std::min(kMelMaxHz, sample_rate / 2.0));
    for (std::size_t i = 0; i < edges.size(); ++i)
        edges[i] = mel_to_hz(top * static_cast<double>(i) / static_cast<double>(kMelBands + 1));

    std::vector<std::array<double, kMelBands>> weights(kFrameSize / 2 + 1);
    for (std::size_t k = 0; k < weights.size(); ++k) {
        const double f = static_cast<double>(k) * sample_rate / static_cast<double>(kFrameSize);
        for (std::size_t b = 0; b < kMelBands; ++b) {
            const double lo = edges[b], mid = edges[b + 1], hi = edges[b + 2];
            double w = 0.0;
            if (f > lo && f <= mid) w = (f - lo) / (mid - lo);
            else if (f > mid && f < hi) w = (hi - f) / (hi - mid);
            weights[k][b] = w;
        }
    }
    return weights;
}

const std::vector<double>& hann() {
    static const std::vector<double> w = [] {
        std::vector<double> v(kFrameSize);
        for (std::size_t i = 0; i < kFrameSize; ++i)
            v[i] = 0.5 - 0.5 * std::cos(2.0 * std::numbers::pi * static_cast<double>(i) / kFrameSize);
        return v;
    }();
    return w;
}

struct FrameFeatures {
    FeatureVector f;
    double frame_rms = 0.0;
};

FrameFeatures analyse_frame(std::span<const double> raw, int sample_rate,
                            const std::vector<std::array<double, kMelBands>>& bank) {
    FrameFeatures out;
    double energy = 0.0;
    std::size_t crossings = 0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        energy += raw[i] * raw[i];
        if (i > 0 && ((raw[i - 1] < 0.0) != (raw[i] < 0.0))) ++crossings;
    }
    out.frame_rms = std::sqrt(energy / static_cast<double>(raw.size()));
    out.f.rms = out.frame_rms;
    out.f.zero_crossing_rate = static_cast<double>(crossings) / static_cast<double>(raw.size() - 1);

    std::vector<double> windowed(raw.size());
    const auto& w = hann();
    for (std::size_t i = 0; i < raw.size(); ++i) windowed[i] = raw[i] * w[i];
    auto p = power_spectrum(windowed);
    // Full-scale sine -> about -6 dB in its band.
    const double gain = static_cast<double>(kFrameSize) / 2.0;
    for (auto& v : p) v /= gain * gain;

    double total = 0.0, weighted = 0.0, log_sum = 0.0;
    std::array<double, kMelBands> bands{};
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double f = static_cast<double>(k) * sample_rate / static_cast<double>(kFrameSize);
        total += p[k];
        weighted += f * p[k];
        for (std::size_t b = 0; b < kMelBands; ++b) bands[b] += bank[k][b] * p[k];
        if (k > 0) log_sum += std::log(p[k] + kEps);
    }
    const double bins = static_cast<double>(p.size() - 1);
    double non_dc = total - p[0];
    out.f.spectral_centroid_hz = total > 0.0 ? weighted / total : 0.0;
    out.f.spectral_flatness = std::clamp(std::exp(log_sum / bins) / (non_dc / bins + kEps), 0.0, 1.0);
    // Linear band power for now; converted to dB after frame averaging.
    out.f.mel_band_log_energies = bands;
    return out;
}

}  // namespace

std::array<double, kFeatureDims> FeatureVector::as_array() const {
    std::array<double, kFeatureDims> a{};
    std::copy(mel_band_log_energies.begin(), mel_band_log_energies.end(), a.begin());
    a[kMelBands] = spectral_centroid_hz;
    a[kMelBands + 1] = spectral_flatness;
    a[kMelBands + 2] = zero_crossing_rate;
    a[kMelBands + 3] = rms;
    return a;
}

FeatureVector extract_features(const audio::AudioBuffer& buf) {
    if (buf.duration_s() < kMinDurationS)
        throw InvalidArgument("extract_features: sound shorter than 0.05 s");

    const auto mono = buf.to_mono();
    const auto x = mono.channel(0);
    const auto bank = mel_filterbank(buf.sample_rate());

    std::vector<FrameFeatures> frames;
    if (x.size() < kFrameSize) {
        std::vector<double> padded(kFrameSize, 0.0);
        std::copy(x.begin(), x.end(), padded.begin());
        frames.push_back(analyse_frame(padded, buf.sample_rate(), bank));
    } else {
        for (std::size_t start = 0; start + kFrameSize <= x.size(); start += kHopSize)
            frames.push_back(analyse_frame(x.subspan(start, kFrameSize), buf.sample_rate(), bank));
    }

    const double floor = std::pow(10.0, kSilenceFloorDb / 20.0);
    const bool any_active = std::any_of(frames.begin(), frames.end(), [&](const auto& fr) { return fr.frame_rms >= floor; });

    FeatureVector mean;
    std::size_t used = 0;
    for (const auto& fr : frames) {
        if (any_active && fr.frame_rms < floor) continue;
        for (std::size_t b = 0; b < kMelBands; ++b) mean.mel_band_log_energies[b] += fr.f.mel_band_log_energies[b];
        mean.spectral_centroid_hz += fr.f.spectral_centroid_hz;
        mean.spectral_flatness += fr.f.spectral_flatness;
        mean.zero_crossing_rate += fr.f.zero_crossing_rate;
        mean.rms += fr.f.rms;
        ++used;
    }
    const double n = static_cast<double>(used);
    for (auto& m : mean.mel_band_log_energies) m = 10.0 * std::log10(m / n + kEps);
    mean.spectral_centroid_hz /= n;
    mean.spectral_flatness /= n;
    mean.zero_crossing_rate /= n;
    mean.rms /= n;
    return mean;
}

}  // namespace umlsonic::acoustics
