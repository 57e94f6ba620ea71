#include <cmath>
#include <cstdint>
#include <filesystem>
#include <random>
#include <vector>

#include "doctest.h"
#include "reference_fft.hpp"
#include "umlsonic/audio/buffer.hpp"
#include "umlsonic/audio/effects.hpp"
#include "umlsonic/audio/mix.hpp"
#include "umlsonic/audio/synth.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/error.hpp"

using namespace umlsonic;
using namespace umlsonic::audio;

namespace {

AudioBuffer sine(double freq, double seconds, double amp) {
    SynthSpec s{Generator::sine, freq, {{"amp", amp}}};
    return synth(s, seconds);
}

AudioBuffer random_buffer(std::mt19937& rng, int channels, std::size_t frames, double amp = 0.9) {
    std::uniform_real_distribution<double> d(-amp, amp);
    AudioBuffer b(channels, frames);
    for (int c = 0; c < channels; ++c)
        for (auto& s : b.channel(c)) s = d(rng);
    return b;
}

double tail_rms(const AudioBuffer& b, std::size_t from) {
    double acc = 0.0;
    std::size_t n = 0;
    for (int c = 0; c < b.channel_count(); ++c) {
        auto ch = b.channel(c);
        for (std::size_t i = from; i < ch.size(); ++i, ++n) acc += ch[i] * ch[i];
    }
    return n ? std::sqrt(acc / n) : 0.0;
}

}  // namespace

TEST_SUITE("synth") {
    TEST_CASE("sine 440 Hz has its autocorrelation peak at the 100-sample period") {
        const auto b = sine(440.0, 1.0, 0.8);
        REQUIRE(b.frames() == 44100);
        auto x = b.channel(0);
        std::size_t best = 0;
        double best_val = -1e300;
        for (std::size_t lag = 50; lag <= 150; ++lag) {
            double acc = 0.0;
            for (std::size_t i = 0; i + lag < x.size(); ++i) acc += x[i] * x[i + lag];
            if (acc > best_val) {
                best_val = acc;
                best = lag;
            }
        }
        CHECK(best >= 99);
        CHECK(best <= 101);
    }

    TEST_CASE("every generator yields exactly round(duration * rate) samples with peak <= 1") {
        for (auto g : {Generator::sine, Generator::square, Generator::noise, Generator::filtered_noise,
                       Generator::chirp, Generator::pluck}) {
            CAPTURE(to_string(g));
            const auto b = synth(SynthSpec{g, 330.0, {{"amp", 1.0}, {"noise_mix", 0.3}, {"am_hz", 3}}}, 0.5);
            CHECK(b.frames() == 22050);
            CHECK(b.channel_count() == 1);
            CHECK(b.peak() <= 1.0);
        }
    }

    TEST_CASE("filtered noise keeps >= 90% of its energy below twice the cutoff") {
        const auto b = synth(SynthSpec{Generator::filtered_noise, 1.0, {{"cutoff_hz", 800.0}}}, 1.0);
        const double frac = reference::energy_fraction_below(b.channel(0), 44100.0, 1600.0);
        CHECK(frac >= 0.90);
    }

    TEST_CASE("invalid arguments") {
        CHECK_THROWS_AS(synth(SynthSpec{}, 0.0), InvalidArgument);
        CHECK_THROWS_AS(synth(SynthSpec{}, -1.0), InvalidArgument);
        CHECK_THROWS_AS(synth(SynthSpec{}, 1.0, 0), InvalidArgument);
        CHECK_THROWS_AS(synth(SynthSpec{Generator::sine, 0.0, {}}, 1.0), InvalidArgument);
        CHECK_NOTHROW(synth(SynthSpec{Generator::noise, 0.0, {}}, 0.1));
    }

    TEST_CASE("synthesis is deterministic") {
        const SynthSpec s{Generator::filtered_noise, 1.0, {{"cutoff_hz", 2000}, {"seed", 7}}};
        CHECK(synth(s, 0.3) == synth(s, 0.3));
        SynthSpec other = s;
        other.params["seed"] = 8;
        CHECK_FALSE(synth(s, 0.3) == synth(other, 0.3));
    }

    TEST_CASE("generator names round-trip") {
        CHECK(generator_from_string("chirp") == Generator::chirp);
        CHECK_FALSE(generator_from_string("saw").has_value());
    }
}

TEST_SUITE("effects") {
    TEST_CASE("equal-power pan examples") {
        auto c = pan_gains(0.0);
        CHECK(c.left == doctest::Approx(0.70711).epsilon(1e-5));
        CHECK(c.right == doctest::Approx(0.70711).epsilon(1e-5));
        auto r = pan_gains(0.5);
        CHECK(std::abs(r.left - 0.38268) <= 1e-5);
        CHECK(std::abs(r.right - 0.92388) <= 1e-5);
        auto hard_left = pan_gains(-1.0);
        CHECK(hard_left.left == doctest::Approx(1.0));
        CHECK(std::abs(hard_left.right) < 1e-12);
    }

    TEST_CASE("equal-power identity holds across the pan range") {
        for (int i = 0; i <= 2000; ++i) {
            const double p = -1.0 + i * 0.001;
            const auto g = pan_gains(p);
            CHECK(std::abs(g.left * g.left + g.right * g.right - 1.0) <= 1e-6);
        }
    }

    TEST_CASE("pitch shift duration law") {
        std::mt19937 rng(3);
        std::uniform_int_distribution<std::size_t> len(1000, 60000);
        for (int s2 = -48; s2 <= 48; ++s2) {
            const double s = s2 / 2.0;
            const std::size_t n = len(rng);
            const AudioBuffer in(1, n);
            const auto out = pitch_shift(in, s);
            const double expected = std::round(n / std::exp2(s / 12.0));
            CHECK(std::abs(static_cast<double>(out.frames()) - expected) <= 1.0);
        }
        const auto one_second = sine(440.0, 1.0, 0.5);
        CHECK(pitch_shift(one_second, 12.0).frames() == 22050);
    }

    TEST_CASE("octave up halves the duration through apply_variables") {
        AuditoryVariables v;
        v.pitch_semitones = 12.0;
        const auto out = apply_variables(sine(300.0, 1.0, 0.5), v);
        CHECK(out.channel_count() == 2);
        CHECK(std::abs(static_cast<long>(out.frames()) - 22050) <= 1);
    }

    TEST_CASE("duration_scale truncates or pads without changing pitch") {
        const auto b = sine(440.0, 1.0, 0.5);
        const auto shorter = scale_duration(b, 0.5);
        CHECK(shorter.frames() == 22050);
        for (std::size_t i = 0; i < shorter.frames(); ++i) REQUIRE(shorter.channel(0)[i] == b.channel(0)[i]);
        const auto longer = scale_duration(b, 1.5);
        CHECK(longer.frames() == 66150);
        CHECK(longer.channel(0)[50000] == 0.0);
        CHECK_THROWS_AS(scale_duration(b, 0.0), InvalidArgument);
    }

    TEST_CASE("envelope reaches -60 dB at decay_s after the attack") {
        const AudioBuffer ones = AudioBuffer::mono(std::vector<double>(44100, 1.0));
        const auto e = apply_envelope(ones, 0.1, 0.5);
        auto ch = e.channel(0);
        CHECK(ch[0] == 0.0);
        CHECK(ch[2205] == doctest::Approx(0.5));
        CHECK(ch[4410] == doctest::Approx(1.0));
        CHECK(ch[4410 + 22050] == doctest::Approx(0.001).epsilon(1e-6));
    }

    TEST_CASE("reverb depth 0 is the dry path bit for bit") {
        const auto b = synth(SynthSpec{Generator::pluck, 220.0, {}}, 0.4);
        AuditoryVariables v;
        v.reverb_depth = 0;
        v.pan = 0.3;
        v.loudness_db = -2.0;
        const auto with = apply_variables(b, v);
        const auto dry = pan_to_stereo(apply_gain(b, -2.0), 0.3);
        CHECK(with == dry);
        CHECK(reverb_wet_mix(0) == 0.0);
        CHECK(reverb_wet_mix(2) == doctest::Approx(0.3));
        CHECK(reverb_wet_mix(9) == doctest::Approx(0.6));
    }

    TEST_CASE("wet tail RMS is non-decreasing in depth 0..4") {
        const auto b = synth(SynthSpec{Generator::filtered_noise, 1.0, {{"cutoff_hz", 3000}}}, 0.3);
        double previous = -1.0;
        for (int depth = 0; depth <= 4; ++depth) {
            AuditoryVariables v;
            v.reverb_depth = depth;
            const auto out = apply_variables(b, v);
            const double r = tail_rms(out, b.frames());
            CAPTURE(depth);
            CHECK(r >= previous);
            previous = r;
        }
        CHECK(previous > 0.0);
    }

    TEST_CASE("variable invariants are enforced") {
        AuditoryVariables v;
        v.pan = 1.5;
        CHECK_THROWS_AS(apply_variables(sine(440, 0.1, 0.5), v), InvalidArgument);
        v = {};
        v.duration_scale = 0.0;
        CHECK_THROWS_AS(apply_variables(sine(440, 0.1, 0.5), v), InvalidArgument);
        v = {};
        v.reverb_depth = -1;
        CHECK_THROWS_AS(apply_variables(sine(440, 0.1, 0.5), v), InvalidArgument);
    }

    TEST_CASE("soft limiter is transparent below the knee and bounded above") {
        CHECK(soft_limit_sample(0.5) == 0.5);
        CHECK(soft_limit_sample(0.99) == 0.99);
        CHECK(soft_limit_sample(1.0) < 1.0);
        CHECK(soft_limit_sample(50.0) <= 1.0);
        CHECK(soft_limit_sample(-3.0) >= -1.0);
        CHECK(soft_limit_sample(1.2) > soft_limit_sample(1.1));
    }
}

TEST_SUITE("mix") {
    TEST_CASE("single buffer at offset 0 is unchanged") {
        const auto b = sine(440.0, 0.5, 0.7);
        const Placement p[] = {{b, 0.0}};
        CHECK(mix(p) == b);
    }

    TEST_CASE("two half-peak sines sum to peak 1 and are limited") {
        const auto b = sine(440.0, 0.5, 0.5);
        const Placement p[] = {{b, 0.0}, {b, 0.0}};
        CHECK(sum_at_offsets(p).peak() == doctest::Approx(1.0));
        CHECK(mix(p).peak() <= 1.0);
    }

    TEST_CASE("length is the maximum of offset + length") {
        const auto b = sine(440.0, 1.0, 0.3);
        const Placement p[] = {{b, 0.0}, {b, 2.0}};
        CHECK(mix(p).duration_s() == doctest::Approx(3.0));
    }

    TEST_CASE("mismatched sample rates are rejected") {
        const Placement p[] = {{AudioBuffer(1, 10, 44100), 0.0}, {AudioBuffer(1, 10, 22050), 0.0}};
        CHECK_THROWS_AS(mix(p), InvalidArgument);
    }

    TEST_CASE("unlimited sum is commutative and associative") {
        std::mt19937 rng(11);
        std::uniform_real_distribution<double> off(0.0, 0.05);
        for (int trial = 0; trial < 20; ++trial) {
            const auto a = random_buffer(rng, 1, 1000 + trial * 37);
            const auto b = random_buffer(rng, 2, 800 + trial * 13);
            const auto c = random_buffer(rng, 1, 1500);
            const double oa = off(rng), ob = off(rng), oc = off(rng);

            const Placement ab[] = {{a, oa}, {b, ob}};
            const Placement ba[] = {{b, ob}, {a, oa}};
            const auto sab = sum_at_offsets(ab);
            const auto sba = sum_at_offsets(ba);
            REQUIRE(sab.frames() == sba.frames());

            const Placement left[] = {{sab, 0.0}, {c, oc}};
            const Placement bc[] = {{b, ob}, {c, oc}};
            const auto sbc = sum_at_offsets(bc);
            const Placement right[] = {{a, oa}, {sbc, 0.0}};
            const auto l = sum_at_offsets(left);
            const auto r = sum_at_offsets(right);
            REQUIRE(l.frames() == r.frames());
            double worst = 0.0;
            for (int ch = 0; ch < 2; ++ch) {
                for (std::size_t i = 0; i < l.frames(); ++i) {
                    worst = std::max(worst, std::abs(l.channel(ch)[i] - r.channel(ch)[i]));
                    if (i < sab.frames()) worst = std::max(worst, std::abs(sab.channel(ch)[i] - sba.channel(ch)[i]));
                }
            }
            CHECK(worst <= 1e-6);
        }
    }
}

TEST_SUITE("normalize") {
    TEST_CASE("scales the peak to the target") {
        const auto b = sine(440.0, 0.2, 0.5);
        CHECK(std::abs(normalize(b, -3.0).peak() - 0.70795) <= 1e-4);
    }

    TEST_CASE("already at target is unchanged") {
        const auto b = normalize(sine(440.0, 0.2, 0.5), -3.0);
        const auto again = normalize(b, -3.0);
        for (std::size_t i = 0; i < b.frames(); ++i) REQUIRE(std::abs(again.channel(0)[i] - b.channel(0)[i]) <= 1e-6);
    }

    TEST_CASE("silence cannot be normalized") {
        CHECK_THROWS_AS(normalize(AudioBuffer(2, 100), -3.0), CannotNormalize);
    }
}

TEST_SUITE("wav") {
    TEST_CASE("one second of stereo has a 176400-byte data chunk") {
        const auto bytes = encode_wav(AudioBuffer(2, 44100));
        REQUIRE(bytes.size() == 44 + 176400);
        const std::uint32_t size = bytes[40] | (bytes[41] << 8) | (bytes[42] << 16) | (bytes[43] << 24);
        CHECK(size == 176400);
        CHECK(bytes[20] == 1);   // PCM
        CHECK(bytes[34] == 16);  // bits per sample
    }

    TEST_CASE("round trip error is bounded by one quantization step") {
        std::mt19937 rng(5);
        for (int channels : {1, 2}) {
            auto b = random_buffer(rng, channels, 5000, 1.0);
            b.channel(0)[0] = 1.0;
            b.channel(0)[1] = -1.0;
            const auto back = decode_wav(encode_wav(b));
            REQUIRE(back.channel_count() == channels);
            REQUIRE(back.frames() == b.frames());
            for (int c = 0; c < channels; ++c)
                for (std::size_t i = 0; i < b.frames(); ++i)
                    REQUIRE(std::abs(back.channel(c)[i] - b.channel(c)[i]) <= 1.0 / 32768.0);
        }
    }

    TEST_CASE("file round trip") {
        const auto path = std::filesystem::temp_directory_path() / "umlsonic_test_audio.wav";
        const auto b = sine(440.0, 0.1, 0.5);
        write_wav(b, path);
        const auto back = read_wav(path);
        CHECK(back.frames() == b.frames());
        CHECK(back.sample_rate() == 44100);
        std::filesystem::remove(path);
        CHECK_THROWS_AS(read_wav(path), IoError);
    }

    TEST_CASE("malformed input is a format error") {
        auto bytes = encode_wav(sine(440.0, 0.1, 0.5));
        auto truncated = bytes;
        truncated.resize(100);
        CHECK_THROWS_AS(decode_wav(truncated), FormatError);
        auto not_riff = bytes;
        not_riff[0] = 'X';
        CHECK_THROWS_AS(decode_wav(not_riff), FormatError);
        auto eight_bit = bytes;
        eight_bit[34] = 8;
        CHECK_THROWS_AS(decode_wav(eight_bit), FormatError);
        auto float_fmt = bytes;
        float_fmt[20] = 3;
        CHECK_THROWS_AS(decode_wav(float_fmt), FormatError);
        CHECK_THROWS_AS(decode_wav(std::vector<std::uint8_t>{}), FormatError);
    }
}
