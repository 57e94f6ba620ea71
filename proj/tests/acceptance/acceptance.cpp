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

// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Each check reports what it measured so a failure can be
// read without a debugger.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "umlsonic/acoustics/distance.hpp"
#include "umlsonic/audio/effects.hpp"
#include "umlsonic/audio/mix.hpp"
#include "umlsonic/audio/synth.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/catalogue/builtin.hpp"
#include "umlsonic/catalogue/realize.hpp"
#include "umlsonic/principles/linter.hpp"
#include "umlsonic/service/navigator.hpp"
#include "umlsonic/sonifier/sonifier.hpp"
#include "umlsonic/stats/dataset.hpp"
#include "umlsonic/stats/report.hpp"
#include "umlsonic/stats/tests.hpp"
#include "umlsonic/uml/parser.hpp"

using namespace umlsonic;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

struct Outcome {
    bool pass = true;
    std::string note;

    void fail(const std::string& why) {
        if (pass) note.clear();
        if (!note.empty()) note += "; ";
        note += why;
        pass = false;
    }
    void info(const std::string& s) {
        if (!pass) return;
        if (!note.empty()) note += "; ";
        note += s;
    }
};

std::string num(double v, int prec = 3) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", prec, v);
    return buf;
}

using Key = std::pair<std::string, std::set<std::string>>;

std::set<Key> structural(const principles::ValidationReport& r) {
    using P = principles::PrincipleId;
    std::set<Key> out;
    for (const auto& v : r.violations) {
        if (v.principle == P::SemioticClarity || v.principle == P::PerceptualDiscriminability ||
            v.principle == P::AuditoryEconomy) {
            out.insert({std::string(principles::to_string(v.principle)), {v.subjects.begin(), v.subjects.end()}});
        }
    }
    return out;
}

std::string describe(const std::set<Key>& s) {
    std::string out;
    for (const auto& [p, subj] : s) {
        out += (out.empty() ? "" : ", ") + p + "{";
        bool first = true;
        for (const auto& x : subj) out += (first ? "" : ",") + x, first = false;
        out += "}";
    }
    return out.empty() ? "none" : out;
}

Outcome baseline_violations() {
    Outcome o;
    using P = principles::PrincipleId;
    auto k = [](P p, std::set<std::string> s) { return Key{std::string(principles::to_string(p)), std::move(s)}; };
    const std::set<Key> expected = {
        k(P::SemioticClarity, {"Class", "Attribute"}),
        k(P::SemioticClarity, {"Operation", "Association"}),
        k(P::PerceptualDiscriminability, {"Operation", "Association"}),
        k(P::SemioticClarity, {"Realization", "Dependency"}),
        k(P::PerceptualDiscriminability, {"Realization", "Dependency"}),
        k(P::AuditoryEconomy, {"Inheritance"}),
    };
    const auto base = principles::validate(catalogue::builtin_baseline());
    const auto got = structural(base);
    if (got != expected) o.fail("baseline found " + describe(got));
    bool duration = false, components = false;
    for (const auto& v : base.violations) {
        if (v.principle == P::AuditoryEconomy && v.subjects == std::vector<std::string>{"Inheritance"}) {
            duration |= v.rule == "duration";
            components |= v.rule == "component-count";
        }
    }
    if (!duration || !components) o.fail("Inheritance lacks an economy or duration finding");
    const auto prop = principles::validate(catalogue::builtin_proposed());
    if (!structural(prop).empty()) o.fail("proposed found " + describe(structural(prop)));
    o.info("baseline " + std::to_string(got.size()) + " (principle, subjects) pairs, proposed 0");
    return o;
}

const stats::StudyReport& study() {
    static const stats::StudyReport r =
        stats::study_report(stats::load_responses_file(UMLSONIC_FIXTURES "/study.csv"));
    return r;
}

Outcome statistics_reproduction() {
    Outcome o;
    const auto t0 = Clock::now();
    const auto r = stats::study_report(stats::load_responses_file(UMLSONIC_FIXTURES "/study.csv"));
    const double elapsed = seconds_since(t0);

    const std::map<std::string, std::pair<double, double>> pref = {
        {"Class", {16.516, 0.000}},       {"Attribute", {40.323, 0.000}},   {"Operation", {40.516, 0.000}},
        {"Association", {45.742, 0.000}}, {"Inheritance", {12.645, 0.002}}, {"Realization", {11.097, 0.004}},
        {"Dependency", {45.355, 0.000}},  {"Aggregation", {19.806, 0.000}}, {"Composition", {2.387, 0.303}},
        {"AssociationClass", {8.581, 0.014}}, {"Package", {40.323, 0.000}},
    };
    const std::map<std::string, std::pair<double, double>> rel = {
        {"SemioticClarity", {41.742, 0.000}},      {"PerceptualDiscriminability", {17.871, 0.001}},
        {"SemanticTransparency", {24.323, 0.000}}, {"ComplexityManagement", {3.032, 0.552}},
        {"CognitiveIntegration", {12.710, 0.013}}, {"AuditoryExpressiveness", {3.355, 0.500}},
        {"DualCoding", {15.290, 0.004}},           {"AuditoryEconomy", {15.613, 0.004}},
        {"CognitiveFit", {11.097, 0.025}},
    };
    double worst = 0.0;
    std::size_t rows = 0;
    auto check = [&](const std::string& name, const stats::ChiSquareResult& c,
                     const std::map<std::string, std::pair<double, double>>& table) {
        auto it = table.find(name);
        if (it == table.end()) return;
        ++rows;
        const double d = std::max(std::fabs(c.statistic - it->second.first), std::fabs(c.p - it->second.second));
        worst = std::max(worst, d);
        if (d > 0.01) o.fail(name + " chi " + num(c.statistic) + " p " + num(c.p));
    };
    for (const auto& row : r.preference) check(row.element, row.chi, pref);
    for (const auto& row : r.relevance) check(row.principle, row.chi, rel);
    if (rows != pref.size() + rel.size()) o.fail("only " + std::to_string(rows) + " of 20 rows present");

    for (const auto& row : r.relevance) {
        if (row.principle != "SemioticClarity") continue;
        if (std::fabs(row.descriptive.mean - 4.5161) > 1e-4 || std::fabs(row.descriptive.stddev - 0.6768) > 1e-4)
            o.fail("SemioticClarity mean " + num(row.descriptive.mean, 4) + " sd " + num(row.descriptive.stddev, 4));
    }
    if (elapsed >= 1.0) o.fail("took " + num(elapsed) + " s");
    o.info("20 rows, worst deviation " + num(worst, 4) + ", " + num(elapsed * 1000, 1) + " ms");
    return o;
}

Outcome holm_outcomes() {
    Outcome o;
    const auto& r = study();
    std::size_t pref = 0, rel = 0;
    for (const auto& row : r.preference) {
        pref += row.holm_significant;
        if (row.element == "Composition" && row.holm_significant) o.fail("Composition significant");
    }
    std::vector<std::string> rel_names;
    for (const auto& row : r.relevance) {
        rel += row.holm_significant;
        if (row.holm_significant) rel_names.push_back(row.principle);
        if (row.principle == "CognitiveIntegration") {
            if (row.holm_significant) o.fail("CognitiveIntegration survives correction");
            if (std::fabs(row.holm_threshold - 0.0125) > 1e-12)
                o.fail("CognitiveIntegration threshold " + num(row.holm_threshold, 4));
        }
    }
    const std::vector<std::string> expected_rel = {"SemioticClarity", "PerceptualDiscriminability",
                                                   "SemanticTransparency", "DualCoding", "AuditoryEconomy"};
    std::sort(rel_names.begin(), rel_names.end());
    auto sorted = expected_rel;
    std::sort(sorted.begin(), sorted.end());
    if (pref != 10) o.fail(std::to_string(pref) + " of 11 preference tests significant");
    if (rel != 5 || rel_names != sorted) o.fail(std::to_string(rel) + " of 9 relevance tests significant");
    o.info("preference 10/11, relevance 5/9, CognitiveIntegration p " +
           num(std::find_if(r.relevance.begin(), r.relevance.end(), [](const auto& x) {
                   return x.principle == "CognitiveIntegration";
               })->chi.p, 4) + " > 0.0125");
    return o;
}

Outcome p_value_oracle() {
    Outcome o;
    double worst = 0.0;
    for (int i = 0; i <= 600; ++i) {
        const double x = i * 0.1;
        const double d2 = std::fabs(stats::chi_square_p(x, 2) - std::exp(-x / 2));
        const double d4 = std::fabs(stats::chi_square_p(x, 4) - (1 + x / 2) * std::exp(-x / 2));
        worst = std::max({worst, d2, d4});
    }
    if (worst > 1e-9) o.fail("max error " + std::to_string(worst));
    char buf[64];
    std::snprintf(buf, sizeof buf, "601 points x 2 df, max error %.2e", worst);
    o.info(buf);
    return o;
}

Outcome dsp_properties() {
    Outcome o;
    using namespace audio;
    // Equal-power pan.
    double pan_err = 0.0;
    for (int i = 0; i <= 2000; ++i) {
        const auto g = pan_gains(-1.0 + i * 0.001);
        pan_err = std::max(pan_err, std::fabs(g.left * g.left + g.right * g.right - 1.0));
    }
    if (pan_err > 1e-6) o.fail("pan identity error " + std::to_string(pan_err));

    // Octave up halves the duration.
    long worst_frames = 0;
    for (std::size_t n : {1000u, 4410u, 44100u, 44101u, 99999u}) {
        const auto out = pitch_shift(AudioBuffer(1, n), 12.0);
        worst_frames = std::max(worst_frames, std::labs(static_cast<long>(out.frames()) - std::lround(n / 2.0)));
    }
    if (worst_frames > 1) o.fail("octave shift off by " + std::to_string(worst_frames) + " frames");

    // Reverb tail RMS non-decreasing in depth.
    const auto dry = synth(SynthSpec{Generator::filtered_noise, 1.0, {{"cutoff_hz", 3000}}}, 0.3);
    double prev = -1.0;
    for (int depth = 0; depth <= 4; ++depth) {
        AuditoryVariables v;
        v.reverb_depth = depth;
        const auto out = apply_variables(dry, v);
        double acc = 0.0;
        std::size_t n = 0;
        for (int c = 0; c < out.channel_count(); ++c)
            for (std::size_t i = dry.frames(); i < out.frames(); ++i, ++n) acc += out.channel(c)[i] * out.channel(c)[i];
        const double tail = n ? std::sqrt(acc / n) : 0.0;
        if (tail < prev) o.fail("reverb tail drops at depth " + std::to_string(depth));
        prev = tail;
    }

    // WAV round trip.
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    AudioBuffer b(2, 5000);
    for (int c = 0; c < 2; ++c)
        for (auto& s : b.channel(c)) s = u(rng);
    const auto back = decode_wav(encode_wav(b));
    double wav_err = 0.0;
    for (int c = 0; c < 2; ++c)
        for (std::size_t i = 0; i < b.frames(); ++i)
            wav_err = std::max(wav_err, std::fabs(back.channel(c)[i] - b.channel(c)[i]));
    if (wav_err > 1.0 / 32768.0) o.fail("wav error " + std::to_string(wav_err));

    // Mix associativity.
    auto noise = [&](int ch, std::size_t n) {
        AudioBuffer x(ch, n);
        for (int c = 0; c < ch; ++c)
            for (auto& s : x.channel(c)) s = 0.3 * u(rng);
        return x;
    };
    const auto x = noise(1, 1200), y = noise(2, 900), z = noise(1, 1500);
    const Placement xy[] = {{x, 0.01}, {y, 0.02}};
    const Placement yz[] = {{y, 0.02}, {z, 0.005}};
    const Placement left[] = {{sum_at_offsets(xy), 0.0}, {z, 0.005}};
    const Placement right[] = {{x, 0.01}, {sum_at_offsets(yz), 0.0}};
    const auto l = sum_at_offsets(left), r = sum_at_offsets(right);
    double mix_err = l.frames() == r.frames() ? 0.0 : 1.0;
    for (int c = 0; c < 2 && mix_err < 1.0; ++c)
        for (std::size_t i = 0; i < l.frames(); ++i) mix_err = std::max(mix_err, std::fabs(l.channel(c)[i] - r.channel(c)[i]));
    if (mix_err > 1e-6) o.fail("mix associativity error " + std::to_string(mix_err));

    char buf[160];
    std::snprintf(buf, sizeof buf, "pan %.1e, octave +-%ld frame, reverb monotone, wav %.2e, mix %.1e", pan_err,
                  worst_frames, wav_err, mix_err);
    o.info(buf);
    return o;
}

Outcome sonifier_contract() {
    Outcome o;
    const auto model = uml::load_diagram(UMLSONIC_FIXTURES "/library.uml");
    const auto cat = catalogue::builtin_proposed();
    const sonifier::RenderProfile profile;
    const auto t0 = Clock::now();
    const auto tl = sonifier::plan_walkthrough(model, cat, profile);
    const auto r = sonifier::render_timeline(tl, cat, profile);
    const double elapsed = seconds_since(t0);

    const auto elements = uml::model_stats(model).element_count();
    if (tl.events.size() != elements + 1) o.fail(std::to_string(tl.events.size()) + " events for " +
                                                 std::to_string(elements) + " elements");
    // The window is +-loudness_window_db around the mean cue level.
    const auto [lo, hi] = std::minmax_element(r.cue_rms_db.begin(), r.cue_rms_db.end());
    const double spread = *hi - *lo;
    double mean = 0.0;
    for (double v : r.cue_rms_db) mean += v / static_cast<double>(r.cue_rms_db.size());
    double worst = 0.0;
    for (double v : r.cue_rms_db) worst = std::max(worst, std::fabs(v - mean));
    if (worst > profile.loudness_window_db + 1e-9) o.fail("a cue sits " + num(worst, 2) + " dB off the mean");
    if (spread > 2.0 * profile.loudness_window_db + 1e-9) o.fail("cue RMS spread " + num(spread, 2) + " dB");
    const double peak_db = audio::gain_to_db(r.audio.peak());
    if (peak_db > -1.0) o.fail("peak " + num(peak_db, 2) + " dBFS");
    if (r.captions.size() != tl.events.size()) o.fail(std::to_string(r.captions.size()) + " captions");
    if (elapsed >= 10.0) o.fail("render took " + num(elapsed, 2) + " s");
    o.info(std::to_string(tl.events.size()) + " events (" + std::to_string(elements) + " elements + motif), cue RMS within " +
           num(worst, 2) + " dB of the mean (spread " + num(spread, 2) + "), peak " + num(peak_db, 2) + " dBFS, " + num(elapsed, 2) + " s");
    return o;
}

Outcome calibration() {
    Outcome o;
    const double tau = 1.0;
    auto matrix = [](const catalogue::SoundCatalogue& cat) {
        std::vector<audio::AudioBuffer> sounds;
        for (const auto& b : cat.bindings) sounds.push_back(catalogue::realize_earcon(b.recipe, cat).audio);
        return acoustics::discriminability_matrix(sounds);
    };
    const auto prop = catalogue::builtin_proposed();
    const auto mp = matrix(prop);
    std::size_t pairs = 0;
    double min_d = 1e300;
    for (std::size_t i = 0; i < mp.size(); ++i)
        for (std::size_t j = i + 1; j < mp.size(); ++j) {
            ++pairs;
            min_d = std::min(min_d, mp.distance[i][j]);
            if (mp.distance[i][j] < tau)
                o.fail(prop.bindings[i].concept_id + "/" + prop.bindings[j].concept_id + " " + num(mp.distance[i][j]));
        }
    if (pairs != 55) o.fail(std::to_string(pairs) + " proposed pairs");

    const auto base = catalogue::builtin_baseline();
    const auto mb = matrix(base);
    auto at = [&](const char* a, const char* b) {
        std::size_t i = 0, j = 0;
        for (std::size_t k = 0; k < base.bindings.size(); ++k) {
            if (base.bindings[k].concept_id == a) i = k;
            if (base.bindings[k].concept_id == b) j = k;
        }
        return mb.distance[i][j];
    };
    const double water = at("Operation", "Association");
    const double wind = at("Realization", "Dependency");
    if (!(water < tau)) o.fail("water A/B " + num(water));
    if (!(wind < tau)) o.fail("wind A/B " + num(wind));
    o.info("55 proposed pairs, min " + num(min_d, 2) + "; water A/B " + num(water, 2) + ", wind A/B " + num(wind, 2));
    return o;
}

Outcome navigation_determinism() {
    Outcome o;
    using K = service::NavMove::Kind;
    const auto ws = service::make_workspace(uml::load_diagram(UMLSONIC_FIXTURES "/library.uml"),
                                            catalogue::builtin_proposed());
    const std::vector<service::NavMove> script = {
        {K::into},         {K::next_sibling}, {K::next_sibling}, {K::into},       {K::next_sibling},
        {K::next_sibling}, {K::out},          {K::prev_sibling}, {K::into},       {K::next_sibling},
        {K::out},          {K::follow_relationship, 1},          {K::into},       {K::next_sibling},
        {K::next_sibling}, {K::repeat_cue},   {K::out},          {K::where_am_i}, {K::out},
        {K::prev_sibling},
    };
    auto run = [&] {
        service::Navigator nav(ws, sonifier::RenderProfile{}, std::make_shared<service::CueCache>());
        std::vector<std::string> trace;
        for (const auto& m : script) {
            const auto e = nav.navigate(m);
            trace.push_back(e.focus_id + "|" + e.cue_id);
        }
        return trace;
    };
    const auto a = run();
    const auto b = run();
    if (a != b) o.fail("two runs of the 20-move script diverge");

    // into then out restores the focus, for every tree element.
    std::size_t checked = 0;
    const auto& m = ws->model;
    for (const auto& ref : uml::walk_elements(m)) {
        if (ref.kind == uml::ElementRef::Kind::relationship) continue;
        service::Navigator nav(ws, sonifier::RenderProfile{}, std::make_shared<service::CueCache>());
        std::vector<uml::ElementRef> chain;
        for (std::optional<uml::ElementRef> r = ref; r; r = uml::parent_of(m, *r)) chain.insert(chain.begin(), *r);
        bool ok = true;
        for (std::size_t level = 0; level < chain.size() && ok; ++level) {
            if (level > 0) ok = nav.navigate({K::into}).moved;
            while (ok && !nav.navigate({K::prev_sibling}).boundary) {}
            for (int guard = 0; ok && nav.focus() != chain[level]; ++guard)
                ok = guard < 64 && nav.navigate({K::next_sibling}).moved;
        }
        if (!ok || nav.focus() != ref) {
            o.fail("cannot reach " + uml::to_string(m, ref));
            continue;
        }
        if (nav.navigate({K::into}).moved) nav.navigate({K::out});
        if (nav.focus() != ref) o.fail("into/out moves off " + uml::to_string(m, ref));
        ++checked;
    }
    o.info("20 moves identical across runs, reversibility on " + std::to_string(checked) + " elements");
    return o;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
        {"baseline violation reproduction", baseline_violations},
        {"statistics reproduction", statistics_reproduction},
        {"Holm-Bonferroni outcomes", holm_outcomes},
        {"exact p-value oracle", p_value_oracle},
        {"DSP property suite", dsp_properties},
        {"sonifier contract", sonifier_contract},
        {"discriminability calibration", calibration},
        {"navigation determinism", navigation_determinism},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        failures += !o.pass;
        std::printf("%s criterion %zu: %s (%s)\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.note.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
