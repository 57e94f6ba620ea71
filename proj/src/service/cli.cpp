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

#include "umlsonic/service/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "httplib.h"
#include "umlsonic/acoustics/distance.hpp"
#include "umlsonic/audio/wav.hpp"
#include "umlsonic/catalogue/manifest.hpp"
#include "umlsonic/catalogue/realize.hpp"
#include "umlsonic/error.hpp"
#include "umlsonic/principles/linter.hpp"
#include "umlsonic/service/http.hpp"
#include "umlsonic/sonifier/sonifier.hpp"
#include "umlsonic/stats/dataset.hpp"
#include "umlsonic/stats/report.hpp"
#include "umlsonic/uml/parser.hpp"

namespace umlsonic::service {

namespace {

// Raised for bad option values that CLI11 cannot see.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw IoError("cannot open " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
}

std::string fmt(const char* f, double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, v);
    return buf;
}

bool ends_with(const std::string& s, std::string_view suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

sonifier::RenderProfile make_profile(const std::string& audience, const std::string& tts) {
    sonifier::RenderProfile p;
    auto a = sonifier::audience_from_string(audience);
    if (!a) throw UsageError("unknown audience '" + audience + "' (novice or expert)");
    p.audience = *a;
    p.tts_hook = tts;
    return p;
}

struct Options {
    std::string catalogue, model, element, responses, evidence, out, captions, audience = "expert", tts, host = "127.0.0.1";
    double alpha = 0.05, tau = 1.0;
    int port = 8080;
    bool json = false, profile = false, serial = false;
};

int do_validate(const Options& o, std::ostream& out) {
    const auto cat = catalogue::load_catalogue(o.catalogue);
    std::optional<stats::TransparencyEvidence> ev;
    if (!o.evidence.empty()) {
        ev = ends_with(o.evidence, ".csv")
                 ? stats::study_report(stats::load_responses_file(o.evidence)).evidence
                 : stats::evidence_from_json(read_file(o.evidence));
    }
    const sonifier::RenderProfile profile;
    principles::LintConfig cfg;
    cfg.discriminability_threshold = o.tau;
    if (o.serial) cfg.execution = Execution::serial;
    const auto r = principles::validate(cat, cfg, ev ? &*ev : nullptr, o.profile ? &profile : nullptr);
    out << (o.json ? principles::report_json(r) + "\n" : principles::report_text(r));
    return r.has_errors() ? kExitViolations : kExitOk;
}

int do_render(const Options& o, std::ostream& out) {
    const auto model = uml::load_diagram(o.model);
    const auto cat = catalogue::load_catalogue(o.catalogue);
    const auto profile = make_profile(o.audience, o.tts);
    const auto mode = o.serial ? Execution::serial : Execution::parallel;
    const auto tl = sonifier::plan_walkthrough(model, cat, profile, mode);
    const auto r = sonifier::render_timeline(tl, cat, profile, mode);
    if (!o.out.empty()) audio::write_wav(r.audio, o.out);
    if (!o.captions.empty()) {
        std::ofstream f(o.captions);
        if (!(f << sonifier::to_webvtt(r.captions))) throw IoError("cannot write " + o.captions);
    }
    out << "events " << tl.events.size() << ", duration " << fmt("%.2f", r.audio.duration_s()) << " s, peak "
        << fmt("%.2f", audio::gain_to_db(r.audio.peak())) << " dBFS\n";
    for (const auto& w : r.warnings) out << "warning: " << w << "\n";
    if (o.json || o.out.empty()) {
        for (std::size_t i = 0; i < tl.events.size(); ++i) {
            const auto& e = tl.events[i];
            out << fmt("%8.2f", e.start_s) << "  " << e.caption << "\n";
        }
    }
    return kExitOk;
}

int do_cue(const Options& o, std::ostream& out) {
    const auto model = uml::assign_layout(uml::load_diagram(o.model));
    const auto cat = catalogue::load_catalogue(o.catalogue);
    const auto profile = make_profile(o.audience, o.tts);
    uml::ElementRef ref;
    try {
        ref = uml::resolve_element(model, o.element);
    } catch (const NotFound& e) {
        throw UsageError(e.what());
    }
    const auto cue = sonifier::element_cue(model, ref, cat, profile);
    if (!o.out.empty()) audio::write_wav(cue.audio, o.out);
    out << cue.caption << "\n";
    out << "duration " << fmt("%.2f", cue.audio.duration_s()) << " s, rms "
        << fmt("%.2f", audio::gain_to_db(cue.audio.rms())) << " dBFS\n";
    for (const auto& w : cue.warnings) out << "warning: " << w << "\n";
    return kExitOk;
}

int do_analyze(const Options& o, std::ostream& out) {
    if (!(o.alpha > 0 && o.alpha < 1)) throw UsageError("--alpha must be in (0, 1)");
    const auto r = stats::study_report(stats::load_responses_file(o.responses), o.alpha);
    out << (o.json ? stats::report_json(r) + "\n" : stats::report_text(r));
    return kExitOk;
}

int do_discriminate(const Options& o, std::ostream& out) {
    const auto cat = catalogue::load_catalogue(o.catalogue);
    const auto mode = o.serial ? Execution::serial : Execution::parallel;
    std::vector<audio::AudioBuffer> sounds(cat.bindings.size());
    for_each_index(sounds.size(), mode,
                   [&](std::size_t i) { sounds[i] = catalogue::realize_earcon(cat.bindings[i].recipe, cat).audio; });
    const auto m = acoustics::discriminability_matrix(sounds, mode);
    char cell[32];
    out << std::string(18, ' ');
    for (const auto& b : cat.bindings) {
        std::snprintf(cell, sizeof cell, "%7.6s", b.concept_id.c_str());
        out << cell;
    }
    out << "\n";
    std::size_t below = 0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        std::snprintf(cell, sizeof cell, "%-18s", cat.bindings[i].concept_id.c_str());
        out << cell;
        for (std::size_t j = 0; j < m.size(); ++j) {
            out << fmt("%7.2f", m.distance[i][j]);
            if (j > i && m.distance[i][j] < o.tau) ++below;
        }
        out << "\n";
    }
    out << below << " pairs below tau " << fmt("%.2f", o.tau) << "\n";
    const auto dropped = m.norm.dropped_dimensions();
    if (!dropped.empty()) {
        out << "constant dimensions dropped:";
        for (const auto& d : dropped) out << ' ' << d;
        out << "\n";
    }
    return kExitOk;
}

int do_serve(const Options& o, std::ostream& out) {
    if (o.port < 0 || o.port > 65535) throw UsageError("--port out of range");
    auto ws = make_workspace(uml::load_diagram(o.model), catalogue::load_catalogue(o.catalogue));
    HttpApi api(ws, make_profile("expert", o.tts));
    httplib::Server srv;
    api.install(srv);
    const int port = o.port == 0 ? srv.bind_to_any_port(o.host) : (srv.bind_to_port(o.host, o.port) ? o.port : -1);
    if (port < 0) throw IoError("cannot listen on " + o.host + ":" + std::to_string(o.port));
    out << "serving " << ws->model.name << " with " << ws->catalogue_id << " on http://" << o.host << ":" << port
        << "\n"
        << std::flush;
    return srv.listen_after_bind() ? kExitOk : kExitInternal;
}

}  // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Sonify UML class diagrams and check earcon catalogues", "umlsonic"};
    app.require_subcommand(1);
    Options o;

    auto* validate = app.add_subcommand("validate", "Check a catalogue against the design principles");
    validate->add_option("catalogue", o.catalogue, "Manifest path or builtin:proposed / builtin:baseline")->required();
    validate->add_option("--evidence", o.evidence, "Study report JSON (or responses CSV) for semantic transparency");
    validate->add_flag("--profile", o.profile, "Also check the default rendering profile");
    validate->add_option("--tau", o.tau, "Discriminability threshold")->check(CLI::PositiveNumber);
    validate->add_flag("--json", o.json, "JSON output");

    auto* render = app.add_subcommand("render", "Render a diagram walkthrough");
    render->add_option("model", o.model, "Diagram (.uml)")->required();
    render->add_option("catalogue", o.catalogue, "Catalogue")->required();
    render->add_option("--audience", o.audience, "novice or expert");
    render->add_option("--out", o.out, "Write the walkthrough WAV here");
    render->add_option("--captions", o.captions, "Write WebVTT captions here");
    render->add_option("--tts-cmd", o.tts, "Speech command template, {text} is replaced by the caption");

    auto* cue = app.add_subcommand("cue", "Render the cue for one element");
    cue->add_option("model", o.model, "Diagram (.uml)")->required();
    cue->add_option("catalogue", o.catalogue, "Catalogue")->required();
    cue->add_option("element", o.element, "Qualified element name, e.g. Library.Catalog.Book.isbn")->required();
    cue->add_option("--audience", o.audience, "novice or expert");
    cue->add_option("--out", o.out, "Write the cue WAV here");
    cue->add_option("--tts-cmd", o.tts, "Speech command template");

    auto* analyze = app.add_subcommand("analyze", "Chi-square and Holm analysis of study responses");
    analyze->add_option("responses", o.responses, "Responses CSV")->required();
    analyze->add_option("--alpha", o.alpha, "Significance level");
    analyze->add_flag("--json", o.json, "JSON output");

    auto* discriminate = app.add_subcommand("discriminate", "Print the earcon distance matrix");
    discriminate->add_option("catalogue", o.catalogue, "Catalogue")->required();
    discriminate->add_option("--tau", o.tau, "Threshold to count pairs under")->check(CLI::PositiveNumber);

    auto* serve = app.add_subcommand("serve", "Serve the navigation API");
    serve->add_option("model", o.model, "Diagram (.uml)")->required();
    serve->add_option("catalogue", o.catalogue, "Catalogue")->required();
    serve->add_option("--port", o.port, "TCP port (0 picks a free one)");
    serve->add_option("--host", o.host, "Address to bind");
    serve->add_option("--tts-cmd", o.tts, "Speech command template");

    for (auto* sub : {validate, render, discriminate}) sub->add_flag("--serial", o.serial, "Use the serial kernels");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return kExitUsage;
    }

    try {
        if (*validate) return do_validate(o, out);
        if (*render) return do_render(o, out);
        if (*cue) return do_cue(o, out);
        if (*analyze) return do_analyze(o, out);
        if (*discriminate) return do_discriminate(o, out);
        if (*serve) return do_serve(o, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const IoError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const FormatError& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const NotFound& e) {
        err << "error: " << e.what() << "\n";
        return kExitNoInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return kExitUsage;
}

}  // namespace umlsonic::service
