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

#ifndef UMLSONIC_PRINCIPLES_LINTER_HPP
#define UMLSONIC_PRINCIPLES_LINTER_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "umlsonic/catalogue/catalogue.hpp"
#include "umlsonic/parallel.hpp"
#include "umlsonic/sonifier/profile.hpp"
#include "umlsonic/stats/report.hpp"

namespace umlsonic::principles {

enum class PrincipleId {
    SemioticClarity,
    PerceptualDiscriminability,
    SemanticTransparency,
    ComplexityManagement,
    CognitiveIntegration,
    AuditoryExpressiveness,
    DualCoding,
    AuditoryEconomy,
    CognitiveFit,
};

inline constexpr std::size_t kPrincipleCount = 9;
const std::array<PrincipleId, kPrincipleCount>& all_principles();
std::string_view to_string(PrincipleId p);
std::optional<PrincipleId> principle_from_string(std::string_view s);

enum class Severity { error, warning, info };
std::string_view to_string(Severity s);

/// One finding. `rule` names the check that fired: overload, redundancy,
/// deficit, excess (clarity); below-threshold (discriminability);
/// earcon-count, component-count, duration (economy); empty-caption;
/// evidence (transparency); profile; expressiveness. Subjects are sorted.
struct Violation {
    PrincipleId principle = PrincipleId::SemioticClarity;
    Severity severity = Severity::error;
    std::string rule;
    std::vector<std::string> subjects;
    std::string detail;
    std::optional<double> measured;

    bool operator==(const Violation&) const = default;
};

struct LintConfig {
    double discriminability_threshold = 1.0;  // tau, z-space distance
    std::size_t max_earcons = 12;
    std::size_t max_components_per_earcon = 4;
    double max_earcon_s = 3.0;
    double transparency_majority = 0.5;
    Execution execution = Execution::parallel;
};

// Throws InvalidArgument unless every threshold is positive.
void validate(const LintConfig& c);

struct Unchecked {
    PrincipleId principle;
    std::string reason;

    bool operator==(const Unchecked&) const = default;
};

// Result of one check: findings, or the reason it could not run.
struct CheckResult {
    std::vector<Violation> violations;
    std::optional<std::string> unchecked;
};

struct DiscriminabilitySummary {
    std::vector<std::string> concepts;  // binding order
    std::vector<std::vector<double>> distance;
    double threshold = 1.0;
    std::vector<std::string> dropped_dimensions;
};

struct ValidationReport {
    std::string catalogue;
    std::string version;
    std::vector<PrincipleId> checked;
    std::vector<Unchecked> unchecked;
    std::vector<Violation> violations;
    DiscriminabilitySummary discriminability;

    std::size_t count(Severity s) const;
    bool has_errors() const { return count(Severity::error) > 0; }
};

// Recipe identity: composition mode plus each component's rounded variables
// and either its depicted symbol (the sign as the listener meets it) or its
// asset id (the sound itself).
std::string recipe_signature(const catalogue::EarconRecipe& r, const catalogue::SoundCatalogue& cat,
                             bool by_symbol = true);

CheckResult check_semiotic_clarity(const catalogue::SoundCatalogue& cat);
CheckResult check_discriminability(const catalogue::SoundCatalogue& cat, const LintConfig& config);
CheckResult check_economy(const catalogue::SoundCatalogue& cat, const LintConfig& config);
// Findings are filed under AuditoryEconomy with rule "duration".
CheckResult check_duration(const catalogue::SoundCatalogue& cat, const LintConfig& config);
CheckResult check_dual_coding(const catalogue::SoundCatalogue& cat);
// Uses the evidence column named by cat.study_role. Throws EvidenceMismatch
// when the evidence names a concept the catalogue neither declares nor binds.
CheckResult check_semantic_transparency(const catalogue::SoundCatalogue& cat, const stats::TransparencyEvidence* evidence,
                                        const LintConfig& config);
// ComplexityManagement, CognitiveIntegration and CognitiveFit.
CheckResult check_profile_principles(const sonifier::RenderProfile& profile);
CheckResult check_expressiveness(const catalogue::SoundCatalogue& cat);

/// Runs every check. Each principle ends up either checked or unchecked
/// (with a reason); violations are ordered by principle, then subjects,
/// then rule.
ValidationReport validate(const catalogue::SoundCatalogue& cat, const LintConfig& config = {},
                          const stats::TransparencyEvidence* evidence = nullptr,
                          const sonifier::RenderProfile* profile = nullptr);

std::string report_json(const ValidationReport& r);
std::string report_text(const ValidationReport& r);

}  // namespace umlsonic::principles

#endif  // UMLSONIC_PRINCIPLES_LINTER_HPP
