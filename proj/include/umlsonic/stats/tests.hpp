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

#ifndef UMLSONIC_STATS_TESTS_HPP
#define UMLSONIC_STATS_TESTS_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace umlsonic::stats {

struct Descriptive {
    std::size_t n = 0;
    double mean = 0.0;
    double stddev = 0.0;  // sample (n - 1); 0 when n == 1
    double min = 0.0;
    double max = 0.0;
};

// Throws InvalidArgument on an empty list.
Descriptive descriptive_stats(std::span<const int> values);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a):
/// power series below x = a + 1, Lentz continued fraction above.
double regularized_gamma_q(double a, double x);

// Upper tail of the chi-square distribution: Q(df / 2, x / 2).
double chi_square_p(double x, int df);

struct ChiSquareResult {
    double statistic = 0.0;
    int df = 0;
    double p = 1.0;
    std::vector<double> expected;
    std::vector<long> observed;
    bool low_n = false;  // some expected count is below 5

    bool operator==(const ChiSquareResult&) const = default;
};

/// Goodness of fit against equal expected frequencies E_i = N / k.
/// Needs at least two categories, non-negative counts and N > 0.
ChiSquareResult chi_square_gof(std::span<const long> observed);

struct HolmEntry {
    double p = 1.0;
    std::size_t rank = 0;    // 1-based position in ascending p order
    double threshold = 0.0;  // alpha / (m - rank + 1)
    bool significant = false;
};

struct CorrectionOutcome {
    double alpha = 0.05;
    std::size_t m = 0;
    std::vector<HolmEntry> entries;  // in input order

    std::size_t significant_count() const;
};

/// Holm step-down: walk the p-values in ascending order and reject while
/// p_(j) <= alpha / (m - j + 1); everything from the first failure on is
/// retained. Ties keep input order.
CorrectionOutcome holm_bonferroni(std::span<const double> pvalues, double alpha = 0.05);

}  // namespace umlsonic::stats

#endif  // UMLSONIC_STATS_TESTS_HPP
