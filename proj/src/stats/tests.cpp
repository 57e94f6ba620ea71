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

#include "umlsonic/stats/tests.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "umlsonic/error.hpp"

namespace umlsonic::stats {

namespace {

constexpr double kEps = 1e-16;
constexpr int kMaxIter = 10000;

// P(a, x) by its power series; converges quickly for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a, sum = term;
    for (int n = 1; n < kMaxIter; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEps) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Q(a, x) by the continued fraction, modified Lentz.
double gamma_q_fraction(double a, double x) {
    constexpr double tiny = std::numeric_limits<double>::min() / kEps;
    double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
    for (int i = 1; i < kMaxIter; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < kEps) break;
    }
    return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
}

}  // namespace

Descriptive descriptive_stats(std::span<const int> values) {
    if (values.empty()) throw InvalidArgument("descriptive statistics of an empty list");
    Descriptive d;
    d.n = values.size();
    const double n = static_cast<double>(d.n);
    d.mean = std::accumulate(values.begin(), values.end(), 0.0) / n;
    double ss = 0.0;
    for (int v : values) ss += (v - d.mean) * (v - d.mean);
    d.stddev = d.n > 1 ? std::sqrt(ss / (n - 1.0)) : 0.0;
    const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
    d.min = *lo;
    d.max = *hi;
    return d;
}

double regularized_gamma_q(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) throw InvalidArgument("regularized_gamma_q needs a > 0 and x >= 0");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_fraction(a, x);
}

double chi_square_p(double x, int df) {
    if (df < 1) throw InvalidArgument("chi-square needs df >= 1");
    if (!(x >= 0.0)) throw InvalidArgument("chi-square statistic must be >= 0");
    return regularized_gamma_q(df / 2.0, x / 2.0);
}

ChiSquareResult chi_square_gof(std::span<const long> observed) {
    if (observed.size() < 2) throw InvalidArgument("chi-square goodness of fit needs at least two categories");
    if (std::any_of(observed.begin(), observed.end(), [](long o) { return o < 0; }))
        throw InvalidArgument("negative category count");
    const long total = std::accumulate(observed.begin(), observed.end(), 0L);
    if (total == 0) throw InvalidArgument("chi-square goodness of fit with N = 0");

    ChiSquareResult r;
    r.observed.assign(observed.begin(), observed.end());
    const double e = static_cast<double>(total) / static_cast<double>(observed.size());
    r.expected.assign(observed.size(), e);
    for (long o : observed) r.statistic += (static_cast<double>(o) - e) * (static_cast<double>(o) - e) / e;
    r.df = static_cast<int>(observed.size()) - 1;
    r.p = chi_square_p(r.statistic, r.df);
    r.low_n = e < 5.0;
    return r;
}

std::size_t CorrectionOutcome::significant_count() const {
    return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.significant; }));
}

CorrectionOutcome holm_bonferroni(std::span<const double> pvalues, double alpha) {
    for (double p : pvalues)
        if (!(p >= 0.0 && p <= 1.0)) throw InvalidArgument("p-value outside [0, 1]");
    CorrectionOutcome out;
    out.alpha = alpha;
    out.m = pvalues.size();
    out.entries.resize(out.m);
    std::vector<std::size_t> order(out.m);
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return pvalues[a] < pvalues[b]; });
    bool rejecting = true;
    for (std::size_t j = 0; j < out.m; ++j) {
        auto& e = out.entries[order[j]];
        e.p = pvalues[order[j]];
        e.rank = j + 1;
        e.threshold = alpha / static_cast<double>(out.m - j);
        rejecting = rejecting && e.p <= e.threshold;
        e.significant = rejecting;
    }
    return out;
}

}  // namespace umlsonic::stats
