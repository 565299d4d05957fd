// Copyright 2026 The entcert Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

// Scalar inequality engine: the l-factor, the three lemmas, the tightness
// comparisons against earlier bounds and the s0 root solver. Evaluations are
// returned as BoundReport values; a failed hypothesis is reported, not thrown.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "entcert/error.hpp"
#include "entcert/measures.hpp"

namespace entcert {

/// Tolerance for assertions on measure-level quantities.
inline constexpr double kMeasureTolerance = 1e-9;
/// Tolerance for assertions on pure scalar identities.
inline constexpr double kScalarTolerance = 1e-12;
/// Slack on case-selection comparisons so exact ties select every tied case.
inline constexpr double kCaseSlack = 1e-12;

enum class TheoremId {
    Lemma1,
    Lemma2,
    Lemma3,
    UnifiedMonogamy,
    UnifiedBipartition,
    ConcurrencePower,
    Ckw,
    EofPolygamy,
    Thm1,
    Thm2,
    Thm3,
    Thm4,
    Thm5,
    Thm6,
};

constexpr std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::Lemma1: return "lemma1";
        case TheoremId::Lemma2: return "lemma2";
        case TheoremId::Lemma3: return "lemma3";
        case TheoremId::UnifiedMonogamy: return "unified_monogamy";
        case TheoremId::UnifiedBipartition: return "unified_bipartition";
        case TheoremId::ConcurrencePower: return "concurrence_power";
        case TheoremId::Ckw: return "ckw";
        case TheoremId::EofPolygamy: return "eof_polygamy";
        case TheoremId::Thm1: return "thm1";
        case TheoremId::Thm2: return "thm2";
        case TheoremId::Thm3: return "thm3";
        case TheoremId::Thm4: return "thm4";
        case TheoremId::Thm5: return "thm5";
        case TheoremId::Thm6: return "thm6";
    }
    return "unknown";
}

inline TheoremId parse_theorem_id(std::string_view name) {
    for (auto id : {TheoremId::Lemma1, TheoremId::Lemma2, TheoremId::Lemma3, TheoremId::UnifiedMonogamy, TheoremId::UnifiedBipartition,
                    TheoremId::ConcurrencePower, TheoremId::Ckw, TheoremId::EofPolygamy, TheoremId::Thm1, TheoremId::Thm2,
                    TheoremId::Thm3, TheoremId::Thm4, TheoremId::Thm5, TheoremId::Thm6}) {
        if (to_string(id) == name) return id;
    }
    fail(Errc::ParseError, "unknown theorem id '" + std::string(name) + "'");
}

/// Monogamy bounds LHS from below, polygamy bounds it from above.
enum class BoundKind { Monogamy, Polygamy };

constexpr std::string_view to_string(BoundKind kind) {
    return kind == BoundKind::Monogamy ? "monogamy" : "polygamy";
}

struct Condition {
    bool holds = false;
    std::map<std::string, double> values;
};

struct BoundReport {
    TheoremId theorem = TheoremId::Thm1;
    BoundKind kind = BoundKind::Monogamy;
    std::string case_label;
    bool hypothesis_ok = false;
    std::map<std::string, Condition> hypothesis_details;
    /// Relabeling applied before weights were assigned (largest first).
    std::vector<std::size_t> ordering;
    double lhs = 0.0;
    double rhs = 0.0;
    /// lhs - rhs for monogamy, rhs - lhs for polygamy.
    double margin = 0.0;
    std::map<std::string, double> params;

    void set_sides(double lhs_value, double rhs_value) {
        lhs = lhs_value;
        rhs = rhs_value;
        margin = kind == BoundKind::Monogamy ? lhs - rhs : rhs - lhs;
    }

    void add_condition(const std::string& name, bool holds, std::map<std::string, double> values = {}) {
        hypothesis_details[name] = Condition{holds, std::move(values)};
    }

    /// True when every recorded condition holds. Entries named "info:..." are
    /// diagnostics and do not gate the hypothesis.
    [[nodiscard]] bool all_conditions_hold() const {
        return std::all_of(hypothesis_details.begin(), hypothesis_details.end(), [](const auto& entry) {
            return entry.first.starts_with("info:") || entry.second.holds;
        });
    }

    [[nodiscard]] bool certifies(double tolerance = kMeasureTolerance) const {
        return hypothesis_ok && margin >= -tolerance;
    }
};

namespace detail {

inline void require_finite(double value, const char* name) {
    if (!std::isfinite(value)) fail(Errc::DomainError, std::string(name) + " must be finite");
}

inline void require_at_least(double value, double lo, const char* name) {
    require_finite(value, name);
    if (value < lo) fail(Errc::DomainError, std::string(name) + " must be >= " + std::to_string(lo));
}

// a >= b up to the case-selection slack.
inline bool at_least(double a, double b) { return a >= b - kCaseSlack; }

}  // namespace detail

struct LFactor {
    double x = 0.0;
    double k = 1.0;
    double value = 0.0;
};

/// l = ((1 + k)^x - (1/2)^x) / k^x.
inline LFactor l_factor(double x, double k) {
    detail::require_at_least(x, 0.0, "x");
    detail::require_at_least(k, 1.0, "k");
    return {x, k, (std::pow(1.0 + k, x) - std::pow(0.5, x)) / std::pow(k, x)};
}

enum class Regime { Low, High };

constexpr std::string_view to_string(Regime regime) { return regime == Regime::Low ? "low" : "high"; }

namespace detail {

inline void require_regime(double x, Regime regime) {
    require_finite(x, "x");
    if (regime == Regime::Low && !(x >= 0.0 && x <= 0.5)) fail(Errc::DomainError, "low regime needs 0 <= x <= 1/2");
    if (regime == Regime::High && !(x >= 1.0)) fail(Errc::DomainError, "high regime needs x >= 1");
}

}  // namespace detail

/// (1 + t)^x against (1/2)^x + l t^x for t >= k >= 1; >= in the low regime, <= in the high regime.
inline BoundReport lemma1_check(double t, double k, double x, Regime regime) {
    detail::require_at_least(k, 1.0, "k");
    detail::require_at_least(t, k, "t");
    detail::require_regime(x, regime);
    BoundReport report;
    report.theorem = TheoremId::Lemma1;
    report.kind = regime == Regime::Low ? BoundKind::Monogamy : BoundKind::Polygamy;
    report.case_label = std::string(to_string(regime)) + " regime";
    report.params = {{"t", t}, {"k", k}, {"x", x}};
    const double l = l_factor(x, k).value;
    report.params["l"] = l;
    report.add_condition("t>=k", true, {{"t", t}, {"k", k}});
    report.hypothesis_ok = true;
    report.set_sides(std::pow(1.0 + t, x), std::pow(0.5, x) + l * std::pow(t, x));
    return report;
}

struct Lemma2Result {
    double combined = 0.0;
    double weighted = 0.0;
    /// p_1 + ... + p_j >= k p_{j+1} for every j.
    bool peeling_ok = false;
    /// combined - weighted in the low regime, weighted - combined in the high regime.
    double margin = 0.0;
};

/// combined = (sum p)^x, weighted = (1/2)^x sum_i l^{n-i} p_i^x over p sorted nonincreasing.
inline Lemma2Result lemma2_weighted_sum(std::span<const double> p, double x, double k, Regime regime) {
    detail::require_at_least(k, 1.0, "k");
    detail::require_regime(x, regime);
    if (p.empty()) fail(Errc::DomainError, "sequence must be nonempty");
    for (std::size_t i = 0; i < p.size(); ++i) {
        detail::require_at_least(p[i], 0.0, "p_i");
        if (i > 0 && p[i] > p[i - 1]) fail(Errc::NotSorted, "sequence must be nonincreasing");
    }
    const double l = l_factor(x, k).value;
    const std::size_t n = p.size();
    Lemma2Result out;
    double total = 0.0;
    double weighted = 0.0;
    out.peeling_ok = true;
    for (std::size_t i = 0; i < n; ++i) {
        if (i > 0 && total < k * p[i]) out.peeling_ok = false;
        total += p[i];
        weighted += std::pow(l, static_cast<double>(n - 1 - i)) * std::pow(p[i], x);
    }
    out.combined = std::pow(total, x);
    out.weighted = std::pow(0.5, x) * weighted;
    out.margin = regime == Regime::Low ? out.combined - out.weighted : out.weighted - out.combined;
    return out;
}

inline BoundReport lemma2_check(std::span<const double> p, double x, double k, Regime regime) {
    const auto result = lemma2_weighted_sum(p, x, k, regime);
    BoundReport report;
    report.theorem = TheoremId::Lemma2;
    report.kind = regime == Regime::Low ? BoundKind::Monogamy : BoundKind::Polygamy;
    report.case_label = std::string(to_string(regime)) + " regime";
    report.params = {{"x", x}, {"k", k}, {"n", static_cast<double>(p.size())}};
    report.add_condition("peeling", result.peeling_ok);
    report.hypothesis_ok = result.peeling_ok;
    report.set_sides(result.combined, result.weighted);
    return report;
}

/// f^a(x^2 + y^2) >= (1/2)^{a/r} f^a(x^2) + l f^a(y^2) under f^r(y^2) >= k f^r(x^2).
inline BoundReport lemma3_check(double x, double y, double k, double alpha, double r) {
    detail::require_at_least(x, 0.0, "x");
    detail::require_at_least(y, 0.0, "y");
    if (x > 1.0 || y > 1.0 || x * x + y * y > 1.0 + kDomainClamp) {
        fail(Errc::DomainError, "need 0 <= x, y <= 1 and x^2 + y^2 <= 1");
    }
    detail::require_at_least(k, 1.0, "k");
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_at_least(r, 0.0, "r");
    BoundReport report;
    report.theorem = TheoremId::Lemma3;
    report.kind = BoundKind::Monogamy;
    report.case_label = "lemma 3";
    report.params = {{"x", x}, {"y", y}, {"k", k}, {"alpha", alpha}, {"r", r}};
    const double fx = wootters_f(x * x);
    const double fy = wootters_f(y * y);
    const double u = alpha / r;
    const double l = l_factor(u, k).value;
    report.params["l"] = l;
    report.add_condition("alpha<=r/2", alpha <= r / 2.0 + kScalarTolerance, {{"alpha", alpha}, {"r", r}});
    report.add_condition("r>=sqrt2", r >= std::numbers::sqrt2 - kScalarTolerance, {{"r", r}});
    report.add_condition("f^r(y^2)>=k*f^r(x^2)", std::pow(fy, r) >= k * std::pow(fx, r),
                         {{"f(x^2)", fx}, {"f(y^2)", fy}});
    report.hypothesis_ok = report.all_conditions_hold();
    report.set_sides(std::pow(wootters_f(std::min(1.0, x * x + y * y)), alpha),
                     std::pow(0.5, u) * std::pow(fx, alpha) + l * std::pow(fy, alpha));
    return report;
}

struct Remark2Result {
    /// Earlier bound E_x^a + ((1 + k)^{a/r} - 1)/k^{a/r} E_y^a.
    double mu1 = 0.0;
    /// (1/2)^{a/r} E_x^a + l E_y^a.
    double mu2 = 0.0;
    double mu = 0.0;
    bool hypothesis_ok = false;
};

/// Compares the two lower bounds on E^a under E_y^r >= k E_x^r.
inline Remark2Result remark2_compare(double e_x, double e_y, double alpha, double r, double k) {
    detail::require_at_least(e_x, 0.0, "E_x");
    detail::require_at_least(e_y, 0.0, "E_y");
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_finite(r, "r");
    if (!(r > 0.0)) fail(Errc::DomainError, "r must be > 0");
    detail::require_at_least(k, 1.0, "k");
    const double u = alpha / r;
    const double ku = std::pow(k, u);
    Remark2Result out;
    out.mu1 = std::pow(e_x, alpha) + (std::pow(1.0 + k, u) - 1.0) / ku * std::pow(e_y, alpha);
    out.mu2 = std::pow(0.5, u) * std::pow(e_x, alpha) + l_factor(u, k).value * std::pow(e_y, alpha);
    out.mu = out.mu2 - out.mu1;
    out.hypothesis_ok = std::pow(e_y, r) >= k * std::pow(e_x, r) && alpha <= r / 2.0 + kScalarTolerance;
    return out;
}

struct Remark3Result {
    double b1 = 0.0;
    double b2 = 0.0;
    double b3 = 0.0;
    bool hypothesis_ok = false;
};

/// b1 = (1/2)^{a/r} C_x^a + l C_y^a, b2 = C_x^a + ((1+k)^{a/r} - 1)/k^{a/r} C_y^a,
/// b3 = C_x^a + (2^{a/r} - 1) C_y^a.
inline Remark3Result remark3_chain(double c_x, double c_y, double alpha, double r, double k) {
    detail::require_at_least(c_x, 0.0, "C_x");
    detail::require_at_least(c_y, 0.0, "C_y");
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_at_least(r, 2.0, "r");
    detail::require_finite(k, "k");
    if (!(k > 1.0)) fail(Errc::DomainError, "k must be > 1");
    const double u = alpha / r;
    Remark3Result out;
    out.b1 = std::pow(0.5, u) * std::pow(c_x, alpha) + l_factor(u, k).value * std::pow(c_y, alpha);
    out.b2 = std::pow(c_x, alpha) + (std::pow(1.0 + k, u) - 1.0) / std::pow(k, u) * std::pow(c_y, alpha);
    out.b3 = std::pow(c_x, alpha) + (std::pow(2.0, u) - 1.0) * std::pow(c_y, alpha);
    out.hypothesis_ok = std::pow(c_y, r) >= k * std::pow(c_x, r) && alpha <= r / 2.0 + kScalarTolerance;
    return out;
}

inline constexpr double kS0Max = std::numbers::sqrt2;
inline constexpr double kS0Residual = 1e-12;

/// Unique s0 in (0, sqrt 2] with sum_i v_i^{s0} = target, by bisection.
inline double solve_s0(std::span<const double> values, double target = 1.0) {
    if (values.empty()) fail(Errc::DegenerateValue, "no values");
    detail::require_finite(target, "target");
    for (double v : values) {
        if (!std::isfinite(v) || v <= 0.0 || v >= 1.0) {
            fail(Errc::DegenerateValue, "value " + std::to_string(v) + " not strictly inside (0, 1)");
        }
    }
    auto g = [&](double s) {
        double acc = 0.0;
        for (double v : values) acc += std::pow(v, s);
        return acc - target;
    };
    if (g(kS0Max) > 0.0) fail(Errc::NoRoot, "sum v^s exceeds the target on all of (0, sqrt 2]");
    if (static_cast<double>(values.size()) <= target) fail(Errc::NoRoot, "sum v^s stays below the target on (0, sqrt 2]");
    double lo = 0.0;
    double hi = kS0Max;
    for (int iter = 0; iter < 200; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    const double root = 0.5 * (lo + hi);
    if (std::abs(g(root)) >= kS0Residual) fail(Errc::NoConvergence, "s0 bisection residual too large");
    return root;
}

}  // namespace entcert
