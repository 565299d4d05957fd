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

// State-level monogamy and polygamy bounds and the earlier inequalities they
// are compared against. Inputs are pure all-qubit states; subsystem indices
// are 0-based, so A_1 is index 0.

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "entcert/bounds.hpp"
#include "entcert/entropy.hpp"
#include "entcert/measures.hpp"
#include "entcert/qstate.hpp"

namespace entcert {

/// Weight attached to a pair or single subsystem, with its measured value.
struct RankedTerm {
    std::size_t index = 0;
    double value = 0.0;
};

namespace detail {

inline void require_qubits(const PureState& psi, std::size_t min_n) {
    if (!psi.all_qubits()) fail(Errc::BadDims, "bounds are evaluated on all-qubit states");
    if (psi.num_subsystems() < min_n) {
        fail(Errc::BadArity, "need at least " + std::to_string(min_n) + " qubits");
    }
}

inline void require_exactly(const PureState& psi, std::size_t n) {
    require_qubits(psi, n);
    if (psi.num_subsystems() != n) fail(Errc::BadArity, "need exactly " + std::to_string(n) + " qubits");
}

inline Bipartition one_vs_rest(std::size_t n) { return Bipartition::first(1, n); }

// C^2(rho_{A_1 A_j}) for j = 1..n-1 (0-based).
inline std::vector<double> pair_c2_with_first(const PureState& psi) {
    std::vector<double> out;
    for (std::size_t j = 1; j < psi.num_subsystems(); ++j) {
        const double c = pair_concurrence(psi, 0, j);
        out.push_back(c * c);
    }
    return out;
}

inline std::vector<double> eof_from_c2(const std::vector<double>& c2) {
    std::vector<double> out;
    for (double x : c2) out.push_back(wootters_f(x));
    return out;
}

// Indices sorted by value descending; ties keep their natural order.
inline std::vector<std::size_t> descending_order(const std::vector<double>& values) {
    std::vector<std::size_t> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });
    return order;
}

inline std::map<std::string, double> indexed(const std::string& prefix, const std::vector<double>& values,
                                             std::size_t first_label) {
    std::map<std::string, double> out;
    for (std::size_t i = 0; i < values.size(); ++i) out[prefix + std::to_string(first_label + i)] = values[i];
    return out;
}

// Candidate evaluations of a case-structured bound; the least favourable is kept.
struct CaseCandidate {
    std::string label;
    double rhs = 0.0;
};

inline void settle_cases(BoundReport& report, double lhs, const std::vector<CaseCandidate>& matched,
                         const CaseCandidate& fallback) {
    if (matched.empty()) {
        report.add_condition("case_match", false, {{"matching_cases", 0.0}});
        report.hypothesis_ok = false;
        report.case_label = "no applicable case";
        report.set_sides(lhs, fallback.rhs);
        return;
    }
    std::optional<BoundReport> best;
    for (const auto& candidate : matched) {
        BoundReport trial = report;
        trial.case_label = candidate.label;
        trial.set_sides(lhs, candidate.rhs);
        if (!best || trial.margin < best->margin) best = std::move(trial);
    }
    std::string all_labels;
    for (const auto& candidate : matched) all_labels += (all_labels.empty() ? "" : ";") + candidate.label;
    report = std::move(*best);
    report.add_condition("case_match", true, {{"matching_cases", static_cast<double>(matched.size())}});
    report.hypothesis_ok = report.all_conditions_hold();
    if (matched.size() > 1) report.case_label += " (matches: " + all_labels + ")";
}

// The three-case chain shared by the n-qubit EoF monogamy and polygamy bounds.
// `low[i]` / `high[i]` classify E_{A_1 A_{i+2}}, `terms[i]` is E^power of
// E_{A_1 A_{i+2}}, `half` is (1/2)^u and `l` the l-factor.
inline std::vector<CaseCandidate> chain_cases(const std::vector<bool>& low, const std::vector<bool>& high,
                                              const std::vector<double>& terms, double half, double l) {
    const std::size_t n = terms.size() + 1;
    std::vector<CaseCandidate> matched;
    auto all_of_range = [](const std::vector<bool>& flags, std::size_t from, std::size_t to) {
        for (std::size_t i = from; i < to; ++i)
            if (!flags[i]) return false;
        return true;
    };
    const std::size_t classified = n - 2;
    // case 1: low for A_2..A_m, high for A_{m+1}..A_{n-1}
    for (std::size_t m = 2; m + 2 <= n; ++m) {
        if (!all_of_range(low, 0, m - 1) || !all_of_range(high, m - 1, classified)) continue;
        double head = 0.0;
        for (std::size_t i = 0; i + 1 < m; ++i) head += std::pow(l, static_cast<double>(i)) * terms[i];
        double middle = 0.0;
        for (std::size_t j = 0; j + m + 1 < n; ++j) middle += std::pow(half, static_cast<double>(j)) * terms[m - 1 + j];
        const double rhs = half * head + std::pow(l, static_cast<double>(m)) * middle +
                           std::pow(l, static_cast<double>(m - 1)) * std::pow(half, static_cast<double>(n - m - 1)) *
                               terms[n - 2];
        matched.push_back({"case 1 (m=" + std::to_string(m) + ")", rhs});
    }
    if (all_of_range(low, 0, classified)) {
        double head = 0.0;
        for (std::size_t i = 0; i < classified; ++i) head += std::pow(l, static_cast<double>(i)) * terms[i];
        matched.push_back({"case 2", half * head + std::pow(l, static_cast<double>(n - 2)) * terms[n - 2]});
    }
    if (all_of_range(high, 0, classified)) {
        double head = 0.0;
        for (std::size_t i = 0; i < classified; ++i) head += std::pow(half, static_cast<double>(i)) * terms[i];
        matched.push_back({"case 3", l * head + std::pow(half, static_cast<double>(n - 2)) * terms[n - 2]});
    }
    return matched;
}

inline double chain_fallback(const std::vector<double>& terms, double half, double l) {
    const std::size_t n = terms.size() + 1;
    double head = 0.0;
    for (std::size_t i = 0; i + 2 < n; ++i) head += std::pow(l, static_cast<double>(i)) * terms[i];
    return half * head + std::pow(l, static_cast<double>(n - 2)) * terms[n - 2];
}

inline void record_envelope(BoundReport& report, const std::string& name, bool holds,
                            std::map<std::string, double> values) {
    report.add_condition(name, holds, std::move(values));
}

}  // namespace detail

/// E_{q,s}^a(rho_{A_1|rest}) >= sum_j E_{q,s}^a(rho_{A_1 A_j}); a >= 1, q >= 2, 0 <= s <= 1, qs <= 3.
inline BoundReport baseline_unified_monogamy(const PureState& psi, double alpha, const UnifiedParams& p) {
    detail::require_qubits(psi, 2);
    detail::require_at_least(alpha, 0.0, "alpha");
    p.validate();
    if (!unified_f_valid_domain(p)) fail(Errc::UnsupportedDomain, "(q, s) outside the two-qubit envelope");
    BoundReport report;
    report.theorem = TheoremId::UnifiedMonogamy;
    report.kind = BoundKind::Monogamy;
    report.case_label = "baseline";
    report.params = {{"alpha", alpha}, {"q", p.q}, {"s_entropy", p.s}};
    report.add_condition("alpha>=1", alpha >= 1.0, {{"alpha", alpha}});
    report.add_condition("q>=2,0<=s<=1,qs<=3", p.q >= 2.0 && p.s <= 1.0 && p.q * p.s <= 3.0 + kScalarTolerance,
                         {{"q", p.q}, {"s", p.s}});
    report.hypothesis_ok = report.all_conditions_hold();
    const std::size_t n = psi.num_subsystems();
    const double lhs = std::pow(unified_ent(psi, detail::one_vs_rest(n), p).value, alpha);
    double rhs = 0.0;
    for (double c2 : detail::pair_c2_with_first(psi)) rhs += std::pow(unified_f(c2, p), alpha);
    report.set_sides(lhs, rhs);
    return report;
}

/// E_{q,s}^a(rho_{L|R}) >= sum_{i in L, j in R} E_{q,s}^a(rho_{A_i A_j}).
inline BoundReport baseline_unified_bipartition(const PureState& psi, const Bipartition& part, double alpha, const UnifiedParams& p) {
    detail::require_qubits(psi, 2);
    detail::require_full_partition(psi, part);
    detail::require_at_least(alpha, 0.0, "alpha");
    p.validate();
    if (!unified_f_valid_domain(p)) fail(Errc::UnsupportedDomain, "(q, s) outside the two-qubit envelope");
    BoundReport report;
    report.theorem = TheoremId::UnifiedBipartition;
    report.kind = BoundKind::Monogamy;
    report.case_label = "baseline";
    report.params = {{"alpha", alpha}, {"q", p.q}, {"s_entropy", p.s}, {"m", static_cast<double>(part.left.size())}};
    report.add_condition("alpha>=1", alpha >= 1.0, {{"alpha", alpha}});
    report.add_condition("q>=2,0<=s<=1,qs<=3", p.q >= 2.0 && p.s <= 1.0 && p.q * p.s <= 3.0 + kScalarTolerance,
                         {{"q", p.q}, {"s", p.s}});
    report.hypothesis_ok = report.all_conditions_hold();
    const double lhs = std::pow(unified_ent(psi, part, p).value, alpha);
    double rhs = 0.0;
    for (std::size_t i : part.left)
        for (std::size_t j : part.right) {
            const double c = pair_concurrence(psi, i, j);
            rhs += std::pow(unified_f(c * c, p), alpha);
        }
    report.set_sides(lhs, rhs);
    return report;
}

/// C^a(rho_{A_1|rest}) >= sum_j C^a(rho_{A_1 A_j}) for a >= 2.
inline BoundReport baseline_concurrence_power(const PureState& psi, double alpha) {
    detail::require_qubits(psi, 2);
    detail::require_at_least(alpha, 0.0, "alpha");
    BoundReport report;
    report.theorem = TheoremId::ConcurrencePower;
    report.kind = BoundKind::Monogamy;
    report.case_label = "baseline";
    report.params = {{"alpha", alpha}};
    report.add_condition("alpha>=2", alpha >= 2.0, {{"alpha", alpha}});
    report.hypothesis_ok = report.all_conditions_hold();
    const std::size_t n = psi.num_subsystems();
    const double lhs = std::pow(concurrence_pure(psi, detail::one_vs_rest(n)).value, alpha);
    double rhs = 0.0;
    for (double c2 : detail::pair_c2_with_first(psi)) rhs += std::pow(std::sqrt(c2), alpha);
    report.set_sides(lhs, rhs);
    return report;
}

/// C^2_{A_1|A_2 A_3} >= C^2_{A_1 A_2} + C^2_{A_1 A_3} on three qubits.
inline BoundReport baseline_ckw(const PureState& psi) {
    detail::require_exactly(psi, 3);
    BoundReport report;
    report.theorem = TheoremId::Ckw;
    report.kind = BoundKind::Monogamy;
    report.case_label = "baseline";
    report.hypothesis_ok = true;
    const auto c2 = detail::pair_c2_with_first(psi);
    report.add_condition("three_qubits", true, detail::indexed("C2_1", c2, 2));
    report.set_sides(concurrence_squared_pure(psi, detail::one_vs_rest(3)), c2[0] + c2[1]);
    return report;
}

/// E_{q,s}^a(rho_{L|R}) >= (1/2)^{a/r} sum l^{e} E_{q,s}^a(rho_{A_i A_j}) over pairs across the
/// cut, the exponents e = |L||R|-1, ..., 0 assigned in descending order of the pair values.
inline BoundReport thm1_bound(const PureState& psi, const Bipartition& part, double alpha, double r, double k,
                              const UnifiedParams& p) {
    detail::require_qubits(psi, 2);
    detail::require_full_partition(psi, part);
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_finite(r, "r");
    if (!(r > 0.0)) fail(Errc::DomainError, "r must be > 0");
    detail::require_at_least(k, 1.0, "k");
    p.validate();
    if (!unified_f_valid_domain(p)) fail(Errc::UnsupportedDomain, "(q, s) outside the two-qubit envelope");

    BoundReport report;
    report.theorem = TheoremId::Thm1;
    report.kind = BoundKind::Monogamy;
    report.case_label = "general";
    report.params = {{"alpha", alpha}, {"r", r}, {"k", k}, {"q", p.q}, {"s_entropy", p.s},
                     {"m", static_cast<double>(part.left.size())}};
    report.add_condition("0<=alpha<=r/2", alpha <= r / 2.0 + kScalarTolerance, {{"alpha", alpha}, {"r", r}});
    report.add_condition("r>=1", r >= 1.0, {{"r", r}});
    report.add_condition("q>=2,0<=s<=1,qs<=3", p.q >= 2.0 && p.s <= 1.0 && p.q * p.s <= 3.0 + kScalarTolerance,
                         {{"q", p.q}, {"s", p.s}});
    report.hypothesis_ok = report.all_conditions_hold();

    std::vector<double> pair_values;
    std::map<std::string, double> labelled;
    for (std::size_t i : part.left)
        for (std::size_t j : part.right) {
            const double c = pair_concurrence(psi, i, j);
            pair_values.push_back(unified_f(c * c, p));
            labelled["E_" + std::to_string(i + 1) + "_" + std::to_string(j + 1)] = pair_values.back();
        }
    report.ordering = detail::descending_order(pair_values);
    const double u = alpha / r;
    const double l = l_factor(u, k).value;
    report.params["l"] = l;
    const std::size_t count = pair_values.size();
    double weighted = 0.0;
    std::vector<double> sorted_powers;
    for (std::size_t rank = 0; rank < count; ++rank) {
        const double e = pair_values[report.ordering[rank]];
        weighted += std::pow(l, static_cast<double>(count - 1 - rank)) * std::pow(e, alpha);
        sorted_powers.push_back(std::pow(e, r));
    }
    // Informational: the peeling condition on the sorted E^r sequence.
    double partial = 0.0;
    bool peeling = true;
    for (std::size_t i = 0; i < count; ++i) {
        if (i > 0 && partial < k * sorted_powers[i]) peeling = false;
        partial += sorted_powers[i];
    }
    report.hypothesis_details["info:peeling"] = Condition{peeling, labelled};

    const double lhs = std::pow(unified_ent(psi, part, p).value, alpha);
    report.set_sides(lhs, std::pow(0.5, u) * weighted);
    return report;
}

inline BoundReport thm1_bound(const PureState& psi, std::size_t m, double alpha, double r, double k,
                              const UnifiedParams& p) {
    const std::size_t n = psi.num_subsystems();
    if (m < 1 || m >= n) fail(Errc::BadPartition, "m must lie in 1..n-1");
    return thm1_bound(psi, Bipartition::first(m, n), alpha, r, k, p);
}

/// Three-qubit EoF monogamy. Case 1: E_13^r >= k E_12^r gives
/// (1/2)^{a/r} E_12^a + l E_13^a; case 2 swaps the roles.
inline BoundReport thm2_bound(const PureState& psi, double alpha, double r, double k) {
    detail::require_exactly(psi, 3);
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_finite(r, "r");
    if (!(r > 0.0)) fail(Errc::DomainError, "r must be > 0");
    detail::require_at_least(k, 1.0, "k");
    BoundReport report;
    report.theorem = TheoremId::Thm2;
    report.kind = BoundKind::Monogamy;
    report.params = {{"alpha", alpha}, {"r", r}, {"k", k}};
    report.add_condition("0<=alpha<=r/2", alpha <= r / 2.0 + kScalarTolerance, {{"alpha", alpha}, {"r", r}});
    report.add_condition("r>=sqrt2", r >= std::numbers::sqrt2 - kScalarTolerance, {{"r", r}});

    const auto e = detail::eof_from_c2(detail::pair_c2_with_first(psi));
    const double e12 = e[0];
    const double e13 = e[1];
    const double u = alpha / r;
    const double l = l_factor(u, k).value;
    const double half = std::pow(0.5, u);
    report.params["l"] = l;
    const double a12 = std::pow(e12, r);
    const double a13 = std::pow(e13, r);
    const bool case1 = detail::at_least(a13, k * a12);
    const bool case2 = detail::at_least(a12, k * a13);
    report.add_condition("info:E13^r>=k*E12^r", case1, {{"E12", e12}, {"E13", e13}});
    report.add_condition("info:E12^r>=k*E13^r", case2, {{"E12", e12}, {"E13", e13}});

    const detail::CaseCandidate c1{"case 1", half * std::pow(e12, alpha) + l * std::pow(e13, alpha)};
    const detail::CaseCandidate c2{"case 2", half * std::pow(e13, alpha) + l * std::pow(e12, alpha)};
    std::vector<detail::CaseCandidate> matched;
    if (case1) matched.push_back(c1);
    if (case2) matched.push_back(c2);
    report.hypothesis_ok = report.all_conditions_hold();
    const double lhs = std::pow(eof(psi, detail::one_vs_rest(3)).value, alpha);
    detail::settle_cases(report, lhs, matched, e13 >= e12 ? c1 : c2);
    return report;
}

/// n-qubit EoF monogamy along A_1 | A_2 ... A_n. Index A_i (i = 2..n-1) is
/// "low" when k E_{A_1A_i}^r <= Y_i^r and "high" when E_{A_1A_i}^r >= k Y_i^r,
/// with Y_i = f(sum_{j>i} C^2_{A_1A_j}) standing in for E_{A_1|A_{i+1}..A_n}.
inline BoundReport thm3_bound(const PureState& psi, double alpha, double r, double k) {
    detail::require_qubits(psi, 3);
    detail::require_at_least(alpha, 0.0, "alpha");
    detail::require_finite(r, "r");
    if (!(r > 0.0)) fail(Errc::DomainError, "r must be > 0");
    detail::require_at_least(k, 1.0, "k");
    const std::size_t n = psi.num_subsystems();
    BoundReport report;
    report.theorem = TheoremId::Thm3;
    report.kind = BoundKind::Monogamy;
    report.params = {{"alpha", alpha}, {"r", r}, {"k", k}};
    report.add_condition("0<=alpha<=r/2", alpha <= r / 2.0 + kScalarTolerance, {{"alpha", alpha}, {"r", r}});
    report.add_condition("r>=sqrt2", r >= std::numbers::sqrt2 - kScalarTolerance, {{"r", r}});

    const auto c2 = detail::pair_c2_with_first(psi);
    const auto e = detail::eof_from_c2(c2);
    std::vector<bool> low(n - 2);
    std::vector<bool> high(n - 2);
    std::vector<double> tails(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        double tail_c2 = 0.0;
        for (std::size_t j = i + 1; j < c2.size(); ++j) tail_c2 += c2[j];
        tails[i] = wootters_f(std::min(1.0, tail_c2));
        low[i] = detail::at_least(std::pow(tails[i], r), k * std::pow(e[i], r));
        high[i] = detail::at_least(std::pow(e[i], r), k * std::pow(tails[i], r));
    }
    std::map<std::string, double> values = detail::indexed("E_1", e, 2);
    for (const auto& [key, v] : detail::indexed("Y_", tails, 2)) values[key] = v;
    report.add_condition("info:classification", true, values);

    const double u = alpha / r;
    const double l = l_factor(u, k).value;
    const double half = std::pow(0.5, u);
    report.params["l"] = l;
    std::vector<double> terms;
    for (double v : e) terms.push_back(std::pow(v, alpha));
    report.hypothesis_ok = report.all_conditions_hold();
    const auto matched = detail::chain_cases(low, high, terms, half, l);
    const double lhs = std::pow(eof(psi, detail::one_vs_rest(n)).value, alpha);
    detail::settle_cases(report, lhs, matched, {"", detail::chain_fallback(terms, half, l)});
    return report;
}

/// E_{q,s}^b(rho_{L|R}) <= (1/2)^b sum_i l^{m-1-rank(i)} E_{q,s}(rho_{A_i|rest}) over i in L,
/// the one-vs-rest values ranked in descending order.
inline BoundReport thm4_bound(const PureState& psi, const Bipartition& part, double beta, double k,
                              const UnifiedParams& p) {
    detail::require_qubits(psi, 3);
    detail::require_full_partition(psi, part);
    if (part.left.size() < 2) fail(Errc::DomainError, "left block needs at least two subsystems");
    detail::require_at_least(beta, 0.0, "beta");
    detail::require_at_least(k, 1.0, "k");
    p.validate();
    BoundReport report;
    report.theorem = TheoremId::Thm4;
    report.kind = BoundKind::Polygamy;
    report.case_label = "general";
    const std::size_t m = part.left.size();
    const std::size_t n = psi.num_subsystems();
    report.params = {{"beta", beta}, {"k", k}, {"q", p.q}, {"s_entropy", p.s}, {"m", static_cast<double>(m)}};
    report.add_condition("beta>=1", beta >= 1.0, {{"beta", beta}});
    report.add_condition("q>1,qs>=1", p.q > 1.0 && p.q * p.s >= 1.0 - kScalarTolerance, {{"q", p.q}, {"s", p.s}});
    report.hypothesis_ok = report.all_conditions_hold();

    std::vector<double> singles;
    for (std::size_t i : part.left) {
        std::vector<std::size_t> rest;
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) rest.push_back(j);
        singles.push_back(unified_ent(psi, Bipartition{{i}, rest}, p).value);
    }
    report.ordering = detail::descending_order(singles);
    const double l = l_factor(beta, k).value;
    report.params["l"] = l;
    double weighted = 0.0;
    for (std::size_t rank = 0; rank < m; ++rank)
        weighted += std::pow(l, static_cast<double>(m - 1 - rank)) * singles[report.ordering[rank]];
    report.add_condition("info:one_vs_rest", true, detail::indexed("E_", singles, 1));
    const double lhs = std::pow(unified_ent(psi, part, p).value, beta);
    report.set_sides(lhs, std::pow(0.5, beta) * weighted);
    return report;
}

inline BoundReport thm4_bound(const PureState& psi, std::size_t m, double beta, double k, const UnifiedParams& p) {
    const std::size_t n = psi.num_subsystems();
    if (m < 1 || m >= n) fail(Errc::BadPartition, "m must lie in 1..n-1");
    return thm4_bound(psi, Bipartition::first(m, n), beta, k, p);
}

/// s0 for the pairwise EoFs E(rho_{A_1 A_j}) of a pure state.
inline double pairwise_s0(const PureState& psi) {
    detail::require_qubits(psi, 3);
    const auto e = detail::eof_from_c2(detail::pair_c2_with_first(psi));
    return solve_s0(e);
}

/// E^s(rho_{A_1|rest}) <= sum_j E^s(rho_{A_1 A_j}) for 0 <= s <= s0; needs two nonzero
/// pairwise concurrences. s0 is solved over the nonzero pairwise EoFs.
inline BoundReport eof_polygamy_check(const PureState& psi, double s_exp) {
    detail::require_qubits(psi, 3);
    detail::require_at_least(s_exp, 0.0, "s");
    const auto c2 = detail::pair_c2_with_first(psi);
    const auto e = detail::eof_from_c2(c2);
    std::vector<double> nonzero;
    for (std::size_t j = 0; j < c2.size(); ++j)
        if (std::sqrt(c2[j]) > kScalarTolerance) nonzero.push_back(e[j]);
    if (nonzero.size() < 2) fail(Errc::PreconditionFailed, "fewer than two nonzero pairwise concurrences");
    const double s0 = solve_s0(nonzero);
    BoundReport report;
    report.theorem = TheoremId::EofPolygamy;
    report.kind = BoundKind::Polygamy;
    report.case_label = "baseline";
    report.params = {{"s", s_exp}, {"s0", s0}};
    report.add_condition("0<=s<=s0", s_exp <= s0, {{"s", s_exp}, {"s0", s0}});
    report.hypothesis_ok = report.all_conditions_hold();
    double rhs = 0.0;
    for (double v : e) rhs += std::pow(v, s_exp);
    const std::size_t n = psi.num_subsystems();
    report.set_sides(std::pow(eof(psi, detail::one_vs_rest(n)).value, s_exp), rhs);
    return report;
}

namespace detail {

inline BoundReport polygamy_prelude(TheoremId id, const PureState& psi, double beta, double s_exp, double k,
                                    std::vector<double>& e, double& s0) {
    detail::require_at_least(beta, 0.0, "beta");
    detail::require_finite(s_exp, "s");
    if (!(s_exp > 0.0)) fail(Errc::DomainError, "s must be > 0");
    detail::require_at_least(k, 1.0, "k");
    e = eof_from_c2(pair_c2_with_first(psi));
    s0 = solve_s0(e);
    BoundReport report;
    report.theorem = id;
    report.kind = BoundKind::Polygamy;
    report.params = {{"beta", beta}, {"s", s_exp}, {"k", k}, {"s0", s0}};
    report.add_condition("0<s<=s0", s_exp <= s0, {{"s", s_exp}, {"s0", s0}});
    return report;
}

}  // namespace detail

/// Three-qubit EoF polygamy. Case 1: E_13^s >= k E_12^s gives
/// (1/2)^{b/s} E_12^b + l E_13^b with l = l(b/s, k); case 2 swaps the roles.
inline BoundReport thm5_bound(const PureState& psi, double beta, double s_exp, double k) {
    detail::require_exactly(psi, 3);
    std::vector<double> e;
    double s0 = 0.0;
    BoundReport report = detail::polygamy_prelude(TheoremId::Thm5, psi, beta, s_exp, k, e, s0);
    report.add_condition("beta>=max(1,s)", beta >= std::max(1.0, s_exp), {{"beta", beta}, {"s", s_exp}});
    const double e12 = e[0];
    const double e13 = e[1];
    const double x = beta / s_exp;
    const double l = l_factor(x, k).value;
    const double half = std::pow(0.5, x);
    report.params["l"] = l;
    const bool case1 = detail::at_least(std::pow(e13, s_exp), k * std::pow(e12, s_exp));
    const bool case2 = detail::at_least(std::pow(e12, s_exp), k * std::pow(e13, s_exp));
    report.add_condition("info:E13^s>=k*E12^s", case1, {{"E12", e12}, {"E13", e13}});
    report.add_condition("info:E12^s>=k*E13^s", case2, {{"E12", e12}, {"E13", e13}});
    const detail::CaseCandidate c1{"case 1", half * std::pow(e12, beta) + l * std::pow(e13, beta)};
    const detail::CaseCandidate c2{"case 2", half * std::pow(e13, beta) + l * std::pow(e12, beta)};
    std::vector<detail::CaseCandidate> matched;
    if (case1) matched.push_back(c1);
    if (case2) matched.push_back(c2);
    report.hypothesis_ok = report.all_conditions_hold();
    const double lhs = std::pow(eof(psi, detail::one_vs_rest(3)).value, beta);
    detail::settle_cases(report, lhs, matched, e13 >= e12 ? c1 : c2);
    return report;
}

/// n-qubit EoF polygamy. With P_i = E_{A_1A_i}^s and T_i = sum_{j>i} P_j, index
/// A_i (i = 2..n-1) is "low" when k P_i <= T_i and "high" when P_i >= k T_i.
inline BoundReport thm6_bound(const PureState& psi, double beta, double s_exp, double k) {
    detail::require_qubits(psi, 3);
    std::vector<double> e;
    double s0 = 0.0;
    BoundReport report = detail::polygamy_prelude(TheoremId::Thm6, psi, beta, s_exp, k, e, s0);
    report.add_condition("beta>=s", beta >= s_exp, {{"beta", beta}, {"s", s_exp}});
    const std::size_t n = psi.num_subsystems();
    std::vector<double> powers;
    for (double v : e) powers.push_back(std::pow(v, s_exp));
    std::vector<bool> low(n - 2);
    std::vector<bool> high(n - 2);
    std::vector<double> tails(n - 2);
    for (std::size_t i = 0; i + 2 < n; ++i) {
        double tail = 0.0;
        for (std::size_t j = i + 1; j < powers.size(); ++j) tail += powers[j];
        tails[i] = tail;
        low[i] = detail::at_least(tail, k * powers[i]);
        high[i] = detail::at_least(powers[i], k * tail);
    }
    std::map<std::string, double> values = detail::indexed("E_1", e, 2);
    for (const auto& [key, v] : detail::indexed("T_", tails, 2)) values[key] = v;
    report.add_condition("info:classification", true, values);

    const double x = beta / s_exp;
    const double l = l_factor(x, k).value;
    const double half = std::pow(0.5, x);
    report.params["l"] = l;
    std::vector<double> terms;
    for (double v : e) terms.push_back(std::pow(v, beta));
    report.hypothesis_ok = report.all_conditions_hold();
    const auto matched = detail::chain_cases(low, high, terms, half, l);
    const double lhs = std::pow(eof(psi, detail::one_vs_rest(n)).value, beta);
    detail::settle_cases(report, lhs, matched, {"", detail::chain_fallback(terms, half, l)});
    return report;
}

}  // namespace entcert
