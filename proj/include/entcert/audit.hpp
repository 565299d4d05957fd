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

// Randomized certification over seeded Haar ensembles, plus the parameter
// sweeps behind the worked examples.
//
// Trial i uses the state haar_random_pure(n, base_seed + i) and draws its
// parameters from an Rng seeded with splitmix64(base_seed + i). Results are
// folded in trial order, so reports do not depend on the thread schedule.

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <exception>
#include <limits>
#include <map>
#include <mutex>
#include <numbers>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "entcert/bounds.hpp"
#include "entcert/error.hpp"
#include "entcert/qstate.hpp"
#include "entcert/rng.hpp"
#include "entcert/theorems.hpp"

namespace entcert {

inline constexpr std::uint64_t kDefaultSeed = 20240601;
inline constexpr int kMaxResamples = 100;

struct ParamRange {
    double lo = 0.0;
    double hi = 0.0;
};

struct AuditSpec {
    TheoremId theorem = TheoremId::Thm1;
    std::size_t n_qubits = 3;
    std::size_t trials = 1000;
    std::uint64_t base_seed = kDefaultSeed;
    /// Overrides for the theorem's default ranges; lo == hi fixes a value.
    std::map<std::string, ParamRange> parameter_ranges;
    double tolerance = kMeasureTolerance;
    /// Worker threads; 0 picks the hardware concurrency.
    unsigned threads = 0;
};

enum class TrialStatus { Evaluated, Skipped, Failed };

struct TrialOutcome {
    std::size_t index = 0;
    std::uint64_t seed = 0;
    TrialStatus status = TrialStatus::Skipped;
    std::optional<BoundReport> report;
    std::optional<Errc> error;
};

struct AuditWitness {
    std::size_t trial = 0;
    std::uint64_t seed = 0;
    BoundReport report;
};

struct AuditReport {
    TheoremId theorem = TheoremId::Thm1;
    std::size_t n_qubits = 0;
    std::uint64_t base_seed = 0;
    double tolerance = kMeasureTolerance;
    std::size_t trials_total = 0;
    std::size_t trials_hypothesis_ok = 0;
    std::size_t trials_skipped = 0;
    std::size_t trials_failed = 0;
    /// margin < -tolerance among hypothesis_ok trials.
    std::size_t violations = 0;
    /// +inf when no trial was hypothesis_ok.
    double min_margin = std::numeric_limits<double>::infinity();
    std::optional<AuditWitness> witness;
    std::map<std::string, std::size_t> failures_by_code;
};

namespace detail {

inline std::vector<std::string> audit_parameter_names(TheoremId id) {
    switch (id) {
        case TheoremId::Thm1: return {"m", "q", "s", "r", "alpha", "k"};
        case TheoremId::Thm2:
        case TheoremId::Thm3: return {"r", "alpha", "k"};
        case TheoremId::Thm4: return {"m", "q", "s", "beta", "k"};
        case TheoremId::Thm5:
        case TheoremId::Thm6: return {"s", "beta", "k"};
        default: fail(Errc::BadSpec, "no audit protocol for " + std::string(to_string(id)));
    }
}

inline std::size_t audit_min_qubits(TheoremId id) {
    switch (id) {
        case TheoremId::Thm1: return 2;
        default: return 3;
    }
}

}  // namespace detail

/// Default sampling ranges for a theorem audit on n qubits.
inline std::map<std::string, ParamRange> default_audit_ranges(TheoremId id, std::size_t n) {
    const double top_m = static_cast<double>(n > 1 ? n - 1 : 1);
    switch (id) {
        case TheoremId::Thm1:
            return {{"m", {1, top_m}}, {"q", {2, 3}}, {"s", {0, 1}}, {"r", {1, 3}}, {"alpha", {0, 1.5}}, {"k", {1, 3}}};
        case TheoremId::Thm2:
        case TheoremId::Thm3: return {{"r", {std::numbers::sqrt2, 3}}, {"alpha", {0, 1.5}}, {"k", {1, 3}}};
        case TheoremId::Thm4: return {{"m", {2, top_m}}, {"q", {1.1, 3}}, {"s", {0, 2}}, {"beta", {1, 3}}, {"k", {1, 3}}};
        case TheoremId::Thm5:
        case TheoremId::Thm6: return {{"s", {0.05, std::numbers::sqrt2}}, {"beta", {1, 3}}, {"k", {1, 3}}};
        default: fail(Errc::BadSpec, "no audit protocol for " + std::string(to_string(id)));
    }
}

inline void validate(const AuditSpec& spec) {
    const auto names = detail::audit_parameter_names(spec.theorem);
    if (spec.trials < 1) fail(Errc::BadSpec, "trials must be >= 1");
    if (spec.n_qubits < 2 || spec.n_qubits > kMaxQubits) fail(Errc::BadSpec, "n_qubits must lie in 2..6");
    if (spec.n_qubits < detail::audit_min_qubits(spec.theorem)) {
        fail(Errc::BadSpec, std::string(to_string(spec.theorem)) + " needs at least " +
                                std::to_string(detail::audit_min_qubits(spec.theorem)) + " qubits");
    }
    if ((spec.theorem == TheoremId::Thm2 || spec.theorem == TheoremId::Thm5) && spec.n_qubits != 3) {
        fail(Errc::BadSpec, std::string(to_string(spec.theorem)) + " is a three-qubit bound");
    }
    if (!(spec.tolerance >= 0.0) || !std::isfinite(spec.tolerance)) fail(Errc::BadSpec, "tolerance must be >= 0");
    for (const auto& [name, range] : spec.parameter_ranges) {
        if (std::find(names.begin(), names.end(), name) == names.end()) {
            fail(Errc::BadSpec, "unknown parameter '" + name + "' for " + std::string(to_string(spec.theorem)));
        }
        if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || range.lo > range.hi) {
            fail(Errc::BadSpec, "range for '" + name + "' must be finite with lo <= hi");
        }
        if (name == "k" && range.lo < 1.0) fail(Errc::BadSpec, "k must be >= 1");
        if (name == "m") {
            const double lo_m = spec.theorem == TheoremId::Thm4 ? 2.0 : 1.0;
            if (range.lo < lo_m || range.hi > static_cast<double>(spec.n_qubits - 1) ||
                range.lo != std::floor(range.lo) || range.hi != std::floor(range.hi)) {
                fail(Errc::BadSpec, "m range must be integral within the valid block sizes");
            }
        }
        if (name != "m" && range.lo < 0.0) fail(Errc::BadSpec, "range for '" + name + "' must be nonnegative");
    }
}

namespace detail {

using Sample = std::map<std::string, double>;

inline bool in_envelope(TheoremId id, const Sample& v, double s0) {
    switch (id) {
        case TheoremId::Thm1: return v.at("q") * v.at("s") <= 3.0 && v.at("alpha") <= v.at("r") / 2.0;
        case TheoremId::Thm2:
        case TheoremId::Thm3: return v.at("alpha") <= v.at("r") / 2.0;
        case TheoremId::Thm4: return v.at("q") > 1.0 && v.at("q") * v.at("s") >= 1.0;
        case TheoremId::Thm5:
        case TheoremId::Thm6:
            return v.at("s") > 0.0 && v.at("s") <= s0 && v.at("beta") >= std::max(1.0, v.at("s"));
        default: return false;
    }
}

inline std::optional<Sample> draw_parameters(const AuditSpec& spec, const std::map<std::string, ParamRange>& ranges,
                                             Rng& rng, double s0) {
    const auto names = audit_parameter_names(spec.theorem);
    for (int attempt = 0; attempt < kMaxResamples; ++attempt) {
        Sample sample;
        for (const auto& name : names) {
            const auto& range = ranges.at(name);
            if (name == "m") {
                sample[name] = static_cast<double>(
                    rng.uniform_int(static_cast<std::int64_t>(range.lo), static_cast<std::int64_t>(range.hi)));
            } else {
                sample[name] = range.lo == range.hi ? range.lo : rng.uniform(range.lo, range.hi);
            }
        }
        if (in_envelope(spec.theorem, sample, s0)) return sample;
    }
    return std::nullopt;
}

inline BoundReport evaluate(TheoremId id, const PureState& psi, const Sample& v) {
    switch (id) {
        case TheoremId::Thm1:
            return thm1_bound(psi, static_cast<std::size_t>(v.at("m")), v.at("alpha"), v.at("r"), v.at("k"),
                              UnifiedParams(v.at("q"), v.at("s")));
        case TheoremId::Thm2: return thm2_bound(psi, v.at("alpha"), v.at("r"), v.at("k"));
        case TheoremId::Thm3: return thm3_bound(psi, v.at("alpha"), v.at("r"), v.at("k"));
        case TheoremId::Thm4:
            return thm4_bound(psi, static_cast<std::size_t>(v.at("m")), v.at("beta"), v.at("k"),
                              UnifiedParams(v.at("q"), v.at("s")));
        case TheoremId::Thm5: return thm5_bound(psi, v.at("beta"), v.at("s"), v.at("k"));
        case TheoremId::Thm6: return thm6_bound(psi, v.at("beta"), v.at("s"), v.at("k"));
        default: fail(Errc::BadSpec, "no audit protocol");
    }
}

inline TrialOutcome run_trial(const AuditSpec& spec, const std::map<std::string, ParamRange>& ranges,
                              std::size_t index) {
    TrialOutcome outcome;
    outcome.index = index;
    outcome.seed = spec.base_seed + index;
    try {
        const auto psi = haar_random_pure(spec.n_qubits, outcome.seed);
        Rng rng(splitmix64(outcome.seed));
        double s0 = 0.0;
        if (spec.theorem == TheoremId::Thm5 || spec.theorem == TheoremId::Thm6) s0 = pairwise_s0(psi);
        const auto sample = draw_parameters(spec, ranges, rng, s0);
        if (!sample) {
            outcome.status = TrialStatus::Skipped;
            return outcome;
        }
        outcome.report = evaluate(spec.theorem, psi, *sample);
        outcome.status = TrialStatus::Evaluated;
    } catch (const Error& e) {
        outcome.status = TrialStatus::Failed;
        outcome.error = e.code();
    }
    return outcome;
}

}  // namespace detail

/// Evaluates the spec's trials (in parallel) and folds them in trial order.
inline AuditReport run_audit(const AuditSpec& spec) {
    validate(spec);
    auto ranges = default_audit_ranges(spec.theorem, spec.n_qubits);
    for (const auto& [name, range] : spec.parameter_ranges) ranges[name] = range;

    std::vector<TrialOutcome> outcomes(spec.trials);
    unsigned workers = spec.threads ? spec.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, spec.trials));
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    auto work = [&] {
        try {
            for (std::size_t i = next++; i < spec.trials; i = next++) outcomes[i] = detail::run_trial(spec, ranges, i);
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = spec.trials;
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < workers; ++t) pool.emplace_back(work);
        for (auto& thread : pool) thread.join();
    }
    if (failure) std::rethrow_exception(failure);

    AuditReport report;
    report.theorem = spec.theorem;
    report.n_qubits = spec.n_qubits;
    report.base_seed = spec.base_seed;
    report.tolerance = spec.tolerance;
    report.trials_total = spec.trials;
    for (const auto& outcome : outcomes) {
        if (outcome.status == TrialStatus::Skipped) {
            ++report.trials_skipped;
            continue;
        }
        if (outcome.status == TrialStatus::Failed) {
            ++report.trials_failed;
            ++report.failures_by_code[std::string(to_string(*outcome.error))];
            continue;
        }
        const auto& bound = *outcome.report;
        if (!bound.hypothesis_ok) continue;
        ++report.trials_hypothesis_ok;
        if (bound.margin < -spec.tolerance) ++report.violations;
        if (bound.margin < report.min_margin) {
            report.min_margin = bound.margin;
            report.witness = AuditWitness{outcome.index, outcome.seed, bound};
        }
    }
    return report;
}

struct Axis {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    [[nodiscard]] std::vector<double> points() const {
        if (!std::isfinite(lo) || !std::isfinite(hi) || !std::isfinite(step)) fail(Errc::BadGrid, name + ": non-finite axis");
        if (hi < lo) fail(Errc::BadGrid, name + ": hi < lo");
        if (!(step > 0.0)) fail(Errc::BadGrid, name + ": step must be > 0");
        const double span = (hi - lo) / step;
        if (span > 1e6) fail(Errc::BadGrid, name + ": too many points");
        const auto count = static_cast<std::size_t>(std::floor(span + 1e-9)) + 1;
        std::vector<double> out(count);
        for (std::size_t i = 0; i < count; ++i) {
            out[i] = lo + static_cast<double>(i) * step;
            if (std::abs(out[i] - hi) < 1e-9 * std::max(1.0, std::abs(hi))) out[i] = hi;
        }
        return out;
    }
};

struct SweepRow {
    double axis1 = 0.0;
    double axis2 = 0.0;
    double lhs = 0.0;
    double rhs_new = 0.0;
    double rhs_prior = 0.0;
    double diff = 0.0;
    bool in_envelope = false;
};

struct SweepGrid {
    std::string axis1;
    std::string axis2;
    std::vector<SweepRow> rows;
};

/// Three-qubit state of the first worked example: lambda_0 = lambda_3 = 1/2,
/// lambda_2 = sqrt(2)/2, lambda_1 = lambda_4 = 0.
inline PureState example1_state() {
    return schmidt_state({0.5, 0.0, std::numbers::sqrt2 / 2.0, 0.5, 0.0}, 0.0);
}

struct Example1Values {
    double e_1_23 = 0.0;
    double e_12 = 0.0;
    double e_13 = 0.0;
};

inline Example1Values example1_values() {
    const auto psi = example1_state();
    return {eof(psi, Bipartition::first(1, 3)).value, eof(reduced_density(psi, {0, 1})).value,
            eof(reduced_density(psi, {0, 2})).value};
}

/// Rows (alpha, r): lhs = E^alpha, rhs_new = z1 (weights (1/2)^{a/r} on E_13 and l on E_12),
/// rhs_prior = z2 (the earlier bound), diff = z1 - z2.
inline SweepGrid sweep_example1(const Axis& alpha, const Axis& r, double k = 1.71) {
    detail::require_at_least(k, 1.0, "k");
    const auto alphas = alpha.points();
    const auto rs = r.points();
    for (double a : alphas)
        if (a < 0.0) fail(Errc::BadGrid, "alpha must be >= 0");
    for (double v : rs)
        if (!(v > 0.0)) fail(Errc::BadGrid, "r must be > 0");
    const auto values = example1_values();
    SweepGrid grid{"alpha", "r", {}};
    grid.rows.reserve(alphas.size() * rs.size());
    for (double a : alphas)
        for (double rv : rs) {
            const auto cmp = remark2_compare(values.e_13, values.e_12, a, rv, k);
            SweepRow row;
            row.axis1 = a;
            row.axis2 = rv;
            row.lhs = std::pow(values.e_1_23, a);
            row.rhs_new = cmp.mu2;
            row.rhs_prior = cmp.mu1;
            row.diff = cmp.mu;
            row.in_envelope = cmp.hypothesis_ok && rv >= std::numbers::sqrt2 - kScalarTolerance;
            grid.rows.push_back(row);
        }
    return grid;
}

/// Rows (beta, s) on the three-qubit W state: lhs = E^beta(rho_{A_1|A_2A_3}),
/// rhs_new = the three-qubit polygamy bound, rhs_prior = (sum_j E^s_{A_1A_j})^{beta/s}.
inline SweepGrid sweep_example2(const Axis& beta, const std::vector<double>& s_list, double k = 1.0) {
    detail::require_at_least(k, 1.0, "k");
    if (s_list.empty()) fail(Errc::BadGrid, "s list is empty");
    for (double s : s_list)
        if (!std::isfinite(s) || !(s > 0.0)) fail(Errc::BadGrid, "s values must be > 0");
    const auto betas = beta.points();
    const auto psi = w_state(3);
    const double e12 = eof(reduced_density(psi, {0, 1})).value;
    const double e13 = eof(reduced_density(psi, {0, 2})).value;
    SweepGrid grid{"beta", "s", {}};
    grid.rows.reserve(betas.size() * s_list.size());
    for (double b : betas)
        for (double s : s_list) {
            const auto bound = thm5_bound(psi, b, s, k);
            const double prior = std::pow(std::pow(e12, s) + std::pow(e13, s), b / s);
            SweepRow row;
            row.axis1 = b;
            row.axis2 = s;
            row.lhs = bound.lhs;
            row.rhs_new = bound.rhs;
            row.rhs_prior = prior;
            row.diff = bound.rhs - prior;
            row.in_envelope = bound.hypothesis_ok;
            grid.rows.push_back(row);
        }
    return grid;
}

}  // namespace entcert
