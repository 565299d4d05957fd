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


// Acceptance criteria. Each criterion prints one PASS/FAIL line followed by
// indented detail lines. Run with a criterion name to select it; with no
// arguments every criterion runs.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "entcert/audit.hpp"
#include "entcert/bounds.hpp"
#include "entcert/cli.hpp"
#include "entcert/entropy.hpp"
#include "entcert/measures.hpp"
#include "entcert/qstate.hpp"
#include "entcert/rng.hpp"
#include "entcert/theorems.hpp"

namespace {

using namespace entcert;

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void check(bool ok, const std::string& what) {
        details.push_back(std::string(ok ? "ok   " : "FAIL ") + what);
        pass = pass && ok;
    }
    void note(const std::string& what) { details.push_back("info " + what); }
};

std::string fmt(const char* format, auto... values) {
    char buffer[512];
    std::snprintf(buffer, sizeof buffer, format, values...);
    return buffer;
}

double binary_entropy_closed(double p) { return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p); }

Outcome example1_reproduction() {
    Outcome out;
    const auto v = example1_values();
    const double e_closed = 2.0 - 0.75 * std::log2(3.0);
    const double e12_closed = binary_entropy_closed((2.0 + std::numbers::sqrt2) / 4.0);
    const double e13_closed = binary_entropy_closed((2.0 + std::numbers::sqrt3) / 4.0);
    out.check(std::abs(v.e_1_23 - e_closed) < 1e-9, fmt("E(A1|A2A3) = %.15f, closed form %.15f", v.e_1_23, e_closed));
    out.check(std::abs(v.e_12 - e12_closed) < 1e-9, fmt("E(A1A2) = %.15f, closed form %.15f", v.e_12, e12_closed));
    out.check(std::abs(v.e_13 - e13_closed) < 1e-9, fmt("E(A1A3) = %.15f, closed form %.15f", v.e_13, e13_closed));
    out.check(std::abs(v.e_1_23 - 0.81) < 5e-3, fmt("E(A1|A2A3) vs quoted 0.81: dev %.2e", std::abs(v.e_1_23 - 0.81)));
    out.check(std::abs(v.e_12 - 0.60) < 5e-3, fmt("E(A1A2) vs quoted 0.60: dev %.2e", std::abs(v.e_12 - 0.60)));
    out.check(std::abs(v.e_13 - 0.35) < 5e-3, fmt("E(A1A3) vs quoted 0.35: dev %.2e", std::abs(v.e_13 - 0.35)));
    return out;
}

Outcome tightness_surface() {
    Outcome out;
    const auto grid = sweep_example1({"alpha", 0.0, 1.0, 0.02}, {"r", 2.0, 3.0, 0.02}, 1.71);
    out.check(grid.rows.size() == 51u * 51u, fmt("grid has %zu rows (expected 2601)", grid.rows.size()));
    double min_z = std::numeric_limits<double>::infinity();
    for (const auto& row : grid.rows) min_z = std::min(min_z, row.diff);
    out.check(min_z >= -1e-12, fmt("min z over alpha in [0,1], r in [2,3] = %.3e", min_z));
    const auto band = sweep_example1({"alpha", 0.0, 1.0, 0.02}, {"r", std::numbers::sqrt2, 1.99, 0.02}, 1.71);
    double band_min = std::numeric_limits<double>::infinity();
    std::size_t band_rows = 0;
    for (const auto& row : band.rows) {
        if (!row.in_envelope) continue;
        ++band_rows;
        band_min = std::min(band_min, row.diff);
    }
    out.note(fmt("reported only: r in [sqrt2, 2) band, %zu in-envelope rows, min z = %.3e", band_rows, band_min));
    return out;
}

Outcome example2_reproduction() {
    Outcome out;
    const auto w = w_state(3);
    const double e = eof(w, Bipartition::first(1, 3)).value;
    const double e12 = eof(reduced_density(w, {0, 1})).value;
    const double e13 = eof(reduced_density(w, {0, 2})).value;
    const double e_closed = std::log2(3.0) - 2.0 / 3.0;
    const double pair_closed = binary_entropy_closed((3.0 + std::sqrt(5.0)) / 6.0);
    out.check(std::abs(e - e_closed) < 1e-9, fmt("E(A1|A2A3) = %.15f, closed form %.15f", e, e_closed));
    out.check(std::abs(e12 - pair_closed) < 1e-6 && std::abs(e13 - pair_closed) < 1e-6,
              fmt("pairwise EoF = %.12f / %.12f, closed form %.12f", e12, e13, pair_closed));
    const double s0 = pairwise_s0(w);
    out.check(std::abs(s0 - 1.15965) < 1e-4, fmt("s0 = %.10f (target 1.15965)", s0));
    double rhs_by_s[3] = {};
    const double s_values[3] = {0.9, 1.0, 1.1};
    for (int i = 0; i < 3; ++i) {
        const auto report = thm5_bound(w, 1.5, s_values[i], 1.0);
        const double closed = std::pow(2.0, 1.5 / s_values[i]) * std::pow(e12, 1.5);
        rhs_by_s[i] = report.rhs;
        out.check(report.hypothesis_ok && report.rhs > report.lhs && std::abs(report.rhs - closed) < 1e-9,
                  fmt("beta=1.5 s=%.1f: rhs %.9f (2^{b/s} E^b = %.9f) > lhs %.9f", s_values[i], report.rhs, closed,
                      report.lhs));
    }
    out.check(rhs_by_s[2] < rhs_by_s[1] && rhs_by_s[2] < rhs_by_s[0],
              fmt("s=1.1 bound smallest: %.9f < %.9f, %.9f", rhs_by_s[2], rhs_by_s[1], rhs_by_s[0]));
    return out;
}

Outcome oracle_equivalence() {
    Outcome out;
    const double qs[] = {1.2, 1.6, 2.0, 2.5, 3.0};
    const double ss[] = {0.2, 0.5, 0.8, 1.0};
    double worst = 0.0;
    std::size_t comparisons = 0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto psi = haar_random_pure(2, kDefaultSeed + i);
        const auto part = Bipartition::first(1, 2);
        const auto spectrum = reduced_density(psi, part.left).spectrum();
        const double c2 = concurrence_squared_pure(psi, part);
        for (double q : qs)
            for (double s : ss) {
                if (q * s > 3.0) continue;
                const UnifiedParams p(q, s);
                worst = std::max(worst, std::abs(unified_entropy(spectrum, p) - unified_f(c2, p)));
                ++comparisons;
            }
    }
    out.check(worst < 1e-10, fmt("max |S_qs(rho_A) - f_qs(C^2)| = %.3e over %zu comparisons", worst, comparisons));
    return out;
}

Outcome scalar_inequality_fuzz() {
    Outcome out;
    constexpr std::size_t kTrials = 100000;
    Rng rng(kDefaultSeed);

    for (Regime regime : {Regime::Low, Regime::High}) {
        std::size_t violations = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kTrials; ++i) {
            const double k = rng.uniform(1.0, 10.0);
            const double t = rng.uniform(k, 10.0 * k);
            const double x = regime == Regime::Low ? rng.uniform(0.0, 0.5) : rng.uniform(1.0, 4.0);
            const double margin = lemma1_check(t, k, x, regime).margin;
            worst = std::min(worst, margin);
            if (margin < -1e-12) ++violations;
        }
        out.check(violations == 0, fmt("lemma 1 %s regime: %zu violations in %zu trials, min margin %.3e",
                                       std::string(to_string(regime)).c_str(), violations, kTrials, worst));
    }

    // Sequences satisfying the peeling condition by construction.
    auto peeled_sequence = [&](double k) {
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        std::vector<double> p{rng.uniform(0.01, 1.0)};
        double total = p[0];
        while (p.size() < n) {
            const double cap = std::min(p.back(), total / k);
            p.push_back(cap * (1.0 - rng.uniform()));
            total += p.back();
        }
        return p;
    };
    for (Regime regime : {Regime::Low, Regime::High}) {
        std::size_t violations = 0;
        std::size_t peeling = 0;
        double worst = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < kTrials; ++i) {
            const double k = rng.uniform(1.0, 5.0);
            const double x = regime == Regime::Low ? rng.uniform(0.0, 0.5) : rng.uniform(1.0, 4.0);
            const auto p = peeled_sequence(k);
            const auto result = lemma2_weighted_sum(p, x, k, regime);
            if (!result.peeling_ok) continue;
            ++peeling;
            worst = std::min(worst, result.margin);
            if (result.margin < -1e-12) ++violations;
        }
        out.check(violations == 0 && peeling == kTrials,
                  fmt("lemma 2 %s regime under peeling: %zu violations in %zu trials, min margin %.3e",
                      std::string(to_string(regime)).c_str(), violations, peeling, worst));
    }

    std::size_t unconditioned = 0;
    std::size_t failed_peeling = 0;
    for (std::size_t i = 0; i < kTrials; ++i) {
        const double k = rng.uniform(1.0, 5.0);
        const double x = rng.uniform(0.0, 0.5);
        const auto n = static_cast<std::size_t>(rng.uniform_int(1, 6));
        std::vector<double> p(n);
        for (double& v : p) v = rng.uniform();
        std::sort(p.rbegin(), p.rend());
        const auto result = lemma2_weighted_sum(p, x, k, Regime::Low);
        if (!result.peeling_ok) ++failed_peeling;
        if (result.margin < -1e-12) ++unconditioned;
    }
    out.note(fmt("lemma 2 low regime without the peeling condition: %zu violations, %zu of %zu sequences fail peeling",
                 unconditioned, failed_peeling, kTrials));
    return out;
}

Outcome theorem_audits() {
    Outcome out;
    struct Run {
        TheoremId id;
        std::size_t n;
    };
    const Run runs[] = {{TheoremId::Thm1, 3}, {TheoremId::Thm1, 4}, {TheoremId::Thm2, 3}, {TheoremId::Thm3, 3},
                        {TheoremId::Thm3, 4}, {TheoremId::Thm4, 3}, {TheoremId::Thm4, 4}, {TheoremId::Thm5, 3},
                        {TheoremId::Thm6, 3}, {TheoremId::Thm6, 4}};
    for (const auto& run : runs) {
        AuditSpec spec;
        spec.theorem = run.id;
        spec.n_qubits = run.n;
        spec.trials = 10000;
        spec.base_seed = kDefaultSeed;
        const auto start = std::chrono::steady_clock::now();
        const auto report = run_audit(spec);
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::string failures;
        for (const auto& [code, count] : report.failures_by_code) failures += " " + code + "=" + std::to_string(count);
        std::string witness;
        if (report.witness && report.violations > 0) witness = fmt(", witness seed %llu", static_cast<unsigned long long>(report.witness->seed));
        out.check(report.violations == 0,
                  fmt("%s on %zu qubits: %zu violations, %zu/%zu hypothesis_ok, %zu skipped, failed:%s, min margin %.3e%s (%.1f s)",
                      std::string(to_string(run.id)).c_str(), run.n, report.violations, report.trials_hypothesis_ok,
                      report.trials_total, report.trials_skipped, failures.empty() ? " none" : failures.c_str(),
                      report.min_margin, witness.c_str(), seconds));
    }
    return out;
}

Outcome baseline_equalities() {
    Outcome out;
    const auto unified = baseline_unified_monogamy(w_state(3), 1.0, UnifiedParams(2.0, 1.0));
    out.check(unified.hypothesis_ok && std::abs(unified.margin) < 1e-10,
              fmt("unified monogamy on W3 (q=2, s=1, alpha=1): lhs %.15f rhs %.15f margin %.2e", unified.lhs,
                  unified.rhs, unified.margin));
    const auto ckw = baseline_ckw(example1_state());
    const auto& c2 = ckw.hypothesis_details.at("three_qubits").values;
    out.check(std::abs(ckw.margin) < 1e-10 && std::abs(ckw.lhs - 0.75) < 1e-10 &&
                  std::abs(c2.at("C2_12") - 0.5) < 1e-10 && std::abs(c2.at("C2_13") - 0.25) < 1e-10,
              fmt("CKW on the first example state: %.15f = %.15f + %.15f", ckw.lhs, c2.at("C2_12"), c2.at("C2_13")));
    return out;
}

Outcome wootters_kernel() {
    Outcome out;
    for (double p : {0.0, 0.2, 1.0 / 3.0, 0.5, 0.8, 1.0}) {
        ComplexMatrix m(4);
        for (std::size_t i = 0; i < 4; ++i) m(i, i) = (1.0 - p) / 4.0;
        for (std::size_t i : {0u, 3u})
            for (std::size_t j : {0u, 3u}) m(i, j) += p / 2.0;
        const double c = concurrence_2q(DensityMatrix({2, 2}, m)).value;
        const double expected = std::max(0.0, (3.0 * p - 1.0) / 2.0);
        out.check(std::abs(c - expected) < 1e-10, fmt("Werner p=%.4f: C = %.15f, expected %.15f", p, c, expected));
    }
    double worst = 0.0;
    for (std::uint64_t i = 0; i < 10000; ++i) {
        const auto psi = haar_random_pure(2, kDefaultSeed + i);
        const double pure = concurrence_pure(psi, Bipartition::first(1, 2)).value;
        worst = std::max(worst, std::abs(concurrence_2q(to_density(psi)).value - pure));
    }
    out.check(worst < 1e-10, fmt("rank-1 agreement over 10000 states: max deviation %.3e", worst));
    return out;
}

std::pair<int, std::string> run_captured(const std::vector<std::string>& args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str()};
}

Outcome determinism() {
    Outcome out;
    const std::vector<std::vector<std::string>> commands = {
        {"audit", "--theorem", "thm1", "--qubits", "4", "--trials", "500", "--seed", "7"},
        {"audit", "--theorem", "thm6", "--qubits", "3", "--trials", "500", "--seed", "7"},
        {"sweep", "--example", "1", "--grid", "alpha=0:1:0.05,r=2:3:0.05"},
        {"sweep", "--example", "2"},
    };
    for (const auto& command : commands) {
        const auto first = run_captured(command);
        const auto second = run_captured(command);
        std::string joined;
        for (const auto& a : command) joined += (joined.empty() ? "" : " ") + a;
        out.check(first.first == second.first && first.second == second.second && !first.second.empty(),
                  fmt("repeat run byte-identical (%zu bytes): %s", first.second.size(), joined.c_str()));
    }
    for (const char* threads : {"1", "3", "8"}) {
        const auto base = run_captured({"audit", "--theorem", "thm3", "--qubits", "4", "--trials", "400", "--threads", "2"});
        const auto other = run_captured({"audit", "--theorem", "thm3", "--qubits", "4", "--trials", "400", "--threads", threads});
        out.check(base.second == other.second, fmt("audit output independent of thread count (2 vs %s)", threads));
    }
    return out;
}

struct Criterion {
    const char* name;
    const char* limit_text;
    double limit_seconds;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    const std::vector<Criterion> criteria = {
        {"example1_reproduction", "< 1 s", 1.0, example1_reproduction},
        {"tightness_surface", "< 5 s", 5.0, tightness_surface},
        {"example2_reproduction", "< 1 s", 1.0, example2_reproduction},
        {"oracle_equivalence", "< 10 s", 10.0, oracle_equivalence},
        {"scalar_inequality_fuzz", "< 5 s", 5.0, scalar_inequality_fuzz},
        {"theorem_audits", "< 600 s", 600.0, theorem_audits},
        {"baseline_equalities", "", 0.0, baseline_equalities},
        {"wootters_kernel", "", 0.0, wootters_kernel},
        {"determinism", "", 0.0, determinism},
    };
    std::vector<std::string> selected(argv + 1, argv + argc);
    int failures = 0;
    int ran = 0;
    for (const auto& criterion : criteria) {
        if (!selected.empty() && std::find(selected.begin(), selected.end(), criterion.name) == selected.end()) continue;
        ++ran;
        const auto start = std::chrono::steady_clock::now();
        Outcome outcome;
        try {
            outcome = criterion.run();
        } catch (const std::exception& e) {
            outcome.check(false, std::string("unexpected exception: ") + e.what());
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (criterion.limit_seconds > 0.0) {
            outcome.check(seconds < criterion.limit_seconds, fmt("runtime %.3f s (limit %s)", seconds, criterion.limit_text));
        }
        std::printf("[%s] %s (%.3f s)\n", outcome.pass ? "PASS" : "FAIL", criterion.name, seconds);
        for (const auto& line : outcome.details) std::printf("    %s\n", line.c_str());
        std::fflush(stdout);
        if (!outcome.pass) ++failures;
    }
    if (ran == 0) {
        std::fprintf(stderr, "unknown criterion\n");
        return 2;
    }
    return failures == 0 ? 0 : 1;
}
