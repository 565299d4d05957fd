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

// Command-line front end. Subcommands: measure, certify, audit, sweep, example.
// Machine-readable output (JSON or CSV) goes to `out`, diagnostics to `err`.
//
// Exit codes: 0 success (certify: bound certified; audit: no violations),
// 1 negative outcome (not certified, violations found, example deviation),
// 2 usage, parse or evaluation error.

#include <array>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "CLI11.hpp"

#include "entcert/audit.hpp"
#include "entcert/bounds.hpp"
#include "entcert/error.hpp"
#include "entcert/measures.hpp"
#include "entcert/qstate.hpp"
#include "entcert/serialize.hpp"
#include "entcert/state_io.hpp"
#include "entcert/theorems.hpp"

namespace entcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;
inline constexpr double kSchmidtRenormTolerance = 1e-6;

inline std::vector<std::string> split(std::string_view text, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.emplace_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

inline std::string trim(std::string_view text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string_view::npos) return {};
    const auto last = text.find_last_not_of(" \t");
    return std::string(text.substr(first, last - first + 1));
}

inline double parse_real(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    char* end = nullptr;
    const double value = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(value)) {
        fail(Errc::ParseError, "invalid number '" + s + "' in " + std::string(what));
    }
    return value;
}

inline std::uint64_t parse_unsigned(std::string_view text, std::string_view what) {
    const std::string s = trim(text);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
        fail(Errc::ParseError, "invalid integer '" + s + "' in " + std::string(what));
    }
    try {
        return std::stoull(s);
    } catch (const std::exception&) {
        fail(Errc::ParseError, "integer out of range in " + std::string(what));
    }
}

/// ghz:N, w:N, schmidt:l0,l1,l2,l3,l4,theta, haar:N:SEED, or a JSON state file path.
inline PureState parse_state_source(const std::string& source) {
    const auto colon = source.find(':');
    const std::string head = source.substr(0, colon);
    const std::string tail = colon == std::string::npos ? "" : source.substr(colon + 1);
    if (colon != std::string::npos) {
        if (head == "ghz") return ghz_state(parse_unsigned(tail, "ghz:N"));
        if (head == "w") return w_state(parse_unsigned(tail, "w:N"));
        if (head == "haar") {
            const auto parts = split(tail, ':');
            if (parts.size() != 2) fail(Errc::ParseError, "expected haar:N:SEED");
            return haar_random_pure(parse_unsigned(parts[0], "haar:N:SEED"), parse_unsigned(parts[1], "haar:N:SEED"));
        }
        if (head == "schmidt") {
            const auto parts = split(tail, ',');
            if (parts.size() != 6) fail(Errc::ParseError, "expected schmidt:l0,l1,l2,l3,l4,theta");
            std::array<double, 5> lambdas{};
            double norm_sq = 0.0;
            for (std::size_t i = 0; i < 5; ++i) {
                lambdas[i] = parse_real(parts[i], "schmidt coefficients");
                norm_sq += lambdas[i] * lambdas[i];
            }
            // Rounded decimal inputs such as 0.70710678 are rescaled onto the sphere.
            if (std::abs(norm_sq - 1.0) <= kSchmidtRenormTolerance && norm_sq > 0.0) {
                for (double& l : lambdas) l /= std::sqrt(norm_sq);
            }
            return schmidt_state(lambdas, parse_real(parts[5], "schmidt theta"));
        }
    }
    return load_state(source);
}

/// "1|2,3" (1-indexed) into a 0-based Bipartition validated against n subsystems.
inline Bipartition parse_partition(const std::string& text, std::size_t n) {
    const auto blocks = split(text, '|');
    if (blocks.size() != 2) fail(Errc::ParseError, "partition must look like 1|2,3");
    Bipartition part;
    for (int side = 0; side < 2; ++side) {
        auto& target = side == 0 ? part.left : part.right;
        for (const auto& item : split(blocks[side], ',')) {
            const auto label = parse_unsigned(item, "partition");
            if (label < 1) fail(Errc::BadPartition, "subsystem labels start at 1");
            target.push_back(static_cast<std::size_t>(label - 1));
        }
    }
    part.validate(n);
    return part;
}

inline std::string partition_to_string(const Bipartition& part) {
    std::string out;
    for (std::size_t i = 0; i < part.left.size(); ++i) out += (i ? "," : "") + std::to_string(part.left[i] + 1);
    out += "|";
    for (std::size_t i = 0; i < part.right.size(); ++i) out += (i ? "," : "") + std::to_string(part.right[i] + 1);
    return out;
}

/// name=lo:hi:step
inline Axis parse_axis(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(Errc::BadGrid, "axis must look like name=lo:hi:step");
    const auto parts = split(std::string_view(text).substr(eq + 1), ':');
    if (parts.size() != 3) fail(Errc::BadGrid, "axis must look like name=lo:hi:step");
    return {trim(text.substr(0, eq)), parse_real(parts[0], "grid"), parse_real(parts[1], "grid"),
            parse_real(parts[2], "grid")};
}

inline std::vector<Axis> parse_grid(const std::string& text) {
    std::vector<Axis> axes;
    for (const auto& item : split(text, ',')) axes.push_back(parse_axis(item));
    return axes;
}

/// name=lo:hi, or name=value for a fixed parameter.
inline std::pair<std::string, ParamRange> parse_range(const std::string& text) {
    const auto eq = text.find('=');
    if (eq == std::string::npos) fail(Errc::BadSpec, "range must look like name=lo:hi");
    const auto parts = split(std::string_view(text).substr(eq + 1), ':');
    if (parts.size() == 1) {
        const double v = parse_real(parts[0], "range");
        return {trim(text.substr(0, eq)), {v, v}};
    }
    if (parts.size() != 2) fail(Errc::BadSpec, "range must look like name=lo:hi");
    return {trim(text.substr(0, eq)), {parse_real(parts[0], "range"), parse_real(parts[1], "range")}};
}

inline std::uint64_t default_seed() {
    if (const char* env = std::getenv("ENTCERT_SEED"); env != nullptr && *env != '\0') {
        return parse_unsigned(env, "ENTCERT_SEED");
    }
    return kDefaultSeed;
}

struct MeasureArgs {
    std::string state;
    std::string measure;
    std::string partition;
    double q = 2.0;
    double s = 1.0;
    bool has_q = false;
    bool has_s = false;
};

inline int cmd_measure(const MeasureArgs& args, std::ostream& out) {
    const auto psi = parse_state_source(args.state);
    const std::size_t n = psi.num_subsystems();
    Bipartition part = args.partition.empty() ? Bipartition::first(1, n) : parse_partition(args.partition, n);
    const bool unified = args.measure == "unified";
    if (unified && (!args.has_q || !args.has_s)) fail(Errc::BadSpec, "--measure unified needs --q and --s");
    if (args.measure != "concurrence" && args.measure != "eof" && !unified) {
        fail(Errc::BadSpec, "unknown measure '" + args.measure + "' (concurrence, eof, unified)");
    }
    MeasureValue value;
    if (part.covers(n)) {
        if (args.measure == "concurrence") value = concurrence_pure(psi, part);
        if (args.measure == "eof") value = eof(psi, part);
        if (unified) value = unified_ent(psi, part, UnifiedParams(args.q, args.s));
    } else if (part.left.size() == 1 && part.right.size() == 1) {
        const auto rho = reduced_density(psi, {part.left[0], part.right[0]});
        if (!rho.is_two_qubit()) fail(Errc::UnsupportedDomain, "marginal route needs two qubits");
        if (args.measure == "concurrence") value = concurrence_2q(rho);
        if (args.measure == "eof") value = eof(rho);
        if (unified) value = unified_ent(rho, UnifiedParams(args.q, args.s));
    } else {
        fail(Errc::UnsupportedDomain, "mixed marginals are supported only for single-qubit blocks");
    }
    Json params;
    params["state"] = args.state;
    params["measure"] = args.measure;
    params["partition"] = partition_to_string(part);
    if (unified) {
        params["q"] = round12(args.q);
        params["s"] = round12(args.s);
    }
    Json doc;
    doc["value"] = round12(value.value);
    doc["method"] = std::string(to_string(value.method));
    doc["params"] = params;
    out << doc.dump() << '\n';
    return kExitOk;
}

struct CertifyArgs {
    std::string theorem;
    std::string state;
    std::map<std::string, double> values;
    double tolerance = kMeasureTolerance;
};

inline double require_flag(const CertifyArgs& args, const std::string& name) {
    const auto it = args.values.find(name);
    if (it == args.values.end()) fail(Errc::BadSpec, args.theorem + " needs --" + name);
    return it->second;
}

inline double flag_or(const CertifyArgs& args, const std::string& name, double fallback) {
    const auto it = args.values.find(name);
    return it == args.values.end() ? fallback : it->second;
}

inline std::size_t block_size(const CertifyArgs& args, double fallback) {
    const double m = flag_or(args, "m", fallback);
    if (m < 1 || m != std::floor(m)) fail(Errc::BadPartition, "--m must be a positive integer");
    return static_cast<std::size_t>(m);
}

inline BoundReport evaluate_certify(const CertifyArgs& args, const PureState& psi) {
    const auto id = parse_theorem_id(args.theorem);
    const double k = flag_or(args, "k", 1.0);
    auto entropy_params = [&] { return UnifiedParams(require_flag(args, "q"), require_flag(args, "s-entropy")); };
    switch (id) {
        case TheoremId::Thm1:
            return thm1_bound(psi, block_size(args, 1), require_flag(args, "alpha"), require_flag(args, "r"), k,
                              entropy_params());
        case TheoremId::Thm2: return thm2_bound(psi, require_flag(args, "alpha"), require_flag(args, "r"), k);
        case TheoremId::Thm3: return thm3_bound(psi, require_flag(args, "alpha"), require_flag(args, "r"), k);
        case TheoremId::Thm4: return thm4_bound(psi, block_size(args, 2), require_flag(args, "beta"), k, entropy_params());
        case TheoremId::Thm5: return thm5_bound(psi, require_flag(args, "beta"), require_flag(args, "s"), k);
        case TheoremId::Thm6: return thm6_bound(psi, require_flag(args, "beta"), require_flag(args, "s"), k);
        case TheoremId::UnifiedMonogamy: return baseline_unified_monogamy(psi, require_flag(args, "alpha"), entropy_params());
        case TheoremId::UnifiedBipartition:
            return baseline_unified_bipartition(psi, Bipartition::first(block_size(args, 1), psi.num_subsystems()),
                                 require_flag(args, "alpha"), entropy_params());
        case TheoremId::ConcurrencePower: return baseline_concurrence_power(psi, require_flag(args, "alpha"));
        case TheoremId::Ckw: return baseline_ckw(psi);
        case TheoremId::EofPolygamy: return eof_polygamy_check(psi, require_flag(args, "s"));
        default: fail(Errc::BadSpec, args.theorem + " is a scalar statement, not a state bound");
    }
}

inline int cmd_certify(const CertifyArgs& args, std::ostream& out) {
    const auto psi = parse_state_source(args.state);
    const auto report = evaluate_certify(args, psi);
    out << to_json(report, args.tolerance).dump() << '\n';
    return report.certifies(args.tolerance) ? kExitOk : kExitNegative;
}

struct AuditArgs {
    std::string theorem;
    std::size_t qubits = 3;
    std::size_t trials = 1000;
    std::optional<std::uint64_t> seed;
    unsigned threads = 0;
    double tolerance = kMeasureTolerance;
    std::vector<std::string> ranges;
};

inline int cmd_audit(const AuditArgs& args, std::ostream& out) {
    AuditSpec spec;
    spec.theorem = parse_theorem_id(args.theorem);
    spec.n_qubits = args.qubits;
    spec.trials = args.trials;
    spec.base_seed = args.seed ? *args.seed : default_seed();
    spec.threads = args.threads;
    spec.tolerance = args.tolerance;
    for (const auto& text : args.ranges) {
        const auto [name, range] = parse_range(text);
        spec.parameter_ranges[name] = range;
    }
    const auto report = run_audit(spec);
    out << to_json(report).dump() << '\n';
    return report.violations == 0 ? kExitOk : kExitNegative;
}

struct SweepArgs {
    int example = 1;
    std::string grid;
    std::string s_list = "0.9,1,1.1";
    std::optional<double> k;
    std::string out_path;
};

inline SweepGrid build_sweep(const SweepArgs& args) {
    if (args.example == 1) {
        const auto axes = parse_grid(args.grid.empty() ? "alpha=0:1:0.02,r=2:3:0.02" : args.grid);
        if (axes.size() != 2 || axes[0].name != "alpha" || axes[1].name != "r") {
            fail(Errc::BadGrid, "example 1 grid must be alpha=...,r=...");
        }
        return sweep_example1(axes[0], axes[1], args.k.value_or(1.71));
    }
    if (args.example == 2) {
        const auto axes = parse_grid(args.grid.empty() ? "beta=1:3:0.02" : args.grid);
        if (axes.size() != 1 || axes[0].name != "beta") fail(Errc::BadGrid, "example 2 grid must be beta=...");
        std::vector<double> s_values;
        for (const auto& item : split(args.s_list, ',')) s_values.push_back(parse_real(item, "--s-list"));
        return sweep_example2(axes[0], s_values, args.k.value_or(1.0));
    }
    fail(Errc::BadSpec, "--example must be 1 or 2");
}

inline int cmd_sweep(const SweepArgs& args, std::ostream& out) {
    const auto grid = build_sweep(args);
    if (args.out_path.empty()) {
        write_sweep_csv(grid, out);
        return kExitOk;
    }
    {
        std::ofstream file(args.out_path);
        if (!file) fail(Errc::IoError, "cannot write " + args.out_path);
        write_sweep_csv(grid, file);
        if (!file) fail(Errc::IoError, "write failed for " + args.out_path);
    }
    double min_diff = std::numeric_limits<double>::infinity();
    std::size_t in_envelope = 0;
    for (const auto& row : grid.rows) {
        if (!row.in_envelope) continue;
        ++in_envelope;
        min_diff = std::min(min_diff, row.diff);
    }
    Json doc;
    doc["example"] = args.example;
    doc["axis1"] = grid.axis1;
    doc["axis2"] = grid.axis2;
    doc["rows"] = grid.rows.size();
    doc["rows_in_envelope"] = in_envelope;
    doc["min_diff_in_envelope"] = round12(min_diff);
    doc["out"] = args.out_path;
    out << doc.dump() << '\n';
    return kExitOk;
}

struct ExampleRow {
    std::string quantity;
    double quoted = 0.0;
    double computed = 0.0;
    std::optional<double> closed_form;
};

inline constexpr double kQuotedTolerance = 5e-3;

inline std::vector<ExampleRow> example_rows(int id) {
    if (id == 1) {
        const auto v = example1_values();
        const double r2 = std::numbers::sqrt2;
        const double r3 = std::numbers::sqrt3;
        auto pair_closed = [](double root) {
            const double a = (2.0 + root) / 4.0;
            const double b = (2.0 - root) / 4.0;
            return -a * std::log2(a) - b * std::log2(b);
        };
        return {{"E(rho_A1|A2A3)", 0.81, v.e_1_23, 2.0 - 0.75 * std::log2(3.0)},
                {"E(rho_A1A2)", 0.60, v.e_12, pair_closed(r2)},
                {"E(rho_A1A3)", 0.35, v.e_13, pair_closed(r3)}};
    }
    if (id == 2) {
        const auto psi = w_state(3);
        const double e = eof(psi, Bipartition::first(1, 3)).value;
        const double e12 = eof(reduced_density(psi, {0, 1})).value;
        const double e13 = eof(reduced_density(psi, {0, 2})).value;
        return {{"E(rho_A1|A2A3)", 0.92, e, std::log2(3.0) - 2.0 / 3.0},
                {"E(rho_A1A2)", 0.55, e12, wootters_f(4.0 / 9.0)},
                {"E(rho_A1A3)", 0.55, e13, wootters_f(4.0 / 9.0)},
                {"s0", 1.16, pairwise_s0(psi), std::nullopt}};
    }
    fail(Errc::BadSpec, "--id must be 1 or 2");
}

inline int cmd_example(int id, std::ostream& out) {
    const auto rows = example_rows(id);
    Json doc;
    doc["example"] = id;
    doc["tolerance"] = kQuotedTolerance;
    Json list = Json::array();
    bool all_ok = true;
    for (const auto& row : rows) {
        const double deviation = std::abs(row.computed - row.quoted);
        all_ok = all_ok && deviation < kQuotedTolerance;
        Json item;
        item["quantity"] = row.quantity;
        item["quoted"] = row.quoted;
        item["computed"] = round12(row.computed);
        item["deviation"] = round12(deviation);
        item["closed_form"] = row.closed_form ? round12(*row.closed_form) : Json(nullptr);
        list.push_back(item);
    }
    doc["rows"] = list;
    doc["all_within_tolerance"] = all_ok;
    out << doc.dump() << '\n';
    return all_ok ? kExitOk : kExitNegative;
}

/// Runs the CLI on `args` (program name excluded).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Entanglement measures and monogamy/polygamy bound certification", "entcert"};
    app.require_subcommand(1);

    MeasureArgs measure;
    auto* measure_cmd = app.add_subcommand("measure", "Evaluate an entanglement measure");
    measure_cmd->add_option("--state", measure.state, "ghz:N | w:N | schmidt:l0,..,l4,theta | haar:N:SEED | FILE")
        ->required();
    measure_cmd->add_option("--measure", measure.measure, "concurrence | eof | unified")->required();
    measure_cmd->add_option("--partition", measure.partition, "1-indexed blocks, e.g. 1|2,3");
    auto* q_opt = measure_cmd->add_option("--q", measure.q, "entropy parameter q");
    auto* s_opt = measure_cmd->add_option("--s", measure.s, "entropy parameter s");

    CertifyArgs certify;
    auto* certify_cmd = app.add_subcommand("certify", "Evaluate one bound on one state");
    certify_cmd->add_option("--theorem", certify.theorem, "thm1..thm6 | unified_monogamy | unified_bipartition | concurrence_power | ckw | eof_polygamy")->required();
    certify_cmd->add_option("--state", certify.state, "state source")->required();
    std::map<std::string, double> certify_numbers;
    std::map<std::string, CLI::Option*> certify_options;
    for (const char* name : {"alpha", "beta", "r", "s", "k", "q", "s-entropy", "m"}) {
        certify_options[name] = certify_cmd->add_option(std::string("--") + name, certify_numbers[name]);
    }
    certify_cmd->add_option("--tolerance", certify.tolerance, "margin tolerance");

    AuditArgs audit;
    std::uint64_t audit_seed = 0;
    auto* audit_cmd = app.add_subcommand("audit", "Randomized audit over Haar-random states");
    audit_cmd->add_option("--theorem", audit.theorem, "thm1..thm6")->required();
    audit_cmd->add_option("--qubits", audit.qubits, "number of qubits");
    audit_cmd->add_option("--trials", audit.trials, "number of trials");
    auto* seed_opt = audit_cmd->add_option("--seed", audit_seed, "base seed (default $ENTCERT_SEED or 20240601)");
    audit_cmd->add_option("--threads", audit.threads, "worker threads (0 = all cores)");
    audit_cmd->add_option("--tolerance", audit.tolerance, "violation tolerance");
    audit_cmd->add_option("--range", audit.ranges, "parameter range name=lo:hi (repeatable)");

    SweepArgs sweep;
    double sweep_k = 0.0;
    auto* sweep_cmd = app.add_subcommand("sweep", "Parameter sweep for a worked example, as CSV");
    sweep_cmd->add_option("--example", sweep.example, "1 or 2")->required();
    sweep_cmd->add_option("--grid", sweep.grid, "axes name=lo:hi:step,...");
    sweep_cmd->add_option("--s-list", sweep.s_list, "example 2 exponents");
    auto* sweep_k_opt = sweep_cmd->add_option("--k", sweep_k, "k");
    sweep_cmd->add_option("--out", sweep.out_path, "CSV output path (stdout when omitted)");

    int example_id = 0;
    auto* example_cmd = app.add_subcommand("example", "Reproduce a worked example");
    example_cmd->add_option("--id", example_id, "1 or 2")->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e, out, err);
        err << "entcert: error: " << e.what() << '\n';
        return kExitError;
    }

    try {
        if (measure_cmd->parsed()) {
            measure.has_q = q_opt->count() > 0;
            measure.has_s = s_opt->count() > 0;
            return cmd_measure(measure, out);
        }
        if (certify_cmd->parsed()) {
            for (const auto& [name, option] : certify_options)
                if (option->count() > 0) certify.values[name] = certify_numbers[name];
            return cmd_certify(certify, out);
        }
        if (audit_cmd->parsed()) {
            if (seed_opt->count() > 0) audit.seed = audit_seed;
            return cmd_audit(audit, out);
        }
        if (sweep_cmd->parsed()) {
            if (sweep_k_opt->count() > 0) sweep.k = sweep_k;
            return cmd_sweep(sweep, out);
        }
        if (example_cmd->parsed()) return cmd_example(example_id, out);
    } catch (const Error& e) {
        err << "entcert: error: " << e.what() << '\n';
        return kExitError;
    }
    err << "entcert: error: no subcommand\n";
    return kExitError;
}

}  // namespace entcert::cli
