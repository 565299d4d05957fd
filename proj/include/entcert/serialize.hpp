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

// JSON and CSV renderings of measures, bound reports, audits and sweeps.
// Reals are rounded to 12 significant digits; non-finite values become null.

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <string>

#include "json.hpp"

#include "entcert/audit.hpp"
#include "entcert/bounds.hpp"
#include "entcert/measures.hpp"

namespace entcert {

using Json = nlohmann::ordered_json;

inline Json round12(double value) {
    if (!std::isfinite(value)) return nullptr;
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return std::strtod(buffer, nullptr);
}

inline std::string format12(double value) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.12g", value);
    return buffer;
}

inline Json to_json(const std::map<std::string, double>& values) {
    Json out = Json::object();
    for (const auto& [name, value] : values) out[name] = round12(value);
    return out;
}

inline Json to_json(const BoundReport& report, double tolerance = kMeasureTolerance) {
    Json out;
    out["theorem"] = std::string(to_string(report.theorem));
    out["kind"] = std::string(to_string(report.kind));
    out["case"] = report.case_label;
    out["hypothesis_ok"] = report.hypothesis_ok;
    out["certified"] = report.certifies(tolerance);
    out["lhs"] = round12(report.lhs);
    out["rhs"] = round12(report.rhs);
    out["margin"] = round12(report.margin);
    out["tolerance"] = tolerance;
    out["params"] = to_json(report.params);
    out["ordering"] = report.ordering;
    Json details = Json::object();
    for (const auto& [name, condition] : report.hypothesis_details) {
        details[name] = Json{{"holds", condition.holds}, {"values", to_json(condition.values)}};
    }
    out["hypothesis_details"] = details;
    return out;
}

inline Json to_json(const AuditReport& report) {
    Json out;
    out["theorem"] = std::string(to_string(report.theorem));
    out["n_qubits"] = report.n_qubits;
    out["base_seed"] = report.base_seed;
    out["tolerance"] = report.tolerance;
    out["trials_total"] = report.trials_total;
    out["trials_hypothesis_ok"] = report.trials_hypothesis_ok;
    out["trials_skipped"] = report.trials_skipped;
    out["trials_failed"] = report.trials_failed;
    out["violations"] = report.violations;
    out["min_margin"] = round12(report.min_margin);
    Json failures = Json::object();
    for (const auto& [code, count] : report.failures_by_code) failures[code] = count;
    out["failures_by_code"] = failures;
    if (report.witness) {
        out["witness"] = Json{{"trial", report.witness->trial},
                              {"seed", report.witness->seed},
                              {"report", to_json(report.witness->report, report.tolerance)}};
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

inline void write_sweep_csv(const SweepGrid& grid, std::ostream& out) {
    out << "axis1,axis2,lhs,rhs_new,rhs_prior,diff\n";
    for (const auto& row : grid.rows) {
        out << format12(row.axis1) << ',' << format12(row.axis2) << ',' << format12(row.lhs) << ','
            << format12(row.rhs_new) << ',' << format12(row.rhs_prior) << ',' << format12(row.diff) << '\n';
    }
}

}  // namespace entcert
