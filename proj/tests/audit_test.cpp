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


#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "entcert/audit.hpp"
#include "entcert/serialize.hpp"
#include "test_support.hpp"

namespace entcert {
namespace {

AuditSpec spec_for(TheoremId id, std::size_t n, std::size_t trials, std::uint64_t seed) {
    AuditSpec spec;
    spec.theorem = id;
    spec.n_qubits = n;
    spec.trials = trials;
    spec.base_seed = seed;
    return spec;
}

TEST(RunAudit, ThreeQubitMonogamyClean) {
    const auto report = run_audit(spec_for(TheoremId::Thm2, 3, 1000, 1));
    EXPECT_EQ(report.trials_total, 1000u);
    EXPECT_GT(report.trials_hypothesis_ok, 0u);
    EXPECT_EQ(report.violations, 0u);
}

TEST(RunAudit, ThreeQubitPolygamyOnBlocks) {
    const auto report = run_audit(spec_for(TheoremId::Thm4, 3, 1000, 1));
    EXPECT_EQ(report.trials_total, 1000u);
    EXPECT_EQ(report.violations, 0u) << "min margin " << report.min_margin;
}

TEST(RunAudit, SingleTrialWrapsOneReport) {
    const auto report = run_audit(spec_for(TheoremId::Thm1, 3, 1, 5));
    EXPECT_EQ(report.trials_total, 1u);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_EQ(report.witness->trial, 0u);
    EXPECT_EQ(report.witness->seed, 5u);
    EXPECT_EQ(report.min_margin, report.witness->report.margin);
}

TEST(RunAudit, WitnessCarriesMinimumMargin) {
    const auto report = run_audit(spec_for(TheoremId::Thm3, 4, 300, 11));
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_EQ(report.witness->report.margin, report.min_margin);
    EXPECT_EQ(report.witness->seed, 11u + report.witness->trial);
    EXPECT_TRUE(report.witness->report.hypothesis_ok);
}

TEST(RunAudit, CountsAddUp) {
    const auto report = run_audit(spec_for(TheoremId::Thm6, 4, 300, 3));
    std::size_t failed = 0;
    for (const auto& [code, count] : report.failures_by_code) failed += count;
    EXPECT_EQ(failed, report.trials_failed);
    EXPECT_LE(report.trials_hypothesis_ok + report.trials_skipped + report.trials_failed, report.trials_total);
}

TEST(RunAudit, IndependentOfThreadCount) {
    auto spec = spec_for(TheoremId::Thm1, 4, 200, 77);
    spec.threads = 1;
    const auto serial = to_json(run_audit(spec)).dump();
    for (unsigned threads : {2u, 5u, 16u}) {
        spec.threads = threads;
        EXPECT_EQ(to_json(run_audit(spec)).dump(), serial) << threads;
    }
}

TEST(RunAudit, FixedParameterRange) {
    auto spec = spec_for(TheoremId::Thm2, 3, 50, 9);
    spec.parameter_ranges["alpha"] = {0.5, 0.5};
    spec.parameter_ranges["r"] = {2.0, 2.0};
    spec.parameter_ranges["k"] = {1.0, 1.0};
    const auto report = run_audit(spec);
    ASSERT_TRUE(report.witness.has_value());
    EXPECT_EQ(report.witness->report.params.at("alpha"), 0.5);
    EXPECT_EQ(report.witness->report.params.at("r"), 2.0);
}

TEST(RunAudit, EmptyEnvelopeSkipsEveryTrial) {
    auto spec = spec_for(TheoremId::Thm2, 3, 5, 9);
    spec.parameter_ranges["alpha"] = {1.4, 1.5};
    spec.parameter_ranges["r"] = {1.5, 2.0};
    const auto report = run_audit(spec);
    EXPECT_EQ(report.trials_skipped, 5u);
    EXPECT_TRUE(std::isinf(report.min_margin));
    EXPECT_FALSE(report.witness.has_value());
}

TEST(ValidateSpec, RejectsBadSpecs) {
    EXPECT_ENTCERT_ERROR(validate(spec_for(TheoremId::Thm2, 4, 10, 1)), Errc::BadSpec);
    EXPECT_ENTCERT_ERROR(validate(spec_for(TheoremId::Thm3, 2, 10, 1)), Errc::BadSpec);
    EXPECT_ENTCERT_ERROR(validate(spec_for(TheoremId::Thm1, 7, 10, 1)), Errc::BadSpec);
    EXPECT_ENTCERT_ERROR(validate(spec_for(TheoremId::Thm1, 3, 0, 1)), Errc::BadSpec);
    EXPECT_ENTCERT_ERROR(validate(spec_for(TheoremId::Lemma1, 3, 10, 1)), Errc::BadSpec);
    auto spec = spec_for(TheoremId::Thm1, 3, 10, 1);
    spec.parameter_ranges["beta"] = {1.0, 2.0};
    EXPECT_ENTCERT_ERROR(validate(spec), Errc::BadSpec);
    spec.parameter_ranges = {{"alpha", {1.0, 0.5}}};
    EXPECT_ENTCERT_ERROR(validate(spec), Errc::BadSpec);
    spec.parameter_ranges = {{"k", {0.5, 2.0}}};
    EXPECT_ENTCERT_ERROR(validate(spec), Errc::BadSpec);
    spec.parameter_ranges = {{"m", {1.0, 3.0}}};
    EXPECT_ENTCERT_ERROR(validate(spec), Errc::BadSpec);
}

TEST(DefaultRanges, CoverTheoremParameters) {
    EXPECT_EQ(default_audit_ranges(TheoremId::Thm1, 4).size(), 6u);
    EXPECT_EQ(default_audit_ranges(TheoremId::Thm1, 4).at("m").hi, 3.0);
    EXPECT_EQ(default_audit_ranges(TheoremId::Thm4, 4).at("m").lo, 2.0);
    EXPECT_NEAR(default_audit_ranges(TheoremId::Thm5, 3).at("s").hi, std::numbers::sqrt2, 1e-15);
}

TEST(Axis, PointsIncludeEndpoint) {
    const auto points = Axis{"alpha", 0.0, 1.0, 0.02}.points();
    ASSERT_EQ(points.size(), 51u);
    EXPECT_EQ(points.front(), 0.0);
    EXPECT_EQ(points.back(), 1.0);
    EXPECT_EQ((Axis{"x", 1.0, 1.0, 0.1}.points().size()), 1u);
}

TEST(Axis, RejectsBadAxes) {
    EXPECT_ENTCERT_ERROR((Axis{"x", 1.0, 0.0, 0.1}.points()), Errc::BadGrid);
    EXPECT_ENTCERT_ERROR((Axis{"x", 0.0, 1.0, 0.0}.points()), Errc::BadGrid);
    EXPECT_ENTCERT_ERROR((Axis{"x", 0.0, 1.0, -0.1}.points()), Errc::BadGrid);
    EXPECT_ENTCERT_ERROR((Axis{"x", 0.0, 1.0, 1e-9}.points()), Errc::BadGrid);
}

const SweepRow& row_at(const SweepGrid& grid, double a1, double a2) {
    for (const auto& row : grid.rows)
        if (std::abs(row.axis1 - a1) < 1e-12 && std::abs(row.axis2 - a2) < 1e-12) return row;
    throw std::runtime_error("row not found");
}

TEST(SweepExample1, KnownRows) {
    const auto grid = sweep_example1({"alpha", 0.0, 1.0, 0.5}, {"r", 2.0, 3.0, 0.5});
    EXPECT_EQ(grid.rows.size(), 9u);
    const auto& mid = row_at(grid, 0.5, 2.0);
    EXPECT_NEAR(mid.diff, 0.013110141077475149, 1e-12);
    EXPECT_NEAR(mid.rhs_new, 0.80044268203144143, 1e-12);
    EXPECT_NEAR(mid.lhs, 0.90070978925463715, 1e-12);
    for (double r : {2.0, 2.5, 3.0}) EXPECT_NEAR(row_at(grid, 0.0, r).diff, 0.0, 1e-12);
}

TEST(SweepExample1, SurfaceNonNegative) {
    const auto grid = sweep_example1({"alpha", 0.0, 1.0, 0.02}, {"r", 2.0, 3.0, 0.02});
    EXPECT_EQ(grid.rows.size(), 2601u);
    for (const auto& row : grid.rows) {
        EXPECT_GE(row.diff, -1e-12);
        EXPECT_TRUE(row.in_envelope);
    }
}

TEST(SweepExample2, KnownRows) {
    const auto grid = sweep_example2({"beta", 1.0, 2.0, 0.1}, {0.9, 1.0, 1.1});
    EXPECT_EQ(grid.rows.size(), 33u);
    const auto& one = row_at(grid, 1.5, 1.0);
    EXPECT_NEAR(one.rhs_new, 1.1538400082683027, 1e-12);
    EXPECT_NEAR(one.lhs, 0.87998226824356251, 1e-12);
    EXPECT_NEAR(one.diff, 0.0, 1e-12);
    const auto& diag = row_at(grid, 1.1, 1.1);
    EXPECT_NEAR(diag.rhs_new, 1.0362640591891871, 1e-12);
    EXPECT_GE(diag.rhs_new, diag.lhs);
    for (const auto& row : grid.rows)
        if (row.in_envelope) EXPECT_GE(row.rhs_new, row.lhs);
}

TEST(SweepExample2, RejectsEmptySList) {
    EXPECT_ENTCERT_ERROR(sweep_example2({"beta", 1.0, 2.0, 0.1}, {}), Errc::BadGrid);
}

TEST(SweepCsv, HeaderAndPrecision) {
    std::ostringstream out;
    write_sweep_csv(sweep_example1({"alpha", 0.5, 0.5, 1.0}, {"r", 2.0, 2.0, 1.0}), out);
    EXPECT_EQ(out.str(),
              "axis1,axis2,lhs,rhs_new,rhs_prior,diff\n"
              "0.5,2,0.900709789255,0.800442682031,0.787332540954,0.0131101410775\n");
}

}  // namespace
}  // namespace entcert
