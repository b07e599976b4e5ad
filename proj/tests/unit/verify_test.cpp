// Copyright 2026 The Langlands Retraction Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "langlands/verify.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace langlands {
namespace {

using testing::mat;

VerifyPlan plan_for(std::initializer_list<const char*> names,
                    std::size_t trials) {
  VerifyPlan p;
  for (const char* n : names) p.systems.push_back(make_entry(n));
  p.trials = trials;
  p.checks = parse_checks("all");
  return p;
}

TEST(ParseChecks, NamesRoundTrip) {
  for (Check c : all_checks()) EXPECT_EQ(parse_check(check_name(c)), c);
  EXPECT_EQ(parse_checks("all").size(), all_checks().size());
  EXPECT_EQ(parse_checks("fan,wellknown").size(), 2u);
  EXPECT_THROW(parse_checks("fan,nonsense"), DomainError);
  EXPECT_THROW(parse_checks(""), DomainError);
}

TEST(MakeEntry, Kinds) {
  EXPECT_TRUE(std::holds_alternative<ObtuseBasis>(make_entry("A2").system));
  EXPECT_TRUE(std::holds_alternative<RootDatum>(make_entry("gl4").system));
  EXPECT_THROW(make_entry("Q7"), DomainError);
}

TEST(RunVerify, A1AllPass) {
  const VerifyReport r = run_verify(plan_for({"A1"}, 10));
  EXPECT_EQ(r.failures, 0u);
  for (const CheckResult& c : r.systems[0].checks) {
    EXPECT_NE(c.status, CheckStatus::kFail) << check_name(c.check);
    EXPECT_FALSE(c.counterexample.has_value());
  }
}

TEST(RunVerify, SingleTrialAtOrigin) {
  const VerifyReport r = run_verify(plan_for({"A2", "gl3"}, 1));
  EXPECT_EQ(r.failures, 0u);
  EXPECT_TRUE(report_ok(r, false));
}

TEST(RunVerify, RejectsInvalidPlans) {
  VerifyPlan p = plan_for({"A2"}, 0);
  EXPECT_THROW(run_verify(p), DomainError);
  p.trials = 1;
  p.checks.clear();
  EXPECT_THROW(run_verify(p), DomainError);
  VerifyPlan empty;
  empty.checks = parse_checks("all");
  EXPECT_THROW(run_verify(empty), DomainError);
}

TEST(RunVerify, DeterministicAcrossThreads) {
  VerifyPlan p = plan_for({"A2", "B2", "G2", "gl3"}, 40);
  const std::string one = report_to_json(run_verify(p), false).dump();
  p.threads = 5;
  const std::string five = report_to_json(run_verify(p), false).dump();
  EXPECT_EQ(one, five);
  EXPECT_EQ(one, report_to_json(run_verify(p), false).dump());
}

TEST(RunVerify, NonObtuseMarkedHypothesisViolated) {
  VerifyPlan p;
  p.systems.push_back(
      {"nonobtuse", ObtuseBasis::from_gram(mat({"1,1/2", "1/2,1"}))});
  p.trials = 300;
  p.checks =
      parse_checks("order_preserving,least_element,wellknown,certificate");
  const VerifyReport r = run_verify(p);
  EXPECT_EQ(r.failures, 0u);
  EXPECT_GE(r.hypothesis_violated, 1u);
  EXPECT_FALSE(report_ok(r, false));
  EXPECT_TRUE(report_ok(r, true));
  for (const CheckResult& c : r.systems[0].checks) {
    if (c.check == Check::kCertificate) EXPECT_EQ(c.status, CheckStatus::kPass);
    if (c.status == CheckStatus::kHypothesisViolated) {
      EXPECT_TRUE(c.counterexample.has_value());
      EXPECT_GT(c.failed, 0u);
    }
  }
}

TEST(ReportJson, TimingOnlyOnRequest) {
  const VerifyReport r = run_verify(plan_for({"A1"}, 2));
  EXPECT_FALSE(report_to_json(r, false).contains("elapsed_ms"));
  EXPECT_TRUE(report_to_json(r, true).contains("elapsed_ms"));
}

}  // namespace
}  // namespace langlands
