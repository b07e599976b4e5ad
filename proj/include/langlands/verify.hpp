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

#ifndef LANGLANDS_VERIFY_HPP_
#define LANGLANDS_VERIFY_HPP_

// Seeded property checks of the retraction over catalog systems, custom Gram
// matrices and root data.
//
// Trial t of check c on system s draws from its own stream
// derive_seed(seed, {s, tag_of(c), t}), so a report depends only on the plan
// and never on the number of worker threads. Trial 0 of every vector check
// uses x = 0.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "langlands/coweights.hpp"

namespace langlands {

enum class Check {
  kOracleAgreement,
  kCertificate,
  kDominatesInput,
  kIdempotence,
  kHomogeneity,
  kOrderPreserving,
  kLeastElement,
  kNearestPoint,
  kInfimumClosure,
  kProjectionOrder,
  kWellknown,
  kFan,
  kEnvelopeCommutes,
  kMetricChar,
};

const std::vector<Check>& all_checks();
std::string check_name(Check c);
// Throws DomainError on an unknown name.
Check parse_check(std::string_view name);
// Comma separated names, or "all".
std::set<Check> parse_checks(std::string_view csv);

// Checks whose statement assumes <alpha_i, alpha_j> <= 0 for i != j.
bool needs_obtuse(Check c);

struct SystemEntry {
  std::string label;
  std::variant<ObtuseBasis, RootDatum> system;
};

// "A2" -> catalog basis, "gl4" -> GL(4) root datum.
SystemEntry make_entry(std::string_view name);

struct VerifyPlan {
  std::vector<SystemEntry> systems;
  std::size_t trials = 100;
  std::uint64_t seed = 42;
  std::set<Check> checks;
  std::size_t threads = 1;
};

enum class CheckStatus { kPass, kFail, kHypothesisViolated, kSkipped };
std::string status_name(CheckStatus s);

struct CheckResult {
  Check check{};
  CheckStatus status = CheckStatus::kPass;
  std::size_t passed = 0;
  std::size_t failed = 0;
  // Present iff failed > 0: the lowest failing trial, its input and both
  // sides of the violated relation.
  std::optional<nlohmann::json> counterexample;
  std::string note;
};

struct SystemReport {
  std::string label;
  std::string kind;  // "basis" or "datum"
  std::size_t rank = 0;
  bool obtuse = true;
  std::uint64_t fallbacks = 0;
  std::vector<CheckResult> checks;
};

struct VerifyReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::vector<SystemReport> systems;
  std::size_t failures = 0;             // checks with status kFail
  std::size_t hypothesis_violated = 0;  // checks with kHypothesisViolated
  double elapsed_ms = 0;
};

// Throws DomainError for an invalid plan (no systems, zero trials, no
// checks). Check failures are report content.
VerifyReport run_verify(const VerifyPlan& plan);

// Report as JSON; elapsed time is included only when include_timing is set so
// that identical plans give byte-identical output.
nlohmann::json report_to_json(const VerifyReport& r, bool include_timing);

// Exit-code semantics: true iff no check failed and, unless
// allow_nonobtuse, none was hypothesis-violated.
bool report_ok(const VerifyReport& r, bool allow_nonobtuse);

}  // namespace langlands

#endif  // LANGLANDS_VERIFY_HPP_
