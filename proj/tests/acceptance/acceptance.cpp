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

// Acceptance run: one PASS/FAIL line per criterion, all comparisons exact.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "langlands/envelope.hpp"
#include "langlands/fan.hpp"
#include "langlands/json_io.hpp"
#include "langlands/langlands.h"
#include "langlands/sampling.hpp"
#include "langlands/verify.hpp"

namespace langlands {
namespace {

using nlohmann::json;

struct Outcome {
  bool pass = false;
  std::string detail;
};

const std::vector<std::string> kOracleSystems = {
    "A1", "A2", "A3", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"};

// Every catalog system of rank at most max_rank.
std::vector<std::string> catalog_up_to(std::size_t max_rank) {
  std::vector<std::string> out;
  for (std::size_t n = 1; n <= max_rank; ++n)
    out.push_back("A" + std::to_string(n));
  for (std::size_t n = 2; n <= max_rank; ++n)
    out.push_back("B" + std::to_string(n));
  for (std::size_t n = 3; n <= max_rank; ++n)
    out.push_back("C" + std::to_string(n));
  for (std::size_t n = 4; n <= max_rank; ++n)
    out.push_back("D" + std::to_string(n));
  for (std::size_t n = 6; n <= std::min<std::size_t>(8, max_rank); ++n)
    out.push_back("E" + std::to_string(n));
  if (max_rank >= 4) out.push_back("F4");
  if (max_rank >= 2) out.push_back("G2");
  return out;
}

VerifyPlan plan(const std::vector<std::string>& systems, std::size_t trials,
                const std::string& checks) {
  VerifyPlan p;
  for (const auto& s : systems) p.systems.push_back(make_entry(s));
  p.trials = trials;
  p.checks = parse_checks(checks);
  p.seed = 42;
  return p;
}

// Sums pass/fail counts for one check over every system; any non-pass status
// other than skipped counts as a failure.
struct Tally {
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t systems = 0;
  std::string first_failure;
};

Tally tally(const VerifyReport& r, Check c) {
  Tally t;
  for (const SystemReport& s : r.systems)
    for (const CheckResult& res : s.checks) {
      if (res.check != c || res.status == CheckStatus::kSkipped) continue;
      ++t.systems;
      t.passed += res.passed;
      t.failed += res.failed;
      if (res.status != CheckStatus::kPass && t.first_failure.empty())
        t.first_failure = s.label + ": " +
                          (res.counterexample ? res.counterexample->dump()
                                              : status_name(res.status));
    }
  return t;
}

std::string describe(const Tally& t) {
  std::string s = std::to_string(t.passed) + " passed, " +
                  std::to_string(t.failed) + " failed over " +
                  std::to_string(t.systems) + " systems";
  if (!t.first_failure.empty()) s += "; first: " + t.first_failure;
  return s;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

// Run shared by criteria 1, 2 and 6.
VerifyReport g_core_run;
double g_core_seconds = 0;

Outcome criterion_oracle() {
  const auto t0 = std::chrono::steady_clock::now();
  reset_fallback_count();
  g_core_run = run_verify(plan(kOracleSystems, 1000,
                               "oracle_agreement,certificate,dominates_input,"
                               "idempotence,homogeneity"));
  g_core_seconds = seconds_since(t0);
  const Tally t = tally(g_core_run, Check::kOracleAgreement);
  char buf[96];
  std::snprintf(buf, sizeof buf, "; run took %.1f s; %llu oracle fallbacks",
                g_core_seconds,
                static_cast<unsigned long long>(fallback_count()));
  return {t.failed == 0 && t.systems == kOracleSystems.size() &&
              t.passed == 1000 * kOracleSystems.size() && g_core_seconds < 60,
          describe(t) + buf};
}

Outcome criterion_certificate() {
  const Tally t = tally(g_core_run, Check::kCertificate);
  return {t.failed == 0 && t.passed == 1000 * kOracleSystems.size(),
          describe(t)};
}

Outcome criterion_nearest() {
  const VerifyReport r = run_verify(plan(kOracleSystems, 200, "nearest_point"));
  const Tally t = tally(r, Check::kNearestPoint);
  return {t.failed == 0 && t.passed == 200 * kOracleSystems.size(),
          describe(t) + " (50 dominant candidates each)"};
}

Outcome criterion_order() {
  const VerifyReport r =
      run_verify(plan(kOracleSystems, 1000, "order_preserving"));
  const Tally t = tally(r, Check::kOrderPreserving);
  VerifyPlan demo;
  demo.systems.push_back(
      {"gram [[1,1/2],[1/2,1]]",
       parse_gram_json(R"({"gram": [["1","1/2"],["1/2","1"]]})")});
  demo.trials = 10000;
  demo.checks = {Check::kOrderPreserving};
  const VerifyReport d = run_verify(demo);
  const CheckResult& c = d.systems[0].checks[0];
  std::string demo_note;
  bool demo_ok = false;
  if (c.status == CheckStatus::kHypothesisViolated) {
    demo_ok = true;
    demo_note =
        "non-obtuse gram: " + std::to_string(c.failed) +
        " hypothesis-violated pairs in 10000, first at trial " +
        std::to_string(c.counterexample->at("trial").get<std::size_t>());
  } else if (c.status == CheckStatus::kPass) {
    demo_ok = true;
    demo_note = "non-obtuse gram: none found within 10000 trials";
  }
  return {t.failed == 0 && t.passed == 1000 * kOracleSystems.size() && demo_ok,
          describe(t) + "; " + demo_note};
}

// Comparands counted here directly rather than trusted from the harness.
Outcome criterion_least_element() {
  std::size_t samples = 0, failures = 0, min_comparands = SIZE_MAX;
  std::string first;
  for (const auto& name : kOracleSystems) {
    const ObtuseBasis b = make_system(name);
    RatVector rho(b.rank());
    for (std::size_t i = 0; i < b.rank(); ++i) rho += b.dual().column(i);
    for (std::size_t t = 0; t < 500; ++t) {
      SplitMix64 rng(
          derive_seed(42, {tag_of("acceptance-least"), tag_of(name), t}));
      const AlphaVec x = sample_vector(
          b, rng, t % 4 == 3 ? Profile::kBoundary : Profile::kGeneric);
      const AlphaVec lx = retract(b, x).value;
      std::vector<AlphaVec> comparands;
      for (int k = 0; k < 12; ++k) {
        // Random dominant z lifted along rho until it dominates x.
        AlphaVec z = sample_vector(b, rng, Profile::kDominant);
        Rational s = 0;
        for (std::size_t i = 0; i < b.rank(); ++i)
          s = std::max<Rational>(s, (x[i] - z[i]) / rho[i]);
        comparands.push_back(z + AlphaVec(s * rho));
      }
      for (int k = 0; k < 10; ++k) {
        AlphaVec z = lx;
        for (std::size_t i = 0; i < b.rank(); ++i)
          z = z + sample_rational(rng, 0) * omega(b, i);
        comparands.push_back(z);
      }
      std::size_t valid = 0;
      for (const AlphaVec& z : comparands) {
        if (!in_dominant(b, z) || !leq(b, x, z)) continue;
        ++valid;
        if (!leq(b, lx, z)) {
          ++failures;
          if (first.empty()) first = name + " sample " + std::to_string(t);
        }
      }
      min_comparands = std::min(min_comparands, valid);
      ++samples;
    }
  }
  const VerifyReport r = run_verify(plan(kOracleSystems, 500, "least_element"));
  const Tally h = tally(r, Check::kLeastElement);
  return {failures == 0 && min_comparands >= 20 && h.failed == 0,
          std::to_string(samples) + " samples, min " +
              std::to_string(min_comparands) + " valid comparands each, " +
              std::to_string(failures) + " violations" +
              (first.empty() ? "" : " (first: " + first + ")") +
              "; harness: " + describe(h)};
}

Outcome criterion_basic_properties() {
  std::string detail;
  bool ok = true;
  for (Check c :
       {Check::kDominatesInput, Check::kIdempotence, Check::kHomogeneity}) {
    const Tally t = tally(g_core_run, c);
    ok = ok && t.failed == 0 && t.passed == 1000 * kOracleSystems.size();
    detail += check_name(c) + " " + std::to_string(t.passed) + "/" +
              std::to_string(t.passed + t.failed) + "; ";
  }
  detail += "dominant samples fixed as part of idempotence";
  return {ok, detail};
}

Outcome criterion_projection_order() {
  const auto systems = catalog_up_to(8);
  const VerifyReport r = run_verify(plan(systems, 1, "projection_order"));
  const Tally t = tally(r, Check::kProjectionOrder);
  return {t.failed == 0 && t.systems == systems.size(),
          std::to_string(t.systems) + " catalog systems of rank <= 8, " +
              std::to_string(t.passed) + " (J, i) pairs checked" +
              (t.first_failure.empty() ? "" : "; first: " + t.first_failure)};
}

Outcome criterion_wellknown() {
  const auto systems = catalog_up_to(16);
  std::size_t bad = 0;
  std::string first;
  for (const auto& s : systems) {
    const WellKnownCheck w = check_wellknown(make_system(s));
    if (!w.holds) {
      ++bad;
      if (first.empty()) first = s;
    }
  }
  return {bad == 0, std::to_string(systems.size()) +
                        " catalog systems of rank <= 16, " +
                        std::to_string(bad) + " with a negative dual entry" +
                        (first.empty() ? "" : " (first: " + first + ")")};
}

Outcome criterion_infimum() {
  const VerifyReport r =
      run_verify(plan(kOracleSystems, 500, "infimum_closure"));
  const Tally t = tally(r, Check::kInfimumClosure);
  return {t.failed == 0 && t.passed == 500 * kOracleSystems.size(),
          describe(t) + " (families of size 2 to 10)"};
}

Outcome criterion_fan() {
  std::size_t cones = 0;
  bool ok = true;
  std::string detail;
  for (const auto& s : catalog_up_to(8)) {
    try {
      cones += enumerate_fan(make_system(s)).size();
    } catch (const InternalError&) {
      ok = false;
      detail += s + " not simplicial; ";
    }
  }
  detail += std::to_string(cones) + " simplicial cones (rank <= 8); ";
  std::size_t uncovered = 0, inconsistent = 0;
  for (const char* s : {"A2", "B2", "G2", "A3", "B3", "C3"}) {
    const ObtuseBasis b = make_system(s);
    const CompletenessReport c = check_completeness(
        b, enumerate_fan(b), derive_seed(42, {tag_of(s)}), 10000);
    uncovered += c.uncovered;
    inconsistent += c.inconsistent;
  }
  detail += std::to_string(uncovered) + " uncovered and " +
            std::to_string(inconsistent) +
            " inconsistent of 10000 points per rank 2/3 system; ";
  std::size_t pairs = 0, face_failures = 0;
  for (const auto& s : catalog_up_to(4)) {
    const ObtuseBasis b = make_system(s);
    const FaceReport f = check_face_intersections(b, enumerate_fan(b),
                                                  derive_seed(42, {tag_of(s)}));
    pairs += f.pairs;
    face_failures += f.failures.size();
  }
  detail += std::to_string(face_failures) + " face failures over " +
            std::to_string(pairs) + " cone pairs (rank <= 4)";
  return {ok && uncovered == 0 && inconsistent == 0 && face_failures == 0,
          detail};
}

Outcome criterion_envelope() {
  SplitMix64 rng(derive_seed(42, {tag_of("acceptance-envelope")}));
  std::size_t hull_mismatch = 0;
  for (int t = 0; t < 10000; ++t) {
    const auto n = static_cast<std::size_t>(rng.uniform(1, 64));
    std::vector<Rational> v(n + 1);
    for (std::size_t i = 1; i <= n; ++i) v[i] = sample_rational(rng, -20);
    const StepFunction f(v, Variant::kGL);
    if (!(concave_envelope_hull(f) == concave_envelope_pav(f))) ++hull_mismatch;
  }
  std::size_t sl_mismatch = 0, sl_total = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    const ObtuseBasis b = make_system("A" + std::to_string(n - 1));
    for (std::size_t t = 0; t < 500; ++t, ++sl_total) {
      SplitMix64 r(derive_seed(42, {tag_of("acceptance-sl"), n, t}));
      const AlphaVec v = sample_vector(
          b, r, t % 4 == 3 ? Profile::kBoundary : Profile::kGeneric);
      if (!(vec_to_function(retract(b, v).value) ==
            concave_envelope_hull(vec_to_function(v))))
        ++sl_mismatch;
    }
  }
  std::size_t gl_mismatch = 0, gl_total = 0;
  for (std::size_t n = 2; n <= 12; ++n) {
    const RootDatum d = make_gl(n);
    for (std::size_t t = 0; t < 500; ++t, ++gl_total) {
      SplitMix64 r(derive_seed(42, {tag_of("acceptance-gl"), n, t}));
      std::vector<Rational> lambda(n);
      for (auto& x : lambda) x = sample_rational(r, -20);
      const CoweightRetraction c = retract_G(d, RatVector(lambda));
      if (!check_coweight_certificate(d, RatVector(lambda), c) ||
          !(coweight_to_function(c.value.entries()) ==
            concave_envelope_hull(coweight_to_function(lambda))))
        ++gl_mismatch;
    }
  }
  const ObtuseBasis a2 = make_system("A2");
  const bool anchor =
      retract(a2, AlphaVec{Rational(1), Rational(-1)}).value ==
          AlphaVec{Rational(1), Rational(1, 2)} &&
      concave_envelope_hull(StepFunction({0, 1, -1, 0}, Variant::kSL))
              .values() == std::vector<Rational>{0, 1, Rational(1, 2), 0};
  return {hull_mismatch == 0 && sl_mismatch == 0 && gl_mismatch == 0 && anchor,
          "hull vs PAV " + std::to_string(hull_mismatch) +
              "/10000 mismatches; A(n-1) " + std::to_string(sl_mismatch) + "/" +
              std::to_string(sl_total) + "; GL(n) " +
              std::to_string(gl_mismatch) + "/" + std::to_string(gl_total) +
              "; A2 anchor " + (anchor ? "ok" : "WRONG")};
}

Outcome criterion_metric() {
  VerifyPlan p;
  for (const char* s : {"gl2", "gl3", "gl4", "gl6", "B3", "C3", "G2", "F4"})
    p.systems.push_back(make_entry(s));
  const RootDatum a1 = make_simply_connected("A1");
  const RootDatum b2 = make_simply_connected("B2");
  p.systems.push_back({"A1+A1", direct_sum(a1, a1)});
  p.systems.push_back(
      {"A1+B2+GL(3)", direct_sum(direct_sum(a1, b2), make_gl(3))});
  p.trials = 200;
  p.checks = {Check::kMetricChar};
  p.seed = 42;
  const VerifyReport r = run_verify(p);
  const Tally t = tally(r, Check::kMetricChar);
  return {t.failed == 0 && t.passed == 200 * p.systems.size(),
          describe(t) + " (3 scalings per datum, distinct per factor)"};
}

Outcome criterion_determinism() {
  const std::string base =
      R"({"systems": ["A2","B2","G2","A3","C3","D4","F4"], "trials": 1000,)"
      R"( "seed": 42, "checks": "all", "threads": )";
  std::vector<std::string> reports;
  bool all_ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const char* threads : {"1}", "1}", "4}"}) {
    char* out = nullptr;
    int ok = 0;
    if (lr_verify((base + threads).c_str(), &out, &ok) != LR_OK)
      return {false, std::string("lr_verify failed: ") + lr_last_error()};
    reports.emplace_back(out);
    lr_string_free(out);
    all_ok = all_ok && ok == 1;
  }
  const bool same = reports[0] == reports[1] && reports[0] == reports[2];
  char buf[160];
  std::snprintf(buf, sizeof buf,
                "flagship plan (7 systems x 1000 trials, all checks): %s, "
                "%zu bytes, %s; three runs in %.1f s",
                same ? "byte-identical for threads 1, 1, 4" : "REPORTS DIFFER",
                reports[0].size(), all_ok ? "zero failures" : "FAILURES",
                seconds_since(t0));
  return {same && all_ok, buf};
}

}  // namespace
}  // namespace langlands

int main() {
  using langlands::Outcome;
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria =
      {{"oracle equivalence", langlands::criterion_oracle},
       {"certificate soundness", langlands::criterion_certificate},
       {"nearest point", langlands::criterion_nearest},
       {"order preservation", langlands::criterion_order},
       {"least element", langlands::criterion_least_element},
       {"dominates input, idempotence, homogeneity",
        langlands::criterion_basic_properties},
       {"projection order", langlands::criterion_projection_order},
       {"dual basis nonnegative", langlands::criterion_wellknown},
       {"infimum closure", langlands::criterion_infimum},
       {"fan", langlands::criterion_fan},
       {"envelope cross-checks", langlands::criterion_envelope},
       {"metric characterization", langlands::criterion_metric},
       {"determinism", langlands::criterion_determinism}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) ++failed;
    std::printf("%s %2zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1,
                criteria[i].first, o.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
