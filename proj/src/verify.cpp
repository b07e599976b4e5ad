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

#include <algorithm>
#include <chrono>
#include <functional>
#include <thread>

#include "langlands/envelope.hpp"
#include "langlands/fan.hpp"
#include "langlands/sampling.hpp"

namespace langlands {

namespace {

using nlohmann::json;
// nullopt: the trial passed. Otherwise the counterexample.
using Trial = std::optional<json>;
using TrialFn = std::function<Trial(std::size_t trial, SplitMix64& rng)>;

constexpr std::size_t kFaceSweepMaxRank = 4;
constexpr std::size_t kProjectionOrderMaxRank = 8;

json jvec(const RatVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

json jvec(const AlphaVec& v) { return jvec(v.coords); }

json jsubset(const SubsetJ& j) {
  json a = json::array();
  for (auto i : j.members()) a.push_back(i + 1);
  return a;
}

json cex(std::string relation, json input, json lhs, json rhs) {
  return json{{"relation", std::move(relation)},
              {"input", std::move(input)},
              {"lhs", std::move(lhs)},
              {"rhs", std::move(rhs)}};
}

// Generic input vector: 0 on trial 0, every fourth trial on a wall.
AlphaVec draw_x(const ObtuseBasis& b, SplitMix64& rng, std::size_t trial) {
  if (trial == 0) return AlphaVec::zero(b.rank());
  return sample_vector(b, rng,
                       trial % 4 == 3 ? Profile::kBoundary : Profile::kGeneric);
}

Coweight draw_lambda(const RootDatum& d, SplitMix64& rng, std::size_t trial) {
  Coweight lambda(d.lattice_rank());
  if (trial == 0) return lambda;
  for (std::size_t i = 0; i < lambda.size(); ++i)
    lambda[i] = sample_rational(rng, -20);
  return lambda;
}

Rational positive_scalar(SplitMix64& rng) {
  return sample_rational(rng, 1, SampleBounds{20, 6});
}

CheckResult run_trials(Check check, std::size_t trials, std::size_t threads,
                       std::uint64_t seed, std::size_t system_index,
                       const TrialFn& fn) {
  struct Partial {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::optional<std::pair<std::size_t, json>> first;
  };
  const std::uint64_t tag = tag_of(check_name(check));
  auto work = [&](std::size_t lo, std::size_t hi, Partial& out) {
    for (std::size_t t = lo; t < hi; ++t) {
      SplitMix64 rng(derive_seed(seed, {system_index, tag, t}));
      Trial r;
      try {
        r = fn(t, rng);
      } catch (const std::exception& e) {
        r = json{{"relation", "exception"}, {"what", e.what()}};
      }
      if (!r) {
        ++out.passed;
        continue;
      }
      ++out.failed;
      if (!out.first) out.first.emplace(t, std::move(*r));
    }
  };
  const std::size_t workers = std::max<std::size_t>(
      1, std::min(threads, trials == 0 ? std::size_t{1} : trials));
  std::vector<Partial> parts(workers);
  if (workers == 1) {
    work(0, trials, parts[0]);
  } else {
    std::vector<std::thread> pool;
    const std::size_t chunk = (trials + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t lo = std::min(trials, w * chunk);
      const std::size_t hi = std::min(trials, lo + chunk);
      pool.emplace_back(work, lo, hi, std::ref(parts[w]));
    }
    for (auto& th : pool) th.join();
  }
  CheckResult res;
  res.check = check;
  for (auto& p : parts) {
    res.passed += p.passed;
    res.failed += p.failed;
    // Chunks are in trial order, so the first recorded failure is the lowest.
    if (p.first && !res.counterexample) {
      json c = std::move(p.first->second);
      c["trial"] = p.first->first;
      res.counterexample = std::move(c);
    }
  }
  res.status = res.failed ? CheckStatus::kFail : CheckStatus::kPass;
  return res;
}

CheckResult single(Check check, const std::function<Trial()>& fn,
                   std::size_t passed_units = 1) {
  CheckResult res;
  res.check = check;
  Trial r;
  try {
    r = fn();
  } catch (const std::exception& e) {
    r = json{{"relation", "exception"}, {"what", e.what()}};
  }
  if (r) {
    res.failed = 1;
    res.counterexample = std::move(r);
    res.status = CheckStatus::kFail;
  } else {
    res.passed = passed_units;
  }
  return res;
}

CheckResult skipped(Check check, std::string note) {
  CheckResult res;
  res.check = check;
  res.status = CheckStatus::kSkipped;
  res.note = std::move(note);
  return res;
}

bool is_type_a(const std::string& label) {
  return label.size() >= 2 && (label[0] == 'A' || label[0] == 'a') &&
         std::all_of(label.begin() + 1, label.end(),
                     [](char c) { return std::isdigit(c) != 0; });
}

// rho = sum omega_i in alpha-coordinates, when every coordinate is positive.
std::optional<RatVector> positive_rho(const ObtuseBasis& b) {
  RatVector rho(b.rank());
  for (std::size_t i = 0; i < b.rank(); ++i) rho += b.dual().column(i);
  for (const auto& r : rho)
    if (sgn(r) <= 0) return std::nullopt;
  return rho;
}

// z + s rho with the least s >= 0 making the result dominate x.
AlphaVec tighten(const AlphaVec& z, const AlphaVec& x, const RatVector& rho) {
  Rational s = 0;
  for (std::size_t i = 0; i < z.size(); ++i) {
    const Rational need = (x[i] - z[i]) / rho[i];
    if (need > s) s = need;
  }
  return z + AlphaVec(s * rho);
}

// ---------------------------------------------------------------------------
// Checks on an obtuse (or not) basis.

CheckResult basis_check(Check check, const SystemEntry& entry,
                        const ObtuseBasis& b, const VerifyPlan& plan,
                        std::size_t index) {
  const std::size_t n = b.rank();
  auto trials = [&](const TrialFn& fn) {
    return run_trials(check, plan.trials, plan.threads, plan.seed, index, fn);
  };
  switch (check) {
    case Check::kOracleAgreement:
      if (n > kEnumerationGuard)
        return skipped(check, "rank above the enumeration guard");
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const RetractionResult r = retract(b, x);
        const RetractionResult o = retract_oracle(b, x);
        if (r.value == o.value && check_certificate(b, x, r).ok() &&
            check_certificate(b, x, o).ok())
          return std::nullopt;
        return cex("retract(x) == retract_oracle(x)", {{"x", jvec(x)}},
                   jvec(r.value), jvec(o.value));
      });
    case Check::kCertificate:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const RetractionResult r = retract(b, x);
        const CertificateCheck c = check_certificate(b, x, r);
        const bool in_domain = in_K_J(b, r.active_set, x).member;
        const bool piecewise = proj_J(b, r.active_set, x).value == r.value;
        if (c.ok() && in_domain && piecewise) return std::nullopt;
        return cex("certificate",
                   {{"x", jvec(x)}, {"active_set", jsubset(r.active_set)}},
                   jvec(r.value),
                   {{"dominant", c.dominant},
                    {"walls_vanish", c.walls_vanish},
                    {"residual_nonpositive", c.residual_nonpositive},
                    {"reconstructs", c.reconstructs},
                    {"x_in_K_J", in_domain},
                    {"pr_J_matches", piecewise}});
      });
    case Check::kDominatesInput:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec y = retract(b, x).value;
        if (leq(b, x, y)) return std::nullopt;
        return cex("x <= L(x)", {{"x", jvec(x)}}, jvec(x), jvec(y));
      });
    case Check::kIdempotence:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec y = retract(b, x).value;
        const AlphaVec yy = retract(b, y).value;
        if (!(yy == y))
          return cex("L(L(x)) == L(x)", {{"x", jvec(x)}}, jvec(yy), jvec(y));
        const AlphaVec z = sample_vector(b, rng, Profile::kDominant);
        const AlphaVec lz = retract(b, z).value;
        if (!(lz == z))
          return cex("L(z) == z for dominant z", {{"z", jvec(z)}}, jvec(lz),
                     jvec(z));
        return std::nullopt;
      });
    case Check::kHomogeneity:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const Rational s = positive_scalar(rng);
        const AlphaVec lhs = retract(b, s * x).value;
        const AlphaVec rhs = s * retract(b, x).value;
        if (lhs == rhs) return std::nullopt;
        return cex("L(s x) == s L(x)", {{"x", jvec(x)}, {"s", to_string(s)}},
                   jvec(lhs), jvec(rhs));
      });
    case Check::kOrderPreserving:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec y = x + sample_vector(b, rng, Profile::kPositive);
        const AlphaVec lx = retract(b, x).value;
        const AlphaVec ly = retract(b, y).value;
        if (leq(b, lx, ly)) return std::nullopt;
        return cex("x <= y implies L(x) <= L(y)",
                   {{"x", jvec(x)}, {"y", jvec(y)}}, jvec(lx), jvec(ly));
      });
    case Check::kLeastElement: {
      const auto rho = positive_rho(b);
      return trials([&, rho](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec lx = retract(b, x).value;
        std::vector<AlphaVec> comparands;
        for (int k = 0; k < 10; ++k) {
          AlphaVec z = sample_vector(b, rng, Profile::kDominant);
          if (leq(b, x, z)) comparands.push_back(z);
          if (rho) comparands.push_back(tighten(z, x, *rho));
        }
        for (int k = 0; k < 10; ++k) {
          const AlphaVec w = sample_vector(b, rng, Profile::kDominant);
          comparands.push_back(lx + w);
        }
        for (const AlphaVec& z : comparands) {
          // Only dominant z >= x are comparands; for obtuse bases every
          // constructed z qualifies.
          if (!in_dominant(b, z) || !leq(b, x, z)) continue;
          if (!leq(b, lx, z))
            return cex("L(x) <= z for dominant z >= x",
                       {{"x", jvec(x)}, {"z", jvec(z)}}, jvec(lx), jvec(z));
        }
        return std::nullopt;
      });
    }
    case Check::kNearestPoint:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec lx = retract(b, x).value;
        const Rational best = squared_distance(b, x, lx);
        for (int k = 0; k < 50; ++k) {
          AlphaVec z = sample_vector(b, rng, Profile::kDominant);
          if (k % 5 == 4)
            z = lx +
                sample_vector(b, rng, Profile::kDominant, SampleBounds{2, 8});
          const Rational dz = squared_distance(b, x, z);
          if (dz < best)
            return cex("|x - L(x)|^2 <= |x - z|^2 for dominant z",
                       {{"x", jvec(x)}, {"z", jvec(z)}}, to_string(best),
                       to_string(dz));
        }
        return std::nullopt;
      });
    case Check::kInfimumClosure:
      return trials([&](std::size_t, SplitMix64& rng) -> Trial {
        const auto size = static_cast<std::size_t>(rng.uniform(2, 10));
        std::vector<AlphaVec> family;
        for (std::size_t k = 0; k < size; ++k)
          family.push_back(sample_vector(b, rng, Profile::kDominant));
        const AlphaVec y = infimum(b, family);
        json fam = json::array();
        for (const auto& v : family) fam.push_back(jvec(v));
        for (const auto& v : family)
          if (!leq(b, y, v))
            return cex("inf <= every member", {{"family", fam}}, jvec(y),
                       jvec(v));
        if (!in_dominant(b, y))
          return cex("inf of dominant family is dominant", {{"family", fam}},
                     jvec(y), jvec(pairing(b, y)));
        return std::nullopt;
      });
    case Check::kProjectionOrder: {
      if (n > kProjectionOrderMaxRank)
        return skipped(check, "exhaustive sweep limited to rank <= 8");
      const std::size_t units = (std::size_t{1} << n) * n;
      return single(
          check,
          [&]() -> Trial {
            for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
              const SubsetJ j = SubsetJ::from_mask(m, n);
              for (std::size_t i = 0; i < n; ++i) {
                const AlphaVec p = proj_J(b, j, alpha(b, i)).value;
                if (!p.coords.all_nonnegative())
                  return cex("pr_J(alpha_i) >= 0",
                             {{"J", jsubset(j)}, {"i", i + 1}}, jvec(p),
                             json::array());
              }
            }
            return std::nullopt;
          },
          units);
    }
    case Check::kWellknown:
      return single(check, [&]() -> Trial {
        const WellKnownCheck w = check_wellknown(b);
        if (w.holds) return std::nullopt;
        return cex("omega_i in Vpos",
                   {{"row", w.row + 1}, {"column", w.column + 1}},
                   to_string(w.entry), "0");
      });
    case Check::kFan: {
      if (n > kEnumerationGuard)
        return skipped(check, "rank above the enumeration guard");
      return single(check, [&]() -> Trial {
        const auto fan = enumerate_fan(b);
        const std::uint64_t s = derive_seed(plan.seed, {index, tag_of("fan")});
        const CompletenessReport c = check_completeness(
            b, fan, s, std::max<std::size_t>(plan.trials, 1));
        if (c.uncovered || c.inconsistent)
          return cex(
              "cones cover V and L = pr_J on K_J", json::object(),
              {{"uncovered", c.uncovered}, {"inconsistent", c.inconsistent}},
              jvec(c.counterexamples.front()));
        if (n <= kFaceSweepMaxRank) {
          const FaceReport f = check_face_intersections(b, fan, s);
          if (!f.failures.empty()) {
            const FaceFailure& ff = f.failures.front();
            return cex("K_J n K_J' is the expected common face",
                       {{"J", jsubset(ff.j)}, {"J_prime", jsubset(ff.j_prime)}},
                       ff.reason, jvec(ff.point));
          }
        }
        return std::nullopt;
      });
    }
    case Check::kEnvelopeCommutes:
      if (!is_type_a(entry.label)) return skipped(check, "only type A systems");
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec v = draw_x(b, rng, t);
        const StepFunction f = vec_to_function(v);
        const StepFunction hull = concave_envelope_hull(f);
        const StepFunction pav = concave_envelope_pav(f);
        const StepFunction lv = vec_to_function(retract(b, v).value);
        if (hull == pav && lv == hull) return std::nullopt;
        return cex("f_L(v) == envelope(f_v)", {{"v", jvec(v)}},
                   jvec(RatVector(lv.values())),
                   jvec(RatVector(hull.values())));
      });
    case Check::kMetricChar:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const AlphaVec x = draw_x(b, rng, t);
        const AlphaVec lx = retract(b, x).value;
        const Rational s = positive_scalar(rng);
        const ObtuseBasis scaled =
            ObtuseBasis::from_gram(s * b.gram(), b.name());
        const AlphaVec ls = retract(scaled, x).value;
        if (lx == ls) return std::nullopt;
        return cex("nearest point independent of metric scaling",
                   {{"x", jvec(x)}, {"scale", to_string(s)}}, jvec(lx),
                   jvec(ls));
      });
  }
  return skipped(check, "unknown check");
}

// ---------------------------------------------------------------------------
// Checks on a root datum.

CheckResult datum_check(Check check, const SystemEntry& entry,
                        const RootDatum& d, const VerifyPlan& plan,
                        std::size_t index) {
  auto trials = [&](const TrialFn& fn) {
    return run_trials(check, plan.trials, plan.threads, plan.seed, index, fn);
  };
  const std::size_t s = d.semisimple_rank();
  const RatMatrix m_inv = invert(d.pairing_matrix());
  auto from_coroots = [&](const RatVector& coeffs) {
    Coweight out(d.lattice_rank());
    for (std::size_t j = 0; j < coeffs.size(); ++j)
      out += coeffs[j] * d.coroots()[j];
    return out;
  };
  auto dominant_increment = [&](SplitMix64& rng) {
    RatVector t(s);
    for (std::size_t i = 0; i < s; ++i) t[i] = sample_rational(rng, 0);
    return m_inv * t;
  };

  switch (check) {
    case Check::kOracleAgreement: {
      if (s > kEnumerationGuard)
        return skipped(check, "rank above the enumeration guard");
      std::vector<Rational> alt = d.symmetrizer();
      for (std::size_t i = 0; i < s; ++i)
        alt[i] *= static_cast<long>(d.component()[i] + 2);
      std::vector<std::size_t> perm(s);
      for (std::size_t i = 0; i < s; ++i) perm[i] = s - 1 - i;
      const RootDatum rev = d.permuted(perm);
      return trials([&, alt, rev](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const CoweightRetraction r = retract_G(d, lambda);
        const CorootSplit split = split_coweight(d, lambda);
        const RetractionResult o =
            retract_oracle(d.basis(), AlphaVec(split.coefficients));
        const Coweight via_oracle =
            lambda + from_coroots(o.value.coords - split.coefficients);
        const Coweight via_alt = retract_G(d, lambda, alt).value;
        const Coweight via_rev = retract_G(rev, lambda).value;
        if (r.value == via_oracle && r.value == via_alt && r.value == via_rev)
          return std::nullopt;
        return cex("unique least element (oracle, symmetrizer, reindexing)",
                   {{"lambda", jvec(lambda)}}, jvec(r.value),
                   json{{"oracle", jvec(via_oracle)},
                        {"other_symmetrizer", jvec(via_alt)},
                        {"reversed_indexing", jvec(via_rev)}});
      });
    }
    case Check::kCertificate:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const CoweightRetraction r = retract_G(d, lambda);
        if (check_coweight_certificate(d, lambda, r)) return std::nullopt;
        return cex("d >= 0, mu dominant, d_i > 0 => <mu, alpha_i> = 0",
                   {{"lambda", jvec(lambda)}}, jvec(r.value), jvec(r.d));
      });
    case Check::kDominatesInput:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const Coweight mu = retract_G(d, lambda).value;
        if (leq_G(d, lambda, mu).holds) return std::nullopt;
        return cex("lambda <=_G L_G(lambda)", {{"lambda", jvec(lambda)}},
                   jvec(lambda), jvec(mu));
      });
    case Check::kIdempotence:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const Coweight mu = retract_G(d, lambda).value;
        const Coweight mu2 = retract_G(d, mu).value;
        if (mu2 == mu) return std::nullopt;
        return cex("L_G(L_G(lambda)) == L_G(lambda)",
                   {{"lambda", jvec(lambda)}}, jvec(mu2), jvec(mu));
      });
    case Check::kHomogeneity:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const Coweight mu = retract_G(d, lambda).value;
        const Rational sc = positive_scalar(rng);
        const Coweight scaled = retract_G(d, sc * lambda).value;
        if (!(scaled == sc * mu))
          return cex("L_G(s lambda) == s L_G(lambda)",
                     {{"lambda", jvec(lambda)}, {"s", to_string(sc)}},
                     jvec(scaled), jvec(sc * mu));
        Coweight c = draw_lambda(d, rng, t + 1);
        c = split_coweight(d, c).central;
        const Coweight shifted = retract_G(d, lambda + c).value;
        if (!(shifted == mu + c))
          return cex("L_G(lambda + c) == L_G(lambda) + c for central c",
                     {{"lambda", jvec(lambda)}, {"c", jvec(c)}}, jvec(shifted),
                     jvec(mu + c));
        return std::nullopt;
      });
    case Check::kOrderPreserving:
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        RatVector p(s);
        for (std::size_t i = 0; i < s; ++i) p[i] = sample_rational(rng, 0);
        const Coweight lambda2 = lambda + from_coroots(p);
        const Coweight mu = retract_G(d, lambda).value;
        const Coweight mu2 = retract_G(d, lambda2).value;
        if (leq_G(d, mu, mu2).holds) return std::nullopt;
        return cex("lambda <=_G lambda' implies L_G(lambda) <=_G L_G(lambda')",
                   {{"lambda", jvec(lambda)}, {"lambda_prime", jvec(lambda2)}},
                   jvec(mu), jvec(mu2));
      });
    case Check::kLeastElement: {
      RatVector ones(s);
      for (std::size_t i = 0; i < s; ++i) ones[i] = 1;
      const RatVector rho = m_inv * ones;
      return trials([&, rho](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const Coweight mu = retract_G(d, lambda).value;
        const CorootSplit split = split_coweight(d, lambda);
        std::vector<Coweight> comparands;
        for (int k = 0; k < 12; ++k) {
          // Tight: central part of lambda plus a dominant coroot-span vector
          // raised along rho just enough to dominate lambda.
          RatVector z = dominant_increment(rng);
          Rational lift = 0;
          for (std::size_t i = 0; i < s; ++i) {
            const Rational need = (split.coefficients[i] - z[i]) / rho[i];
            if (need > lift) lift = need;
          }
          z += lift * rho;
          comparands.push_back(split.central + from_coroots(z));
        }
        for (int k = 0; k < 8; ++k)
          comparands.push_back(mu + from_coroots(dominant_increment(rng)));
        for (const Coweight& z : comparands) {
          if (!is_dominant_coweight(d, z) || !leq_G(d, lambda, z).holds)
            return cex("comparand construction", {{"lambda", jvec(lambda)}},
                       jvec(z), json::array());
          if (!leq_G(d, mu, z).holds)
            return cex("L_G(lambda) <=_G mu' for dominant mu' >=_G lambda",
                       {{"lambda", jvec(lambda)}, {"mu_prime", jvec(z)}},
                       jvec(mu), jvec(z));
        }
        return std::nullopt;
      });
    }
    case Check::kMetricChar: {
      const std::size_t k = d.component_count();
      std::vector<std::vector<Rational>> scalings(3, std::vector<Rational>(k));
      for (std::size_t c = 0; c < k; ++c) {
        scalings[0][c] = 1;
        scalings[1][c] = Rational(7, 3);
        scalings[2][c] = static_cast<long>(2 * c + 1);
      }
      return trials([&, scalings](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const MetricReport r =
            check_metric_characterization(d, lambda, scalings, rng.next(), 8);
        if (r.minimizers_equal && r.violations == 0) return std::nullopt;
        return cex("L_G(lambda) is the nearest dominant coweight",
                   {{"lambda", jvec(lambda)}}, jvec(r.minimizer),
                   r.counterexample ? jvec(*r.counterexample)
                                    : json("minimizers differ"));
      });
    }
    case Check::kEnvelopeCommutes:
      if (entry.label.rfind("GL(", 0) != 0 && entry.label.rfind("gl", 0) != 0)
        return skipped(check, "only GL(n) data");
      return trials([&](std::size_t t, SplitMix64& rng) -> Trial {
        const Coweight lambda = draw_lambda(d, rng, t);
        const Coweight mu = retract_G(d, lambda).value;
        const StepFunction env =
            concave_envelope_hull(coweight_to_function(lambda.entries()));
        const StepFunction fmu = coweight_to_function(mu.entries());
        if (env == fmu) return std::nullopt;
        return cex("partial sums of L_G(lambda) == envelope(partial sums)",
                   {{"lambda", jvec(lambda)}}, jvec(RatVector(fmu.values())),
                   jvec(RatVector(env.values())));
      });
    case Check::kNearestPoint:
    case Check::kInfimumClosure:
    case Check::kProjectionOrder:
    case Check::kWellknown:
    case Check::kFan:
      return basis_check(check, entry, d.basis(), plan, index);
  }
  return skipped(check, "unknown check");
}

}  // namespace

const std::vector<Check>& all_checks() {
  static const std::vector<Check> kAll = {
      Check::kOracleAgreement,  Check::kCertificate,  Check::kDominatesInput,
      Check::kIdempotence,      Check::kHomogeneity,  Check::kOrderPreserving,
      Check::kLeastElement,     Check::kNearestPoint, Check::kInfimumClosure,
      Check::kProjectionOrder,  Check::kWellknown,    Check::kFan,
      Check::kEnvelopeCommutes, Check::kMetricChar};
  return kAll;
}

std::string check_name(Check c) {
  switch (c) {
    case Check::kOracleAgreement:
      return "oracle_agreement";
    case Check::kCertificate:
      return "certificate";
    case Check::kDominatesInput:
      return "dominates_input";
    case Check::kIdempotence:
      return "idempotence";
    case Check::kHomogeneity:
      return "homogeneity";
    case Check::kOrderPreserving:
      return "order_preserving";
    case Check::kLeastElement:
      return "least_element";
    case Check::kNearestPoint:
      return "nearest_point";
    case Check::kInfimumClosure:
      return "infimum_closure";
    case Check::kProjectionOrder:
      return "projection_order";
    case Check::kWellknown:
      return "wellknown";
    case Check::kFan:
      return "fan";
    case Check::kEnvelopeCommutes:
      return "envelope_commutes";
    case Check::kMetricChar:
      return "metric_char";
  }
  return "unknown";
}

Check parse_check(std::string_view name) {
  for (Check c : all_checks())
    if (check_name(c) == name) return c;
  throw DomainError("unknown check '" + std::string(name) + "'");
}

std::set<Check> parse_checks(std::string_view csv) {
  std::set<Check> out;
  if (csv == "all") return {all_checks().begin(), all_checks().end()};
  std::size_t start = 0;
  while (start <= csv.size()) {
    const auto comma = csv.find(',', start);
    const std::string_view item = csv.substr(start, comma - start);
    if (!item.empty()) out.insert(parse_check(item));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (out.empty()) throw DomainError("no checks selected");
  return out;
}

bool needs_obtuse(Check c) {
  switch (c) {
    case Check::kOrderPreserving:
    case Check::kLeastElement:
    case Check::kInfimumClosure:
    case Check::kProjectionOrder:
    case Check::kWellknown:
      return true;
    default:
      return false;
  }
}

SystemEntry make_entry(std::string_view name) {
  std::string lower;
  for (char c : name)
    lower += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (lower.rfind("gl", 0) == 0) {
    RootDatum d = make_group(name);
    std::string label = d.name();
    return {std::move(label), std::move(d)};
  }
  ObtuseBasis b = make_system(name);
  std::string label = b.name();
  return {std::move(label), std::move(b)};
}

std::string status_name(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass:
      return "pass";
    case CheckStatus::kFail:
      return "fail";
    case CheckStatus::kHypothesisViolated:
      return "hypothesis-violated";
    case CheckStatus::kSkipped:
      return "skipped";
  }
  return "unknown";
}

VerifyReport run_verify(const VerifyPlan& plan) {
  if (plan.systems.empty()) throw DomainError("verify plan has no systems");
  if (plan.trials == 0) throw DomainError("verify plan needs trials >= 1");
  if (plan.checks.empty()) throw DomainError("verify plan has no checks");
  const auto start = std::chrono::steady_clock::now();
  VerifyReport rep;
  rep.seed = plan.seed;
  rep.trials = plan.trials;
  for (std::size_t idx = 0; idx < plan.systems.size(); ++idx) {
    const SystemEntry& entry = plan.systems[idx];
    SystemReport sr;
    sr.label = entry.label;
    const std::uint64_t before = fallback_count();
    const ObtuseBasis& basis = std::holds_alternative<ObtuseBasis>(entry.system)
                                   ? std::get<ObtuseBasis>(entry.system)
                                   : std::get<RootDatum>(entry.system).basis();
    sr.kind =
        std::holds_alternative<ObtuseBasis>(entry.system) ? "basis" : "datum";
    sr.rank = basis.rank();
    sr.obtuse = basis.obtuse();
    for (Check c : all_checks()) {
      if (!plan.checks.count(c)) continue;
      CheckResult res =
          std::holds_alternative<ObtuseBasis>(entry.system)
              ? basis_check(c, entry, basis, plan, idx)
              : datum_check(c, entry, std::get<RootDatum>(entry.system), plan,
                            idx);
      if (res.status == CheckStatus::kFail && !sr.obtuse && needs_obtuse(c)) {
        res.status = CheckStatus::kHypothesisViolated;
        res.note = "basis is not obtuse; the statement assumes it";
      }
      if (res.status == CheckStatus::kFail) ++rep.failures;
      if (res.status == CheckStatus::kHypothesisViolated)
        ++rep.hypothesis_violated;
      sr.checks.push_back(std::move(res));
    }
    sr.fallbacks = fallback_count() - before;
    rep.systems.push_back(std::move(sr));
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

json report_to_json(const VerifyReport& r, bool include_timing) {
  json systems = json::array();
  for (const SystemReport& s : r.systems) {
    json checks = json::object();
    for (const CheckResult& c : s.checks) {
      json jc = {{"status", status_name(c.status)},
                 {"passed", c.passed},
                 {"failed", c.failed}};
      if (c.counterexample) jc["counterexample"] = *c.counterexample;
      if (!c.note.empty()) jc["note"] = c.note;
      checks[check_name(c.check)] = std::move(jc);
    }
    systems.push_back({{"system", s.label},
                       {"kind", s.kind},
                       {"rank", s.rank},
                       {"obtuse", s.obtuse},
                       {"fallbacks", s.fallbacks},
                       {"checks", std::move(checks)}});
  }
  json out = {{"seed", r.seed},
              {"trials", r.trials},
              {"systems", std::move(systems)},
              {"failures", r.failures},
              {"hypothesis_violated", r.hypothesis_violated}};
  if (include_timing) out["elapsed_ms"] = r.elapsed_ms;
  return out;
}

bool report_ok(const VerifyReport& r, bool allow_nonobtuse) {
  return r.failures == 0 && (allow_nonobtuse || r.hypothesis_violated == 0);
}

}  // namespace langlands
