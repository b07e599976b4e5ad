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

#include <cstdlib>
#include <cstring>
#include <string>

#include "langlands/json_io.hpp"
#include "langlands/langlands.h"
#include "langlands/verify.hpp"

struct lr_system {
  langlands::ObtuseBasis basis;
};

struct lr_datum {
  langlands::RootDatum datum;
};

namespace {

using langlands::DimensionError;
using langlands::DomainError;
using langlands::GuardExceeded;
using nlohmann::json;

thread_local std::string g_last_error;

lr_status fail(lr_status s, std::string message) {
  g_last_error = std::move(message);
  return s;
}

// Runs fn, mapping exceptions to status codes.
template <typename Fn>
lr_status guarded(Fn&& fn) {
  g_last_error.clear();
  try {
    fn();
    return LR_OK;
  } catch (const GuardExceeded& e) {
    return fail(LR_ERR_GUARD, e.what());
  } catch (const DimensionError& e) {
    return fail(LR_ERR_DIMENSION, e.what());
  } catch (const DomainError& e) {
    return fail(LR_ERR_DOMAIN, e.what());
  } catch (const json::exception& e) {
    return fail(LR_ERR_DOMAIN, e.what());
  } catch (const std::exception& e) {
    return fail(LR_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(LR_ERR_INTERNAL, "unknown exception");
  }
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

langlands::AlphaVec parse_vector(const langlands::ObtuseBasis& b,
                                 const char* csv) {
  langlands::RatVector v(langlands::parse_rational_list(csv));
  if (v.size() != b.rank())
    throw DimensionError("vector has " + std::to_string(v.size()) +
                         " coordinates, system has rank " +
                         std::to_string(b.rank()));
  return langlands::AlphaVec(std::move(v));
}

json matrix_json(const langlands::RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    rows.push_back(langlands::vector_to_json(m.row(r)));
  return rows;
}

}  // namespace

#define LR_REQUIRE(p)                                  \
  do {                                                 \
    if (!(p)) return fail(LR_ERR_NULL, #p " is NULL"); \
  } while (0)

extern "C" {

const char* lr_version(void) { return "1.0.0"; }

const char* lr_last_error(void) { return g_last_error.c_str(); }

const char* lr_status_name(lr_status s) {
  switch (s) {
    case LR_OK:
      return "ok";
    case LR_ERR_DOMAIN:
      return "domain error";
    case LR_ERR_DIMENSION:
      return "dimension error";
    case LR_ERR_GUARD:
      return "guard exceeded";
    case LR_ERR_INTERNAL:
      return "internal error";
    case LR_ERR_NULL:
      return "null argument";
  }
  return "unknown status";
}

void lr_string_free(char* s) { std::free(s); }

lr_status lr_system_from_name(const char* name, lr_system** out) {
  LR_REQUIRE(name);
  LR_REQUIRE(out);
  return guarded([&] {
    *out = new lr_system{langlands::make_system(std::string_view(name))};
  });
}

lr_status lr_system_from_gram_json(const char* text, lr_system** out) {
  LR_REQUIRE(text);
  LR_REQUIRE(out);
  return guarded(
      [&] { *out = new lr_system{langlands::parse_gram_json(text)}; });
}

void lr_system_free(lr_system* s) { delete s; }

lr_status lr_system_rank(const lr_system* s, size_t* out) {
  LR_REQUIRE(s);
  LR_REQUIRE(out);
  *out = s->basis.rank();
  return LR_OK;
}

lr_status lr_system_is_obtuse(const lr_system* s, int* out) {
  LR_REQUIRE(s);
  LR_REQUIRE(out);
  *out = s->basis.obtuse() ? 1 : 0;
  return LR_OK;
}

lr_status lr_system_info(const lr_system* s, char** out_json) {
  LR_REQUIRE(s);
  LR_REQUIRE(out_json);
  return guarded([&] {
    const json j = {{"name", s->basis.name()},
                    {"rank", s->basis.rank()},
                    {"gram", matrix_json(s->basis.gram())},
                    {"dual", matrix_json(s->basis.dual())},
                    {"obtuse", s->basis.obtuse()}};
    *out_json = copy_out(j.dump());
  });
}

lr_status lr_retract(const lr_system* s, const char* vector, char** out_json) {
  LR_REQUIRE(s);
  LR_REQUIRE(vector);
  LR_REQUIRE(out_json);
  return guarded([&] {
    const auto x = parse_vector(s->basis, vector);
    const auto r = langlands::retract(s->basis, x);
    *out_json = copy_out(langlands::retraction_to_json(s->basis, x, r).dump());
  });
}

lr_status lr_retract_oracle(const lr_system* s, const char* vector,
                            char** out_json) {
  LR_REQUIRE(s);
  LR_REQUIRE(vector);
  LR_REQUIRE(out_json);
  return guarded([&] {
    const auto x = parse_vector(s->basis, vector);
    const auto r = langlands::retract_oracle(s->basis, x);
    *out_json = copy_out(langlands::retraction_to_json(s->basis, x, r).dump());
  });
}

lr_status lr_fan(const lr_system* s, char** out_json) {
  LR_REQUIRE(s);
  LR_REQUIRE(out_json);
  return guarded([&] {
    const auto fan = langlands::enumerate_fan(s->basis);
    *out_json = copy_out(langlands::fan_to_json(s->basis, fan).dump());
  });
}

lr_status lr_fan_check(const lr_system* s, uint64_t seed, size_t samples,
                       char** out_json, int* ok) {
  LR_REQUIRE(s);
  LR_REQUIRE(out_json);
  LR_REQUIRE(ok);
  return guarded([&] {
    if (s->basis.rank() > langlands::kEnumerationGuard)
      throw GuardExceeded("fan enumeration limited to rank <= 16");
    const auto c = langlands::run_fan_check(s->basis, seed, samples);
    *ok = c.ok() ? 1 : 0;
    *out_json = copy_out(langlands::fan_check_to_json(c).dump());
  });
}

lr_status lr_fan_svg(const lr_system* s, char** out_svg) {
  LR_REQUIRE(s);
  LR_REQUIRE(out_svg);
  return guarded(
      [&] { *out_svg = copy_out(langlands::fan_svg_rank2(s->basis)); });
}

lr_status lr_envelope(const char* values, const char* variant,
                      char** out_json) {
  LR_REQUIRE(values);
  LR_REQUIRE(out_json);
  return guarded([&] {
    const std::string v = variant ? variant : "gl";
    langlands::Variant var;
    if (v == "gl") {
      var = langlands::Variant::kGL;
    } else if (v == "sl") {
      var = langlands::Variant::kSL;
    } else {
      throw DomainError("variant must be 'gl' or 'sl', got '" + v + "'");
    }
    const langlands::StepFunction f(langlands::parse_rational_list(values),
                                    var);
    *out_json = copy_out(
        langlands::envelope_to_json(langlands::concave_envelope_pav_pools(f))
            .dump());
  });
}

lr_status lr_datum_from_group(const char* name, lr_datum** out) {
  LR_REQUIRE(name);
  LR_REQUIRE(out);
  return guarded([&] {
    *out = new lr_datum{langlands::make_group(std::string_view(name))};
  });
}

lr_status lr_datum_from_json(const char* text, lr_datum** out) {
  LR_REQUIRE(text);
  LR_REQUIRE(out);
  return guarded(
      [&] { *out = new lr_datum{langlands::parse_datum_json(text)}; });
}

void lr_datum_free(lr_datum* d) { delete d; }

lr_status lr_datum_lattice_rank(const lr_datum* d, size_t* out) {
  LR_REQUIRE(d);
  LR_REQUIRE(out);
  *out = d->datum.lattice_rank();
  return LR_OK;
}

lr_status lr_coweight_retract(const lr_datum* d, const char* coweight,
                              char** out_json) {
  LR_REQUIRE(d);
  LR_REQUIRE(coweight);
  LR_REQUIRE(out_json);
  return guarded([&] {
    langlands::Coweight lambda(langlands::parse_rational_list(coweight));
    if (lambda.size() != d->datum.lattice_rank())
      throw DimensionError("coweight has " + std::to_string(lambda.size()) +
                           " entries, lattice rank is " +
                           std::to_string(d->datum.lattice_rank()));
    const auto r = langlands::retract_G(d->datum, lambda);
    *out_json = copy_out(
        langlands::coweight_retraction_to_json(d->datum, lambda, r).dump());
  });
}

lr_status lr_verify(const char* request_json, char** out_json, int* ok) {
  LR_REQUIRE(request_json);
  LR_REQUIRE(out_json);
  LR_REQUIRE(ok);
  return guarded([&] {
    const json req = json::parse(request_json);
    if (!req.is_object()) throw DomainError("verify request must be an object");
    langlands::VerifyPlan plan;
    for (const auto& name : req.value("systems", json::array()))
      plan.systems.push_back(langlands::make_entry(name.get<std::string>()));
    for (const auto& g : req.value("grams", json::array())) {
      const std::string label = g.value("label", "custom");
      plan.systems.push_back(
          {label, langlands::parse_gram_json(g.dump(), label)});
    }
    for (const auto& dj : req.value("data", json::array())) {
      const std::string label = dj.value("label", "custom");
      plan.systems.push_back(
          {label, langlands::parse_datum_json(dj.dump(), label)});
    }
    const json trials = req.value("trials", json(std::uint64_t{100}));
    if (!trials.is_number_unsigned())
      throw DomainError("'trials' must be a positive integer");
    plan.trials = trials.get<std::size_t>();
    const json seed = req.value("seed", json(std::uint64_t{42}));
    if (!seed.is_number_unsigned())
      throw DomainError("'seed' must be a nonnegative 64-bit integer");
    plan.seed = seed.get<std::uint64_t>();
    plan.checks = langlands::parse_checks(req.value("checks", "all"));
    const json threads = req.value("threads", json(std::uint64_t{1}));
    if (!threads.is_number_unsigned() || threads.get<std::size_t>() == 0)
      throw DomainError("'threads' must be a positive integer");
    plan.threads = threads.get<std::size_t>();
    const auto report = langlands::run_verify(plan);
    *ok = langlands::report_ok(report, req.value("allow_nonobtuse", false)) ? 1
                                                                            : 0;
    *out_json = copy_out(
        langlands::report_to_json(report, req.value("timing", false)).dump());
  });
}

}  // extern "C"
