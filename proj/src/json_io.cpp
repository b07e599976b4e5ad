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

#include "langlands/json_io.hpp"

namespace langlands {

using nlohmann::json;

namespace {

json parse_text(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw DomainError(std::string("invalid JSON: ") + e.what());
  }
}

std::vector<RatVector> rows_from_json(const json& j, const char* field) {
  if (!j.is_array())
    throw DomainError(std::string("'") + field + "' must be an array of rows");
  std::vector<RatVector> rows;
  for (const json& row : j) rows.push_back(vector_from_json(row));
  return rows;
}

constexpr std::size_t kFaceSweepMaxRank = 4;

}  // namespace

Rational rational_from_json(const json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(mpz_class(j.dump()));
  throw DomainError("rational must be a string \"p/q\" or an integer, got " +
                    j.dump());
}

json rational_to_json(const Rational& r) { return to_string(r); }

json vector_to_json(const RatVector& v) {
  json a = json::array();
  for (const auto& r : v) a.push_back(to_string(r));
  return a;
}

RatVector vector_from_json(const json& j) {
  if (!j.is_array()) throw DomainError("expected an array of rationals");
  std::vector<Rational> out;
  for (const json& e : j) out.push_back(rational_from_json(e));
  return RatVector(std::move(out));
}

ObtuseBasis parse_gram_json(std::string_view text, std::string name) {
  const json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("gram"))
    throw DomainError("gram file must be an object with a 'gram' field");
  const auto rows = rows_from_json(doc["gram"], "gram");
  if (rows.empty()) throw DomainError("gram matrix is empty");
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) {
    if (r.size() != rows.size())
      throw DimensionError("gram matrix must be square");
    m.push_back(r.entries());
  }
  return ObtuseBasis::from_gram(RatMatrix::from_rows(m), std::move(name));
}

RootDatum parse_datum_json(std::string_view text, std::string name) {
  const json doc = parse_text(text);
  if (!doc.is_object() || !doc.contains("rank") || !doc.contains("coroots") ||
      !doc.contains("roots"))
    throw DomainError(
        "root datum file needs 'rank', 'coroots' and 'roots' fields");
  if (!doc["rank"].is_number_unsigned() || doc["rank"].get<std::size_t>() == 0)
    throw DomainError("'rank' must be a positive integer");
  return RootDatum::from_matrices(
      doc["rank"].get<std::size_t>(), rows_from_json(doc["coroots"], "coroots"),
      rows_from_json(doc["roots"], "roots"), std::move(name));
}

json retraction_to_json(const ObtuseBasis& b, const AlphaVec& x,
                        const RetractionResult& r) {
  json active = json::array();
  json residual = json::object();
  const auto& members = r.active_set.members();
  for (std::size_t k = 0; k < members.size(); ++k) {
    active.push_back(members[k] + 1);
    residual[std::to_string(members[k] + 1)] = to_string(r.residual_coeffs[k]);
  }
  return json{{"value", vector_to_json(r.value.coords)},
              {"active_set", std::move(active)},
              {"residual_coeffs", std::move(residual)},
              {"certificate_ok", check_certificate(b, x, r).ok()}};
}

FanCheck run_fan_check(const ObtuseBasis& b, std::uint64_t seed,
                       std::size_t samples) {
  FanCheck out;
  std::vector<FanCone> fan;
  try {
    fan = enumerate_fan(b);
  } catch (const InternalError&) {
    out.simplicial = false;
    return out;
  }
  out.cones = fan.size();
  const CompletenessReport c = check_completeness(b, fan, seed, samples);
  out.samples = c.samples;
  out.uncovered = c.uncovered;
  out.inconsistent = c.inconsistent;
  if (b.rank() <= kFaceSweepMaxRank) {
    out.face_sweep = true;
    out.face_failures = check_face_intersections(b, fan, seed).failures;
  }
  return out;
}

json fan_check_to_json(const FanCheck& c) {
  json failures = json::array();
  for (const FaceFailure& f : c.face_failures) {
    json j = json::array(), jp = json::array();
    for (auto i : f.j.members()) j.push_back(i + 1);
    for (auto i : f.j_prime.members()) jp.push_back(i + 1);
    failures.push_back({{"J", j},
                        {"J_prime", jp},
                        {"reason", f.reason},
                        {"point", vector_to_json(f.point.coords)}});
  }
  return json{{"simplicial", c.simplicial},
              {"cones", c.cones},
              {"samples", c.samples},
              {"uncovered", c.uncovered},
              {"inconsistent", c.inconsistent},
              {"face_sweep", c.face_sweep},
              {"face_failures", std::move(failures)}};
}

json fan_to_json(const ObtuseBasis& b, const std::vector<FanCone>& fan) {
  json cones = json::array();
  for (const FanCone& cone : fan) {
    json j = json::array(), gens = json::array();
    for (auto i : cone.j.members()) j.push_back(i + 1);
    for (const AlphaVec& g : cone.generators)
      gens.push_back(vector_to_json(g.coords));
    cones.push_back({{"J", std::move(j)}, {"generators", std::move(gens)}});
  }
  return json{
      {"system", b.name()}, {"rank", b.rank()}, {"cones", std::move(cones)}};
}

json envelope_to_json(const PavResult& r) {
  json pools = json::array();
  for (const Pool& p : r.pools)
    pools.push_back(
        {{"from", p.from}, {"to", p.to}, {"slope", to_string(p.slope)}});
  return json{{"envelope", vector_to_json(RatVector(r.envelope.values()))},
              {"pools", std::move(pools)}};
}

json coweight_retraction_to_json(const RootDatum& d, const Coweight& lambda,
                                 const CoweightRetraction& r) {
  return json{{"value", vector_to_json(r.value)},
              {"d", vector_to_json(r.d)},
              {"certificate_ok", check_coweight_certificate(d, lambda, r)}};
}

std::string dump_json(const json& j, bool pretty) {
  return j.dump(pretty ? 2 : -1) + "\n";
}

}  // namespace langlands
