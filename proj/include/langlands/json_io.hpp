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

#ifndef LANGLANDS_JSON_IO_HPP_
#define LANGLANDS_JSON_IO_HPP_

// JSON readers for Gram and root-datum files, and the JSON documents emitted
// by the command line tool. Rationals always travel as strings "p/q"; input
// files may also use JSON integers, never floats.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

#include "json.hpp"
#include "langlands/coweights.hpp"
#include "langlands/envelope.hpp"
#include "langlands/fan.hpp"

namespace langlands {

// A JSON string "p/q" or an integer. Throws DomainError otherwise.
Rational rational_from_json(const nlohmann::json& j);
nlohmann::json rational_to_json(const Rational& r);
nlohmann::json vector_to_json(const RatVector& v);
RatVector vector_from_json(const nlohmann::json& j);

// {"gram": [[...], ...]}. Throws DomainError on malformed text or a matrix
// that is not symmetric positive definite.
ObtuseBasis parse_gram_json(std::string_view text, std::string name = "custom");

// {"rank": r, "coroots": [[...]], "roots": [[...]]}.
RootDatum parse_datum_json(std::string_view text, std::string name = "custom");

// {"value", "active_set" (1-based), "residual_coeffs" {"i": c},
//  "certificate_ok"}.
nlohmann::json retraction_to_json(const ObtuseBasis& b, const AlphaVec& x,
                                  const RetractionResult& r);

struct FanCheck {
  bool simplicial = true;
  std::size_t cones = 0;
  std::size_t samples = 0;
  std::size_t uncovered = 0;
  std::size_t inconsistent = 0;
  bool face_sweep = false;  // run only for rank <= 4
  std::vector<FaceFailure> face_failures;
  bool ok() const {
    return simplicial && uncovered == 0 && inconsistent == 0 &&
           face_failures.empty();
  }
};

FanCheck run_fan_check(const ObtuseBasis& b, std::uint64_t seed,
                       std::size_t samples);

// {"simplicial", "cones", "samples", "uncovered", "inconsistent",
//  "face_sweep", "face_failures"}.
nlohmann::json fan_check_to_json(const FanCheck& c);

// {"system", "rank", "cones": [{"J", "generators"}]}.
nlohmann::json fan_to_json(const ObtuseBasis& b,
                           const std::vector<FanCone>& fan);

// {"envelope", "pools": [{"from", "to", "slope"}]}.
nlohmann::json envelope_to_json(const PavResult& r);

// {"value", "d", "certificate_ok"}.
nlohmann::json coweight_retraction_to_json(const RootDatum& d,
                                           const Coweight& lambda,
                                           const CoweightRetraction& r);

// Compact (one line) or pretty (two-space indent), newline terminated.
std::string dump_json(const nlohmann::json& j, bool pretty);

}  // namespace langlands

#endif  // LANGLANDS_JSON_IO_HPP_
