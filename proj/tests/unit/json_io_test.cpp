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

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace langlands {
namespace {

using nlohmann::json;
using testing::av;
using testing::mat;
using testing::rv;

TEST(GramJson, AcceptsStringsAndIntegers) {
  const ObtuseBasis b = parse_gram_json(R"({"gram": [["2", -1], [-1, "2"]]})");
  EXPECT_EQ(b.gram(), mat({"2,-1", "-1,2"}));
  EXPECT_EQ(parse_gram_json(R"({"gram": [["1","1/2"],["1/2","1"]]})").gram(),
            mat({"1,1/2", "1/2,1"}));
}

TEST(GramJson, RejectsBadInput) {
  for (const char* bad :
       {R"({"gram": [[2.0, -1], [-1, 2]]})", R"({"gram": [[2, -1]]})",
        R"({"gram": []})", R"({"matrix": [[1]]})",
        R"({"gram": [[1, 2], [2, 1]]})", R"({"gram": [["1/0"]]})", "not json",
        R"([[1]])"})
    EXPECT_THROW(parse_gram_json(bad), DomainError) << bad;
}

TEST(DatumJson, Gl2) {
  const RootDatum d = parse_datum_json(
      R"({"rank": 2, "coroots": [["1","-1"]], "roots": [[1, -1]]})");
  EXPECT_EQ(d.lattice_rank(), 2u);
  EXPECT_EQ(d.pairing_matrix(), mat({"2"}));
  EXPECT_THROW(parse_datum_json(R"({"rank": 0, "coroots": [], "roots": []})"),
               DomainError);
  EXPECT_THROW(parse_datum_json(R"({"rank": 2, "coroots": [[1, -1]]})"),
               DomainError);
}

TEST(RetractionJson, A2Example) {
  const ObtuseBasis a2 = make_system("A2");
  const AlphaVec x = av("1,-1");
  const json j = retraction_to_json(a2, x, retract(a2, x));
  EXPECT_EQ(j.dump(), R"({"active_set":[2],"certificate_ok":true,)"
                      R"("residual_coeffs":{"2":"-3/2"},"value":["1","1/2"]})");
}

TEST(RetractionJson, VectorsRoundTrip) {
  const RatVector v = rv("-22/7,0,5,1/3");
  EXPECT_EQ(vector_from_json(vector_to_json(v)), v);
  EXPECT_THROW(vector_from_json(json::parse("[0.5]")), DomainError);
}

TEST(EnvelopeJson, Example) {
  const json j = envelope_to_json(concave_envelope_pav_pools(
      StepFunction(parse_rational_list("0,2,1,3"), Variant::kGL)));
  EXPECT_EQ(j["envelope"], json::parse(R"(["0","2","5/2","3"])"));
  EXPECT_EQ(j["pools"][1]["slope"], "1/2");
}

TEST(FanCheckJson, B2) {
  const FanCheck c = run_fan_check(make_system("B2"), 42, 500);
  EXPECT_TRUE(c.ok());
  const json j = fan_check_to_json(c);
  EXPECT_EQ(j["simplicial"], true);
  EXPECT_EQ(j["uncovered"], 0);
  EXPECT_TRUE(j["face_failures"].empty());
}

TEST(CoweightJson, Gl4) {
  const RootDatum d = make_gl(4);
  const RatVector lambda = rv("0,2,1,3");
  const json j = coweight_retraction_to_json(d, lambda, retract_G(d, lambda));
  EXPECT_EQ(j.dump(), R"({"certificate_ok":true,"d":["3/2","1","3/2"],)"
                      R"("value":["3/2","3/2","3/2","3/2"]})");
}

}  // namespace
}  // namespace langlands
