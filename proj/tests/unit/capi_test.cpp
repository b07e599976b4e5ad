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

// Exercises the shared library through its C header only.

#include <gtest/gtest.h>

#include <string>

#include "langlands/langlands.h"

namespace {

std::string take(char* s) {
  std::string out(s);
  lr_string_free(s);
  return out;
}

TEST(CApi, RetractA2) {
  lr_system* s = nullptr;
  ASSERT_EQ(lr_system_from_name("A2", &s), LR_OK);
  size_t rank = 0;
  ASSERT_EQ(lr_system_rank(s, &rank), LR_OK);
  EXPECT_EQ(rank, 2u);
  char* out = nullptr;
  ASSERT_EQ(lr_retract(s, "1,-1", &out), LR_OK);
  EXPECT_EQ(take(out),
            R"({"active_set":[2],"certificate_ok":true,)"
            R"("residual_coeffs":{"2":"-3/2"},"value":["1","1/2"]})");
  ASSERT_EQ(lr_retract_oracle(s, "0,0", &out), LR_OK);
  EXPECT_NE(take(out).find(R"("value":["0","0"])"), std::string::npos);
  lr_system_free(s);
}

TEST(CApi, ErrorsCarryMessages) {
  lr_system* s = nullptr;
  EXPECT_EQ(lr_system_from_name("Z9", &s), LR_ERR_DOMAIN);
  EXPECT_NE(std::string(lr_last_error()), "");
  EXPECT_EQ(s, nullptr);
  ASSERT_EQ(lr_system_from_name("A2", &s), LR_OK);
  char* out = nullptr;
  EXPECT_EQ(lr_retract(s, "1,2,3", &out), LR_ERR_DIMENSION);
  EXPECT_EQ(lr_retract(s, "1,0.5", &out), LR_ERR_DOMAIN);
  EXPECT_EQ(lr_retract(s, nullptr, &out), LR_ERR_NULL);
  EXPECT_EQ(out, nullptr);
  lr_system_free(s);
  ASSERT_EQ(lr_system_from_name("A5", &s), LR_OK);
  EXPECT_EQ(lr_fan_svg(s, &out), LR_ERR_DOMAIN);
  lr_system_free(s);
}

TEST(CApi, GramAndFan) {
  lr_system* s = nullptr;
  ASSERT_EQ(
      lr_system_from_gram_json(R"({"gram": [["1","1/2"],["1/2","1"]]})", &s),
      LR_OK);
  int obtuse = 1;
  ASSERT_EQ(lr_system_is_obtuse(s, &obtuse), LR_OK);
  EXPECT_EQ(obtuse, 0);
  char* out = nullptr;
  int ok = 0;
  ASSERT_EQ(lr_fan_check(s, 42, 200, &out, &ok), LR_OK);
  EXPECT_EQ(ok, 1);
  lr_string_free(out);
  ASSERT_EQ(lr_fan_svg(s, &out), LR_OK);
  EXPECT_EQ(take(out).rfind("<svg", 0), 0u);
  ASSERT_EQ(lr_system_info(s, &out), LR_OK);
  EXPECT_NE(take(out).find(R"("obtuse":false)"), std::string::npos);
  lr_system_free(s);
}

TEST(CApi, Envelope) {
  char* out = nullptr;
  ASSERT_EQ(lr_envelope("0,2,1,3", "gl", &out), LR_OK);
  EXPECT_NE(take(out).find(R"("envelope":["0","2","5/2","3"])"),
            std::string::npos);
  EXPECT_EQ(lr_envelope("0,2,1,3", "sl", &out), LR_ERR_DOMAIN);
  EXPECT_EQ(lr_envelope("0,1", "xx", &out), LR_ERR_DOMAIN);
}

TEST(CApi, Coweights) {
  lr_datum* d = nullptr;
  ASSERT_EQ(lr_datum_from_group("gl4", &d), LR_OK);
  char* out = nullptr;
  ASSERT_EQ(lr_coweight_retract(d, "0,2,1,3", &out), LR_OK);
  EXPECT_EQ(take(out), R"({"certificate_ok":true,"d":["3/2","1","3/2"],)"
                       R"("value":["3/2","3/2","3/2","3/2"]})");
  EXPECT_EQ(lr_coweight_retract(d, "0,1", &out), LR_ERR_DIMENSION);
  lr_datum_free(d);
  ASSERT_EQ(lr_datum_from_json(
                R"({"rank": 2, "coroots": [[1,-1]], "roots": [[1,-1]]})", &d),
            LR_OK);
  ASSERT_EQ(lr_coweight_retract(d, "0,1", &out), LR_OK);
  EXPECT_NE(take(out).find(R"("value":["1/2","1/2"])"), std::string::npos);
  lr_datum_free(d);
}

TEST(CApi, Verify) {
  char* out = nullptr;
  int ok = 0;
  ASSERT_EQ(lr_verify(R"({"systems": ["A2", "gl3"], "trials": 5})", &out, &ok),
            LR_OK);
  EXPECT_EQ(ok, 1);
  const std::string a = take(out);
  ASSERT_EQ(
      lr_verify(R"({"systems": ["A2", "gl3"], "trials": 5, "threads": 3})",
                &out, &ok),
      LR_OK);
  EXPECT_EQ(take(out), a);
  EXPECT_EQ(lr_verify(R"({"systems": ["A2"], "trials": 0})", &out, &ok),
            LR_ERR_DOMAIN);
  EXPECT_EQ(lr_verify(R"({"systems": ["A2"], "checks": "bogus"})", &out, &ok),
            LR_ERR_DOMAIN);
  EXPECT_EQ(lr_verify("{", &out, &ok), LR_ERR_DOMAIN);
}

TEST(CApi, Version) { EXPECT_STREQ(lr_version(), "1.0.0"); }

}  // namespace
