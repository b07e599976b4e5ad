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

#ifndef LANGLANDS_TESTS_TEST_UTIL_HPP_
#define LANGLANDS_TESTS_TEST_UTIL_HPP_

#include <string>
#include <vector>

#include "langlands/root_data.hpp"

namespace langlands::testing {

inline Rational q(const std::string& s) { return parse_rational(s); }

inline RatVector rv(const std::string& csv) {
  return RatVector(parse_rational_list(csv));
}

inline AlphaVec av(const std::string& csv) { return AlphaVec(rv(csv)); }

inline RatMatrix mat(const std::vector<std::string>& rows) {
  std::vector<std::vector<Rational>> m;
  for (const auto& r : rows) m.push_back(parse_rational_list(r));
  return RatMatrix::from_rows(m);
}

}  // namespace langlands::testing

#endif  // LANGLANDS_TESTS_TEST_UTIL_HPP_
