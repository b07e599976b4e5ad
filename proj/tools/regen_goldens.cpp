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

// Rewrites the golden files from the oracles:
//   a2_retract.json     retract_oracle (exhaustive active-set search)
//   gl4_coweights.json  envelope of partial sums
//   envelope.json       upper hull and pool-adjacent-violators
// Each set is cross-checked against a second computation before anything is
// written; a disagreement aborts with status 1 and leaves files untouched.
//
// Usage: regen_goldens OUTDIR [--sets a2,gl4,envelope]

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "langlands/envelope.hpp"
#include "langlands/json_io.hpp"

namespace langlands {
namespace {

using nlohmann::json;

struct GoldenFile {
  std::string name;
  json cases = json::array();
  std::string provenance;
};

const std::vector<std::string> kA2Inputs = {
    "0,0",  "1,-1",   "-1,-1", "2/3,1/3",  "1,1",     "-1,2",
    "3,-5", "-7/2,1", "0,-4",  "5/6,-1/3", "-2,-2/3", "1/2,-3"};

const std::vector<std::string> kGl4Inputs = {
    "0,2,1,3",   "0,0,0,0",       "3,2,1,0",  "0,1,2,3",
    "1,-1,1,-1", "5/2,-1,4,-3/2", "-2,7,0,1", "1/3,1/3,2,-6"};

const std::vector<std::pair<std::string, std::string>> kEnvelopeInputs = {
    {"0,2,1,3", "gl"}, {"0,1,-1,0", "sl"},     {"0,0,0,0", "sl"},
    {"0,3,5,6", "gl"}, {"0,-1,2,-3,4", "gl"},  {"0,1/2,-2,3/4,0", "sl"},
    {"0,-5", "gl"},    {"0,4,-1,-1,2,0", "sl"}};

[[noreturn]] void disagree(const std::string& what) {
  std::cerr << "regen_goldens: oracle disagreement: " << what << "\n";
  std::exit(1);
}

GoldenFile a2_set() {
  GoldenFile f{"a2_retract.json", json::array(),
               "Inputs: 12 fixed vectors in alpha-coordinates for A2.\n"
               "Expected: retract_oracle (exhaustive search over the 4 "
               "active sets).\nCross-check: retract (active-set growth) and "
               "the SL(3) concave envelope give the same value.\n"};
  const ObtuseBasis a2 = make_system("A2");
  for (const auto& in : kA2Inputs) {
    const AlphaVec x(RatVector(parse_rational_list(in)));
    const RetractionResult o = retract_oracle(a2, x);
    if (!(retract(a2, x).value == o.value)) disagree("A2 retract " + in);
    if (!(vec_to_function(o.value) ==
          concave_envelope_hull(vec_to_function(x))))
      disagree("A2 envelope " + in);
    f.cases.push_back({{"system", "A2"},
                       {"vector", vector_to_json(x.coords)},
                       {"expected", retraction_to_json(a2, x, o)}});
  }
  return f;
}

GoldenFile gl4_set() {
  GoldenFile f{"gl4_coweights.json", json::array(),
               "Inputs: 8 fixed coweights of GL(4).\n"
               "Expected: value = successive differences of the least concave "
               "majorant of the partial sums; d = coroot coefficients of "
               "value - lambda.\nCross-check: retract_G on the root datum "
               "(coroot basis retraction) gives the same value and d.\n"};
  const RootDatum d = make_gl(4);
  for (const auto& in : kGl4Inputs) {
    const std::vector<Rational> lambda = parse_rational_list(in);
    const RatVector mu(function_to_coweight(
        concave_envelope_hull(coweight_to_function(lambda))));
    const LeqG l = leq_G(d, RatVector(lambda), mu);
    if (!l.holds) disagree("GL(4) order " + in);
    const CoweightRetraction r{mu, *l.coefficients};
    const CoweightRetraction g = retract_G(d, RatVector(lambda));
    if (!(g.value == r.value) || !(g.d == r.d)) disagree("GL(4) " + in);
    f.cases.push_back(
        {{"group", "gl4"},
         {"coweight", vector_to_json(RatVector(lambda))},
         {"expected", coweight_retraction_to_json(d, RatVector(lambda), r)}});
  }
  return f;
}

GoldenFile envelope_set() {
  GoldenFile f{"envelope.json", json::array(),
               "Inputs: 8 fixed step functions f(0..n) with variant.\n"
               "Expected: pool-adjacent-violators envelope and pools.\n"
               "Cross-check: monotone-chain upper hull gives the same "
               "envelope.\n"};
  for (const auto& [in, variant] : kEnvelopeInputs) {
    const StepFunction fn(parse_rational_list(in),
                          variant == "sl" ? Variant::kSL : Variant::kGL);
    const PavResult p = concave_envelope_pav_pools(fn);
    if (!(concave_envelope_hull(fn) == p.envelope)) disagree("envelope " + in);
    f.cases.push_back({{"values", vector_to_json(RatVector(fn.values()))},
                       {"variant", variant},
                       {"expected", envelope_to_json(p)}});
  }
  return f;
}

void write(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "regen_goldens: cannot write " << path << "\n";
    std::exit(1);
  }
  out << text;
}

}  // namespace
}  // namespace langlands

int main(int argc, char** argv) {
  using namespace langlands;
  if (argc != 2 && !(argc == 4 && std::string(argv[2]) == "--sets")) {
    std::cerr << "usage: regen_goldens OUTDIR [--sets a2,gl4,envelope]\n";
    return 1;
  }
  const std::string dir = argv[1];
  std::vector<std::string> sets = {"a2", "gl4", "envelope"};
  if (argc == 4) {
    sets.clear();
    std::stringstream ss(argv[3]);
    for (std::string s; std::getline(ss, s, ',');)
      if (!s.empty()) sets.push_back(s);
  }
  std::vector<GoldenFile> files;
  try {
    for (const auto& s : sets) {
      if (s == "a2") {
        files.push_back(a2_set());
      } else if (s == "gl4") {
        files.push_back(gl4_set());
      } else if (s == "envelope") {
        files.push_back(envelope_set());
      } else {
        std::cerr << "regen_goldens: unknown set '" << s << "'\n";
        return 1;
      }
    }
  } catch (const std::exception& e) {
    std::cerr << "regen_goldens: " << e.what() << "\n";
    return 1;
  }
  for (const GoldenFile& f : files) {
    if (f.cases.empty()) continue;
    write(dir + "/" + f.name, f.cases.dump(2) + "\n");
    write(dir + "/" + f.name.substr(0, f.name.size() - 5) + ".provenance.txt",
          f.provenance);
  }
  return 0;
}
