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

// Command line front end. Talks to the library only through the C API.
//
// Exit codes: 0 success, 1 bad input or usage, 2 a check or certificate
// failed.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "langlands/langlands.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitCheckFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Carries an lr_status failure up to main.
struct LibraryError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(lr_status s) {
  if (s != LR_OK)
    throw LibraryError(std::string(lr_status_name(s)) + ": " + lr_last_error());
}

// Owns a string returned by the library.
std::string take(char* s) {
  std::string out(s);
  lr_string_free(s);
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << content;
}

struct SystemHandle {
  lr_system* p = nullptr;
  ~SystemHandle() { lr_system_free(p); }
};

struct DatumHandle {
  lr_datum* p = nullptr;
  ~DatumHandle() { lr_datum_free(p); }
};

void load_system(const std::string& name, const std::string& gram_file,
                 SystemHandle& h) {
  if (!name.empty() && !gram_file.empty())
    throw UsageError("give either --system or --gram-file, not both");
  if (name.empty() && gram_file.empty())
    throw UsageError("one of --system or --gram-file is required");
  if (!name.empty()) {
    check(lr_system_from_name(name.c_str(), &h.p));
  } else {
    check(lr_system_from_gram_json(read_file(gram_file).c_str(), &h.p));
  }
}

struct Options {
  std::string format = "json";

  std::string system;
  std::string gram_file;
  std::string vector;
  bool oracle = false;

  std::string svg;
  bool fan_check = false;
  std::size_t samples = 1000;
  std::uint64_t seed = 42;

  std::string values;
  std::string variant = "gl";

  std::string group;
  std::string datum_file;
  std::string coweight;

  std::string systems;
  std::vector<std::string> gram_files;
  std::vector<std::string> datum_files;
  std::size_t trials = 100;
  std::string checks = "all";
  std::size_t threads = 1;
  bool allow_nonobtuse = false;
  bool timing = false;
};

void emit(const Options& o, const std::string& compact) {
  const json j = json::parse(compact);
  std::cout << j.dump(o.format == "pretty" ? 2 : -1) << "\n";
}

int run_retract(const Options& o) {
  SystemHandle s;
  load_system(o.system, o.gram_file, s);
  char* out = nullptr;
  check(o.oracle ? lr_retract_oracle(s.p, o.vector.c_str(), &out)
                 : lr_retract(s.p, o.vector.c_str(), &out));
  const std::string doc = take(out);
  emit(o, doc);
  return json::parse(doc).at("certificate_ok").get<bool>() ? kExitOk
                                                           : kExitCheckFailed;
}

int run_fan(const Options& o) {
  SystemHandle s;
  load_system(o.system, o.gram_file, s);
  char* out = nullptr;
  if (!o.svg.empty()) {
    check(lr_fan_svg(s.p, &out));
    write_file(o.svg, take(out));
  }
  if (o.fan_check) {
    int ok = 0;
    check(lr_fan_check(s.p, o.seed, o.samples, &out, &ok));
    emit(o, take(out));
    return ok ? kExitOk : kExitCheckFailed;
  }
  check(lr_fan(s.p, &out));
  emit(o, take(out));
  return kExitOk;
}

int run_envelope(const Options& o) {
  char* out = nullptr;
  check(lr_envelope(o.values.c_str(), o.variant.c_str(), &out));
  emit(o, take(out));
  return kExitOk;
}

int run_coweight(const Options& o) {
  if (!o.group.empty() && !o.datum_file.empty())
    throw UsageError("give either --group or --datum-file, not both");
  if (o.group.empty() && o.datum_file.empty())
    throw UsageError("one of --group or --datum-file is required");
  DatumHandle d;
  if (!o.group.empty()) {
    check(lr_datum_from_group(o.group.c_str(), &d.p));
  } else {
    check(lr_datum_from_json(read_file(o.datum_file).c_str(), &d.p));
  }
  char* out = nullptr;
  check(lr_coweight_retract(d.p, o.coweight.c_str(), &out));
  const std::string doc = take(out);
  emit(o, doc);
  return json::parse(doc).at("certificate_ok").get<bool>() ? kExitOk
                                                           : kExitCheckFailed;
}

int run_verify(const Options& o) {
  json req = {{"trials", o.trials},
              {"seed", o.seed},
              {"checks", o.checks},
              {"threads", o.threads},
              {"allow_nonobtuse", o.allow_nonobtuse},
              {"timing", o.timing}};
  json systems = json::array();
  std::stringstream ss(o.systems);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) systems.push_back(item);
  req["systems"] = systems;
  json grams = json::array();
  for (const auto& path : o.gram_files) {
    json g = json::parse(read_file(path), nullptr, false);
    if (g.is_discarded() || !g.is_object())
      throw UsageError("'" + path + "' is not a JSON object");
    g["label"] = path;
    grams.push_back(std::move(g));
  }
  req["grams"] = grams;
  json data = json::array();
  for (const auto& path : o.datum_files) {
    json d = json::parse(read_file(path), nullptr, false);
    if (d.is_discarded() || !d.is_object())
      throw UsageError("'" + path + "' is not a JSON object");
    d["label"] = path;
    data.push_back(std::move(d));
  }
  req["data"] = data;
  if (systems.empty() && grams.empty() && data.empty())
    throw UsageError("verify needs --systems, --gram-file or --datum-file");
  char* out = nullptr;
  int ok = 0;
  check(lr_verify(req.dump().c_str(), &out, &ok));
  emit(o, take(out));
  return ok ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact retraction onto the dominant cone of a root system"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--format", o.format, "Output style")
      ->check(CLI::IsMember({"json", "pretty"}))
      ->capture_default_str();
  app.fallthrough();

  auto* retract = app.add_subcommand(
      "retract", "Retract a vector (alpha-coordinates) onto the dominant cone");
  retract->add_option("--system", o.system, "Catalog system, e.g. A3, G2");
  retract->add_option("--gram-file", o.gram_file,
                      "JSON file {\"gram\": [[...]]}");
  retract->add_option("--vector", o.vector, "Comma separated rationals")
      ->required();
  retract->add_flag("--oracle", o.oracle,
                    "Use exhaustive active-set search instead");

  auto* fan = app.add_subcommand(
      "fan", "Linearity-domain fan: cones, checks, and a rank 2 picture");
  fan->add_option("--system", o.system, "Catalog system");
  fan->add_option("--gram-file", o.gram_file, "Gram matrix JSON file");
  fan->add_option("--svg", o.svg, "Write an SVG picture (rank 2 only)");
  fan->add_flag("--check", o.fan_check,
                "Check simpliciality, coverage and face intersections");
  fan->add_option("--samples", o.samples, "Coverage samples for --check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  fan->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();

  auto* envelope = app.add_subcommand(
      "envelope", "Least concave majorant of f(0), ..., f(n)");
  envelope->add_option("--values", o.values, "f(0),...,f(n) as rationals")
      ->required();
  envelope->add_option("--variant", o.variant, "gl: f(n) free; sl: f(n) = 0")
      ->check(CLI::IsMember({"gl", "sl"}))
      ->capture_default_str();

  auto* coweight = app.add_subcommand(
      "coweight-retract", "Least dominant coweight above a coweight");
  coweight->add_option("--group", o.group, "gl4, GL(4), or a catalog name");
  coweight->add_option("--datum-file", o.datum_file,
                       "JSON file {\"rank\", \"coroots\", \"roots\"}");
  coweight->add_option("--coweight", o.coweight, "Comma separated rationals")
      ->required();

  auto* verify =
      app.add_subcommand("verify", "Seeded property checks with a JSON report");
  verify->add_option("--systems", o.systems, "Comma separated, e.g. A2,B2,gl4");
  verify->add_option("--gram-file", o.gram_files, "Custom Gram matrix file")
      ->take_all();
  verify->add_option("--datum-file", o.datum_files, "Custom root datum file")
      ->take_all();
  verify->add_option("--trials", o.trials, "Trials per check")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_option("--seed", o.seed, "64-bit seed")->capture_default_str();
  verify->add_option("--checks", o.checks, "Comma separated names or 'all'")
      ->capture_default_str();
  verify->add_option("--threads", o.threads, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  verify->add_flag("--allow-nonobtuse", o.allow_nonobtuse,
                   "Hypothesis-violated checks do not fail the exit code");
  verify->add_flag("--timing", o.timing, "Include elapsed_ms in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  try {
    if (*retract) return run_retract(o);
    if (*fan) return run_fan(o);
    if (*envelope) return run_envelope(o);
    if (*coweight) return run_coweight(o);
    if (*verify) return run_verify(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  } catch (const LibraryError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitInput;
}
