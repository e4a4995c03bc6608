// Copyright 2026 The gravcoh Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Command-line driver: builds a RunConfig from an optional config file plus
// flag overrides, runs it, and exits with the documented status code.

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "gravcoh/config.hpp"
#include "gravcoh/run.hpp"

namespace {

int exit_with(gravcoh::ExitCode code, const std::string& message) {
  (code == gravcoh::ExitCode::Success ? std::cout : std::cerr) << message << '\n';
  return static_cast<int>(code);
}

}  // namespace

int main(int argc, char** argv) {
  using gravcoh::ExitCode;

  CLI::App app{"Gravitationally induced entanglement: coherence and entanglement measures"};
  app.set_help_flag("--help", "Print this help message and exit");

  std::string config_path;
  unsigned threads = 1;
  app.add_option("--config", config_path, "Flat key = value config file");
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = all cores)");

  std::map<std::string, std::string> flags;
  for (const auto& key : gravcoh::config_keys()) {
    app.add_option("--" + key, flags[key], "Overrides config key '" + key + "'");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : static_cast<int>(ExitCode::ConfigError);
  }

  try {
    gravcoh::KeyValues entries;
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      if (!in) return exit_with(ExitCode::IoError, "cannot read config file " + config_path);
      std::ostringstream text;
      text << in.rdbuf();
      entries = gravcoh::parse_key_values(text.str());
    }
    for (const auto& [key, value] : flags) {
      if (app.get_option("--" + key)->count() > 0) entries[key] = gravcoh::ConfigEntry{value, 0};
    }
    const gravcoh::RunConfig config = gravcoh::build_config(entries);
    const gravcoh::RunResult result = gravcoh::run(config, threads);
    return exit_with(result.code, result.message);
  } catch (const gravcoh::ConfigParseError& e) {
    return exit_with(ExitCode::ConfigError, std::string("config error: ") + e.what());
  } catch (const gravcoh::ConfigValidationError& e) {
    return exit_with(ExitCode::ConfigError, std::string("invalid config: ") + e.what());
  }
}
