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

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gravcoh/complementarity.hpp"
#include "gravcoh/grav_model.hpp"
#include "gravcoh/quantum_state.hpp"

namespace gravcoh {

enum class Mode { Phases, Evolve, Measures, Verify, SweepPhases, SweepInitial };
enum class OutputFormat { Csv, Jsonl };

std::string_view to_string(Mode mode);
std::string_view to_string(OutputFormat format);

/// Malformed config text. `line()` is 1-based, 0 when not tied to a line.
class ConfigParseError : public std::runtime_error {
 public:
  ConfigParseError(std::size_t line, const std::string& what);
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// Well-formed config that violates a constraint; `key()` names the culprit.
class ConfigValidationError : public std::runtime_error {
 public:
  ConfigValidationError(std::string key, const std::string& what);
  const std::string& key() const noexcept { return key_; }

 private:
  std::string key_;
};

struct RunConfig {
  Mode mode = Mode::Verify;
  std::optional<PhysicalConfig> physical;
  std::optional<PhaseSet> explicit_phases;
  ProductStateParams params;
  GridSpec grid_lr;
  GridSpec grid_rl;
  GridSpec grid_pa;
  GridSpec grid_pb;
  std::uint64_t seed = 0;
  std::string output;
  OutputFormat format = OutputFormat::Csv;
  std::optional<std::string> preset;

  /// Phases from whichever source was supplied.
  PhaseSet phases() const;
};

/// Every key accepted in a config file or as a `--key` flag.
const std::vector<std::string>& config_keys();

/// Names accepted by the `preset` key.
const std::vector<std::string>& preset_names();

struct ConfigEntry {
  std::string value;
  std::size_t line = 0;  // 0 for values that did not come from a file
};
using KeyValues = std::map<std::string, ConfigEntry>;

/// Splits flat `key = value` text into entries. `#` starts a comment.
/// Throws ConfigParseError on a malformed line or a repeated key.
KeyValues parse_key_values(std::string_view text);

/// Applies the preset named by the `preset` key (if any) underneath the given
/// entries, then validates. Throws ConfigValidationError.
RunConfig build_config(const KeyValues& entries);

/// parse_key_values followed by build_config.
RunConfig parse_config(std::string_view text);

}  // namespace gravcoh
