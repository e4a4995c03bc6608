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

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "gravcoh/config.hpp"

namespace gravcoh {

enum class ExitCode : int {
  Success = 0,
  VerificationFailure = 1,
  ConfigError = 2,
  NumericalError = 3,
  IoError = 4,
};

class IoFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<double, std::int64_t, bool, std::string>;

/// An artifact before serialization: one header, rows of typed cells.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;
  bool verification_passed = true;
};

/// Column lists per mode.
const std::vector<std::string>& sweep_columns();
const std::vector<std::string>& phase_columns();
const std::vector<std::string>& evolve_columns();
const std::vector<std::string>& verify_columns();

/// Number of seeded random phase pairs checked by verify mode in addition
/// to the configured point.
inline constexpr std::size_t kVerifyRandomSamples = 100;

/// Computes the artifact for `config` without touching the filesystem.
Table compute_table(const RunConfig& config, unsigned threads = 1);

/// CSV with a header line, or JSON lines with the same field names.
std::string render(const Table& table, OutputFormat format);

/// Writes `contents` to a sibling temp file and renames it over `path`.
void write_atomically(const std::string& path, const std::string& contents);

struct RunResult {
  ExitCode code = ExitCode::Success;
  std::string message;
  std::size_t rows = 0;
};

/// compute_table + render + write_atomically, mapping failures to exit codes.
RunResult run(const RunConfig& config, unsigned threads = 1);

}  // namespace gravcoh
