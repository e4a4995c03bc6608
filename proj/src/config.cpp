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

#include "gravcoh/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numbers>

#include "gravcoh/error.hpp"
#include "gravcoh/format.hpp"

namespace gravcoh {

namespace {

constexpr std::string_view kWhitespace = " \t\r";

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(kWhitespace);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(kWhitespace);
  return s.substr(first, last - first + 1);
}

std::string describe(const std::string& key, const ConfigEntry& entry) {
  return entry.line == 0 ? key : key + " (line " + std::to_string(entry.line) + ")";
}

double to_double(const std::string& key, const ConfigEntry& entry) {
  const std::string& text = entry.value;
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size() || !std::isfinite(value)) {
    throw ConfigValidationError(key, describe(key, entry) + ": '" + text + "' is not a finite number");
  }
  return value;
}

std::uint64_t to_unsigned(const std::string& key, const ConfigEntry& entry) {
  const std::string& text = entry.value;
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc{} || ptr != text.data() + text.size()) {
    throw ConfigValidationError(key, describe(key, entry) + ": '" + text +
                                         "' is not a non-negative integer");
  }
  return value;
}

Mode to_mode(const ConfigEntry& entry) {
  static const std::map<std::string, Mode, std::less<>> modes{
      {"phases", Mode::Phases},          {"evolve", Mode::Evolve},
      {"measures", Mode::Measures},      {"verify", Mode::Verify},
      {"sweep-phases", Mode::SweepPhases}, {"sweep-initial", Mode::SweepInitial}};
  const auto it = modes.find(entry.value);
  if (it == modes.end()) {
    throw ConfigValidationError("mode", describe("mode", entry) + ": unknown mode '" + entry.value + "'");
  }
  return it->second;
}

const std::vector<std::string> kPhysicalKeys{"mA", "mB", "d", "deltaX", "tau", "G", "h"};
const std::vector<std::string> kPhaseKeys{"dphiLR", "dphiRL"};

std::string two_pi() { return format_double(2.0 * std::numbers::pi); }

KeyValues preset_entries(const std::string& name) {
  auto phase_square = [](std::size_t count) {
    return KeyValues{{"mode", {"sweep-phases"}},       {"gridStartLR", {"0"}},
                     {"gridStopLR", {two_pi()}},       {"gridCountLR", {std::to_string(count)}},
                     {"gridStartRL", {"0"}},           {"gridStopRL", {two_pi()}},
                     {"gridCountRL", {std::to_string(count)}}};
  };
  if (name == "fig2" || name == "fig3") return phase_square(100);
  if (name == "fig4" || name == "fig5") {
    // Line through the square: the total phase dphiLR + dphiRL runs over [0, 2 pi].
    KeyValues kv = phase_square(1001);
    kv["gridStopRL"] = {"0"};
    kv["gridCountRL"] = {"1"};
    return kv;
  }
  if (name == "fig6") {
    KeyValues kv = phase_square(100);
    kv["pA"] = {"0"};
    kv["pB"] = {"0.5"};
    return kv;
  }
  if (name == "fig7") {
    return KeyValues{{"mode", {"sweep-initial"}}, {"gridStartPA", {"0"}}, {"gridStopPA", {"1"}},
                     {"gridCountPA", {"51"}},     {"gridStartPB", {"0"}}, {"gridStopPB", {"1"}},
                     {"gridCountPB", {"51"}},     {"dphiLR", {format_double(std::numbers::pi / 2)}},
                     {"dphiRL", {format_double(std::numbers::pi / 2)}}};
  }
  throw ConfigValidationError("preset", "unknown preset '" + name + "'");
}

}  // namespace

std::string_view to_string(Mode mode) {
  switch (mode) {
    case Mode::Phases: return "phases";
    case Mode::Evolve: return "evolve";
    case Mode::Measures: return "measures";
    case Mode::Verify: return "verify";
    case Mode::SweepPhases: return "sweep-phases";
    case Mode::SweepInitial: return "sweep-initial";
  }
  return "unknown";
}

std::string_view to_string(OutputFormat format) {
  return format == OutputFormat::Csv ? "csv" : "jsonl";
}

ConfigParseError::ConfigParseError(std::size_t line, const std::string& what)
    : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
      line_(line) {}

ConfigValidationError::ConfigValidationError(std::string key, const std::string& what)
    : std::runtime_error(what), key_(std::move(key)) {}

PhaseSet RunConfig::phases() const {
  if (explicit_phases) return *explicit_phases;
  if (physical) return compute_phases(*physical);
  return PhaseSet{};
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys{
      "mode",        "mA",          "mB",          "d",           "deltaX",      "tau",
      "G",           "h",           "dphiLR",      "dphiRL",      "pA",          "pB",
      "gridStartLR", "gridStopLR",  "gridCountLR", "gridStartRL", "gridStopRL",  "gridCountRL",
      "gridStartPA", "gridStopPA",  "gridCountPA", "gridStartPB", "gridStopPB",  "gridCountPB",
      "seed",        "output",      "format",      "preset"};
  return keys;
}

const std::vector<std::string>& preset_names() {
  static const std::vector<std::string> names{"fig2", "fig3", "fig4", "fig5", "fig6", "fig7"};
  return names;
}

KeyValues parse_key_values(std::string_view text) {
  KeyValues out;
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);

    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw ConfigParseError(line_no, "expected 'key = value'");
    const std::string key(trim(line.substr(0, eq)));
    const std::string value(trim(line.substr(eq + 1)));
    if (key.empty()) throw ConfigParseError(line_no, "missing key before '='");
    if (value.empty()) throw ConfigParseError(line_no, "missing value for '" + key + "'");
    if (key.find_first_of(kWhitespace) != std::string::npos) {
      throw ConfigParseError(line_no, "key '" + key + "' contains whitespace");
    }
    if (out.contains(key)) {
      throw ConfigParseError(line_no, "duplicate key '" + key + "' (first on line " +
                                          std::to_string(out.at(key).line) + ")");
    }
    out.emplace(key, ConfigEntry{value, line_no});
  }
  return out;
}

RunConfig build_config(const KeyValues& given) {
  const auto& known = config_keys();
  for (const auto& [key, entry] : given) {
    if (std::find(known.begin(), known.end(), key) == known.end()) {
      throw ConfigValidationError(key, describe(key, entry) + ": unknown key");
    }
  }

  KeyValues kv;
  RunConfig cfg;
  if (const auto it = given.find("preset"); it != given.end()) {
    kv = preset_entries(it->second.value);
    cfg.preset = it->second.value;
  }
  for (const auto& [key, entry] : given) kv[key] = entry;

  auto has = [&](const std::string& key) { return kv.contains(key); };
  auto number = [&](const std::string& key) { return to_double(key, kv.at(key)); };

  if (!has("mode")) throw ConfigValidationError("mode", "mode: required");
  cfg.mode = to_mode(kv.at("mode"));

  if (has("format")) {
    const std::string& f = kv.at("format").value;
    if (f == "csv") {
      cfg.format = OutputFormat::Csv;
    } else if (f == "jsonl") {
      cfg.format = OutputFormat::Jsonl;
    } else {
      throw ConfigValidationError("format", "format: expected csv or jsonl, got '" + f + "'");
    }
  }
  if (has("seed")) cfg.seed = to_unsigned("seed", kv.at("seed"));
  cfg.output = has("output") ? kv.at("output").value
                             : std::string(cfg.preset ? *cfg.preset : std::string(to_string(cfg.mode))) +
                                   "." + std::string(to_string(cfg.format));

  if (has("pA")) cfg.params.p_a = number("pA");
  if (has("pB")) cfg.params.p_b = number("pB");
  for (const auto& [key, p] : {std::pair{"pA", cfg.params.p_a}, std::pair{"pB", cfg.params.p_b}}) {
    if (!(p >= 0.0 && p <= 1.0)) throw ConfigValidationError(key, std::string(key) + ": must lie in [0, 1]");
  }

  const bool any_physical = std::any_of(kPhysicalKeys.begin(), kPhysicalKeys.end(), has);
  const bool any_phase = std::any_of(kPhaseKeys.begin(), kPhaseKeys.end(), has);
  if (any_physical && any_phase) {
    throw ConfigValidationError("dphiLR", "physical parameters and explicit phases are mutually exclusive");
  }
  if (any_physical) {
    for (const char* key : {"mA", "mB", "d", "deltaX", "tau"}) {
      if (!has(key)) throw ConfigValidationError(key, std::string(key) + ": required with physical parameters");
    }
    PhysicalConfig p;
    p.m_a = number("mA");
    p.m_b = number("mB");
    p.d = number("d");
    p.delta_x = number("deltaX");
    p.tau = number("tau");
    if (has("G")) p.G = number("G");
    if (has("h")) p.h = number("h");
    for (const auto& [key, v] : {std::pair{"mA", p.m_a}, std::pair{"mB", p.m_b}, std::pair{"d", p.d},
                                 std::pair{"deltaX", p.delta_x}, std::pair{"G", p.G}, std::pair{"h", p.h}}) {
      if (!(v > 0.0)) throw ConfigValidationError(key, std::string(key) + ": must be positive");
    }
    if (p.tau < 0.0) throw ConfigValidationError("tau", "tau: must be non-negative");
    if (!(p.d > p.delta_x)) throw ConfigValidationError("d", "d: must exceed deltaX");
    cfg.physical = p;
  }
  if (any_phase) {
    for (const auto& key : kPhaseKeys) {
      if (!has(key)) throw ConfigValidationError(key, key + ": dphiLR and dphiRL must be given together");
    }
    cfg.explicit_phases = PhaseSet::from_differences(number("dphiLR"), number("dphiRL"));
  }

  auto grid = [&](const std::string& axis) {
    GridSpec g;
    const std::string start = "gridStart" + axis;
    const std::string stop = "gridStop" + axis;
    const std::string count = "gridCount" + axis;
    for (const auto& key : {start, stop, count}) {
      if (!has(key)) throw ConfigValidationError(key, key + ": required by mode " + std::string(to_string(cfg.mode)));
    }
    g.start = number(start);
    g.stop = number(stop);
    g.count = static_cast<std::size_t>(to_unsigned(count, kv.at(count)));
    if (g.count < 1) throw ConfigValidationError(count, count + ": must be at least 1");
    if (g.start > g.stop) throw ConfigValidationError(start, start + ": must not exceed " + stop);
    return g;
  };

  switch (cfg.mode) {
    case Mode::Phases:
      if (!cfg.physical) throw ConfigValidationError("tau", "mode phases requires physical parameters");
      break;
    case Mode::SweepPhases:
      if (cfg.physical || cfg.explicit_phases) {
        throw ConfigValidationError(any_phase ? "dphiLR" : "tau",
                                    "mode sweep-phases takes its phases from the grid");
      }
      cfg.grid_lr = grid("LR");
      cfg.grid_rl = grid("RL");
      break;
    case Mode::SweepInitial:
      cfg.grid_pa = grid("PA");
      cfg.grid_pb = grid("PB");
      if (cfg.grid_pa.start < 0.0 || cfg.grid_pa.stop > 1.0) {
        throw ConfigValidationError("gridStartPA", "pA grid must lie in [0, 1]");
      }
      if (cfg.grid_pb.start < 0.0 || cfg.grid_pb.stop > 1.0) {
        throw ConfigValidationError("gridStartPB", "pB grid must lie in [0, 1]");
      }
      [[fallthrough]];
    case Mode::Evolve:
    case Mode::Measures:
    case Mode::Verify:
      if (!cfg.physical && !cfg.explicit_phases) {
        throw ConfigValidationError("dphiLR", "mode " + std::string(to_string(cfg.mode)) +
                                                  " requires physical parameters or dphiLR/dphiRL");
      }
      break;
  }
  return cfg;
}

RunConfig parse_config(std::string_view text) { return build_config(parse_key_values(text)); }

}  // namespace gravcoh
