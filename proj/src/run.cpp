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

#include "gravcoh/run.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "json.hpp"

#include "gravcoh/error.hpp"
#include "gravcoh/format.hpp"
#include "gravcoh/grav_model.hpp"
#include "gravcoh/measures.hpp"

namespace gravcoh {

namespace {

std::vector<Cell> sweep_row(const SweepRecord& r) {
  const MeasureSet& m = r.measures;
  return {r.dphi_lr,      r.dphi_rl,      r.p_a,           r.p_b,
          m.c_l1_local,   m.c_rel_local,  m.negativity,    m.concurrence,
          m.ent_entropy,  m.sum_sq_l1_neg(), m.sum_rel_ent()};
}

Table sweep_table(const std::vector<SweepRecord>& records) {
  Table t{sweep_columns(), {}};
  t.rows.reserve(records.size());
  for (const auto& r : records) t.rows.push_back(sweep_row(r));
  return t;
}

bool exactly_half(double p) { return p == 0.5; }

// Appends the three reports for one point and returns false if any misses
// its expectation: equality within tol.identity_residual at p_a = p_b = 1/2,
// otherwise lhs <= 1 + tol.identity_residual.
bool append_verify_rows(Table& t, const ProductStateParams& params, const PhaseSet& phases,
                        const Tolerances& tol) {
  const bool expect_equality = exactly_half(params.p_a) && exactly_half(params.p_b);
  bool ok = true;
  for (const auto& rep : check_relations(params, phases, tol)) {
    const bool pass = expect_equality ? std::abs(rep.residual) <= tol.identity_residual
                                      : rep.residual <= tol.identity_residual;
    ok = ok && pass;
    t.rows.push_back({std::string(to_string(rep.relation)), phases.dphi_lr, phases.dphi_rl, params.p_a,
                      params.p_b, rep.lhs_value, rep.bound, rep.residual, rep.saturated, pass});
  }
  return ok;
}

std::string csv_cell(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, double>) {
          return format_double(v);
        } else if constexpr (std::is_same_v<T, bool>) {
          return v ? "true" : "false";
        } else if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

}  // namespace

const std::vector<std::string>& sweep_columns() {
  static const std::vector<std::string> cols{
      "dphi_lr",  "dphi_rl",     "p_a",         "p_b",           "c_l1_local",  "c_rel_local",
      "negativity", "concurrence", "ent_entropy", "sum_sq_l1_neg", "sum_rel_ent"};
  return cols;
}

const std::vector<std::string>& phase_columns() {
  static const std::vector<std::string> cols{"phi", "phi_lr", "phi_rl", "dphi_lr", "dphi_rl"};
  return cols;
}

const std::vector<std::string>& evolve_columns() {
  static const std::vector<std::string> cols{"row", "col", "re", "im"};
  return cols;
}

const std::vector<std::string>& verify_columns() {
  static const std::vector<std::string> cols{"relation", "dphi_lr", "dphi_rl", "p_a",       "p_b",
                                             "lhs",      "bound",   "residual", "saturated", "pass"};
  return cols;
}

Table compute_table(const RunConfig& config, unsigned threads) {
  const SweepOptions options{threads, kDefaultTolerances};
  switch (config.mode) {
    case Mode::Phases: {
      const PhaseSet p = config.phases();
      return Table{phase_columns(), {{p.phi, p.phi_lr, p.phi_rl, p.dphi_lr, p.dphi_rl}}};
    }
    case Mode::Evolve: {
      const DensityMatrix rho = evolved_product_state(config.params, config.phases());
      Table t{evolve_columns(), {}};
      for (std::size_t i = 0; i < rho.dim(); ++i) {
        for (std::size_t j = 0; j < rho.dim(); ++j) {
          t.rows.push_back({static_cast<std::int64_t>(i), static_cast<std::int64_t>(j), rho(i, j).real(),
                            rho(i, j).imag()});
        }
      }
      return t;
    }
    case Mode::Measures: {
      const PhaseSet p = config.phases();
      const MeasureSet m = evaluate_measures(config.params, p);
      return sweep_table({SweepRecord{p.dphi_lr, p.dphi_rl, config.params.p_a, config.params.p_b, m,
                                      reports_from(m)}});
    }
    case Mode::Verify: {
      Table t{verify_columns(), {}};
      bool ok = append_verify_rows(t, config.params, config.phases(), kDefaultTolerances);
      std::mt19937_64 rng(config.seed);
      std::uniform_real_distribution<double> phase(0.0, 2.0 * std::numbers::pi);
      for (std::size_t k = 0; k < kVerifyRandomSamples; ++k) {
        const double lr = phase(rng);
        const double rl = phase(rng);
        ok = append_verify_rows(t, config.params, PhaseSet::from_differences(lr, rl), kDefaultTolerances) && ok;
      }
      t.verification_passed = ok;
      return t;
    }
    case Mode::SweepPhases: {
      const auto lr = config.grid_lr.values();
      const auto rl = config.grid_rl.values();
      return sweep_table(sweep_phases(lr, rl, config.params, options));
    }
    case Mode::SweepInitial: {
      const auto pa = config.grid_pa.values();
      const auto pb = config.grid_pb.values();
      return sweep_table(sweep_initial_coherence(pa, pb, config.phases(), options));
    }
  }
  throw InvalidInput("compute_table: unknown mode");
}

std::string render(const Table& table, OutputFormat format) {
  std::ostringstream out;
  if (format == OutputFormat::Csv) {
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto& row : table.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
      out << '\n';
    }
    return out.str();
  }
  for (const auto& row : table.rows) {
    nlohmann::ordered_json obj;
    for (std::size_t c = 0; c < row.size(); ++c) {
      std::visit([&](const auto& v) { obj[table.columns[c]] = v; }, row[c]);
    }
    out << obj.dump() << '\n';
  }
  return out.str();
}

void write_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw IoFailure("cannot open " + tmp.string() + " for writing");
    f << contents;
    f.flush();
    if (!f) throw IoFailure("write to " + tmp.string() + " failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoFailure("cannot rename onto " + target.string());
  }
}

RunResult run(const RunConfig& config, unsigned threads) {
  RunResult result;
  try {
    const Table table = compute_table(config, threads);
    write_atomically(config.output, render(table, config.format));
    result.rows = table.rows.size();
    if (!table.verification_passed) {
      result.code = ExitCode::VerificationFailure;
      result.message = "verification failed; see " + config.output;
    } else {
      result.message = "wrote " + std::to_string(result.rows) + " rows to " + config.output;
    }
  } catch (const IoFailure& e) {
    result.code = ExitCode::IoError;
    result.message = e.what();
  } catch (const NumericalFailure& e) {
    result.code = ExitCode::NumericalError;
    result.message = e.what();
  } catch (const InvalidInput& e) {
    result.code = ExitCode::ConfigError;
    result.message = e.what();
  }
  return result;
}

}  // namespace gravcoh
