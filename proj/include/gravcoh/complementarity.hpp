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

#include <array>
#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "gravcoh/grav_model.hpp"
#include "gravcoh/quantum_state.hpp"
#include "gravcoh/tolerances.hpp"

namespace gravcoh {

enum class Relation {
  L1NegSquared,   // C_l1(rho_A)^2 + N(rho_AB)^2 <= 1
  L1ConcSquared,  // C_l1(rho_A)^2 + C(rho_AB)^2 <= 1
  RelEntPlusEnt,  // C_r(rho_A) + E(rho_AB) <= 1
};

std::string_view to_string(Relation relation);

struct ComplementarityReport {
  Relation relation;
  double lhs_value;
  double bound = 1.0;
  double residual;  // lhs_value - bound
  bool saturated;   // |residual| <= tol.saturation
};

/// Local coherence of mass A and the entanglement of the evolved pair.
struct MeasureSet {
  double c_l1_local = 0.0;
  double c_rel_local = 0.0;
  double negativity = 0.0;
  double concurrence = 0.0;
  double ent_entropy = 0.0;

  double sum_sq_l1_neg() const { return c_l1_local * c_l1_local + negativity * negativity; }
  double sum_sq_l1_conc() const { return c_l1_local * c_l1_local + concurrence * concurrence; }
  double sum_rel_ent() const { return c_rel_local + ent_entropy; }
};

/// Every measure of the product state `params` evolved under `phases`, each
/// computed through the spectral routines.
MeasureSet evaluate_measures(const ProductStateParams& params, const PhaseSet& phases,
                             const Tolerances& tol = kDefaultTolerances);

std::array<ComplementarityReport, 3> reports_from(const MeasureSet& m,
                                                  const Tolerances& tol = kDefaultTolerances);

std::array<ComplementarityReport, 3> check_relations(const ProductStateParams& params,
                                                     const PhaseSet& phases,
                                                     const Tolerances& tol = kDefaultTolerances);

struct SweepRecord {
  double dphi_lr;
  double dphi_rl;
  double p_a;
  double p_b;
  MeasureSet measures;
  std::array<ComplementarityReport, 3> reports;
};

/// Inclusive, evenly spaced samples; `count == 1` yields {start}.
struct GridSpec {
  double start = 0.0;
  double stop = 0.0;
  std::size_t count = 1;

  /// Throws InvalidInput if count == 0, start > stop, or bounds are not finite.
  std::vector<double> values() const;
};

struct SweepOptions {
  unsigned threads = 1;  // 0 = hardware concurrency
  Tolerances tol = kDefaultTolerances;
};

/// One record per (dphi_lr, dphi_rl) pair, row-major with grid_lr outer.
std::vector<SweepRecord> sweep_phases(std::span<const double> grid_lr,
                                      std::span<const double> grid_rl,
                                      const ProductStateParams& params,
                                      const SweepOptions& options = {});

/// One record per (p_a, p_b) pair, row-major with grid_pa outer.
std::vector<SweepRecord> sweep_initial_coherence(std::span<const double> grid_pa,
                                                 std::span<const double> grid_pb,
                                                 const PhaseSet& phases,
                                                 const SweepOptions& options = {});

}  // namespace gravcoh
