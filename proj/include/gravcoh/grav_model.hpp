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

#include "gravcoh/linalg.hpp"
#include "gravcoh/quantum_state.hpp"
#include "gravcoh/tolerances.hpp"

namespace gravcoh {

inline constexpr double kGravitationalConstant = 6.67430e-11;  // m^3 kg^-1 s^-2
inline constexpr double kPlanckConstant = 6.62607015e-34;      // J s

/// Two masses, each split into |L>, |R> branches separated by delta_x, with
/// centres a distance d apart. SI units throughout.
///
/// `h` enters the phase formula as written (Planck's h). Set it to the
/// reduced constant to use the hbar convention instead.
struct PhysicalConfig {
  double m_a = 0.0;
  double m_b = 0.0;
  double d = 0.0;
  double delta_x = 0.0;
  double tau = 0.0;
  double G = kGravitationalConstant;
  double h = kPlanckConstant;

  /// Masses, d, delta_x, G, h strictly positive; tau >= 0; d > delta_x.
  void validate() const;
};

/// Branch phases and the two differences that drive every closed form.
/// Always construct through the factories so the differences stay exact.
struct PhaseSet {
  double phi = 0.0;
  double phi_lr = 0.0;
  double phi_rl = 0.0;
  double dphi_lr = 0.0;
  double dphi_rl = 0.0;

  static PhaseSet from_phases(double phi, double phi_lr, double phi_rl);
  /// Gauge with the common phase `phi` (0 unless given).
  static PhaseSet from_differences(double dphi_lr, double dphi_rl, double phi = 0.0);

  double sum() const noexcept { return dphi_lr + dphi_rl; }

  friend bool operator==(const PhaseSet&, const PhaseSet&) = default;
};

/// Phases accumulated over tau: phi = k/d, phi_rl = k/(d - dx),
/// phi_lr = k/(d + dx), with k = G m_a m_b tau / h.
PhaseSet compute_phases(const PhysicalConfig& cfg);

/// Diagonal gravitational unitary sum_ij e^{i phi_ij} |ij><ij| in the global
/// basis order.
struct GravUnitary {
  std::array<double, 4> diagonal_phases{};

  ComplexMatrix matrix() const;
};

/// phi_LL = phi_RR = phi, phi_LR = phi + dphi_lr, phi_RL = phi + dphi_rl.
GravUnitary build_unitary(const PhaseSet& phases);

/// U rho U^dagger. The diagonal structure makes this an entrywise phase
/// multiplication.
DensityMatrix evolve(const DensityMatrix& rho0, const GravUnitary& u,
                     const Tolerances& tol = kDefaultTolerances);

/// True iff `u` is a phase-decorated permutation: exactly one unit-modulus
/// entry in every row and column, all others zero. Throws InvalidInput if `u`
/// is not square or not unitary.
bool is_incoherent_unitary(const ComplexMatrix& u, const Tolerances& tol = kDefaultTolerances);

/// Uniform or generalized product state evolved under build_unitary(phases).
DensityMatrix evolved_product_state(const ProductStateParams& params, const PhaseSet& phases,
                                    const Tolerances& tol = kDefaultTolerances);

}  // namespace gravcoh
