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

namespace gravcoh {

/// Every numerical threshold used by the library, in one place.
///
/// Functions that compare against a threshold take a `const Tolerances&`
/// defaulting to `kDefaultTolerances`, so tests and callers can tighten or
/// relax any single knob without touching global state.
struct Tolerances {
  // Spectral routines.
  double hermitian_input = 1e-9;     // max |A - A^dagger| accepted by hermitian_eig
  double jacobi_off_diagonal = 1e-14;  // Frobenius norm of the off-diagonal part
  int jacobi_max_sweeps = 100;

  // State validity.
  double normalization = 1e-10;  // |sum |a_i|^2 - 1| for pure states
  double density_hermitian = 1e-10;
  double density_trace = 1e-10;
  double eigenvalue_floor = 1e-10;  // eigenvalues in [-floor, 0) clip to 0
  double purity = 1e-8;             // |rho^2 - rho| for entanglement entropy
  double rank_cutoff = 1e-12;       // eigenvalues treated as exact zeros in concurrence

  // Classifiers.
  double incoherence = 1e-10;
  double max_coherence = 1e-10;
  double unitary_input = 1e-9;
  double unit_modulus = 1e-10;

  // Complementarity.
  double identity_residual = 1e-9;
  double saturation = 1e-6;
};

inline constexpr Tolerances kDefaultTolerances{};

}  // namespace gravcoh
