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

#include <span>
#include <string_view>

#include "gravcoh/quantum_state.hpp"
#include "gravcoh/tolerances.hpp"

namespace gravcoh {

// Coherence and entanglement quantifiers. Entropies are in bits.

enum class MeasureKind { L1Coherence, RelEntCoherence, VonNeumann, Negativity, Concurrence, EntEntropy };

std::string_view to_string(MeasureKind kind);

struct MeasureValue {
  MeasureKind kind;
  double value;
};

/// Sum of |rho_ij| over i != j.
double l1_coherence(const DensityMatrix& rho);

/// -sum lambda log2 lambda over eigenvalues. Eigenvalues in
/// [-tol.eigenvalue_floor, 0) are treated as 0; anything lower throws
/// NumericalFailure.
double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// Entropy of a probability vector with the same clipping rule.
double shannon_entropy(std::span<const double> probabilities,
                       const Tolerances& tol = kDefaultTolerances);

/// S(diag rho) - S(rho).
double relative_entropy_coherence(const DensityMatrix& rho,
                                  const Tolerances& tol = kDefaultTolerances);

/// H2(x) = -x log2 x - (1-x) log2 (1-x), with H2(0) = H2(1) = 0.
double binary_entropy(double x);

/// ||rho^{T_A}||_1 - 1, floored at 0 when within tol.eigenvalue_floor below.
double negativity(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// Two-qubit concurrence max(0, l1 - l2 - l3 - l4), where l_k are the
/// descending square roots of the eigenvalues of rho (Y(x)Y) rho* (Y(x)Y).
double concurrence(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// S(Tr_B rho) for a pure two-mass state. Throws InvalidInput when rho is mixed.
double entanglement_entropy(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

}  // namespace gravcoh
