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
#include <vector>

#include "gravcoh/linalg.hpp"
#include "gravcoh/tolerances.hpp"

namespace gravcoh {

// Global basis ordering for the two-mass system: |LL>, |LR>, |RL>, |RR>,
// with mass A as the high-order factor (index = 2 * i_A + i_B). Single-mass
// states use |L>, |R>.
enum class Subsystem { A, B };

inline constexpr std::size_t kIndexLL = 0;
inline constexpr std::size_t kIndexLR = 1;
inline constexpr std::size_t kIndexRL = 2;
inline constexpr std::size_t kIndexRR = 3;

/// Normalized state vector of dimension 2 ({L, R}) or 4 ({LL, LR, RL, RR}).
class PureState {
 public:
  explicit PureState(std::vector<Complex> amplitudes, const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const noexcept { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amplitudes_; }
  Complex operator[](std::size_t i) const { return amplitudes_[i]; }

 private:
  std::vector<Complex> amplitudes_;
};

/// Hermitian, unit-trace, positive semidefinite matrix of dimension 2 or 4.
class DensityMatrix {
 public:
  /// Validates every invariant; throws InvalidInput otherwise.
  explicit DensityMatrix(ComplexMatrix mat, const Tolerances& tol = kDefaultTolerances);

  std::size_t dim() const noexcept { return mat_.rows(); }
  const ComplexMatrix& matrix() const noexcept { return mat_; }
  Complex operator()(std::size_t r, std::size_t c) const { return mat_(r, c); }

 private:
  ComplexMatrix mat_;
};

/// Weights of the product state (sqrt(pA)|L> + sqrt(1-pA)|R>) (x)
/// (sqrt(pB)|L> + sqrt(1-pB)|R>).
struct ProductStateParams {
  double p_a = 0.5;
  double p_b = 0.5;

  /// Throws InvalidInput unless both weights lie in [0, 1].
  void validate() const;
};

/// Real non-negative amplitudes of a product state in the global basis.
struct AmplitudeSet {
  double m_ll = 0.0;
  double m_lr = 0.0;
  double m_rl = 0.0;
  double m_rr = 0.0;

  std::array<double, 4> as_array() const { return {m_ll, m_lr, m_rl, m_rr}; }
};

AmplitudeSet product_amplitudes(const ProductStateParams& params);

DensityMatrix pure_to_density(const PureState& psi, const Tolerances& tol = kDefaultTolerances);

PureState build_product_state(const ProductStateParams& params);

/// Reduced 2x2 state of the kept subsystem. Requires dim 4.
DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep,
                            const Tolerances& tol = kDefaultTolerances);

/// Transpose over the indices of one subsystem:
/// entry((i,k),(j,l)) -> entry((j,k),(i,l)) for Subsystem::A.
ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem on = Subsystem::A);
ComplexMatrix partial_transpose(const ComplexMatrix& mat, Subsystem on = Subsystem::A);

/// True iff every off-diagonal entry has modulus <= tol.incoherence.
bool is_incoherent_state(const DensityMatrix& rho, const Tolerances& tol = kDefaultTolerances);

/// True iff every amplitude has modulus 1/sqrt(dim) within tol.max_coherence.
bool is_maximally_coherent(const PureState& psi, const Tolerances& tol = kDefaultTolerances);

}  // namespace gravcoh
