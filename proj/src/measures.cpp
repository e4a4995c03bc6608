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

#include "gravcoh/measures.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "gravcoh/error.hpp"

namespace gravcoh {

namespace {

double clip_eigenvalue(double lambda, const Tolerances& tol) {
  if (lambda >= 0.0) return lambda;
  if (lambda >= -tol.eigenvalue_floor) return 0.0;
  throw NumericalFailure("eigenvalue " + std::to_string(lambda) + " below clipping floor");
}

// Y (x) Y with Y the antisymmetric spin flip [[0, -i], [i, 0]].
ComplexMatrix spin_flip() {
  return ComplexMatrix{{0, 0, 0, -1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {-1, 0, 0, 0}};
}

}  // namespace

std::string_view to_string(MeasureKind kind) {
  switch (kind) {
    case MeasureKind::L1Coherence: return "l1_coherence";
    case MeasureKind::RelEntCoherence: return "relative_entropy_coherence";
    case MeasureKind::VonNeumann: return "von_neumann_entropy";
    case MeasureKind::Negativity: return "negativity";
    case MeasureKind::Concurrence: return "concurrence";
    case MeasureKind::EntEntropy: return "entanglement_entropy";
  }
  return "unknown";
}

double l1_coherence(const DensityMatrix& rho) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (i != j) sum += std::abs(rho(i, j));
    }
  }
  return sum;
}

double shannon_entropy(std::span<const double> probabilities, const Tolerances& tol) {
  double h = 0.0;
  for (double p : probabilities) {
    const double q = clip_eigenvalue(p, tol);
    if (q > 0.0) h -= q * std::log2(q);
  }
  return std::max(h, 0.0);
}

double von_neumann_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  return shannon_entropy(hermitian_eigenvalues(rho.matrix(), tol), tol);
}

double relative_entropy_coherence(const DensityMatrix& rho, const Tolerances& tol) {
  std::vector<double> diag(rho.dim());
  for (std::size_t i = 0; i < rho.dim(); ++i) diag[i] = rho(i, i).real();
  return shannon_entropy(diag, tol) - von_neumann_entropy(rho, tol);
}

double binary_entropy(double x) {
  if (!(x >= 0.0 && x <= 1.0)) {
    throw InvalidInput("binary_entropy: argument " + std::to_string(x) + " outside [0, 1]");
  }
  double h = 0.0;
  if (x > 0.0) h -= x * std::log2(x);
  if (x < 1.0) h -= (1.0 - x) * std::log2(1.0 - x);
  return h;
}

double negativity(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4) throw InvalidInput("negativity: expected a dim 4 state");
  // ||X||_1 - Tr X = sum (|l| - l) over the spectrum; Tr X = 1 for a partial
  // transpose. Eigenvalues in [-floor, 0) are rounding noise on PPT states.
  double n = 0.0;
  for (double lambda : hermitian_eigenvalues(partial_transpose(rho, Subsystem::A), tol)) {
    if (lambda < -tol.eigenvalue_floor) n -= 2.0 * lambda;
  }
  return n;
}

double concurrence(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4) throw InvalidInput("concurrence: expected a dim 4 state");
  // Wootters' ensemble form: with rho = sum_k w_k w_k^dagger (w_k = sqrt(lambda_k) v_k),
  // the square roots of the eigenvalues of rho (YY) rho* (YY) are the singular
  // values of tau_ij = w_i^T (YY) w_j. Taking singular values of tau avoids
  // square-rooting eigenvalues that are zero up to rounding.
  const Spectrum spec = hermitian_eig(rho.matrix(), tol);
  std::vector<std::vector<Complex>> ensemble;
  for (std::size_t k = 0; k < 4; ++k) {
    const double lambda = clip_eigenvalue(spec.eigenvalues[k], tol);
    if (lambda <= tol.rank_cutoff) continue;
    std::vector<Complex> w(4);
    for (std::size_t i = 0; i < 4; ++i) w[i] = std::sqrt(lambda) * spec.eigenvectors(i, k);
    ensemble.push_back(std::move(w));
  }
  const std::size_t m = ensemble.size();
  if (m == 0) throw NumericalFailure("concurrence: state has no support");

  const ComplexMatrix yy = spin_flip();
  // Hermitian dilation [[0, tau], [tau^dagger, 0]] has eigenvalues +-sigma_k.
  ComplexMatrix dilation(2 * m, 2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex tij = 0.0;
      for (std::size_t a = 0; a < 4; ++a) {
        for (std::size_t b = 0; b < 4; ++b) tij += ensemble[i][a] * yy(a, b) * ensemble[j][b];
      }
      dilation(i, m + j) = tij;
      dilation(m + j, i) = std::conj(tij);
    }
  }
  const auto sigma = hermitian_eigenvalues(dilation, tol);
  double c = std::max(sigma[0], 0.0);
  for (std::size_t k = 1; k < m; ++k) c -= std::max(sigma[k], 0.0);
  return std::max(c, 0.0);
}

double entanglement_entropy(const DensityMatrix& rho, const Tolerances& tol) {
  if (rho.dim() != 4) throw InvalidInput("entanglement_entropy: expected a dim 4 state");
  const double impurity = max_abs_diff(rho.matrix() * rho.matrix(), rho.matrix());
  if (impurity > tol.purity) {
    throw InvalidInput("entanglement_entropy: state is mixed (|rho^2 - rho| = " +
                       std::to_string(impurity) + ")");
  }
  return von_neumann_entropy(partial_trace(rho, Subsystem::A, tol), tol);
}

}  // namespace gravcoh
