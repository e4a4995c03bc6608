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

#include "gravcoh/quantum_state.hpp"

#include <cmath>
#include <string>

#include "gravcoh/error.hpp"

namespace gravcoh {

namespace {

void require_two_qubits(std::size_t dim, const char* what) {
  if (dim != 4) {
    throw InvalidInput(std::string(what) + ": expected a two-mass (dim 4) state, got dim " +
                       std::to_string(dim));
  }
}

}  // namespace

PureState::PureState(std::vector<Complex> amplitudes, const Tolerances& tol)
    : amplitudes_(std::move(amplitudes)) {
  if (dim() != 2 && dim() != 4) {
    throw InvalidInput("PureState: dimension must be 2 or 4, got " + std::to_string(dim()));
  }
  double norm2 = 0.0;
  for (Complex a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw InvalidInput("PureState: non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  if (std::abs(norm2 - 1.0) > tol.normalization) {
    throw InvalidInput("PureState: squared norm " + std::to_string(norm2) + " is not 1");
  }
}

DensityMatrix::DensityMatrix(ComplexMatrix mat, const Tolerances& tol) : mat_(std::move(mat)) {
  if (!mat_.is_square() || (dim() != 2 && dim() != 4)) {
    throw InvalidInput("DensityMatrix: must be 2x2 or 4x4");
  }
  if (hermiticity_residual(mat_) > tol.density_hermitian) {
    throw InvalidInput("DensityMatrix: not Hermitian");
  }
  if (std::abs(mat_.trace() - Complex(1.0)) > tol.density_trace) {
    throw InvalidInput("DensityMatrix: trace is not 1");
  }
  const auto eigenvalues = hermitian_eigenvalues(mat_, tol);
  if (eigenvalues.back() < -tol.eigenvalue_floor) {
    throw InvalidInput("DensityMatrix: negative eigenvalue " + std::to_string(eigenvalues.back()));
  }
}

void ProductStateParams::validate() const {
  auto check = [](double p, const char* name) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw InvalidInput(std::string("ProductStateParams: ") + name + " = " + std::to_string(p) +
                         " outside [0, 1]");
    }
  };
  check(p_a, "p_a");
  check(p_b, "p_b");
}

AmplitudeSet product_amplitudes(const ProductStateParams& params) {
  params.validate();
  const double pa = params.p_a;
  const double pb = params.p_b;
  return AmplitudeSet{
      .m_ll = std::sqrt(pa * pb),
      .m_lr = std::sqrt(pa * (1.0 - pb)),
      .m_rl = std::sqrt(pb * (1.0 - pa)),
      .m_rr = std::sqrt((1.0 - pb) * (1.0 - pa)),
  };
}

DensityMatrix pure_to_density(const PureState& psi, const Tolerances& tol) {
  const std::size_t n = psi.dim();
  ComplexMatrix rho(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) rho(i, j) = psi[i] * std::conj(psi[j]);
  }
  return DensityMatrix(std::move(rho), tol);
}

PureState build_product_state(const ProductStateParams& params) {
  const AmplitudeSet m = product_amplitudes(params);
  return PureState({m.m_ll, m.m_lr, m.m_rl, m.m_rr});
}

DensityMatrix partial_trace(const DensityMatrix& rho, Subsystem keep, const Tolerances& tol) {
  require_two_qubits(rho.dim(), "partial_trace");
  ComplexMatrix reduced(2, 2);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      for (std::size_t k = 0; k < 2; ++k) {
        reduced(i, j) += keep == Subsystem::A ? rho(2 * i + k, 2 * j + k) : rho(2 * k + i, 2 * k + j);
      }
    }
  }
  return DensityMatrix(std::move(reduced), tol);
}

ComplexMatrix partial_transpose(const ComplexMatrix& mat, Subsystem on) {
  if (!mat.is_square()) throw InvalidInput("partial_transpose: matrix is not square");
  require_two_qubits(mat.rows(), "partial_transpose");
  ComplexMatrix out(4, 4);
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t k = 0; k < 2; ++k) {
      for (std::size_t j = 0; j < 2; ++j) {
        for (std::size_t l = 0; l < 2; ++l) {
          if (on == Subsystem::A) {
            out(2 * i + k, 2 * j + l) = mat(2 * j + k, 2 * i + l);
          } else {
            out(2 * i + k, 2 * j + l) = mat(2 * i + l, 2 * j + k);
          }
        }
      }
    }
  }
  return out;
}

ComplexMatrix partial_transpose(const DensityMatrix& rho, Subsystem on) {
  return partial_transpose(rho.matrix(), on);
}

bool is_incoherent_state(const DensityMatrix& rho, const Tolerances& tol) {
  for (std::size_t i = 0; i < rho.dim(); ++i) {
    for (std::size_t j = 0; j < rho.dim(); ++j) {
      if (i != j && std::abs(rho(i, j)) > tol.incoherence) return false;
    }
  }
  return true;
}

bool is_maximally_coherent(const PureState& psi, const Tolerances& tol) {
  const double target = 1.0 / std::sqrt(static_cast<double>(psi.dim()));
  for (Complex a : psi.amplitudes()) {
    if (std::abs(std::abs(a) - target) > tol.max_coherence) return false;
  }
  return true;
}

}  // namespace gravcoh
