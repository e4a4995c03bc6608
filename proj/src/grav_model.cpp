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

#include "gravcoh/grav_model.hpp"

#include <cmath>
#include <string>

#include "gravcoh/error.hpp"

namespace gravcoh {

void PhysicalConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(std::isfinite(v) && v > 0.0)) {
      throw InvalidInput(std::string("PhysicalConfig: ") + name + " must be positive and finite");
    }
  };
  positive(m_a, "m_a");
  positive(m_b, "m_b");
  positive(d, "d");
  positive(delta_x, "delta_x");
  positive(G, "G");
  positive(h, "h");
  if (!(std::isfinite(tau) && tau >= 0.0)) {
    throw InvalidInput("PhysicalConfig: tau must be non-negative and finite");
  }
  if (!(d > delta_x)) {
    throw InvalidInput("PhysicalConfig: d must exceed delta_x (closest approach d - delta_x > 0)");
  }
}

PhaseSet PhaseSet::from_phases(double phi, double phi_lr, double phi_rl) {
  return PhaseSet{phi, phi_lr, phi_rl, phi_lr - phi, phi_rl - phi};
}

PhaseSet PhaseSet::from_differences(double dphi_lr, double dphi_rl, double phi) {
  return PhaseSet{phi, phi + dphi_lr, phi + dphi_rl, dphi_lr, dphi_rl};
}

PhaseSet compute_phases(const PhysicalConfig& cfg) {
  cfg.validate();
  const double k = cfg.G * cfg.m_a * cfg.m_b * cfg.tau / cfg.h;
  const PhaseSet out =
      PhaseSet::from_phases(k / cfg.d, k / (cfg.d + cfg.delta_x), k / (cfg.d - cfg.delta_x));
  if (!std::isfinite(out.phi) || !std::isfinite(out.phi_lr) || !std::isfinite(out.phi_rl)) {
    throw NumericalFailure("compute_phases: phase overflow");
  }
  return out;
}

ComplexMatrix GravUnitary::matrix() const {
  std::array<Complex, 4> diag;
  for (std::size_t i = 0; i < 4; ++i) diag[i] = std::polar(1.0, diagonal_phases[i]);
  return ComplexMatrix::diagonal(diag);
}

GravUnitary build_unitary(const PhaseSet& phases) {
  GravUnitary u;
  u.diagonal_phases[kIndexLL] = phases.phi;
  u.diagonal_phases[kIndexLR] = phases.phi + phases.dphi_lr;
  u.diagonal_phases[kIndexRL] = phases.phi + phases.dphi_rl;
  u.diagonal_phases[kIndexRR] = phases.phi;
  return u;
}

DensityMatrix evolve(const DensityMatrix& rho0, const GravUnitary& u, const Tolerances& tol) {
  if (rho0.dim() != 4) {
    throw InvalidInput("evolve: expected a dim 4 state, got dim " + std::to_string(rho0.dim()));
  }
  ComplexMatrix out = rho0.matrix();
  for (std::size_t i = 0; i < 4; ++i) {
    for (std::size_t j = 0; j < 4; ++j) {
      out(i, j) *= std::polar(1.0, u.diagonal_phases[i] - u.diagonal_phases[j]);
    }
  }
  return DensityMatrix(std::move(out), tol);
}

bool is_incoherent_unitary(const ComplexMatrix& u, const Tolerances& tol) {
  if (!u.is_square()) throw InvalidInput("is_incoherent_unitary: matrix is not square");
  const double unitarity =
      max_abs_diff(matmul(dagger(u), u), ComplexMatrix::identity(u.rows()));
  if (unitarity > tol.unitary_input) {
    throw InvalidInput("is_incoherent_unitary: matrix is not unitary (residual " +
                       std::to_string(unitarity) + ")");
  }
  const std::size_t n = u.rows();
  std::vector<int> per_row(n, 0);
  std::vector<int> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const double mod = std::abs(u(i, j));
      if (std::abs(mod - 1.0) <= tol.unit_modulus) {
        ++per_row[i];
        ++per_col[j];
      } else if (mod > tol.unit_modulus) {
        return false;
      }
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (per_row[k] != 1 || per_col[k] != 1) return false;
  }
  return true;
}

DensityMatrix evolved_product_state(const ProductStateParams& params, const PhaseSet& phases,
                                    const Tolerances& tol) {
  return evolve(pure_to_density(build_product_state(params), tol), build_unitary(phases), tol);
}

}  // namespace gravcoh
