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

#include "gravcoh/complementarity.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <thread>

#include "gravcoh/error.hpp"
#include "gravcoh/measures.hpp"

namespace gravcoh {

namespace {

ComplementarityReport make_report(Relation relation, double lhs, const Tolerances& tol) {
  const double residual = lhs - 1.0;
  return ComplementarityReport{relation, lhs, 1.0, residual, std::abs(residual) <= tol.saturation};
}

// Evaluates fill(k) for k in [0, n) across `threads` workers. Each index is
// written by exactly one worker, so output order never depends on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fill) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(n, 1)));
  if (threads <= 1) {
    for (std::size_t k = 0; k < n; ++k) fill(k);
    return;
  }
  std::vector<std::exception_ptr> errors(threads);
  {
    std::vector<std::jthread> workers;
    for (unsigned t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        try {
          for (std::size_t k = t; k < n; k += threads) fill(k);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace

std::string_view to_string(Relation relation) {
  switch (relation) {
    case Relation::L1NegSquared: return "l1_neg_squared";
    case Relation::L1ConcSquared: return "l1_conc_squared";
    case Relation::RelEntPlusEnt: return "rel_ent_plus_ent";
  }
  return "unknown";
}

MeasureSet evaluate_measures(const ProductStateParams& params, const PhaseSet& phases,
                             const Tolerances& tol) {
  const DensityMatrix rho = evolved_product_state(params, phases, tol);
  const DensityMatrix rho_a = partial_trace(rho, Subsystem::A, tol);
  MeasureSet m;
  m.c_l1_local = l1_coherence(rho_a);
  m.c_rel_local = relative_entropy_coherence(rho_a, tol);
  m.negativity = negativity(rho, tol);
  m.concurrence = concurrence(rho, tol);
  m.ent_entropy = entanglement_entropy(rho, tol);
  return m;
}

std::array<ComplementarityReport, 3> reports_from(const MeasureSet& m, const Tolerances& tol) {
  return {make_report(Relation::L1NegSquared, m.sum_sq_l1_neg(), tol),
          make_report(Relation::L1ConcSquared, m.sum_sq_l1_conc(), tol),
          make_report(Relation::RelEntPlusEnt, m.sum_rel_ent(), tol)};
}

std::array<ComplementarityReport, 3> check_relations(const ProductStateParams& params,
                                                     const PhaseSet& phases,
                                                     const Tolerances& tol) {
  return reports_from(evaluate_measures(params, phases, tol), tol);
}

std::vector<double> GridSpec::values() const {
  if (count == 0) throw InvalidInput("GridSpec: count must be at least 1");
  if (!std::isfinite(start) || !std::isfinite(stop)) throw InvalidInput("GridSpec: non-finite bound");
  if (start > stop) throw InvalidInput("GridSpec: start exceeds stop");
  std::vector<double> out(count);
  if (count == 1) {
    out[0] = start;
    return out;
  }
  const double step = (stop - start) / static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) out[i] = start + step * static_cast<double>(i);
  out.back() = stop;
  return out;
}

std::vector<SweepRecord> sweep_phases(std::span<const double> grid_lr,
                                      std::span<const double> grid_rl,
                                      const ProductStateParams& params,
                                      const SweepOptions& options) {
  if (grid_lr.empty() || grid_rl.empty()) throw InvalidInput("sweep_phases: empty grid");
  params.validate();
  std::vector<SweepRecord> out(grid_lr.size() * grid_rl.size());
  parallel_for(out.size(), options.threads, [&](std::size_t k) {
    const double lr = grid_lr[k / grid_rl.size()];
    const double rl = grid_rl[k % grid_rl.size()];
    const MeasureSet m = evaluate_measures(params, PhaseSet::from_differences(lr, rl), options.tol);
    out[k] = SweepRecord{lr, rl, params.p_a, params.p_b, m, reports_from(m, options.tol)};
  });
  return out;
}

std::vector<SweepRecord> sweep_initial_coherence(std::span<const double> grid_pa,
                                                 std::span<const double> grid_pb,
                                                 const PhaseSet& phases,
                                                 const SweepOptions& options) {
  if (grid_pa.empty() || grid_pb.empty()) throw InvalidInput("sweep_initial_coherence: empty grid");
  auto in_range = [](double p) { return p >= 0.0 && p <= 1.0; };
  if (!std::all_of(grid_pa.begin(), grid_pa.end(), in_range) ||
      !std::all_of(grid_pb.begin(), grid_pb.end(), in_range)) {
    throw InvalidInput("sweep_initial_coherence: grid value outside [0, 1]");
  }
  std::vector<SweepRecord> out(grid_pa.size() * grid_pb.size());
  parallel_for(out.size(), options.threads, [&](std::size_t k) {
    const ProductStateParams params{grid_pa[k / grid_pb.size()], grid_pb[k % grid_pb.size()]};
    const MeasureSet m = evaluate_measures(params, phases, options.tol);
    out[k] = SweepRecord{phases.dphi_lr, phases.dphi_rl, params.p_a, params.p_b, m,
                         reports_from(m, options.tol)};
  });
  return out;
}

}  // namespace gravcoh
