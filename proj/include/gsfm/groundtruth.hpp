// Copyright 2026 The gsfm Authors
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

/// @file
/// Reference ground states: dense eigendecomposition and imaginary-time
/// evolution from |+>^N, plus the annealing-gap sweep and the magnetization
/// curve built on them.

#include <vector>

#include "gsfm/hamiltonians.hpp"
#include "gsfm/statevec.hpp"

namespace gsfm {

/// Gaps below this are reported as a degenerate ground space.
inline constexpr double kDegenerateGap = 1e-9;

struct GroundStateResult {
  StateVector state;
  double energy;
  /// E_1 - E_0 of the same Hamiltonian (0 for a 1-dimensional space).
  double gap;
  bool degenerate;
};

/// Lowest eigenpair of a Hermitian matrix whose dimension is 2^n, n <= 10.
/// The state follows canonical_phase(). Throws InvalidArgument if
/// max|H - H^dagger| > 1e-9, SizeError on an unsupported dimension.
GroundStateResult exact_ground_state(const DenseOperator& H);

/// Imaginary-time projection exp(-tau H)|+>^N by symmetric split steps
/// exp(-dtau/2 D) exp(-dtau h H_X) exp(-dtau/2 D), renormalized after every
/// step. round(tau / dtau) steps are taken; tau = 0 returns |+>^N.
StateVector ite_ground_state(const IsingParams& p, double tau,
                             double dtau = 0.01);

/// Minimum ground-state gap of anneal_hamiltonian(p, s) over s_grid equally
/// spaced points s in [0, 1].
double min_anneal_gap(const IsingParams& p, int s_grid);

struct MagnetizationPoint {
  double x;
  double mag_abs_per_site;
};

/// |<H_Z>| / N on exact ground states at h, for every x in x_grid.
std::vector<MagnetizationPoint> magnetization_curve(
    int n_qubits, double h, const std::vector<double>& x_grid,
    bool periodic = true);

/// Rayleigh quotient <psi|H|psi>.
double energy_of(const DenseOperator& H, const StateVector& psi);

}  // namespace gsfm
