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

#include "gsfm/groundtruth.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "gsfm/error.hpp"
#include "gsfm/parallel.hpp"

namespace gsfm {

namespace {

int qubits_for_dimension(Eigen::Index dim) {
  const auto udim = static_cast<std::size_t>(dim);
  if (dim < 2 || !std::has_single_bit(udim)) {
    throw SizeError("matrix dimension " + std::to_string(dim) +
                    " is not a power of two >= 2");
  }
  const int n = std::countr_zero(udim);
  if (n > kMaxDenseQubits) {
    throw SizeError("exact diagonalization supports at most 2^" +
                    std::to_string(kMaxDenseQubits) + " states");
  }
  return n;
}

}  // namespace

GroundStateResult exact_ground_state(const DenseOperator& H) {
  if (H.rows() != H.cols()) throw DimensionMismatch("matrix is not square");
  const int n = qubits_for_dimension(H.rows());
  const double asym = (H - H.adjoint()).cwiseAbs().maxCoeff();
  if (asym > 1e-9) {
    throw InvalidArgument("matrix is not Hermitian (max |H - H^dagger| = " +
                          std::to_string(asym) + ")");
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(H);
  if (solver.info() != Eigen::Success) {
    throw NumericalError("Hermitian eigensolver did not converge");
  }
  const auto& evals = solver.eigenvalues();
  const Eigen::VectorXcd v0 = solver.eigenvectors().col(0);
  std::vector<Complex> amps(v0.data(), v0.data() + v0.size());
  const double gap = evals(1) - evals(0);
  return GroundStateResult{
      canonical_phase(StateVector::normalized(n, std::move(amps))), evals(0),
      gap, gap < kDegenerateGap};
}

StateVector ite_ground_state(const IsingParams& p, double tau, double dtau) {
  p.validate();
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InvalidArgument("imaginary time tau must be >= 0");
  }
  if (tau == 0.0) return plus_state(p.n_qubits);
  if (!(dtau > 0.0) || dtau > tau) {
    throw InvalidArgument("ITE step must satisfy 0 < dtau <= tau");
  }
  const DiagonalOperator d = ising_diagonal(p);
  std::vector<double> half_decay(d.dim());
  for (std::size_t j = 0; j < d.dim(); ++j) {
    half_decay[j] = std::exp(-0.5 * dtau * d[j]);
  }
  const StateVector start = plus_state(p.n_qubits);
  std::vector<Complex> amps(start.amplitudes().begin(),
                            start.amplitudes().end());
  const long steps = std::lround(tau / dtau);
  for (long k = 0; k < steps; ++k) {
    for (std::size_t j = 0; j < amps.size(); ++j) amps[j] *= half_decay[j];
    if (p.h != 0.0) {
      detail::x_decay_all_inplace(amps, p.n_qubits, dtau * p.h);
    }
    double n2 = 0.0;
    for (std::size_t j = 0; j < amps.size(); ++j) {
      amps[j] *= half_decay[j];
      n2 += std::norm(amps[j]);
    }
    if (!(n2 > 0.0) || !std::isfinite(n2)) {
      throw NumericalError("imaginary-time evolution lost all amplitude");
    }
    const double scale = 1.0 / std::sqrt(n2);
    for (auto& z : amps) z *= scale;
  }
  return canonical_phase(StateVector::normalized(p.n_qubits, std::move(amps)));
}

double min_anneal_gap(const IsingParams& p, int s_grid) {
  if (s_grid < 2) throw InvalidArgument("s_grid must be >= 2");
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < s_grid; ++i) {
    const double s = (i == s_grid - 1)
                         ? 1.0
                         : static_cast<double>(i) / (s_grid - 1);
    best = std::min(best, exact_ground_state(anneal_hamiltonian(p, s)).gap);
  }
  return best;
}

std::vector<MagnetizationPoint> magnetization_curve(
    int n_qubits, double h, const std::vector<double>& x_grid, bool periodic) {
  if (x_grid.empty()) throw InvalidArgument("x grid is empty");
  const DiagonalOperator hz = hz_diagonal(n_qubits);
  std::vector<MagnetizationPoint> out(x_grid.size());
  parallel_for(x_grid.size(), [&](std::size_t i) {
    const IsingParams p{n_qubits, x_grid[i], h, periodic};
    const auto gs = exact_ground_state(ising_dense(p));
    out[i] = {x_grid[i], std::abs(expect_diagonal(gs.state, hz)) / n_qubits};
  });
  return out;
}

double energy_of(const DenseOperator& H, const StateVector& psi) {
  if (static_cast<std::size_t>(H.rows()) != psi.dim()) {
    throw DimensionMismatch("energy_of: operator and state sizes differ");
  }
  const Eigen::Map<const Eigen::VectorXcd> v(psi.amplitudes().data(),
                                             psi.dim());
  return (v.adjoint() * H * v)(0, 0).real();
}

}  // namespace gsfm
