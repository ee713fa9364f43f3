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

#include "gsfm/anneal.hpp"

#include <cmath>
#include <string>

#include "gsfm/error.hpp"
#include "gsfm/groundtruth.hpp"
#include "gsfm/parallel.hpp"

namespace gsfm {

namespace {

StateVector anneal_strang(const IsingParams& p, const ScheduleParams& s) {
  const DiagonalOperator d = ising_diagonal(p);
  StateVector psi = plus_state(p.n_qubits);
  for (long m = 1; m <= s.M; ++m) {
    // H_0 = -H_X, so exp(-i w H_0) = exp(+i w H_X).
    psi = apply_rx_all(std::move(psi), -s.mixer_weight(m));
    const double a = s.t_m(m);
    psi = apply_diagonal_phase(std::move(psi), d, 0.5 * a);
    psi = apply_rx_all(std::move(psi), a * p.h);
    psi = apply_diagonal_phase(std::move(psi), d, 0.5 * a);
  }
  return psi;
}

StateVector anneal_dense(const IsingParams& p, const ScheduleParams& s) {
  if (p.n_qubits > kMaxDenseQubits) {
    throw SizeError("dense_exact splitting supports at most " +
                    std::to_string(kMaxDenseQubits) + " qubits");
  }
  Eigen::SelfAdjointEigenSolver<DenseOperator> solver(ising_dense(p));
  if (solver.info() != Eigen::Success) {
    throw NumericalError("eigensolver failed on the target Hamiltonian");
  }
  const DenseOperator& vecs = solver.eigenvectors();
  const Eigen::VectorXd& energies = solver.eigenvalues();

  const StateVector start = plus_state(p.n_qubits);
  Eigen::VectorXcd psi =
      Eigen::Map<const Eigen::VectorXcd>(start.amplitudes().data(),
                                         start.dim());
  Eigen::VectorXcd rotated(psi.size());
  for (long m = 1; m <= s.M; ++m) {
    detail::rx_all_inplace(std::span<Complex>(psi.data(), psi.size()),
                           p.n_qubits, -s.mixer_weight(m));
    const double a = s.t_m(m);
    rotated.noalias() = vecs.adjoint() * psi;
    for (Eigen::Index k = 0; k < rotated.size(); ++k) {
      rotated(k) *= std::polar(1.0, -a * energies(k));
    }
    psi.noalias() = vecs * rotated;
  }
  return StateVector::from_amplitudes(
      p.n_qubits, std::vector<Complex>(psi.data(), psi.data() + psi.size()));
}

double probability_l1(const StateVector& a, const StateVector& b) {
  if (a.dim() != b.dim()) {
    throw DimensionMismatch("fidelity: state dimensions differ");
  }
  double acc = 0.0;
  for (std::size_t j = 0; j < a.dim(); ++j) {
    acc += std::abs(std::norm(a[j]) - std::norm(b[j]));
  }
  return acc;
}

}  // namespace

StateVector trotter_anneal(const IsingParams& p, const ScheduleParams& s,
                           Splitting splitting) {
  p.validate();
  s.validate();
  switch (splitting) {
    case Splitting::strang_split:
      return anneal_strang(p, s);
    case Splitting::dense_exact:
      return anneal_dense(p, s);
  }
  throw InvalidArgument("unknown splitting");
}

AnnealRun run_anneal(const IsingParams& p, const ScheduleParams& s,
                     Splitting splitting) {
  return AnnealRun{p, s, splitting, trotter_anneal(p, s, splitting)};
}

double fidelity_full(const StateVector& a, const StateVector& b) {
  return std::norm(inner(a, b));
}

double fidelity_approx(const StateVector& a, const StateVector& b) {
  return 1.0 - probability_l1(a, b) / static_cast<double>(a.dim());
}

double fidelity_approx_tv(const StateVector& a, const StateVector& b) {
  return 1.0 - 0.5 * probability_l1(a, b);
}

StateVector reference_state(const IsingParams& p, Reference reference,
                            const IteSettings& ite) {
  switch (reference) {
    case Reference::exact:
      return exact_ground_state(ising_dense(p)).state;
    case Reference::ite:
      return ite_ground_state(p, ite.tau, ite.dtau);
  }
  throw InvalidArgument("unknown reference");
}

FidelityScan fidelity_scan(const ChainParams& chain, const ScheduleParams& s,
                           const std::vector<double>& x_grid,
                           Reference reference, Splitting splitting,
                           const IteSettings& ite) {
  if (x_grid.empty()) throw InvalidArgument("fidelity_scan: empty x grid");
  s.validate();
  FidelityScan scan{x_grid,
                    std::vector<double>(x_grid.size()),
                    std::vector<double>(x_grid.size()),
                    std::vector<double>(x_grid.size()),
                    s,
                    reference};
  parallel_for(x_grid.size(), [&](std::size_t i) {
    const IsingParams p = chain.at(x_grid[i]);
    const StateVector ref = reference_state(p, reference, ite);
    const StateVector psi = trotter_anneal(p, s, splitting);
    scan.full[i] = fidelity_full(ref, psi);
    scan.approx[i] = fidelity_approx(ref, psi);
    scan.approx_tv[i] = fidelity_approx_tv(ref, psi);
  });
  return scan;
}

StepRule StepRule::fixed(long steps) {
  if (steps < 1) throw InvalidArgument("fixed step count must be >= 1");
  return StepRule(true, static_cast<double>(steps));
}

StepRule StepRule::proportional(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) {
    throw InvalidArgument("proportional step constant must be positive");
  }
  return StepRule(false, c);
}

long StepRule::steps_for(double T) const {
  if (fixed_) return static_cast<long>(value_);
  return std::max(1L, std::lround(value_ * T * T));
}

std::vector<InfidelityRow> infidelity_vs_T(const ChainParams& chain, double x,
                                           const std::vector<double>& T_list,
                                           const StepRule& rule,
                                           Reference reference,
                                           Splitting splitting) {
  if (T_list.empty()) throw InvalidArgument("infidelity_vs_T: empty T list");
  const IsingParams p = chain.at(x);
  const StateVector ref = reference_state(p, reference);
  std::vector<InfidelityRow> rows(T_list.size());
  parallel_for(T_list.size(), [&](std::size_t i) {
    const ScheduleParams s{T_list[i], rule.steps_for(T_list[i])};
    const StateVector psi = trotter_anneal(p, s, splitting);
    rows[i] = {s.T, s.M, 1.0 - fidelity_full(ref, psi),
               1.0 - fidelity_approx(ref, psi)};
  });
  return rows;
}

Eigen::MatrixXd basis_functions(const ChainParams& chain,
                                const ScheduleParams& s,
                                const std::vector<double>& x_grid,
                                Splitting splitting) {
  if (x_grid.empty()) throw InvalidArgument("basis_functions: empty x grid");
  chain.at(0.0).validate();
  const auto dim = Eigen::Index{1} << chain.n_qubits;
  Eigen::MatrixXd out(dim, static_cast<Eigen::Index>(x_grid.size()));
  parallel_for(x_grid.size(), [&](std::size_t i) {
    const StateVector psi = trotter_anneal(chain.at(x_grid[i]), s, splitting);
    const auto col = static_cast<Eigen::Index>(i);
    for (Eigen::Index j = 0; j < dim; ++j) {
      out(j, col) = std::norm(psi[static_cast<std::size_t>(j)]);
    }
  });
  return out;
}

}  // namespace gsfm
