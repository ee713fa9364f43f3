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
/// The ground-state feature map: digitized linear annealing from |+>^N under
/// H(t; x) = (1 - t/T) H_0 + (t/T) H_1(x), H_0 = -H_X, together with the
/// fidelity metrics and the parameter sweeps built on it.
///
/// Step m (m = 1..M) applies exp(-i dt (1 - m dt/T) H_0) first and then
/// exp(-i (dt^2 m / T) H_1(x)).

#include <Eigen/Dense>
#include <vector>

#include "gsfm/hamiltonians.hpp"
#include "gsfm/statevec.hpp"

namespace gsfm {

/// How each exp(-i a H_1(x)) factor is realized.
enum class Splitting {
  /// exp(-i a/2 D) exp(-i a h H_X) exp(-i a/2 D) with D = H_ZZ + x H_Z.
  strang_split,
  /// Exact exponential of the dense H_1(x); N <= kMaxDenseQubits.
  dense_exact,
};

/// Reference ground state used by the fidelity metrics.
enum class Reference { exact, ite };

/// Ising chain parameters without the feature value x.
struct ChainParams {
  int n_qubits = 4;
  double h = 0.2;
  bool periodic = true;

  IsingParams at(double x) const { return {n_qubits, x, h, periodic}; }
};

struct AnnealRun {
  IsingParams params;
  ScheduleParams schedule;
  Splitting splitting;
  StateVector final_state;
};

/// |psi_G(x; T, M)>.
StateVector trotter_anneal(const IsingParams& p, const ScheduleParams& s,
                           Splitting splitting = Splitting::strang_split);

AnnealRun run_anneal(const IsingParams& p, const ScheduleParams& s,
                     Splitting splitting = Splitting::strang_split);

/// F = |<a|b>|^2.
double fidelity_full(const StateVector& a, const StateVector& b);

/// F~ = 1 - sum_j | |<j|a>|^2 - |<j|b>|^2 | / 2^N.
double fidelity_approx(const StateVector& a, const StateVector& b);

/// 1 - (total-variation distance), i.e. the same sum divided by 2 instead of
/// 2^N. Reported alongside fidelity_approx for comparison only.
double fidelity_approx_tv(const StateVector& a, const StateVector& b);

/// Settings of the imaginary-time reference.
struct IteSettings {
  double tau = 20.0;
  double dtau = 0.01;
};

StateVector reference_state(const IsingParams& p, Reference reference,
                            const IteSettings& ite = {});

struct FidelityScan {
  std::vector<double> x;
  std::vector<double> full;
  std::vector<double> approx;
  std::vector<double> approx_tv;
  ScheduleParams schedule;
  Reference reference;
};

FidelityScan fidelity_scan(const ChainParams& chain, const ScheduleParams& s,
                           const std::vector<double>& x_grid,
                           Reference reference = Reference::exact,
                           Splitting splitting = Splitting::strang_split,
                           const IteSettings& ite = {});

/// Step count as a function of T: a fixed M, or M = round(c T^2) (>= 1).
class StepRule {
 public:
  static StepRule fixed(long steps);
  static StepRule proportional(double c);

  long steps_for(double T) const;
  bool is_fixed() const { return fixed_; }
  double value() const { return value_; }

 private:
  StepRule(bool fixed, double value) : fixed_(fixed), value_(value) {}
  bool fixed_;
  double value_;
};

struct InfidelityRow {
  double T;
  long M;
  double infidelity;
  double infidelity_approx;
};

std::vector<InfidelityRow> infidelity_vs_T(
    const ChainParams& chain, double x, const std::vector<double>& T_list,
    const StepRule& rule, Reference reference = Reference::exact,
    Splitting splitting = Splitting::strang_split);

/// phi_j(x) = |<j|psi_G(x; T, M)>|^2; row j, column = grid point.
Eigen::MatrixXd basis_functions(const ChainParams& chain,
                                const ScheduleParams& s,
                                const std::vector<double>& x_grid,
                                Splitting splitting = Splitting::strang_split);

}  // namespace gsfm
