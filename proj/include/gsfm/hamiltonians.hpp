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
/// Ising chain with longitudinal and transverse fields, the transverse mixer,
/// the linear annealing interpolation between them, and the tower rotation
/// generator. Energies are in units of the Ising coupling (fixed to 1).

#include <Eigen/Dense>

#include "gsfm/statevec.hpp"

namespace gsfm {

using DenseOperator = Eigen::MatrixXcd;

/// Largest register for which dense 2^N x 2^N matrices are built.
inline constexpr int kMaxDenseQubits = 10;

/// Parameters of H(x) = sum_bonds Z Z + x sum Z + h sum X.
struct IsingParams {
  int n_qubits = 4;
  double x = 0.0;
  double h = 0.2;
  bool periodic = true;

  /// Throws InvalidArgument / SizeError on an invalid combination.
  void validate() const;
};

/// Total time T and Trotter step count M of a digitized linear anneal.
struct ScheduleParams {
  double T = 1.0;
  long M = 1;

  void validate() const;

  /// Delta t = T / M.
  double dt() const { return T / static_cast<double>(M); }
  /// Weight of the target Hamiltonian at step m (1-based): dt^2 m / T.
  double t_m(long m) const { return dt() * dt() * static_cast<double>(m) / T; }
  /// Weight of the mixer at step m: dt (1 - m dt / T).
  double mixer_weight(long m) const {
    return dt() * (1.0 - static_cast<double>(m) * dt() / T);
  }
};

/// sum_a Z_a; value on basis j is N - 2 popcount(j).
DiagonalOperator hz_diagonal(int n_qubits);

/// sum over nearest-neighbour bonds of Z_a Z_b. With periodic boundaries the
/// chain has N bonds (a, a+1 mod N); a 2-site ring therefore counts the pair
/// twice.
DiagonalOperator hzz_diagonal(int n_qubits, bool periodic);

/// H_ZZ + x H_Z.
DiagonalOperator ising_diagonal(const IsingParams& p);

/// Dense sum_a X_a.
DenseOperator hx_dense(int n_qubits);

/// Dense H(x) = ising_diagonal(p) + h H_X.
DenseOperator ising_dense(const IsingParams& p);

/// (1 - s) H_0 + s H(x) with H_0 = -H_X.
DenseOperator anneal_hamiltonian(const IsingParams& p, double s);

/// sum_j j Z_j with j = 1..N (qubit a carries prefactor a + 1).
DiagonalOperator tower_generator(int n_qubits);

}  // namespace gsfm
