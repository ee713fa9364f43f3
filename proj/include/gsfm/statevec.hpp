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
/// Dense statevector engine.
///
/// Basis index j enumerates computational states with qubit 0 as the least
/// significant bit: bit a of j is the state of qubit a.

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace gsfm {

using Complex = std::complex<double>;

/// Largest register the dense engine accepts.
inline constexpr int kMaxQubits = 16;

/// Tolerance on |1 - <psi|psi>| accepted when adopting external amplitudes.
inline constexpr double kNormTolerance = 1e-10;

/// Real diagonal operator in the computational basis.
class DiagonalOperator {
 public:
  /// Throws DimensionMismatch if values.size() != 2^n_qubits and
  /// InvalidArgument on non-finite entries.
  DiagonalOperator(int n_qubits, std::vector<double> values);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return values_.size(); }
  std::span<const double> values() const { return values_; }
  double operator[](std::size_t j) const { return values_[j]; }

  /// Pointwise a*this + b*other.
  DiagonalOperator combined(double a, const DiagonalOperator& other,
                            double b) const;

 private:
  int n_qubits_;
  std::vector<double> values_;
};

/// Normalized pure state of n qubits.
///
/// Every factory and every operation in this header returns a state whose
/// norm is 1 to within kNormTolerance; nothing renormalizes silently.
class StateVector {
 public:
  /// |0...0>.
  explicit StateVector(int n_qubits);

  static StateVector basis(int n_qubits, std::uint64_t index);

  /// Adopts amplitudes that are already normalized. Throws InvalidArgument if
  /// the norm deviates from 1 by more than `tolerance`.
  static StateVector from_amplitudes(int n_qubits, std::vector<Complex> amps,
                                     double tolerance = kNormTolerance);

  /// Explicitly rescales `amps` to unit norm. Throws NumericalError when the
  /// norm has underflowed to zero or is not finite.
  static StateVector normalized(int n_qubits, std::vector<Complex> amps);

  int n_qubits() const { return n_qubits_; }
  std::size_t dim() const { return amps_.size(); }
  std::span<const Complex> amplitudes() const { return amps_; }
  const Complex& operator[](std::size_t j) const { return amps_[j]; }

  double norm() const;
  std::vector<double> probabilities() const;

  /// Copy of the state multiplied by a unit-modulus phase.
  StateVector with_phase(Complex phase) const;

  friend StateVector apply_diagonal_phase(StateVector state,
                                          const DiagonalOperator& d,
                                          double angle);
  friend StateVector apply_rx_all(StateVector state, double angle);

 private:
  StateVector(int n_qubits, std::vector<Complex> amps);

  int n_qubits_;
  std::vector<Complex> amps_;
};

/// |+>^n, every amplitude 2^{-n/2}. Throws SizeError outside [1, kMaxQubits].
StateVector plus_state(int n);

/// amplitude_j <- amplitude_j * exp(-i * angle * d_j).
StateVector apply_diagonal_phase(StateVector state, const DiagonalOperator& d,
                                 double angle);

/// exp(-i * angle * sum_a X_a), applied as one rotation per qubit.
StateVector apply_rx_all(StateVector state, double angle);

/// sum_j conj(a_j) b_j.
Complex inner(const StateVector& a, const StateVector& b);

/// sum_j d_j |amplitude_j|^2.
double expect_diagonal(const StateVector& state, const DiagonalOperator& d);

/// Global-phase convention shared by the ground-state oracles: the
/// largest-magnitude amplitude (lowest index on ties) is made real positive.
StateVector canonical_phase(const StateVector& state);

namespace detail {

void check_qubit_count(int n);

/// In-place exp(-i angle X) on every qubit of a raw amplitude buffer.
void rx_all_inplace(std::span<Complex> amps, int n_qubits, double angle);

/// In-place exp(-tau X) on every qubit (non-unitary, used by imaginary time
/// evolution).
void x_decay_all_inplace(std::span<Complex> amps, int n_qubits, double tau);

}  // namespace detail

}  // namespace gsfm
