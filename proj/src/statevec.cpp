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

#include "gsfm/statevec.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <utility>

#include "gsfm/error.hpp"

namespace gsfm {

namespace detail {

void check_qubit_count(int n) {
  if (n < 1 || n > kMaxQubits) {
    throw SizeError("qubit count " + std::to_string(n) +
                    " outside supported range [1, " +
                    std::to_string(kMaxQubits) + "]");
  }
}

void rx_all_inplace(std::span<Complex> amps, int n_qubits, double angle) {
  const double c = std::cos(angle);
  const Complex s{0.0, -std::sin(angle)};
  const std::size_t dim = amps.size();
  for (int a = 0; a < n_qubits; ++a) {
    const std::size_t bit = std::size_t{1} << a;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      const Complex lo = amps[j];
      const Complex hi = amps[j | bit];
      amps[j] = c * lo + s * hi;
      amps[j | bit] = s * lo + c * hi;
    }
  }
}

void x_decay_all_inplace(std::span<Complex> amps, int n_qubits, double tau) {
  // exp(-tau X) = cosh(tau) I - sinh(tau) X
  const double c = std::cosh(tau);
  const double s = -std::sinh(tau);
  const std::size_t dim = amps.size();
  for (int a = 0; a < n_qubits; ++a) {
    const std::size_t bit = std::size_t{1} << a;
    for (std::size_t j = 0; j < dim; ++j) {
      if (j & bit) continue;
      const Complex lo = amps[j];
      const Complex hi = amps[j | bit];
      amps[j] = c * lo + s * hi;
      amps[j | bit] = s * lo + c * hi;
    }
  }
}

}  // namespace detail

namespace {

void check_same_dim(std::size_t a, std::size_t b, const char* op) {
  if (a != b) {
    throw DimensionMismatch(std::string(op) + ": dimension " +
                            std::to_string(a) + " vs " + std::to_string(b));
  }
}

double squared_norm(std::span<const Complex> amps) {
  double acc = 0.0;
  for (const auto& z : amps) acc += std::norm(z);
  return acc;
}

}  // namespace

DiagonalOperator::DiagonalOperator(int n_qubits, std::vector<double> values)
    : n_qubits_(n_qubits), values_(std::move(values)) {
  detail::check_qubit_count(n_qubits);
  check_same_dim(values_.size(), std::size_t{1} << n_qubits,
                 "DiagonalOperator");
  for (double v : values_) {
    if (!std::isfinite(v)) {
      throw InvalidArgument("DiagonalOperator: non-finite entry");
    }
  }
}

DiagonalOperator DiagonalOperator::combined(double a,
                                            const DiagonalOperator& other,
                                            double b) const {
  check_same_dim(dim(), other.dim(), "DiagonalOperator::combined");
  std::vector<double> out(dim());
  for (std::size_t j = 0; j < out.size(); ++j) {
    out[j] = a * values_[j] + b * other.values_[j];
  }
  return DiagonalOperator(n_qubits_, std::move(out));
}

StateVector::StateVector(int n_qubits) : n_qubits_(n_qubits) {
  detail::check_qubit_count(n_qubits);
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(int n_qubits, std::vector<Complex> amps)
    : n_qubits_(n_qubits), amps_(std::move(amps)) {}

StateVector StateVector::basis(int n_qubits, std::uint64_t index) {
  StateVector s(n_qubits);
  if (index >= s.dim()) {
    throw InvalidArgument("basis index " + std::to_string(index) +
                          " out of range");
  }
  s.amps_[0] = 0.0;
  s.amps_[index] = 1.0;
  return s;
}

StateVector StateVector::from_amplitudes(int n_qubits,
                                         std::vector<Complex> amps,
                                         double tolerance) {
  detail::check_qubit_count(n_qubits);
  check_same_dim(amps.size(), std::size_t{1} << n_qubits,
                 "StateVector::from_amplitudes");
  const double n2 = squared_norm(amps);
  if (!(std::abs(n2 - 1.0) <= tolerance)) {
    throw InvalidArgument("StateVector::from_amplitudes: squared norm " +
                          std::to_string(n2) + " is not 1");
  }
  return StateVector(n_qubits, std::move(amps));
}

StateVector StateVector::normalized(int n_qubits, std::vector<Complex> amps) {
  detail::check_qubit_count(n_qubits);
  check_same_dim(amps.size(), std::size_t{1} << n_qubits,
                 "StateVector::normalized");
  const double n2 = squared_norm(amps);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw NumericalError("cannot normalize a vanishing or non-finite vector");
  }
  const double scale = 1.0 / std::sqrt(n2);
  for (auto& z : amps) z *= scale;
  return StateVector(n_qubits, std::move(amps));
}

double StateVector::norm() const { return std::sqrt(squared_norm(amps_)); }

std::vector<double> StateVector::probabilities() const {
  std::vector<double> p(amps_.size());
  for (std::size_t j = 0; j < p.size(); ++j) p[j] = std::norm(amps_[j]);
  return p;
}

StateVector StateVector::with_phase(Complex phase) const {
  if (std::abs(std::abs(phase) - 1.0) > 1e-12) {
    throw InvalidArgument("with_phase: phase must have unit modulus");
  }
  std::vector<Complex> out(amps_);
  for (auto& z : out) z *= phase;
  return StateVector(n_qubits_, std::move(out));
}

StateVector plus_state(int n) {
  detail::check_qubit_count(n);
  const std::size_t dim = std::size_t{1} << n;
  const double amp = std::pow(2.0, -0.5 * n);
  return StateVector::from_amplitudes(n, std::vector<Complex>(dim, amp));
}

StateVector apply_diagonal_phase(StateVector state, const DiagonalOperator& d,
                                 double angle) {
  check_same_dim(state.dim(), d.dim(), "apply_diagonal_phase");
  if (angle == 0.0) return state;
  for (std::size_t j = 0; j < state.amps_.size(); ++j) {
    const double phi = -angle * d[j];
    state.amps_[j] *= Complex{std::cos(phi), std::sin(phi)};
  }
  return state;
}

StateVector apply_rx_all(StateVector state, double angle) {
  if (angle == 0.0) return state;
  detail::rx_all_inplace(state.amps_, state.n_qubits_, angle);
  return state;
}

Complex inner(const StateVector& a, const StateVector& b) {
  check_same_dim(a.dim(), b.dim(), "inner");
  Complex acc{};
  for (std::size_t j = 0; j < a.dim(); ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

double expect_diagonal(const StateVector& state, const DiagonalOperator& d) {
  check_same_dim(state.dim(), d.dim(), "expect_diagonal");
  double acc = 0.0;
  for (std::size_t j = 0; j < state.dim(); ++j) {
    acc += d[j] * std::norm(state[j]);
  }
  return acc;
}

StateVector canonical_phase(const StateVector& state) {
  std::size_t best = 0;
  double best_mag = -1.0;
  for (std::size_t j = 0; j < state.dim(); ++j) {
    const double mag = std::abs(state[j]);
    if (mag > best_mag + 1e-12) {
      best = j;
      best_mag = mag;
    }
  }
  const Complex pivot = state[best];
  const double pivot_mag = std::abs(pivot);
  if (pivot_mag == 0.0) return state;
  const Complex phase = std::conj(pivot) / pivot_mag;
  std::vector<Complex> out(state.amplitudes().begin(),
                           state.amplitudes().end());
  for (auto& z : out) z *= phase;
  // Pin the pivot exactly so that a second application is the identity.
  out[best] = pivot_mag;
  return StateVector::from_amplitudes(state.n_qubits(), std::move(out));
}

}  // namespace gsfm
