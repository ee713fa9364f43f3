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

#include "gsfm/hamiltonians.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "gsfm/error.hpp"

namespace gsfm {

namespace {

inline double z_eigenvalue(std::size_t basis, int qubit) {
  return ((basis >> qubit) & 1U) ? -1.0 : 1.0;
}

void check_dense_size(int n) {
  if (n < 1 || n > kMaxDenseQubits) {
    throw SizeError("dense operators support 1.." +
                    std::to_string(kMaxDenseQubits) + " qubits, got " +
                    std::to_string(n));
  }
}

DenseOperator from_diagonal(const DiagonalOperator& d) {
  DenseOperator out = DenseOperator::Zero(d.dim(), d.dim());
  for (std::size_t j = 0; j < d.dim(); ++j) out(j, j) = d[j];
  return out;
}

}  // namespace

void IsingParams::validate() const {
  if (periodic && n_qubits < 2) {
    throw InvalidArgument("a periodic chain needs at least 2 sites");
  }
  detail::check_qubit_count(n_qubits);
  if (!std::isfinite(x) || !std::isfinite(h)) {
    throw InvalidArgument("Ising fields must be finite");
  }
}

void ScheduleParams::validate() const {
  if (!(T > 0.0) || !std::isfinite(T)) {
    throw InvalidArgument("total time T must be positive and finite");
  }
  if (M < 1) throw InvalidArgument("Trotter step count M must be >= 1");
}

DiagonalOperator hz_diagonal(int n_qubits) {
  detail::check_qubit_count(n_qubits);
  std::vector<double> v(std::size_t{1} << n_qubits);
  for (std::size_t j = 0; j < v.size(); ++j) {
    v[j] = n_qubits - 2.0 * std::popcount(j);
  }
  return DiagonalOperator(n_qubits, std::move(v));
}

DiagonalOperator hzz_diagonal(int n_qubits, bool periodic) {
  detail::check_qubit_count(n_qubits);
  const int bonds = periodic ? n_qubits : n_qubits - 1;
  std::vector<double> v(std::size_t{1} << n_qubits, 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    double acc = 0.0;
    for (int a = 0; a < bonds; ++a) {
      acc += z_eigenvalue(j, a) * z_eigenvalue(j, (a + 1) % n_qubits);
    }
    v[j] = acc;
  }
  return DiagonalOperator(n_qubits, std::move(v));
}

DiagonalOperator ising_diagonal(const IsingParams& p) {
  p.validate();
  return hzz_diagonal(p.n_qubits, p.periodic)
      .combined(1.0, hz_diagonal(p.n_qubits), p.x);
}

DenseOperator hx_dense(int n_qubits) {
  check_dense_size(n_qubits);
  const std::size_t dim = std::size_t{1} << n_qubits;
  DenseOperator out = DenseOperator::Zero(dim, dim);
  for (std::size_t j = 0; j < dim; ++j) {
    for (int a = 0; a < n_qubits; ++a) {
      out(j ^ (std::size_t{1} << a), j) += 1.0;
    }
  }
  return out;
}

DenseOperator ising_dense(const IsingParams& p) {
  p.validate();
  check_dense_size(p.n_qubits);
  DenseOperator out = from_diagonal(ising_diagonal(p));
  if (p.h != 0.0) out += p.h * hx_dense(p.n_qubits);
  return out;
}

DenseOperator anneal_hamiltonian(const IsingParams& p, double s) {
  if (!(s >= 0.0 && s <= 1.0)) {
    throw InvalidArgument("anneal fraction s must lie in [0, 1]");
  }
  p.validate();
  check_dense_size(p.n_qubits);
  if (s == 0.0) return -hx_dense(p.n_qubits);
  if (s == 1.0) return ising_dense(p);
  return (s - 1.0) * hx_dense(p.n_qubits) + s * ising_dense(p);
}

DiagonalOperator tower_generator(int n_qubits) {
  detail::check_qubit_count(n_qubits);
  std::vector<double> v(std::size_t{1} << n_qubits, 0.0);
  for (std::size_t j = 0; j < v.size(); ++j) {
    double acc = 0.0;
    for (int a = 0; a < n_qubits; ++a) acc += (a + 1) * z_eigenvalue(j, a);
    v[j] = acc;
  }
  return DiagonalOperator(n_qubits, std::move(v));
}

}  // namespace gsfm
