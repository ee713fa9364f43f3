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

#include "gsfm/ffgsp.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

#include "gsfm/error.hpp"
#include "gsfm/groundtruth.hpp"
#include "gsfm/parallel.hpp"

namespace gsfm {

namespace {

Complex dot(std::span<const Complex> a, std::span<const Complex> b) {
  Complex acc{};
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::conj(a[j]) * b[j];
  return acc;
}

double distance(std::span<const Complex> a, std::span<const Complex> b) {
  double acc = 0.0;
  for (std::size_t j = 0; j < a.size(); ++j) acc += std::norm(a[j] - b[j]);
  return std::sqrt(acc);
}

double norm2(std::span<const Complex> a) {
  double acc = 0.0;
  for (const auto& z : a) acc += std::norm(z);
  return std::sqrt(acc);
}

void check_dim(const RankTwoGenerator& g, std::size_t dim) {
  if (dim != g.initial_ext.dim()) {
    throw DimensionMismatch("vector does not match the extended register");
  }
}

/// i^k for k mod 4.
Complex i_power(int k) {
  switch (k & 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return {0.0, 1.0};
    case 2:
      return {-1.0, 0.0};
    default:
      return {0.0, -1.0};
  }
}

Amplitudes random_state(std::size_t dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal;
  Amplitudes v(dim);
  for (auto& z : v) z = {normal(rng), normal(rng)};
  const double n = norm2(v);
  for (auto& z : v) z /= n;
  return v;
}

/// <a| P |b> for a Pauli word without materializing P|b>.
Complex pauli_matrix_element(const PauliWord& w, std::span<const Complex> a,
                             std::span<const Complex> b) {
  const Complex base = i_power(std::popcount(w.x_mask & w.z_mask));
  Complex acc{};
  for (std::size_t j = 0; j < b.size(); ++j) {
    if (b[j] == Complex{}) continue;
    const double sign = (std::popcount(j & w.z_mask) & 1) ? -1.0 : 1.0;
    acc += std::conj(a[j ^ w.x_mask]) * (sign * b[j]);
  }
  return base * acc;
}

}  // namespace

RankTwoGenerator build_generator(const StateVector& psi_initial,
                                 const StateVector& psi_ground) {
  if (psi_initial.dim() != psi_ground.dim()) {
    throw DimensionMismatch("initial and ground states differ in size");
  }
  const int n = psi_initial.n_qubits() + 1;
  detail::check_qubit_count(n);
  const std::size_t half = psi_initial.dim();
  Amplitudes a(2 * half);
  Amplitudes b(2 * half);
  std::copy(psi_initial.amplitudes().begin(), psi_initial.amplitudes().end(),
            a.begin());
  std::copy(psi_ground.amplitudes().begin(), psi_ground.amplitudes().end(),
            b.begin() + static_cast<std::ptrdiff_t>(half));
  return RankTwoGenerator{n, StateVector::from_amplitudes(n, std::move(a)),
                          StateVector::from_amplitudes(n, std::move(b))};
}

RankTwoGenerator ising_generator(const IsingParams& p) {
  return build_generator(plus_state(p.n_qubits),
                         exact_ground_state(ising_dense(p)).state);
}

Amplitudes apply_generator(const RankTwoGenerator& g,
                           std::span<const Complex> v) {
  check_dim(g, v.size());
  const auto a = g.initial_ext.amplitudes();
  const auto b = g.ground_ext.amplitudes();
  const Complex av = dot(a, v);
  const Complex bv = dot(b, v);
  Amplitudes out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = b[j] * av + a[j] * bv;
  return out;
}

Amplitudes apply_projector(const RankTwoGenerator& g,
                           std::span<const Complex> v) {
  check_dim(g, v.size());
  const auto a = g.initial_ext.amplitudes();
  const auto b = g.ground_ext.amplitudes();
  const Complex av = dot(a, v);
  const Complex bv = dot(b, v);
  Amplitudes out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[j] = a[j] * av + b[j] * bv;
  return out;
}

namespace {

/// exp(-i theta G) v for an arbitrary vector.
Amplitudes u_ff_raw(const RankTwoGenerator& g, double theta,
                    std::span<const Complex> v) {
  const Amplitudes pv = apply_projector(g, v);
  const Amplitudes gv = apply_generator(g, v);
  const double c = std::cos(theta);
  const Complex s{0.0, -std::sin(theta)};
  Amplitudes out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    out[j] = v[j] + (c - 1.0) * pv[j] + s * gv[j];
  }
  return out;
}

}  // namespace

StateVector u_ff_apply(const RankTwoGenerator& g, double theta,
                       const StateVector& state) {
  return StateVector::from_amplitudes(state.n_qubits(),
                                      u_ff_raw(g, theta, state.amplitudes()));
}

double GeneratorIdentityReport::max_deviation() const {
  return std::max({g_squared_vs_projector, g_fourth_vs_projector,
                   g_times_projector_vs_g, projector_idempotence,
                   projector_fixes_states, projector_annihilates_complement,
                   unitarity});
}

GeneratorIdentityReport verify_generator_identities(const RankTwoGenerator& g,
                                                    int samples,
                                                    std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const std::size_t dim = g.initial_ext.dim();
  const auto a = g.initial_ext.amplitudes();
  const auto b = g.ground_ext.amplitudes();
  GeneratorIdentityReport r{};
  r.projector_fixes_states =
      distance(apply_projector(g, a), a) + distance(apply_projector(g, b), b);
  for (int i = 0; i < samples; ++i) {
    const Amplitudes v = random_state(dim, rng);
    const Amplitudes gv = apply_generator(g, v);
    const Amplitudes pv = apply_projector(g, v);
    const Amplitudes g2v = apply_generator(g, gv);
    const Amplitudes g4v = apply_generator(g, apply_generator(g, g2v));
    r.g_squared_vs_projector =
        std::max(r.g_squared_vs_projector, distance(g2v, pv));
    r.g_fourth_vs_projector =
        std::max(r.g_fourth_vs_projector, distance(g4v, pv));
    r.g_times_projector_vs_g = std::max(
        r.g_times_projector_vs_g, distance(apply_generator(g, pv), gv));
    r.projector_idempotence = std::max(r.projector_idempotence,
                                       distance(apply_projector(g, pv), pv));
    Amplitudes complement(dim);
    for (std::size_t j = 0; j < dim; ++j) complement[j] = v[j] - pv[j];
    r.projector_annihilates_complement =
        std::max(r.projector_annihilates_complement,
                 norm2(apply_projector(g, complement)));
    for (double theta : {0.3, 1.0, 2.5}) {
      r.unitarity =
          std::max(r.unitarity, std::abs(norm2(u_ff_raw(g, theta, v)) - 1.0));
    }
  }
  return r;
}

PauliWord PauliWord::parse(const std::string& text) {
  if (text.empty() || text.size() > 64) {
    throw InvalidArgument("Pauli word must have 1..64 characters");
  }
  PauliWord w{static_cast<int>(text.size()), 0, 0};
  for (std::size_t q = 0; q < text.size(); ++q) {
    const std::uint64_t bit = std::uint64_t{1} << q;
    switch (text[q]) {
      case 'I':
        break;
      case 'X':
        w.x_mask |= bit;
        break;
      case 'Y':
        w.x_mask |= bit;
        w.z_mask |= bit;
        break;
      case 'Z':
        w.z_mask |= bit;
        break;
      default:
        throw InvalidArgument("invalid Pauli character in '" + text + "'");
    }
  }
  return w;
}

PauliWord PauliWord::from_index(int n_qubits, std::uint64_t index) {
  PauliWord w{n_qubits, 0, 0};
  for (int q = 0; q < n_qubits; ++q) {
    const auto digit = (index >> (2 * q)) & 3U;
    const std::uint64_t bit = std::uint64_t{1} << q;
    if (digit == 1 || digit == 2) w.x_mask |= bit;
    if (digit == 2 || digit == 3) w.z_mask |= bit;
  }
  return w;
}

std::string PauliWord::to_string() const {
  std::string s(static_cast<std::size_t>(n_qubits), 'I');
  for (int q = 0; q < n_qubits; ++q) {
    const bool x = (x_mask >> q) & 1U;
    const bool z = (z_mask >> q) & 1U;
    s[static_cast<std::size_t>(q)] = x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
  }
  return s;
}

Amplitudes apply_pauli(const PauliWord& word, std::span<const Complex> v) {
  if (v.size() != (std::size_t{1} << word.n_qubits)) {
    throw DimensionMismatch("Pauli word and vector sizes differ");
  }
  const Complex base = i_power(std::popcount(word.x_mask & word.z_mask));
  Amplitudes out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) {
    const double sign = (std::popcount(j & word.z_mask) & 1) ? -1.0 : 1.0;
    out[j ^ word.x_mask] = base * (sign * v[j]);
  }
  return out;
}

bool commutes(const PauliWord& a, const PauliWord& b) {
  const auto anti = (a.x_mask & b.z_mask) ^ (a.z_mask & b.x_mask);
  return (std::popcount(anti) & 1) == 0;
}

bool commutes_qubitwise(const PauliWord& a, const PauliWord& b) {
  const auto support_a = a.x_mask | a.z_mask;
  const auto support_b = b.x_mask | b.z_mask;
  const auto shared = support_a & support_b;
  return ((a.x_mask ^ b.x_mask) & shared) == 0 &&
         ((a.z_mask ^ b.z_mask) & shared) == 0;
}

std::vector<PauliWordTerm> pauli_decompose(const RankTwoGenerator& g,
                                           double threshold) {
  const int n = g.n_total;
  if (n > kMaxPauliQubits) {
    throw SizeError("Pauli decomposition supports at most " +
                    std::to_string(kMaxPauliQubits) + " qubits");
  }
  const std::uint64_t words = std::uint64_t{1} << (2 * n);
  const double scale = 1.0 / static_cast<double>(std::size_t{1} << n);
  const auto a = g.initial_ext.amplitudes();
  const auto b = g.ground_ext.amplitudes();
  std::vector<Complex> coeff(words);
  parallel_for(words, [&](std::size_t k) {
    const PauliWord w = PauliWord::from_index(n, k);
    coeff[k] = (pauli_matrix_element(w, a, b) + pauli_matrix_element(w, b, a)) *
               scale;
  });
  std::vector<PauliWordTerm> terms;
  for (std::uint64_t k = 0; k < words; ++k) {
    if (std::abs(coeff[k]) > threshold) {
      terms.push_back({PauliWord::from_index(n, k), coeff[k]});
    }
  }
  return terms;
}

Amplitudes apply_pauli_sum(const std::vector<PauliWordTerm>& terms,
                           std::span<const Complex> v) {
  Amplitudes out(v.size());
  for (const auto& t : terms) {
    const Amplitudes pv = apply_pauli(t.word, v);
    for (std::size_t j = 0; j < v.size(); ++j) out[j] += t.coefficient * pv[j];
  }
  return out;
}

std::size_t CommutingPartition::num_words() const {
  std::size_t n = 0;
  for (const auto& group : groups) n += group.size();
  return n;
}

CommutingPartition commuting_partition(const std::vector<PauliWordTerm>& terms,
                                       CommutationRule rule) {
  if (terms.empty()) throw InvalidArgument("commuting_partition: no terms");
  std::vector<PauliWordTerm> sorted = terms;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const PauliWordTerm& l, const PauliWordTerm& r) {
                     return std::abs(l.coefficient) > std::abs(r.coefficient);
                   });
  const auto compatible = [rule](const PauliWord& l, const PauliWord& r) {
    return rule == CommutationRule::general ? commutes(l, r)
                                            : commutes_qubitwise(l, r);
  };
  CommutingPartition out{{}, rule};
  for (const auto& term : sorted) {
    auto fits = [&](const std::vector<PauliWordTerm>& group) {
      return std::all_of(group.begin(), group.end(),
                         [&](const PauliWordTerm& member) {
                           return compatible(member.word, term.word);
                         });
    };
    const auto it = std::find_if(out.groups.begin(), out.groups.end(), fits);
    if (it == out.groups.end()) {
      out.groups.push_back({term});
    } else {
      it->push_back(term);
    }
  }
  if (!partition_is_valid(out)) {
    throw std::logic_error("greedy partition produced a non-commuting group");
  }
  return out;
}

bool partition_is_valid(const CommutingPartition& partition) {
  for (const auto& group : partition.groups) {
    for (std::size_t i = 0; i < group.size(); ++i) {
      for (std::size_t j = i + 1; j < group.size(); ++j) {
        const bool ok =
            partition.rule == CommutationRule::general
                ? commutes(group[i].word, group[j].word)
                : commutes_qubitwise(group[i].word, group[j].word);
        if (!ok) return false;
      }
    }
  }
  return true;
}

std::vector<TrotterizedFfPoint> trotterized_ff(
    const RankTwoGenerator& g, const CommutingPartition& partition,
    const std::vector<long>& step_counts) {
  const int n = g.n_total;
  if (n > kMaxPauliQubits) {
    throw SizeError("Trotterized fast-forward supports at most " +
                    std::to_string(kMaxPauliQubits) + " qubits");
  }
  const auto dim = static_cast<Eigen::Index>(g.initial_ext.dim());

  // Eigendecompose each group Hamiltonian once; exponentials per step count.
  struct GroupSpectrum {
    Eigen::VectorXd energies;
    Eigen::MatrixXcd vectors;
  };
  std::vector<GroupSpectrum> spectra;
  spectra.reserve(partition.groups.size());
  for (const auto& group : partition.groups) {
    Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(dim, dim);
    for (const auto& term : group) {
      if (std::abs(term.coefficient.imag()) > 1e-10) {
        throw NumericalError("Pauli coefficient is not real");
      }
      const double phi = term.coefficient.real();
      for (Eigen::Index col = 0; col < dim; ++col) {
        Amplitudes unit(static_cast<std::size_t>(dim));
        unit[static_cast<std::size_t>(col)] = 1.0;
        const Amplitudes image = apply_pauli(term.word, unit);
        for (Eigen::Index row = 0; row < dim; ++row) {
          h(row, col) += phi * image[static_cast<std::size_t>(row)];
        }
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
      throw NumericalError("group Hamiltonian eigensolver failed");
    }
    spectra.push_back({solver.eigenvalues(), solver.eigenvectors()});
  }

  std::vector<TrotterizedFfPoint> out;
  for (long steps : step_counts) {
    if (steps < 1) throw InvalidArgument("Trotter step count must be >= 1");
    const double angle = std::numbers::pi / (2.0 * static_cast<double>(steps));
    std::vector<Eigen::MatrixXcd> unitaries;
    unitaries.reserve(spectra.size());
    for (const auto& sp : spectra) {
      Eigen::VectorXcd phases(sp.energies.size());
      for (Eigen::Index k = 0; k < phases.size(); ++k) {
        phases(k) = std::polar(1.0, -angle * sp.energies(k));
      }
      unitaries.push_back(sp.vectors * phases.asDiagonal() *
                          sp.vectors.adjoint());
    }
    Eigen::VectorXcd psi = Eigen::Map<const Eigen::VectorXcd>(
        g.initial_ext.amplitudes().data(), dim);
    for (long m = 0; m < steps; ++m) {
      // The rightmost factor (last group) acts first.
      for (auto it = unitaries.rbegin(); it != unitaries.rend(); ++it) {
        psi = (*it) * psi;
      }
    }
    auto state = StateVector::from_amplitudes(
        n, Amplitudes(psi.data(), psi.data() + psi.size()), 1e-8);
    const double fid = std::norm(inner(g.ground_ext, state));
    out.push_back({steps, fid, std::move(state)});
  }
  return out;
}

std::vector<WordCountRow> word_count_scaling(const std::vector<int>& n_list,
                                             double x, double h,
                                             double threshold) {
  if (n_list.empty()) throw InvalidArgument("word_count_scaling: empty list");
  std::vector<WordCountRow> rows;
  for (int n : n_list) {
    if (n < 2 || n + 1 > kMaxPauliQubits) {
      throw SizeError("word_count_scaling supports 2 <= N <= " +
                      std::to_string(kMaxPauliQubits - 1));
    }
    const auto g = ising_generator(IsingParams{n, x, h, true});
    const auto terms = pauli_decompose(g, threshold);
    rows.push_back(
        {n, x, std::uint64_t{1} << (2 * (n + 1)), std::uint64_t{1} << (2 * n),
         terms.size(),
         commuting_partition(terms, CommutationRule::general).groups.size(),
         commuting_partition(terms, CommutationRule::qubitwise).groups.size()});
  }
  return rows;
}

}  // namespace gsfm
