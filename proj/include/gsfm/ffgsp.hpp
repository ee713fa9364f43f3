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
/// Fast-forwarded ground-state preparation on an ancilla-extended register.
///
/// With a = |psi_0> (x) |0>_anc and b = |psi_G> (x) |1>_anc, the generator
/// G = |b><a| + |a><b| satisfies G^2 = P = |a><a| + |b><b| and
///   exp(-i theta G) = (1 - P) + cos(theta) P - i sin(theta) G,
/// which maps a to -i b at theta = pi/2. The ancilla is the most significant
/// qubit (index N).

#include <cstdint>
#include <string>
#include <vector>

#include "gsfm/hamiltonians.hpp"
#include "gsfm/statevec.hpp"

namespace gsfm {

/// Largest extended register for which Pauli decompositions are computed.
inline constexpr int kMaxPauliQubits = 7;

/// Default threshold below which Pauli coefficients are dropped.
inline constexpr double kPauliPruneThreshold = 1e-12;

using Amplitudes = std::vector<Complex>;

struct RankTwoGenerator {
  int n_total;
  StateVector initial_ext;  // a
  StateVector ground_ext;   // b
};

/// Extends both states by one ancilla qubit. Throws DimensionMismatch on
/// unequal registers; both inputs are already normalized by construction of
/// StateVector.
RankTwoGenerator build_generator(const StateVector& psi_initial,
                                 const StateVector& psi_ground);

/// Generator from |+>^N and the exact ground state of the Ising chain at p.
RankTwoGenerator ising_generator(const IsingParams& p);

/// G v.
Amplitudes apply_generator(const RankTwoGenerator& g,
                           std::span<const Complex> v);
/// P v.
Amplitudes apply_projector(const RankTwoGenerator& g,
                           std::span<const Complex> v);

/// exp(-i theta G) |state> in closed form, O(2^n).
StateVector u_ff_apply(const RankTwoGenerator& g, double theta,
                       const StateVector& state);

struct GeneratorIdentityReport {
  double g_squared_vs_projector;
  double g_fourth_vs_projector;
  double g_times_projector_vs_g;
  double projector_idempotence;
  double projector_fixes_states;
  double projector_annihilates_complement;
  double unitarity;

  double max_deviation() const;
};

/// Evaluates every identity on `samples` random states (fixed seed).
GeneratorIdentityReport verify_generator_identities(
    const RankTwoGenerator& g, int samples = 50, std::uint64_t seed = 2024);

/// Tensor product of single-qubit Paulis, stored as bit masks: qubit q carries
/// X if only x-bit q is set, Z if only z-bit q is set, Y if both.
struct PauliWord {
  int n_qubits = 0;
  std::uint64_t x_mask = 0;
  std::uint64_t z_mask = 0;

  /// Word for a string over {I, X, Y, Z}; character q acts on qubit q.
  static PauliWord parse(const std::string& text);
  /// Word number `index` of the 4^n enumeration (base-4 digit q selects
  /// I, X, Y, Z on qubit q).
  static PauliWord from_index(int n_qubits, std::uint64_t index);

  std::string to_string() const;
  bool is_identity() const { return x_mask == 0 && z_mask == 0; }

  friend bool operator==(const PauliWord&, const PauliWord&) = default;
};

/// P v for a Pauli word.
Amplitudes apply_pauli(const PauliWord& word, std::span<const Complex> v);

bool commutes(const PauliWord& a, const PauliWord& b);
bool commutes_qubitwise(const PauliWord& a, const PauliWord& b);

struct PauliWordTerm {
  PauliWord word;
  /// Tr(P G) / 2^n; real up to rounding for Hermitian G.
  Complex coefficient;
};

/// G = sum_k phi_k P_k over all 4^n words, dropping |phi_k| <= threshold.
/// Uses Tr(P G) = <a|P|b> + <b|P|a>. Throws SizeError above kMaxPauliQubits.
std::vector<PauliWordTerm> pauli_decompose(
    const RankTwoGenerator& g, double threshold = kPauliPruneThreshold);

/// sum_k phi_k P_k v.
Amplitudes apply_pauli_sum(const std::vector<PauliWordTerm>& terms,
                           std::span<const Complex> v);

enum class CommutationRule { general, qubitwise };

struct CommutingPartition {
  std::vector<std::vector<PauliWordTerm>> groups;
  CommutationRule rule;

  std::size_t num_words() const;
};

/// Greedy first-fit coloring over terms sorted by descending |coefficient|.
CommutingPartition commuting_partition(const std::vector<PauliWordTerm>& terms,
                                       CommutationRule rule);

/// Exhaustive pairwise check of every group.
bool partition_is_valid(const CommutingPartition& partition);

struct TrotterizedFfPoint {
  long steps;
  /// |<b| U_trot |a>|^2.
  double fidelity;
  StateVector state;
};

/// prod_{m=1}^{M_S} prod_Gamma exp(-i pi/(2 M_S) H_Gamma) applied to a, with
/// H_Gamma the sum of the terms of group Gamma; one point per entry of
/// `step_counts`. The first group is the leftmost factor.
std::vector<TrotterizedFfPoint> trotterized_ff(
    const RankTwoGenerator& g, const CommutingPartition& partition,
    const std::vector<long>& step_counts);

struct WordCountRow {
  int n_qubits;  // system qubits N, register is N + 1
  double x;
  std::uint64_t universe;  // 4^(N+1)
  std::uint64_t system_words;  // 4^N
  std::uint64_t nonzero_words;
  std::size_t groups_general;
  std::size_t groups_qubitwise;
};

/// Word and group counts for the Ising generator at each N (N <= 6).
std::vector<WordCountRow> word_count_scaling(
    const std::vector<int>& n_list, double x, double h = 0.2,
    double threshold = kPauliPruneThreshold);

}  // namespace gsfm
