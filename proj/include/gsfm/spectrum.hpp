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
/// Exact frequency spectra of re-uploaded diagonal generators.
///
/// A digitized anneal with M steps uploads x through exp(-i t_m x H_G),
/// t_m = m dt^2 / T. In integer units of dt^2 / T, the mode spectrum holds the
/// frequencies sum_m m * lambda_{l_m} over every choice sequence of generator
/// eigenvalues, and the gap spectrum holds all pairwise differences of modes.
/// Degeneracy counts are exact arbitrary-precision integers.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <utility>
#include <vector>

#include "gsfm/statevec.hpp"

namespace gsfm {

using BigInt = boost::multiprecision::cpp_int;

/// Distinct eigenvalues (ascending) of an integer-spectrum generator with the
/// dimension of each eigenspace.
struct EigenvalueSet {
  std::vector<std::int64_t> values;
  std::vector<std::uint64_t> multiplicities;

  std::size_t size() const { return values.size(); }
  std::int64_t max_value() const { return values.back(); }
  std::int64_t min_value() const { return values.front(); }
  std::uint64_t total_multiplicity() const;
};

/// Groups the entries of a diagonal generator. Throws InvalidArgument if any
/// entry is not an integer.
EigenvalueSet eigenvalue_set(const DiagonalOperator& generator);

/// H_Z on N qubits: values -N + 2k with multiplicity C(N, k), k = 0..N.
EigenvalueSet ising_eigenvalue_set(int n_qubits);

/// Histogram of integer frequencies with exact counts.
class SpectrumHistogram {
 public:
  /// counts[i] is the count of frequency min_frequency + i.
  SpectrumHistogram(std::int64_t min_frequency, std::vector<BigInt> counts,
                    bool weighted);

  std::int64_t min_frequency() const { return min_; }
  std::int64_t max_frequency() const {
    return min_ + static_cast<std::int64_t>(counts_.size()) - 1;
  }
  const std::vector<BigInt>& raw_counts() const { return counts_; }

  BigInt count(std::int64_t frequency) const;
  BigInt total() const;

  /// Largest frequency with a nonzero count.
  std::int64_t degree() const;
  /// Number of frequencies with a nonzero count, |Sigma|.
  std::size_t support_size() const;
  /// (|Sigma| - 1) / 2.
  double width() const { return (static_cast<double>(support_size()) - 1) / 2; }
  bool is_symmetric() const;

  std::vector<std::pair<std::int64_t, BigInt>> nonzero() const;

  bool weighted() const { return weighted_; }

  /// Physical frequency (in x-radians) of one integer unit; dt^2/T = T/M^2
  /// for an anneal, 1 for a rotation map.
  double unit() const { return unit_; }
  void set_unit(double unit) { unit_ = unit; }

 private:
  std::int64_t min_;
  std::vector<BigInt> counts_;
  bool weighted_;
  double unit_ = 1.0;
};

/// Upper bound on histogram bins on either side of zero.
inline constexpr std::int64_t kDefaultBinBudget = std::int64_t{1} << 22;

/// Mode spectrum of M uploads with weights m = 1..M, built by convolving the
/// running histogram with sum_l w_l z^{m lambda_l}, where w_l is the eigenspace
/// dimension (weighted) or 1. Throws SizeError if the support exceeds budget.
SpectrumHistogram mode_spectrum(const EigenvalueSet& ev, long M, bool weighted,
                                std::int64_t bin_budget = kDefaultBinBudget);

/// Discrete autocorrelation: gap[g] = sum_f mode[f] mode[f - g].
SpectrumHistogram gap_spectrum(const SpectrumHistogram& mode);

struct TowerSpectrum {
  EigenvalueSet eigenvalues;
  SpectrumHistogram mode;
  SpectrumHistogram gap;
};

/// Spectra of the tower rotation map with generator sum_j j Z_j, a single
/// upload. Eigenvalues are counted by subset-sum dynamic programming; the
/// mode histogram is unweighted (one entry per distinct eigenvalue).
TowerSpectrum tower_spectrum(int n_qubits);

enum class GapModel {
  /// Delta_min = c / N.
  poly,
  /// Delta_min = c 2^{-N/2}.
  exp,
};

struct DegreeScalingRow {
  int n_qubits;
  /// Gap degree of the tower map, N (N + 1).
  std::int64_t rotation_degree;
  double delta_min;
  /// Required anneal time Delta_min^{-2}.
  double anneal_time;
  /// max(Lambda) * T = N * T.
  double gsp_degree;
};

std::vector<DegreeScalingRow> degree_scaling(const std::vector<int>& n_list,
                                             GapModel model, double c = 1.0);

}  // namespace gsfm
