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

#include "gsfm/spectrum.hpp"

#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>

#include "gsfm/error.hpp"

namespace gsfm {

std::uint64_t EigenvalueSet::total_multiplicity() const {
  return std::accumulate(multiplicities.begin(), multiplicities.end(),
                         std::uint64_t{0});
}

EigenvalueSet eigenvalue_set(const DiagonalOperator& generator) {
  std::map<std::int64_t, std::uint64_t> grouped;
  for (double v : generator.values()) {
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) {
      throw InvalidArgument("generator eigenvalue " + std::to_string(v) +
                            " is not an integer");
    }
    ++grouped[static_cast<std::int64_t>(r)];
  }
  EigenvalueSet out;
  for (const auto& [value, mult] : grouped) {
    out.values.push_back(value);
    out.multiplicities.push_back(mult);
  }
  return out;
}

EigenvalueSet ising_eigenvalue_set(int n_qubits) {
  detail::check_qubit_count(n_qubits);
  EigenvalueSet out;
  std::uint64_t binom = 1;
  for (int k = 0; k <= n_qubits; ++k) {
    // k flipped spins: value N - 2k. Ascending order runs k from N down.
    if (k > 0) binom = binom * (n_qubits - k + 1) / k;
    out.values.insert(out.values.begin(), n_qubits - 2 * k);
    out.multiplicities.insert(out.multiplicities.begin(), binom);
  }
  return out;
}

SpectrumHistogram::SpectrumHistogram(std::int64_t min_frequency,
                                     std::vector<BigInt> counts, bool weighted)
    : min_(min_frequency), counts_(std::move(counts)), weighted_(weighted) {
  if (counts_.empty()) throw InvalidArgument("empty spectrum histogram");
}

BigInt SpectrumHistogram::count(std::int64_t frequency) const {
  if (frequency < min_ || frequency > max_frequency()) return 0;
  return counts_[static_cast<std::size_t>(frequency - min_)];
}

BigInt SpectrumHistogram::total() const {
  BigInt acc = 0;
  for (const auto& c : counts_) acc += c;
  return acc;
}

std::int64_t SpectrumHistogram::degree() const {
  for (std::size_t i = counts_.size(); i-- > 0;) {
    if (counts_[i] != 0) return min_ + static_cast<std::int64_t>(i);
  }
  throw std::logic_error("spectrum histogram has no nonzero bin");
}

std::size_t SpectrumHistogram::support_size() const {
  std::size_t n = 0;
  for (const auto& c : counts_) n += (c != 0);
  return n;
}

bool SpectrumHistogram::is_symmetric() const {
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    const std::int64_t f = min_ + static_cast<std::int64_t>(i);
    if (counts_[i] != count(-f)) return false;
  }
  return true;
}

std::vector<std::pair<std::int64_t, BigInt>> SpectrumHistogram::nonzero()
    const {
  std::vector<std::pair<std::int64_t, BigInt>> out;
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (counts_[i] != 0) {
      out.emplace_back(min_ + static_cast<std::int64_t>(i), counts_[i]);
    }
  }
  return out;
}

SpectrumHistogram mode_spectrum(const EigenvalueSet& ev, long M, bool weighted,
                                std::int64_t bin_budget) {
  if (M < 1) throw InvalidArgument("mode_spectrum: M must be >= 1");
  if (ev.values.empty() || ev.values.size() != ev.multiplicities.size()) {
    throw InvalidArgument("mode_spectrum: malformed eigenvalue set");
  }
  const std::int64_t uploads = static_cast<std::int64_t>(M) * (M + 1) / 2;
  const std::int64_t lo = std::min<std::int64_t>(0, ev.min_value()) * uploads;
  const std::int64_t hi = std::max<std::int64_t>(0, ev.max_value()) * uploads;
  if (-lo > bin_budget || hi > bin_budget) {
    throw SizeError("mode spectrum support [" + std::to_string(lo) + ", " +
                    std::to_string(hi) + "] exceeds the bin budget");
  }
  const auto bins = static_cast<std::size_t>(hi - lo + 1);
  std::vector<BigInt> weights(ev.size());
  for (std::size_t l = 0; l < ev.size(); ++l) {
    weights[l] = weighted ? BigInt(ev.multiplicities[l]) : BigInt(1);
  }

  std::vector<BigInt> current(bins);
  std::vector<BigInt> next(bins);
  current[static_cast<std::size_t>(-lo)] = 1;
  std::int64_t reach_lo = 0;  // occupied range, frequency units
  std::int64_t reach_hi = 0;
  for (long m = 1; m <= M; ++m) {
    for (auto& c : next) c = 0;
    for (std::int64_t f = reach_lo; f <= reach_hi; ++f) {
      const BigInt& c = current[static_cast<std::size_t>(f - lo)];
      if (c == 0) continue;
      for (std::size_t l = 0; l < ev.size(); ++l) {
        const std::int64_t g = f + m * ev.values[l];
        next[static_cast<std::size_t>(g - lo)] += c * weights[l];
      }
    }
    reach_lo += m * std::min<std::int64_t>(0, ev.min_value());
    reach_hi += m * std::max<std::int64_t>(0, ev.max_value());
    std::swap(current, next);
  }
  return SpectrumHistogram(lo, std::move(current), weighted);
}

SpectrumHistogram gap_spectrum(const SpectrumHistogram& mode) {
  const auto& c = mode.raw_counts();
  const auto n = static_cast<std::int64_t>(c.size());
  // gap g = f - f' with f, f' indices into c; g ranges over [-(n-1), n-1].
  std::vector<BigInt> out(static_cast<std::size_t>(2 * n - 1));
  for (std::int64_t i = 0; i < n; ++i) {
    if (c[static_cast<std::size_t>(i)] == 0) continue;
    for (std::int64_t k = 0; k < n; ++k) {
      if (c[static_cast<std::size_t>(k)] == 0) continue;
      out[static_cast<std::size_t>(i - k + n - 1)] +=
          c[static_cast<std::size_t>(i)] * c[static_cast<std::size_t>(k)];
    }
  }
  SpectrumHistogram gap(-(n - 1), std::move(out), mode.weighted());
  gap.set_unit(mode.unit());
  return gap;
}

TowerSpectrum tower_spectrum(int n_qubits) {
  detail::check_qubit_count(n_qubits);
  const std::int64_t top =
      static_cast<std::int64_t>(n_qubits) * (n_qubits + 1) / 2;
  // Subset-sum over sign choices: sums of +-j for j = 1..N.
  std::vector<std::uint64_t> ways(static_cast<std::size_t>(2 * top + 1), 0);
  ways[static_cast<std::size_t>(top)] = 1;
  for (int j = 1; j <= n_qubits; ++j) {
    std::vector<std::uint64_t> next(ways.size(), 0);
    for (std::int64_t s = -top; s <= top; ++s) {
      const auto w = ways[static_cast<std::size_t>(s + top)];
      if (w == 0) continue;
      next[static_cast<std::size_t>(s + j + top)] += w;
      next[static_cast<std::size_t>(s - j + top)] += w;
    }
    ways = std::move(next);
  }
  EigenvalueSet ev;
  for (std::int64_t s = -top; s <= top; ++s) {
    const auto w = ways[static_cast<std::size_t>(s + top)];
    if (w == 0) continue;
    ev.values.push_back(s);
    ev.multiplicities.push_back(w);
  }
  SpectrumHistogram mode = mode_spectrum(ev, 1, /*weighted=*/false);
  SpectrumHistogram gap = gap_spectrum(mode);
  return TowerSpectrum{std::move(ev), std::move(mode), std::move(gap)};
}

std::vector<DegreeScalingRow> degree_scaling(const std::vector<int>& n_list,
                                             GapModel model, double c) {
  if (n_list.empty()) throw InvalidArgument("degree_scaling: empty N list");
  if (!(c > 0.0)) throw InvalidArgument("degree_scaling: c must be positive");
  std::vector<DegreeScalingRow> rows;
  rows.reserve(n_list.size());
  for (int n : n_list) {
    if (n < 1) throw InvalidArgument("degree_scaling: N must be >= 1");
    const double delta = model == GapModel::poly
                             ? c / n
                             : c * std::exp2(-0.5 * static_cast<double>(n));
    // T = 1 / Delta^2, formed without squaring the rounded gap so that the
    // c = 1 columns come out as exact integers.
    const double T = model == GapModel::poly
                         ? static_cast<double>(n) * n / (c * c)
                         : std::exp2(static_cast<double>(n)) / (c * c);
    rows.push_back({n, static_cast<std::int64_t>(n) * (n + 1), delta, T,
                    static_cast<double>(n) * T});
  }
  return rows;
}

}  // namespace gsfm
