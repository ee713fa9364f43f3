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
/// Expectation-value model f(x) = <psi_G(x)| H_Z |psi_G(x)> of the annealed
/// feature map and its discrete Fourier coefficients.
///
/// Over a window [x_min, x_min + L) sampled at P points,
///   c_k = (1/P) sum_i f(x_i) exp(+2 pi i k i / P),  k in [-P/2, P/2),
/// so that f(x_i) = sum_k c_k exp(-i omega_k (x_i - x_min)) with
/// omega_k = 2 pi k / L.

#include <string>
#include <vector>

#include "gsfm/anneal.hpp"
#include "gsfm/statevec.hpp"

namespace gsfm {

struct Window {
  double x_min = 0.0;
  double x_max = 0.0;

  double length() const { return x_max - x_min; }
  /// Short label used in CSV output, e.g. "0:2pi" or "0:4".
  std::string label() const;
  void validate() const;
};

/// [0, 2 pi).
Window two_pi_window();

struct ModelSamples {
  std::vector<double> x;
  std::vector<double> values;
  Window window;
  ChainParams chain;
  ScheduleParams schedule;
  Splitting splitting = Splitting::strang_split;
};

/// Samples the model on the periodic grid of `window` with P points (P a power
/// of two >= 64).
ModelSamples sample_model(const ChainParams& chain, const ScheduleParams& s,
                          const Window& window, std::size_t P,
                          Splitting splitting = Splitting::strang_split);

class CoefficientTable {
 public:
  CoefficientTable(Window window, std::vector<Complex> coefficients);

  std::size_t size() const { return coeffs_.size(); }
  long k_min() const { return -static_cast<long>(coeffs_.size() / 2); }
  long k_max() const { return static_cast<long>(coeffs_.size() / 2) - 1; }
  /// c_k for k in [k_min, k_max].
  Complex at(long k) const;
  const std::vector<Complex>& coefficients() const { return coeffs_; }
  const Window& window() const { return window_; }
  /// Physical frequency of harmonic 1: 2 pi / L.
  double harmonic_frequency() const;

 private:
  Window window_;
  std::vector<Complex> coeffs_;  // index k - k_min
};

/// Throws InvalidArgument if the samples are not on the uniform periodic grid
/// of their window.
CoefficientTable fft_coefficients(const ModelSamples& samples);

/// Transform of raw samples taken on the periodic grid of `window`. The number
/// of samples must be even.
CoefficientTable fft_coefficients(const std::vector<double>& values,
                                  const Window& window);

/// Inverse transform back to samples.
std::vector<double> reconstruct_samples(const CoefficientTable& table);

/// sum_{|k| <= k_cut} |c_k|^2 / (sum_{|k| > k_cut} |c_k|^2 + 1e-30); +inf when
/// the high-frequency power is below 1e-30.
double concentration_ratio(const CoefficientTable& table, long k_cut);

struct TableDiagnostics {
  /// max_k |c_{-k} - conj(c_k)|.
  double conjugate_asymmetry;
  /// |sum |c_k|^2 - mean(f^2)|.
  double parseval_error;
};

TableDiagnostics diagnose(const CoefficientTable& table,
                          const std::vector<double>& samples);

struct ResolutionCheck {
  /// max over |k| <= k_max of | |c_k|(2P) - |c_k|(P) |.
  double max_change;
  bool under_resolved;
};

/// Compares |c_k| at P and 2P samples; flags the run when any harmonic with
/// |k| <= k_max moves by more than `tolerance`.
ResolutionCheck resolution_check(const ChainParams& chain,
                                 const ScheduleParams& s, const Window& window,
                                 std::size_t P, long k_max = 20,
                                 double tolerance = 1e-3,
                                 Splitting splitting = Splitting::strang_split);

/// (T, M) pairs of the four reference coefficient maps, in panel order:
/// (100, 100), (100, 1000), (1000, 100), (1000, 1000).
std::vector<ScheduleParams> reference_coefficient_schedules();

struct CoefficientReport {
  ScheduleParams schedule;
  ModelSamples samples;
  CoefficientTable table;
  TableDiagnostics diagnostics;
};

/// One sampled model and coefficient table per schedule.
std::vector<CoefficientReport> coefficient_report(
    const ChainParams& chain, const std::vector<ScheduleParams>& schedules,
    const Window& window, std::size_t P,
    Splitting splitting = Splitting::strang_split);

}  // namespace gsfm
