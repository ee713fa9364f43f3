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

#include "gsfm/fourier.hpp"

#include <fftw3.h>

#include <bit>
#include <charconv>
#include <cmath>
#include <limits>
#include <memory>
#include <mutex>
#include <numbers>

#include "gsfm/error.hpp"
#include "gsfm/grid.hpp"
#include "gsfm/hamiltonians.hpp"
#include "gsfm/parallel.hpp"

namespace gsfm {

namespace {

std::string shortest(double v) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

// The FFTW planner is not thread-safe; execution of distinct plans is.
std::mutex& planner_mutex() {
  static std::mutex m;
  return m;
}

/// One-shot complex transform of length n in the given FFTW direction.
std::vector<Complex> transform(const std::vector<Complex>& input, int sign) {
  const int n = static_cast<int>(input.size());
  struct FftwFree {
    void operator()(fftw_complex* p) const { fftw_free(p); }
  };
  std::unique_ptr<fftw_complex[], FftwFree> in(fftw_alloc_complex(n));
  std::unique_ptr<fftw_complex[], FftwFree> out(fftw_alloc_complex(n));
  if (!in || !out) throw std::bad_alloc();
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_1d(n, in.get(), out.get(), sign, FFTW_ESTIMATE);
  }
  for (int i = 0; i < n; ++i) {
    in[i][0] = input[i].real();
    in[i][1] = input[i].imag();
  }
  fftw_execute(plan);
  std::vector<Complex> result(input.size());
  for (int i = 0; i < n; ++i) result[i] = {out[i][0], out[i][1]};
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  return result;
}

}  // namespace

std::string Window::label() const {
  if (x_min == 0.0 && std::abs(x_max - 2.0 * std::numbers::pi) < 1e-12) {
    return "0:2pi";
  }
  return shortest(x_min) + ":" + shortest(x_max);
}

void Window::validate() const {
  if (!std::isfinite(x_min) || !std::isfinite(x_max) || !(x_max > x_min)) {
    throw InvalidArgument("window must satisfy x_min < x_max");
  }
}

Window two_pi_window() { return {0.0, 2.0 * std::numbers::pi}; }

ModelSamples sample_model(const ChainParams& chain, const ScheduleParams& s,
                          const Window& window, std::size_t P,
                          Splitting splitting) {
  window.validate();
  s.validate();
  if (P < 64 || !std::has_single_bit(P)) {
    throw InvalidArgument("sample count P must be a power of two >= 64");
  }
  ModelSamples out{periodic_grid(window.x_min, window.x_max, P),
                   std::vector<double>(P),
                   window,
                   chain,
                   s,
                   splitting};
  const DiagonalOperator hz = hz_diagonal(chain.n_qubits);
  parallel_for(P, [&](std::size_t i) {
    const StateVector psi = trotter_anneal(chain.at(out.x[i]), s, splitting);
    out.values[i] = expect_diagonal(psi, hz);
  });
  return out;
}

CoefficientTable::CoefficientTable(Window window,
                                   std::vector<Complex> coefficients)
    : window_(window), coeffs_(std::move(coefficients)) {
  if (coeffs_.empty() || coeffs_.size() % 2 != 0) {
    throw InvalidArgument("coefficient table needs an even, nonzero size");
  }
}

Complex CoefficientTable::at(long k) const {
  if (k < k_min() || k > k_max()) {
    throw InvalidArgument("harmonic index " + std::to_string(k) +
                          " outside the table");
  }
  return coeffs_[static_cast<std::size_t>(k - k_min())];
}

double CoefficientTable::harmonic_frequency() const {
  return 2.0 * std::numbers::pi / window_.length();
}

CoefficientTable fft_coefficients(const std::vector<double>& values,
                                  const Window& window) {
  window.validate();
  const std::size_t P = values.size();
  if (P < 2 || P % 2 != 0) {
    throw InvalidArgument("FFT needs an even number of samples");
  }
  const std::vector<Complex> raw =
      transform(std::vector<Complex>(values.begin(), values.end()),
                FFTW_BACKWARD);
  std::vector<Complex> ordered(P);
  const double scale = 1.0 / static_cast<double>(P);
  const long half = static_cast<long>(P / 2);
  for (long k = -half; k < half; ++k) {
    const std::size_t src = static_cast<std::size_t>((k + static_cast<long>(P)) %
                                                     static_cast<long>(P));
    ordered[static_cast<std::size_t>(k + half)] = raw[src] * scale;
  }
  return CoefficientTable(window, std::move(ordered));
}

CoefficientTable fft_coefficients(const ModelSamples& samples) {
  const std::size_t P = samples.values.size();
  if (samples.x.size() != P) {
    throw DimensionMismatch("sample grid and values differ in length");
  }
  const auto expected =
      periodic_grid(samples.window.x_min, samples.window.x_max, P);
  const double tol = 1e-9 * samples.window.length();
  for (std::size_t i = 0; i < P; ++i) {
    if (std::abs(samples.x[i] - expected[i]) > tol) {
      throw InvalidArgument("samples are not on a uniform periodic grid");
    }
  }
  return fft_coefficients(samples.values, samples.window);
}

std::vector<double> reconstruct_samples(const CoefficientTable& table) {
  const std::size_t P = table.size();
  std::vector<Complex> by_index(P);
  for (long k = table.k_min(); k <= table.k_max(); ++k) {
    const auto slot = static_cast<std::size_t>(
        (k + static_cast<long>(P)) % static_cast<long>(P));
    by_index[slot] = table.at(k);
  }
  const std::vector<Complex> raw = transform(by_index, FFTW_FORWARD);
  std::vector<double> out(P);
  for (std::size_t i = 0; i < P; ++i) out[i] = raw[i].real();
  return out;
}

double concentration_ratio(const CoefficientTable& table, long k_cut) {
  const long half = static_cast<long>(table.size() / 2);
  if (k_cut <= 0 || k_cut >= half) {
    throw InvalidArgument("k_cut must lie in (0, P/2)");
  }
  constexpr double eps = 1e-30;
  double low = 0.0;
  double high = 0.0;
  for (long k = table.k_min(); k <= table.k_max(); ++k) {
    const double p = std::norm(table.at(k));
    (std::abs(k) <= k_cut ? low : high) += p;
  }
  if (high < eps) return std::numeric_limits<double>::infinity();
  return low / (high + eps);
}

TableDiagnostics diagnose(const CoefficientTable& table,
                          const std::vector<double>& samples) {
  if (samples.size() != table.size()) {
    throw DimensionMismatch("diagnose: table and samples differ in length");
  }
  double asym = 0.0;
  for (long k = 1; k <= table.k_max(); ++k) {
    asym = std::max(asym, std::abs(table.at(-k) - std::conj(table.at(k))));
  }
  asym = std::max(asym, std::abs(table.at(table.k_min()).imag()));
  asym = std::max(asym, std::abs(table.at(0).imag()));
  double power = 0.0;
  for (const auto& c : table.coefficients()) power += std::norm(c);
  double mean_sq = 0.0;
  for (double f : samples) mean_sq += f * f;
  mean_sq /= static_cast<double>(samples.size());
  return {asym, std::abs(power - mean_sq)};
}

ResolutionCheck resolution_check(const ChainParams& chain,
                                 const ScheduleParams& s, const Window& window,
                                 std::size_t P, long k_max, double tolerance,
                                 Splitting splitting) {
  const auto coarse =
      fft_coefficients(sample_model(chain, s, window, P, splitting));
  const auto fine =
      fft_coefficients(sample_model(chain, s, window, 2 * P, splitting));
  const long top = std::min(k_max, coarse.k_max());
  double worst = 0.0;
  for (long k = -top; k <= top; ++k) {
    worst = std::max(worst, std::abs(std::abs(fine.at(k)) -
                                     std::abs(coarse.at(k))));
  }
  return {worst, worst > tolerance};
}

std::vector<ScheduleParams> reference_coefficient_schedules() {
  return {{100.0, 100}, {100.0, 1000}, {1000.0, 100}, {1000.0, 1000}};
}

std::vector<CoefficientReport> coefficient_report(
    const ChainParams& chain, const std::vector<ScheduleParams>& schedules,
    const Window& window, std::size_t P, Splitting splitting) {
  std::vector<CoefficientReport> out;
  out.reserve(schedules.size());
  for (const auto& s : schedules) {
    ModelSamples samples = sample_model(chain, s, window, P, splitting);
    CoefficientTable table = fft_coefficients(samples);
    const TableDiagnostics diag = diagnose(table, samples.values);
    out.push_back({s, std::move(samples), std::move(table), diag});
  }
  return out;
}

}  // namespace gsfm
