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

#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "gsfm/error.hpp"
#include "gsfm/hamiltonians.hpp"
#include "gsfm/spectrum.hpp"

using namespace gsfm;

namespace {

// Enumerates every sequence of M basis states (weighted) or distinct
// eigenvalues (unweighted) and tallies sum_m m * lambda.
std::map<std::int64_t, std::uint64_t> enumerate_modes(int n, long M,
                                                      bool weighted) {
  std::vector<std::int64_t> choices;
  if (weighted) {
    const auto d = hz_diagonal(n);
    for (double v : d.values()) choices.push_back(std::llround(v));
  } else {
    for (int k = 0; k <= n; ++k) choices.push_back(-n + 2 * k);
  }
  std::map<std::int64_t, std::uint64_t> out;
  std::vector<std::size_t> idx(M, 0);
  while (true) {
    std::int64_t f = 0;
    for (long m = 0; m < M; ++m) f += (m + 1) * choices[idx[m]];
    ++out[f];
    long pos = 0;
    while (pos < M && ++idx[pos] == choices.size()) idx[pos++] = 0;
    if (pos == M) break;
  }
  return out;
}

std::map<std::int64_t, std::uint64_t> as_map(const SpectrumHistogram& h) {
  std::map<std::int64_t, std::uint64_t> out;
  for (const auto& [f, c] : h.nonzero()) out[f] = c.convert_to<std::uint64_t>();
  return out;
}

BigInt pow_big(std::uint64_t base, long exp) {
  BigInt r = 1;
  for (long i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

TEST(EigenvalueSet, IsingFourQubits) {
  const auto ev = ising_eigenvalue_set(4);
  EXPECT_EQ(ev.values, (std::vector<std::int64_t>{-4, -2, 0, 2, 4}));
  EXPECT_EQ(ev.multiplicities, (std::vector<std::uint64_t>{1, 4, 6, 4, 1}));
  const auto one = ising_eigenvalue_set(1);
  EXPECT_EQ(one.values, (std::vector<std::int64_t>{-1, 1}));
  EXPECT_EQ(one.multiplicities, (std::vector<std::uint64_t>{1, 1}));
}

TEST(EigenvalueSet, IsingMatchesBruteForceGrouping) {
  for (int n = 1; n <= 10; ++n) {
    const auto closed = ising_eigenvalue_set(n);
    const auto brute = eigenvalue_set(hz_diagonal(n));
    EXPECT_EQ(closed.values, brute.values);
    EXPECT_EQ(closed.multiplicities, brute.multiplicities);
    EXPECT_EQ(closed.total_multiplicity(), std::uint64_t{1} << n);
    for (std::size_t i = 1; i < closed.size(); ++i) {
      EXPECT_LT(closed.values[i - 1], closed.values[i]);
    }
  }
}

TEST(EigenvalueSet, RejectsNonInteger) {
  EXPECT_THROW(eigenvalue_set(DiagonalOperator(1, {0.5, -0.5})),
               InvalidArgument);
}

TEST(ModeSpectrum, SingleUpload) {
  const auto h = mode_spectrum(ising_eigenvalue_set(4), 1, false);
  EXPECT_EQ(as_map(h), (std::map<std::int64_t, std::uint64_t>{
                           {-4, 1}, {-2, 1}, {0, 1}, {2, 1}, {4, 1}}));
}

TEST(ModeSpectrum, FiveUploadsFourQubits) {
  const auto ev = ising_eigenvalue_set(4);
  const auto un = mode_spectrum(ev, 5, false);
  EXPECT_EQ(un.degree(), 60);
  EXPECT_EQ(un.total(), BigInt(3125));
  const auto w = mode_spectrum(ev, 5, true);
  EXPECT_EQ(w.total(), pow_big(16, 5));
  EXPECT_EQ(gap_spectrum(un).degree(), 120);
}

TEST(ModeSpectrum, MatchesExhaustiveEnumeration) {
  for (int n = 1; n <= 3; ++n) {
    for (long M = 1; M <= 3; ++M) {
      for (bool weighted : {false, true}) {
        const auto h = mode_spectrum(ising_eigenvalue_set(n), M, weighted);
        EXPECT_EQ(as_map(h), enumerate_modes(n, M, weighted))
            << "N=" << n << " M=" << M << " weighted=" << weighted;
      }
    }
  }
}

TEST(ModeSpectrum, DegreesTotalsAndSymmetry) {
  for (int n = 1; n <= 4; ++n) {
    const auto ev = ising_eigenvalue_set(n);
    for (long M = 1; M <= 6; ++M) {
      const std::int64_t tri = M * (M + 1) / 2;
      for (bool weighted : {false, true}) {
        const auto mode = mode_spectrum(ev, M, weighted);
        const auto gap = gap_spectrum(mode);
        EXPECT_EQ(mode.degree(), n * tri);
        EXPECT_EQ(gap.degree(), n * 2 * tri);
        EXPECT_TRUE(mode.is_symmetric());
        EXPECT_TRUE(gap.is_symmetric());
        EXPECT_EQ(mode.total(),
                  weighted ? pow_big(std::uint64_t{1} << n, M)
                           : pow_big(static_cast<std::uint64_t>(n + 1), M));
        EXPECT_EQ(gap.total(), mode.total() * mode.total());
        EXPECT_DOUBLE_EQ(mode.width(),
                         (static_cast<double>(mode.support_size()) - 1) / 2);
      }
    }
  }
}

// All Ising frequencies share the parity of n*M(M+1)/2, so the support is
// every second integer and the width equals half the degree.
TEST(ModeSpectrum, IsingWidthIsHalfDegree) {
  for (int n = 1; n <= 4; ++n) {
    for (long M = 1; M <= 6; ++M) {
      const auto mode = mode_spectrum(ising_eigenvalue_set(n), M, false);
      EXPECT_DOUBLE_EQ(mode.width(), mode.degree() / 2.0);
    }
  }
}

TEST(ModeSpectrum, BudgetAndArguments) {
  EXPECT_THROW(mode_spectrum(ising_eigenvalue_set(4), 1000, false, 1000),
               SizeError);
  EXPECT_THROW(mode_spectrum(ising_eigenvalue_set(4), 0, false),
               InvalidArgument);
}

TEST(ModeSpectrum, WeightedCountsExceed64Bits) {
  const auto w = mode_spectrum(ising_eigenvalue_set(10), 8, true);
  EXPECT_EQ(w.total(), pow_big(1024, 8));
  EXPECT_GT(w.total(), BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST(GapSpectrum, TwoByTwoTable) {
  const SpectrumHistogram mode(-1, {BigInt(1), BigInt(0), BigInt(1)}, false);
  EXPECT_EQ(as_map(gap_spectrum(mode)),
            (std::map<std::int64_t, std::uint64_t>{{-2, 1}, {0, 2}, {2, 1}}));
}

TEST(GapSpectrum, CarriesUnit) {
  auto mode = mode_spectrum(ising_eigenvalue_set(2), 2, false);
  mode.set_unit(0.25);
  EXPECT_EQ(gap_spectrum(mode).unit(), 0.25);
}

TEST(TowerSpectrum, Counts) {
  for (int n = 1; n <= 10; ++n) {
    const auto t = tower_spectrum(n);
    EXPECT_EQ(t.eigenvalues.size(), static_cast<std::size_t>(n * (n + 1) / 2 + 1));
    EXPECT_EQ(t.gap.degree(), n * (n + 1));
    EXPECT_EQ(t.eigenvalues.total_multiplicity(), std::uint64_t{1} << n);
  }
  const auto four = tower_spectrum(4);
  EXPECT_EQ(four.eigenvalues.size(), 11u);
  EXPECT_EQ(four.gap.degree(), 20);
}

TEST(TowerSpectrum, TwoQubitsFlat) {
  const auto t = tower_spectrum(2);
  EXPECT_EQ(as_map(t.mode), (std::map<std::int64_t, std::uint64_t>{
                                {-3, 1}, {-1, 1}, {1, 1}, {3, 1}}));
}

TEST(TowerSpectrum, MultiplicitiesMatchTowerGenerator) {
  for (int n = 1; n <= 8; ++n) {
    const auto brute = eigenvalue_set(tower_generator(n));
    const auto t = tower_spectrum(n);
    EXPECT_EQ(t.eigenvalues.values, brute.values);
    EXPECT_EQ(t.eigenvalues.multiplicities, brute.multiplicities);
  }
}

TEST(TowerSpectrum, GapDecaysLinearlyFromCenter) {
  const auto t = tower_spectrum(5);
  const long K = static_cast<long>(t.mode.support_size());
  for (const auto& [g, c] : t.gap.nonzero()) {
    EXPECT_EQ(c, BigInt(K - std::abs(g) / 2)) << g;
  }
}

TEST(DegreeScaling, ExactColumns) {
  std::vector<int> ns;
  for (int n = 1; n <= 12; ++n) ns.push_back(n);
  const auto poly = degree_scaling(ns, GapModel::poly);
  const auto expo = degree_scaling(ns, GapModel::exp);
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double n = ns[i];
    EXPECT_EQ(poly[i].gsp_degree, n * n * n);
    EXPECT_EQ(expo[i].gsp_degree, n * std::ldexp(1.0, ns[i]));
    EXPECT_EQ(poly[i].rotation_degree, ns[i] * (ns[i] + 1));
    EXPECT_EQ(expo[i].rotation_degree, ns[i] * (ns[i] + 1));
  }
  EXPECT_EQ(poly[3].rotation_degree, 20);
}

TEST(DegreeScaling, ConstantRescalesTime) {
  const auto rows = degree_scaling({4}, GapModel::poly, 2.0);
  EXPECT_DOUBLE_EQ(rows[0].delta_min, 0.5);
  EXPECT_DOUBLE_EQ(rows[0].anneal_time, 4.0);
  EXPECT_DOUBLE_EQ(rows[0].gsp_degree, 16.0);
  EXPECT_THROW(degree_scaling({4}, GapModel::poly, 0.0), InvalidArgument);
}
