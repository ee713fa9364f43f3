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
#include <random>

#include "dense_oracle.hpp"
#include "gsfm/anneal.hpp"
#include "gsfm/error.hpp"
#include "gsfm/groundtruth.hpp"
#include "gsfm/grid.hpp"

using namespace gsfm;

TEST(ExactGroundState, MixerGivesPlusState) {
  const auto r = exact_ground_state(-hx_dense(2));
  EXPECT_NEAR(r.energy, -2.0, 1e-12);
  EXPECT_NEAR(r.gap, 2.0, 1e-12);
  EXPECT_FALSE(r.degenerate);
  for (std::size_t j = 0; j < 4; ++j) {
    EXPECT_NEAR(std::abs(r.state[j] - 0.5), 0.0, 1e-12);
  }
}

TEST(ExactGroundState, DiagonalQubit) {
  DenseOperator H = DenseOperator::Zero(2, 2);
  H(1, 1) = 1.0;
  const auto r = exact_ground_state(H);
  EXPECT_EQ(r.energy, 0.0);
  EXPECT_EQ(r.gap, 1.0);
  EXPECT_EQ(r.state[0], Complex(1.0));
}

TEST(ExactGroundState, TransverseFieldLowersAntiferromagnet) {
  EXPECT_LT(exact_ground_state(ising_dense({4, 0.0, 0.2, true})).energy, -4.0);
}

TEST(ExactGroundState, Errors) {
  DenseOperator bad = DenseOperator::Zero(2, 2);
  bad(0, 1) = 1.0;
  EXPECT_THROW(exact_ground_state(bad), InvalidArgument);
  EXPECT_THROW(exact_ground_state(DenseOperator::Identity(3, 3)), SizeError);
}

TEST(ExactGroundState, EnergyBelowRandomRayleighQuotients) {
  const DenseOperator H = ising_dense({4, 1.4, 0.2, true});
  const auto r = exact_ground_state(H);
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    EXPECT_LE(r.energy, energy_of(H, oracle::random_state(4, rng)) + 1e-12);
  }
  EXPECT_GE(r.gap, 0.0);
  EXPECT_NEAR(energy_of(H, r.state), r.energy, 1e-12);
}

TEST(ExactGroundState, PhaseConventionIdempotent) {
  const auto r = exact_ground_state(ising_dense({4, 0.7, 0.2, true}));
  const auto again = canonical_phase(r.state);
  for (std::size_t j = 0; j < r.state.dim(); ++j) EXPECT_EQ(again[j], r.state[j]);
}

TEST(ExactGroundState, ZeroFieldMagnetizationVanishes) {
  for (int n = 2; n <= 6; ++n) {
    const auto r = exact_ground_state(ising_dense({n, 0.0, 0.2, true}));
    ASSERT_FALSE(r.degenerate);
    EXPECT_LT(std::abs(expect_diagonal(r.state, hz_diagonal(n))), 1e-8);
  }
}

TEST(Ite, ZeroTauReturnsPlusState) {
  const auto s = ite_ground_state({4, 1.0, 0.2, true}, 0.0);
  const auto plus = plus_state(4);
  for (std::size_t j = 0; j < s.dim(); ++j) EXPECT_EQ(s[j], plus[j]);
}

TEST(Ite, ClassicalChainConvergesToAllFlipped) {
  const auto s = ite_ground_state({4, 3.0, 0.0, true}, 20.0);
  EXPECT_NEAR(std::norm(s[0b1111]), 1.0, 1e-10);
}

TEST(Ite, AgreesWithExactAwayFromCriticality) {
  for (double x : {0.5, 1.0, 3.0, 3.5}) {
    const IsingParams p{4, x, 0.2, true};
    const DenseOperator H = ising_dense(p);
    const auto exact = exact_ground_state(H);
    const auto ite = ite_ground_state(p, 20.0, 0.01);
    EXPECT_GT(fidelity_full(ite, exact.state), 1.0 - 1e-6) << "x=" << x;
    const double e = energy_of(H, ite);
    EXPECT_GE(e, exact.energy - 1e-12);
    EXPECT_LT(e - exact.energy, 1e-6);
  }
}

// Independent oracle: exp(-tau H)|+> by the dense matrix exponential.
TEST(Ite, MatchesDenseImaginaryTimePropagator) {
  const int n = 3;
  const oracle::Mat H = oracle::ising(n, 0.8, 0.2);
  const oracle::Mat E = (-2.0 * H).exp();
  oracle::Vec v = E * oracle::to_vec(plus_state(n));
  v.normalize();
  const auto ite = ite_ground_state({n, 0.8, 0.2, true}, 2.0, 0.001);
  EXPECT_GT(std::norm(v.dot(oracle::to_vec(ite))), 1.0 - 1e-8);
}

TEST(MinAnnealGap, EndpointsAndRefinement) {
  const IsingParams p{4, 1.9, 0.2, true};
  const double ends = min_anneal_gap(p, 2);
  const double at_one = exact_ground_state(ising_dense(p)).gap;
  EXPECT_NEAR(ends, std::min(2.0, at_one), 1e-12);
  EXPECT_NEAR(exact_ground_state(anneal_hamiltonian(p, 0.0)).gap, 2.0, 1e-12);
  const double coarse = min_anneal_gap(p, 11);
  const double fine = min_anneal_gap(p, 201);
  EXPECT_GT(fine, 0.0);
  EXPECT_LE(fine, coarse);
  EXPECT_NEAR(coarse, 0.0021085351, 1e-8);
  EXPECT_THROW(min_anneal_gap(p, 1), InvalidArgument);
}

TEST(Magnetization, Examples) {
  const auto zero = magnetization_curve(4, 0.2, {0.0});
  EXPECT_LT(zero[0].mag_abs_per_site, 1e-8);
  const auto polarized = magnetization_curve(4, 0.2, {4.0});
  EXPECT_NEAR(polarized[0].mag_abs_per_site, 0.9950669092, 1e-9);
}

TEST(Magnetization, MonotoneAcrossTransition) {
  const auto curve = magnetization_curve(4, 0.2, linspace(1.5, 2.5, 101));
  for (std::size_t i = 1; i < curve.size(); ++i) {
    EXPECT_GE(curve[i].mag_abs_per_site, curve[i - 1].mag_abs_per_site - 1e-12)
        << curve[i].x;
  }
  EXPECT_LT(curve.front().mag_abs_per_site, 0.1);
  EXPECT_GT(curve.back().mag_abs_per_site, 0.9);
}
