/*
 * Copyright (c) 2026, The oakernel Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <doctest.h>

#include <cmath>
#include <random>

#include <Eigen/Eigenvalues>

#include "oakernel/spectral.hpp"

using namespace oakernel;

namespace {

SymmetricMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, double scale = 1.0) {
  std::normal_distribution<double> z(0.0, scale);
  SymmetricMatrix m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) m.set(i, j, z(rng));
  return m;
}

// Independent eigenvalues, ascending.
Eigen::VectorXd oracle_eigenvalues(const SymmetricMatrix& m) {
  Eigen::MatrixXd e(m.size(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) e(i, j) = m(i, j);
  return Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd>(e, Eigen::EigenvaluesOnly).eigenvalues();
}

GramMatrix labelled(SymmetricMatrix m) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m.size(); ++i) labels.push_back("t" + std::to_string(i));
  return {std::move(labels), std::move(m)};
}

}  // namespace

TEST_CASE("identity") {
  const auto s = jacobi_eigen(SymmetricMatrix::identity(6));
  for (double l : s.eigenvalues) CHECK(l == 1.0);
  CHECK(s.psd);
  CHECK(s.margin == 1.0);
  CHECK(s.sweeps == 0);
  const auto v = psd_check(s);
  CHECK(v.psd);
  CHECK(v.margin == 1.0);
}

TEST_CASE("2x2 with off-diagonal 2a") {
  const double a = std::exp(-1.0);
  SymmetricMatrix m(2, 2.0);
  m.set(0, 1, 2 * a);
  const auto s = jacobi_eigen(m);
  CHECK(s.eigenvalues[0] == doctest::Approx(2 + 2 * a).epsilon(1e-15));
  CHECK(s.eigenvalues[1] == doctest::Approx(2 - 2 * a).epsilon(1e-15));
  // (1, 1)/sqrt(2) and (1, -1)/sqrt(2), largest-magnitude component made nonnegative.
  CHECK(s.eigenvectors(0, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.eigenvectors(1, 0) == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.eigenvectors(0, 1) == doctest::Approx(std::sqrt(0.5)));
  CHECK(s.eigenvectors(1, 1) == doctest::Approx(-std::sqrt(0.5)));
}

TEST_CASE("zero and 1x1 matrices") {
  const auto z = jacobi_eigen(SymmetricMatrix(4));
  for (double l : z.eigenvalues) CHECK(l == 0.0);
  CHECK(z.psd);
  const auto one = jacobi_eigen(SymmetricMatrix(1, -3.0));
  CHECK(one.eigenvalues == std::vector<double>{-3.0});
  CHECK_FALSE(one.psd);
  CHECK(one.margin == -3.0);
}

TEST_CASE("decomposition invariants on random symmetric matrices up to 50x50") {
  std::mt19937_64 rng(42);
  for (std::size_t n : {1u, 2u, 3u, 5u, 8u, 13u, 21u, 34u, 50u}) {
    for (double scale : {1e-3, 1.0, 1e3}) {
      const auto g = random_symmetric(rng, n, scale);
      const auto s = jacobi_eigen(g);
      const double gnorm = g.frobenius_norm();

      CHECK(frobenius_distance(reconstruct(s), g) <= 1e-9 * std::max(1.0, gnorm));

      double sum = 0.0;
      for (double l : s.eigenvalues) sum += l;
      CHECK(std::abs(sum - g.trace()) <= 1e-9 * std::max(1.0, std::abs(g.trace())));

      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
          double dot = 0.0;
          for (std::size_t k = 0; k < n; ++k) dot += s.eigenvectors(k, i) * s.eigenvectors(k, j);
          CHECK(std::abs(dot - (i == j ? 1.0 : 0.0)) <= 1e-9);
        }

      CHECK(std::is_sorted(s.eigenvalues.rbegin(), s.eigenvalues.rend()));
      const Eigen::VectorXd oracle = oracle_eigenvalues(g);
      for (std::size_t k = 0; k < n; ++k)
        CHECK(std::abs(s.eigenvalues[k] - oracle(static_cast<Eigen::Index>(n - 1 - k))) <=
              1e-10 * std::max(1.0, gnorm));

      for (std::size_t k = 0; k < n; ++k) {
        std::size_t lead = 0;
        for (std::size_t i = 1; i < n; ++i)
          if (std::abs(s.eigenvectors(i, k)) > std::abs(s.eigenvectors(lead, k))) lead = i;
        CHECK(s.eigenvectors(lead, k) >= 0.0);
      }
    }
  }
}

TEST_CASE("non-finite input") {
  SymmetricMatrix m(2);
  m.set(0, 1, NAN);
  CHECK_THROWS_AS(jacobi_eigen(m), InputError);
  m.set(0, 1, INFINITY);
  CHECK_THROWS_AS(jacobi_eigen(m), InputError);
}

TEST_CASE("psd_check tolerance is relative to max(1, lambda_max)") {
  Spectrum s;
  s.eigenvalues = {1000.0, -5e-7};
  CHECK(psd_check(s, 1e-9).psd);
  s.eigenvalues = {1000.0, -5e-6};
  CHECK_FALSE(psd_check(s, 1e-9).psd);
  CHECK(psd_check(s, 1e-9).margin == doctest::Approx(-5e-9));
  CHECK(psd_check(s, 1e-8).psd);
  s.eigenvalues = {0.5, -5e-10};
  CHECK(psd_check(s, 1e-9).psd);
  s.eigenvalues = {0.5, -2e-9};
  CHECK_FALSE(psd_check(s, 1e-9).psd);
  CHECK_THROWS_AS(psd_check(s, -1.0), ConfigError);
}

TEST_CASE("quadratic form") {
  std::mt19937_64 rng(8);
  std::normal_distribution<double> z;
  for (int trial = 0; trial < 50; ++trial) {
    const auto g = random_symmetric(rng, 9);
    std::vector<double> v(9);
    for (auto& x : v) x = z(rng);
    const double q = quadratic_form(g, v);
    // Same value through the decomposition: sum_k lambda_k (v . u_k)^2.
    const auto s = jacobi_eigen(g);
    double via_spectrum = 0.0;
    double vv = 0.0;
    for (std::size_t k = 0; k < 9; ++k) {
      double proj = 0.0;
      for (std::size_t i = 0; i < 9; ++i) proj += v[i] * s.eigenvectors(i, k);
      via_spectrum += s.eigenvalues[k] * proj * proj;
      vv += v[k] * v[k];
    }
    CHECK(std::abs(q - via_spectrum) <= 1e-9);
    CHECK(s.min_eigenvalue <= q / vv + 1e-12);
  }
  const double v3[] = {1, 2, 3};
  CHECK(quadratic_form(SymmetricMatrix::identity(3), v3) == 14.0);
  CHECK_THROWS_AS(quadratic_form(SymmetricMatrix::identity(2), v3), InputError);
}

TEST_CASE("distances from Gram") {
  SymmetricMatrix m(3);
  m.set(0, 0, 2.0);
  m.set(1, 1, 1.0);
  m.set(2, 2, 1.0);
  m.set(0, 1, 0.5);
  m.set(0, 2, 2.0);                      // 2 + 1 - 4 = -1: violation
  m.set(1, 2, 1.0 + 0.25e-9);            // -5e-10: round-off
  const auto d = distances_from_gram(labelled(m));
  CHECK(d.squared(0, 1) == 2.0);
  CHECK(d.distances(0, 1) == doctest::Approx(std::sqrt(2.0)));
  CHECK(d.squared(0, 2) == -1.0);
  CHECK(d.distances(0, 2) == 0.0);
  CHECK(d.distances(1, 2) == 0.0);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d.distances(i, i) == 0.0);
  REQUIRE(d.violations.size() == 1);
  CHECK(d.violations[0].i == 0);
  CHECK(d.violations[0].j == 2);
  CHECK(d.violations[0].squared == -1.0);
}

TEST_CASE("psd projection by clipping") {
  SUBCASE("identity is unchanged") {
    const auto g = labelled(SymmetricMatrix::identity(5));
    CHECK(max_abs_difference(psd_project_clip(g).values, g.values) <= 1e-12);
  }
  SUBCASE("diag(1, -1) -> diag(1, 0)") {
    SymmetricMatrix m(2);
    m.set(0, 0, 1.0);
    m.set(1, 1, -1.0);
    const auto p = psd_project_clip(labelled(m));
    CHECK(p.values(0, 0) == 1.0);
    CHECK(p.values(1, 1) == 0.0);
    CHECK(p.values(0, 1) == 0.0);
    CHECK(p.labels == std::vector<std::string>{"t0", "t1"});
  }
  SUBCASE("random indefinite matrices") {
    std::mt19937_64 rng(17);
    for (std::size_t n : {3u, 10u, 30u}) {
      const auto g = labelled(random_symmetric(rng, n));
      const auto s = jacobi_eigen(g.values);
      double neg = 0.0;
      for (double l : s.eigenvalues) if (l < 0) neg += l * l;

      const auto p = psd_project_clip(g);
      CHECK(psd_check(jacobi_eigen(p.values), 1e-9).psd);
      CHECK(std::abs(frobenius_distance(p.values, g.values) - std::sqrt(neg)) <= 1e-9);
      CHECK(max_abs_difference(psd_project_clip(p).values, p.values) <= 1e-12);
    }
  }
  SUBCASE("PSD input is a fixed point") {
    std::mt19937_64 rng(23);
    std::normal_distribution<double> z;
    const std::size_t n = 12;
    SymmetricMatrix m(n);
    std::vector<double> f(n * 4);
    for (auto& x : f) x = z(rng);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j <= i; ++j) {
        double acc = 0.0;
        for (std::size_t k = 0; k < 4; ++k) acc += f[i * 4 + k] * f[j * 4 + k];
        m.set(i, j, acc);
      }
    const auto g = labelled(m);
    // Rank 4: zero eigenvalues may come out as tiny negatives and get clipped.
    CHECK(max_abs_difference(psd_project_clip(g).values, g.values) <= 1e-12);
  }
}
