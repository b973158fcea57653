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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "oakernel/hungarian.hpp"

using namespace oakernel;

namespace {

using Pairs = std::vector<std::pair<std::size_t, std::size_t>>;

Matrix random_matrix(std::mt19937_64& rng, std::size_t m, std::size_t n) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  Matrix p(m, n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = u(rng);
  return p;
}

void check_well_formed(const Matrix& p, const Assignment& a) {
  const std::size_t k = std::min(p.rows(), p.cols());
  REQUIRE(a.pairs.size() == k);
  std::set<std::size_t> rows, cols;
  double sum = 0.0;
  for (auto [i, j] : a.pairs) {
    CHECK(i < p.rows());
    CHECK(j < p.cols());
    rows.insert(i);
    cols.insert(j);
    sum += p(i, j);
  }
  CHECK(rows.size() == k);
  CHECK(cols.size() == k);
  CHECK(std::abs(sum - a.value) <= 1e-12);
}

}  // namespace

TEST_CASE("single cell") {
  const auto a = solve_max_assignment(Matrix(1, 1, 5.0));
  CHECK(a.value == 5.0);
  CHECK(a.pairs == Pairs{{0, 0}});
  CHECK(brute_force_assignment(Matrix(1, 1, 5.0)).value == 5.0);
}

TEST_CASE("identity optimum") {
  const auto p = Matrix::from_rows({{1, 0}, {0, 1}});
  const auto a = brute_force_assignment(p);
  CHECK(a.value == 2.0);
  CHECK(a.pairs == Pairs{{0, 0}, {1, 1}});
  CHECK(solve_max_assignment(p).pairs == a.pairs);
}

TEST_CASE("square corners: crossing pairing wins") {
  const double a = std::exp(-1.0);
  const auto p = Matrix::from_rows({{a * a, a}, {a, a * a}});
  for (const auto& sol : {solve_max_assignment(p), brute_force_assignment(p)}) {
    CHECK(sol.value == doctest::Approx(0.7357588823428847).epsilon(1e-15));
    CHECK(sol.pairs == Pairs{{0, 1}, {1, 0}});
  }
}

TEST_CASE("rectangular matrices inject the smaller side") {
  const auto wide = Matrix::from_rows({{1, 9, 3}, {8, 7, 2}});
  auto a = solve_max_assignment(wide);
  CHECK(a.value == 17.0);
  CHECK(a.pairs == Pairs{{0, 1}, {1, 0}});

  a = solve_max_assignment(wide.transposed());
  CHECK(a.value == 17.0);
  CHECK(a.pairs == Pairs{{1, 0}, {0, 1}});  // ordered by column, the smaller side
}

TEST_CASE("ties resolve to the lexicographically smallest mapping") {
  for (std::size_t n : {1u, 2u, 5u, 9u}) {
    const Matrix ones(n, n + 2, 1.0);
    const auto a = solve_max_assignment(ones);
    for (std::size_t i = 0; i < n; ++i) CHECK(a.pairs[i] == std::make_pair(i, i));
    CHECK(a.value == static_cast<double>(n));
  }
  // Unique optimum off the diagonal.
  const auto p = Matrix::from_rows({{1, 2, 0}, {2, 1, 0}, {0, 0, 3}});
  const auto h = solve_max_assignment(p);
  CHECK(h.pairs == brute_force_assignment(p).pairs);
  CHECK(h.pairs == Pairs{{0, 1}, {1, 0}, {2, 2}});

  const auto tie = Matrix::from_rows({{1, 1, 0}, {1, 1, 0}, {0, 0, 1}});
  CHECK(solve_max_assignment(tie).pairs == Pairs{{0, 0}, {1, 1}, {2, 2}});
}

TEST_CASE("integer-valued matrices with many ties agree with brute force exactly") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> small(0, 2);
  std::uniform_int_distribution<std::size_t> dim(1, 6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t m = dim(rng), n = dim(rng);
    Matrix p(m, n);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) p(i, j) = small(rng);
    const auto h = solve_max_assignment(p);
    const auto b = brute_force_assignment(p);
    CHECK(h.value == b.value);
    CHECK(h.pairs == b.pairs);
  }
}

TEST_CASE("oracle equivalence and invariances on random rectangular matrices") {
  std::mt19937_64 rng(2024);
  std::uniform_int_distribution<std::size_t> small_dim(1, 7);
  std::uniform_int_distribution<std::size_t> big_dim(1, 12);
  for (int trial = 0; trial < 250; ++trial) {
    std::size_t m = small_dim(rng), n = big_dim(rng);
    if (trial % 2) std::swap(m, n);
    const Matrix p = random_matrix(rng, m, n);
    const auto h = solve_max_assignment(p);
    const auto b = brute_force_assignment(p);
    check_well_formed(p, h);
    CHECK(std::abs(h.value - b.value) <= 1e-12);
    CHECK(h.pairs == b.pairs);

    CHECK(std::abs(solve_max_assignment(p.transposed()).value - h.value) <= 1e-12);

    std::vector<std::size_t> rp(m), cp(n);
    std::iota(rp.begin(), rp.end(), std::size_t{0});
    std::iota(cp.begin(), cp.end(), std::size_t{0});
    std::shuffle(rp.begin(), rp.end(), rng);
    std::shuffle(cp.begin(), cp.end(), rng);
    Matrix permuted(m, n), shifted(m, n);
    const double c = 0.75;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        permuted(i, j) = p(rp[i], cp[j]);
        shifted(i, j) = p(i, j) + c;
      }
    CHECK(std::abs(solve_max_assignment(permuted).value - h.value) <= 1e-12);
    CHECK(std::abs(solve_max_assignment(shifted).value -
                   (h.value + c * static_cast<double>(std::min(m, n)))) <= 1e-12);
  }
}

TEST_CASE("larger problems stay well formed") {
  std::mt19937_64 rng(5);
  for (std::size_t n : {20u, 60u}) {
    const Matrix p = random_matrix(rng, n, n + 7);
    const auto a = solve_max_assignment(p);
    check_well_formed(p, a);
    // An optimum dominates the greedy and identity assignments.
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag += p(i, i);
    CHECK(a.value >= diag);
  }
}

TEST_CASE("input errors") {
  CHECK_THROWS_AS(solve_max_assignment(Matrix{}), InputError);
  CHECK_THROWS_AS(solve_max_assignment(Matrix::from_rows({{1, -0.5}})), InputError);
  CHECK_THROWS_AS(solve_max_assignment(Matrix::from_rows({{1, NAN}})), InputError);
  CHECK_THROWS_AS(solve_max_assignment(Matrix::from_rows({{1, INFINITY}})), InputError);
  CHECK_THROWS_AS(brute_force_assignment(Matrix(9, 9, 1.0)), InputError);
  CHECK_NOTHROW(brute_force_assignment(Matrix(8, 3, 1.0)));
}
