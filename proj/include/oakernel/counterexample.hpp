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

#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "oakernel/base_kernel.hpp"
#include "oakernel/oa_kernel.hpp"
#include "oakernel/spectral.hpp"

namespace oakernel::counterexample {

// The six 2-subsets of the unit square's corners, in lexicographic order.
inline constexpr std::array<const char*, 6> kPairOrder = {"AB", "AC", "AD", "BC", "BD", "CD"};

/// v with v^T K v = 8a^2 - 8a < 0. Hand expansion over kPairOrder:
/// diagonal 12 * 2 = 24; cross terms 2 * (-16(1+a) + 4(1+a^2) + 12a)
/// = -24 - 8a + 8a^2; sum 8a^2 - 8a.
inline constexpr std::array<double, 6> kWitness = {1, -2, 1, 1, -2, 1};

/// Directions with v^T K v = 0 for every a: 8 + 2(-4(1+a) + 4a) = 0.
inline constexpr std::array<std::array<double, 6>, 2> kNullDirections = {{
    {1, -1, 0, 0, -1, 1},
    {0, -1, 1, 1, -1, 0},
}};

inline constexpr double kClosedFormTolerance = 1e-12;

/// Corners A=(0,0), B=(1,0), C=(1,1), D=(0,1) with RBF width gamma.
struct SquareConfig {
  double gamma = 1.0;
  double a = 0.0;  // exp(-gamma) = k1 between adjacent corners
  std::array<Point, 4> points{Point({0, 0}), Point({1, 0}), Point({1, 1}), Point({0, 1})};

  [[nodiscard]] BaseKernel base_kernel() const { return BaseKernel::rbf(gamma); }
  /// The six 2-tuples in kPairOrder.
  [[nodiscard]] std::vector<TupleObject> tuples() const;
};

SquareConfig build_square_config(double gamma);

/// The 6x6 Gram matrix over kPairOrder written down from the case table:
/// 2 on the diagonal, 1+a where one tuple is a diagonal of the square and the
/// other shares a corner with it, 1+a^2 for two sides sharing a corner, 2a for
/// disjoint pairs.
GramMatrix expected_gram_closed_form(double gamma);

struct CounterexampleReport {
  SquareConfig config;
  double tolerance = kDefaultPsdTolerance;
  GramMatrix gram_computed;
  GramMatrix gram_closed_form;
  double max_abs_gram_diff = 0.0;
  Spectrum spectrum;
  PsdVerdict verdict;
  double witness_value = 0.0;
  double witness_expected = 0.0;  // 8a^2 - 8a
  double rayleigh_bound = 0.0;    // witness_value / ||witness||^2
  std::array<double, 2> null_direction_values{};
  DistanceMatrix distances;
  /// d(AB,CD)^2 - d(AB,AC)^2 - d(AC,CD)^2, then via BD, then the same two for
  /// hypotenuse (AD,BC).
  std::array<double, 4> pythagorean_residuals{};
  /// d(AC,BD)^2 - d(AB,CD)^2 and d(AC,BD)^2 - d(AD,BC)^2.
  std::array<double, 2> diagonal_residuals{};
  /// d^2 along (AB,BC), (BC,CD), (CD,AD), (AD,AB); all 2 - 2a^2.
  std::array<double, 4> side_lengths_sq{};
  double hyp_expected = 0.0;  // sqrt(d(AB,BC)^2 + d(BC,CD)^2) = sqrt(4 - 4a^2)
  double hyp_actual = 0.0;    // d(AB,CD) = sqrt(4 - 4a)
  double contradiction_gap = 0.0;
  bool refuted = false;
};

/// Rebuilds the square configuration, checks the computed Gram against the
/// closed form (ConsistencyError beyond kClosedFormTolerance) and collects
/// the spectral and distance-geometry evidence. refuted is true iff the Gram
/// fails psd_check at `tol` and the contradiction gap exceeds `tol`.
CounterexampleReport run_counterexample(double gamma, double tol = kDefaultPsdTolerance);

struct SweepRow {
  double gamma = 0.0;
  double a = 0.0;
  double lambda_min = 0.0;
  double witness_value = 0.0;
  double contradiction_gap = 0.0;
  bool refuted = false;
};

std::vector<SweepRow> gamma_sweep(const std::vector<double>& grid, double tol = kDefaultPsdTolerance);

struct MinKernelVerdict {
  std::vector<std::size_t> lengths;
  GramMatrix gram;
  std::size_t entry_mismatches = 0;  // entries differing from min(|x|, |y|)
  PsdVerdict spectrum;
  bool psd = false;  // entries exact and spectrum PSD
};

/// Tuples of the single element "1" with the given lengths, over the constant
/// base kernel; k_A reduces to min(|x|, |y|).
MinKernelVerdict verify_min_kernel_psd(const std::vector<std::size_t>& lengths,
                                       double tol = kDefaultPsdTolerance);

}  // namespace oakernel::counterexample
