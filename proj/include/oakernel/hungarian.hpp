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

#include <cstddef>
#include <utility>
#include <vector>

#include "oakernel/matrix.hpp"

namespace oakernel {

/// Result of a maximum-profit assignment on an m x n profit matrix.
///
/// `pairs` holds min(m, n) (row, col) pairs ordered by the index on the
/// smaller side (rows when m <= n, columns otherwise). `value` is the sum of
/// the selected entries, accumulated in that order.
struct Assignment {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  double value = 0.0;
};

/// Throws InputError unless `profits` is non-empty with finite, nonnegative entries.
void validate_profits(const Matrix& profits);

/// Exact maximum-profit injection of the smaller side into the larger, by the
/// O(n^3) Hungarian method on a zero-padded square cost matrix.
///
/// Among optimal assignments the one whose smaller-side partner sequence is
/// lexicographically smallest is returned.
Assignment solve_max_assignment(const Matrix& profits);

inline constexpr std::size_t kBruteForceMaxSide = 8;

/// Exhaustive search over all injections; same tie-break as
/// solve_max_assignment. min(m, n) must not exceed kBruteForceMaxSide.
Assignment brute_force_assignment(const Matrix& profits);

}  // namespace oakernel
