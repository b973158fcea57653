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
#include <span>
#include <string>
#include <vector>

#include "oakernel/matrix.hpp"

namespace oakernel {

inline constexpr double kDefaultPsdTolerance = 1e-9;

/// Symmetric matrix with a display label per row/column.
struct GramMatrix {
  std::vector<std::string> labels;
  SymmetricMatrix values;

  [[nodiscard]] std::size_t size() const noexcept { return values.size(); }
};

struct PsdVerdict {
  bool psd = false;
  double min_eigenvalue = 0.0;
  double max_eigenvalue = 0.0;
  /// min_eigenvalue / max(1, max_eigenvalue)
  double margin = 0.0;
  double tolerance = kDefaultPsdTolerance;
};

/// Full eigendecomposition of a symmetric matrix.
///
/// Eigenvalues are sorted descending; column k of `eigenvectors` belongs to
/// `eigenvalues[k]` and has its largest-magnitude component nonnegative.
/// `psd` and `margin` are filled in at the default tolerance.
struct Spectrum {
  std::vector<double> eigenvalues;
  Matrix eigenvectors;
  double min_eigenvalue = 0.0;
  bool psd = false;
  double margin = 0.0;
  std::size_t sweeps = 0;
};

inline constexpr std::size_t kMaxJacobiSweeps = 50;

/// Cyclic Jacobi eigensolver. Iterates until the off-diagonal Frobenius norm
/// drops below 1e-12 * ||G||_F; throws NumericError after kMaxJacobiSweeps
/// sweeps and InputError on non-finite entries.
Spectrum jacobi_eigen(const SymmetricMatrix& g);

/// psd iff lambda_min >= -tol * max(1, lambda_max).
PsdVerdict psd_check(const Spectrum& s, double tol = kDefaultPsdTolerance);

/// v^T G v, summed row by row in index order.
double quadratic_form(const SymmetricMatrix& g, std::span<const double> v);

/// V diag(lambda) V^T, the inverse of jacobi_eigen.
SymmetricMatrix reconstruct(const Spectrum& s);

struct MetricViolation {
  std::size_t i = 0;
  std::size_t j = 0;
  double squared = 0.0;  // the negative value of G_ii + G_jj - 2 G_ij
};

struct DistanceMatrix {
  std::vector<std::string> labels;
  SymmetricMatrix squared;    // G_ii + G_jj - 2 G_ij, unclamped
  SymmetricMatrix distances;  // sqrt(max(0, squared))
  std::vector<MetricViolation> violations;
};

inline constexpr double kMetricViolationThreshold = 1e-9;

/// Kernel-induced distances d(x,y)^2 = k(x,x) + k(y,y) - 2k(x,y).
/// Squared values below -kMetricViolationThreshold are recorded as violations;
/// smaller negative values are treated as round-off.
DistanceMatrix distances_from_gram(const GramMatrix& g);

/// Nearest PSD matrix in Frobenius norm: negative eigenvalues set to zero.
GramMatrix psd_project_clip(const GramMatrix& g);

}  // namespace oakernel
