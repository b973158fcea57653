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

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "oakernel/matrix.hpp"

namespace oakernel {

/// A point of R^d with finite coordinates.
class Point {
 public:
  explicit Point(std::vector<double> coords);

  [[nodiscard]] const std::vector<double>& coords() const noexcept { return coords_; }
  [[nodiscard]] std::size_t dimension() const noexcept { return coords_.size(); }

  friend bool operator==(const Point&, const Point&) = default;

 private:
  std::vector<double> coords_;
};

/// Tuple element: either a point (for RBF) or a symbol (for table kernels).
using Element = std::variant<Point, std::string>;

/// The base kernel k1 on tuple elements.
///
/// Three kinds are supported: Gaussian RBF exp(-gamma ||u - v||^2) on points,
/// an explicit symmetric table over labels, and the constant kernel on the
/// singleton set {"1"} (a one-entry table with value 1).
class BaseKernel {
 public:
  enum class Kind { Rbf, ConstantOne, Table };

  static BaseKernel rbf(double gamma);
  static BaseKernel constant_one();
  /// `values` must be square, exactly symmetric and match `labels`. Negative
  /// entries are accepted here and surface in validate_base.
  static BaseKernel table(std::vector<std::string> labels, const Matrix& values);

  [[nodiscard]] Kind kind() const noexcept { return kind_; }
  [[nodiscard]] double gamma() const noexcept { return gamma_; }
  [[nodiscard]] const std::vector<std::string>& labels() const noexcept { return labels_; }
  [[nodiscard]] const SymmetricMatrix& table_values() const noexcept { return table_; }

  /// k1(u, v). Throws InputError for wrong element type, dimension mismatch
  /// or unknown label.
  double operator()(const Element& u, const Element& v) const;

  /// Throws InputError if `e` cannot be evaluated by this kernel.
  void check_element(const Element& e) const;

 private:
  BaseKernel() = default;
  [[nodiscard]] std::size_t label_index(const std::string& label) const;

  Kind kind_ = Kind::Rbf;
  double gamma_ = 0.0;
  std::vector<std::string> labels_;
  SymmetricMatrix table_;
};

/// Squared Euclidean distance, summed in index order.
double squared_distance(const Point& u, const Point& v);

inline double eval_base(const BaseKernel& k, const Element& u, const Element& v) { return k(u, v); }

struct BaseValidationReport {
  bool passed = true;
  std::size_t symmetry_violations = 0;
  std::size_t negative_values = 0;
  std::optional<double> min_eigenvalue;  // of the base Gram on the sample
  std::vector<std::string> findings;
};

/// Checks symmetry and nonnegativity of k1 on every pair of the sample and
/// reports the smallest eigenvalue of the sample's base Gram matrix. The
/// spectrum is informational only and does not affect `passed`.
BaseValidationReport validate_base(const BaseKernel& k, const std::vector<Element>& sample);

}  // namespace oakernel
