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

#include "oakernel/base_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "oakernel/spectral.hpp"

namespace oakernel {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InputError("point must have at least one coordinate");
  for (double c : coords_)
    if (!std::isfinite(c)) throw InputError("point coordinates must be finite");
}

double squared_distance(const Point& u, const Point& v) {
  if (u.dimension() != v.dimension())
    throw InputError("dimension mismatch: " + std::to_string(u.dimension()) + " vs " +
                     std::to_string(v.dimension()));
  double s = 0.0;
  for (std::size_t i = 0; i < u.dimension(); ++i) {
    const double d = u.coords()[i] - v.coords()[i];
    s += d * d;
  }
  return s;
}

BaseKernel BaseKernel::rbf(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma))
    throw ConfigError("RBF gamma must be a positive finite number");
  BaseKernel k;
  k.kind_ = Kind::Rbf;
  k.gamma_ = gamma;
  return k;
}

BaseKernel BaseKernel::constant_one() {
  BaseKernel k = table({"1"}, Matrix(1, 1, 1.0));
  k.kind_ = Kind::ConstantOne;
  return k;
}

BaseKernel BaseKernel::table(std::vector<std::string> labels, const Matrix& values) {
  if (labels.empty()) throw ConfigError("table kernel needs at least one label");
  if (values.rows() != labels.size() || values.cols() != labels.size())
    throw ConfigError("table kernel values must be " + std::to_string(labels.size()) + "x" +
                      std::to_string(labels.size()));
  for (double x : values.data())
    if (!std::isfinite(x)) throw ConfigError("table kernel values must be finite");
  auto sorted = labels;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw ConfigError("table kernel labels must be unique");

  BaseKernel k;
  k.kind_ = Kind::Table;
  k.labels_ = std::move(labels);
  try {
    k.table_ = SymmetricMatrix::from_dense(values, 0.0);
  } catch (const InputError&) {
    throw ConfigError("table kernel values must be exactly symmetric");
  }
  return k;
}

std::size_t BaseKernel::label_index(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw InputError("unknown table label '" + label + "'");
  return static_cast<std::size_t>(it - labels_.begin());
}

void BaseKernel::check_element(const Element& e) const {
  if (kind_ == Kind::Rbf) {
    if (!std::holds_alternative<Point>(e))
      throw InputError("RBF kernel expects point elements, got a label");
  } else {
    if (!std::holds_alternative<std::string>(e))
      throw InputError("table kernel expects label elements, got a point");
    (void)label_index(std::get<std::string>(e));
  }
}

double BaseKernel::operator()(const Element& u, const Element& v) const {
  check_element(u);
  check_element(v);
  if (kind_ == Kind::Rbf)
    return std::exp(-gamma_ * squared_distance(std::get<Point>(u), std::get<Point>(v)));
  return table_(label_index(std::get<std::string>(u)), label_index(std::get<std::string>(v)));
}

BaseValidationReport validate_base(const BaseKernel& k, const std::vector<Element>& sample) {
  BaseValidationReport report;
  if (sample.empty()) {
    report.passed = false;
    report.findings.emplace_back("sample is empty");
    return report;
  }

  const std::size_t n = sample.size();
  SymmetricMatrix gram(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double uv = 0.0;
      double vu = 0.0;
      try {
        uv = k(sample[i], sample[j]);
        vu = k(sample[j], sample[i]);
      } catch (const InputError& e) {
        report.passed = false;
        report.findings.emplace_back("sample[" + std::to_string(i) + "], sample[" +
                                     std::to_string(j) + "]: " + e.what());
        return report;
      }
      gram.set(i, j, uv);
      if (uv != vu) {
        ++report.symmetry_violations;
        std::ostringstream os;
        os << "asymmetric value at (" << i << ", " << j << "): " << uv << " vs " << vu;
        report.findings.push_back(os.str());
      }
      if (uv < 0.0) {
        ++report.negative_values;
        std::ostringstream os;
        os << "negative value at (" << i << ", " << j << "): " << uv;
        report.findings.push_back(os.str());
      }
    }
  }
  report.passed = report.symmetry_violations == 0 && report.negative_values == 0;

  try {
    report.min_eigenvalue = jacobi_eigen(gram).min_eigenvalue;
  } catch (const NumericError& e) {
    report.findings.emplace_back(std::string("base spectrum unavailable: ") + e.what());
  }
  return report;
}

}  // namespace oakernel
