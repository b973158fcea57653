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

#include "oakernel/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace oakernel {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation zeroing a(p, q): a <- J^T a J, v <- v J.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  if (apq == 0.0) return;
  const double tau = (a(q, q) - a(p, p)) / (2.0 * apq);
  const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const std::size_t n = a.rows();

  for (std::size_t k = 0; k < n; ++k) {
    const double akp = a(k, p);
    const double akq = a(k, q);
    a(k, p) = c * akp - s * akq;
    a(k, q) = s * akp + c * akq;
  }
  for (std::size_t k = 0; k < n; ++k) {
    const double apk = a(p, k);
    const double aqk = a(q, k);
    a(p, k) = c * apk - s * aqk;
    a(q, k) = s * apk + c * aqk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;

  for (std::size_t k = 0; k < n; ++k) {
    const double vkp = v(k, p);
    const double vkq = v(k, q);
    v(k, p) = c * vkp - s * vkq;
    v(k, q) = s * vkp + c * vkq;
  }
}

SymmetricMatrix reconstruct_with(const Spectrum& s, auto&& transform) {
  const std::size_t n = s.eigenvalues.size();
  std::vector<double> scaled(n);
  for (std::size_t k = 0; k < n; ++k) scaled[k] = transform(s.eigenvalues[k]);

  SymmetricMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double acc = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        acc += s.eigenvectors(i, k) * scaled[k] * s.eigenvectors(j, k);
      out.set(i, j, acc);
    }
  }
  return out;
}

}  // namespace

Spectrum jacobi_eigen(const SymmetricMatrix& g) {
  const std::size_t n = g.size();
  Matrix a = g.to_dense();
  for (double x : a.data())
    if (!std::isfinite(x)) throw InputError("matrix has non-finite entries");

  Matrix v = Matrix::identity(n);
  const double threshold = 1e-12 * g.frobenius_norm();

  std::size_t sweeps = 0;
  while (off_diagonal_norm(a) > threshold) {
    if (sweeps == kMaxJacobiSweeps)
      throw NumericError("Jacobi eigensolver did not converge in " +
                         std::to_string(kMaxJacobiSweeps) + " sweeps");
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) rotate(a, v, p, q);
    ++sweeps;
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t l, std::size_t r) { return a(l, l) > a(r, r); });

  Spectrum s;
  s.sweeps = sweeps;
  s.eigenvalues.resize(n);
  s.eigenvectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t src = order[k];
    s.eigenvalues[k] = a(src, src);

    std::size_t lead = 0;
    for (std::size_t i = 1; i < n; ++i)
      if (std::abs(v(i, src)) > std::abs(v(lead, src))) lead = i;
    const double sign = v(lead, src) < 0.0 ? -1.0 : 1.0;
    for (std::size_t i = 0; i < n; ++i) s.eigenvectors(i, k) = sign * v(i, src);
  }

  const PsdVerdict verdict = psd_check(s);
  s.min_eigenvalue = verdict.min_eigenvalue;
  s.psd = verdict.psd;
  s.margin = verdict.margin;
  return s;
}

PsdVerdict psd_check(const Spectrum& s, double tol) {
  if (tol < 0.0) throw ConfigError("PSD tolerance must be nonnegative");
  PsdVerdict out;
  out.tolerance = tol;
  if (s.eigenvalues.empty()) {
    out.psd = true;
    return out;
  }
  const auto [lo, hi] = std::minmax_element(s.eigenvalues.begin(), s.eigenvalues.end());
  out.min_eigenvalue = *lo;
  out.max_eigenvalue = *hi;
  const double scale = std::max(1.0, out.max_eigenvalue);
  out.margin = out.min_eigenvalue / scale;
  out.psd = out.min_eigenvalue >= -tol * scale;
  return out;
}

double quadratic_form(const SymmetricMatrix& g, std::span<const double> v) {
  if (v.size() != g.size())
    throw InputError("coefficient vector has length " + std::to_string(v.size()) +
                     ", matrix has size " + std::to_string(g.size()));
  double total = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    double row = 0.0;
    for (std::size_t j = 0; j < v.size(); ++j) row += g(i, j) * v[j];
    total += v[i] * row;
  }
  return total;
}

SymmetricMatrix reconstruct(const Spectrum& s) {
  return reconstruct_with(s, [](double lambda) { return lambda; });
}

DistanceMatrix distances_from_gram(const GramMatrix& g) {
  const std::size_t n = g.size();
  DistanceMatrix d;
  d.labels = g.labels;
  d.squared = SymmetricMatrix(n);
  d.distances = SymmetricMatrix(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      const double sq = g.values(i, i) + g.values(j, j) - 2.0 * g.values(i, j);
      d.squared.set(i, j, sq);
      d.distances.set(i, j, std::sqrt(std::max(0.0, sq)));
      if (sq < -kMetricViolationThreshold) d.violations.push_back({j, i, sq});
    }
  }
  std::sort(d.violations.begin(), d.violations.end(), [](const auto& l, const auto& r) {
    return l.i != r.i ? l.i < r.i : l.j < r.j;
  });
  return d;
}

GramMatrix psd_project_clip(const GramMatrix& g) {
  const Spectrum s = jacobi_eigen(g.values);
  return {g.labels, reconstruct_with(s, [](double lambda) { return std::max(lambda, 0.0); })};
}

}  // namespace oakernel
