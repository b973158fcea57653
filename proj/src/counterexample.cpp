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

#include "oakernel/counterexample.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

namespace oakernel::counterexample {

namespace {

constexpr std::size_t kAB = 0, kAC = 1, kAD = 2, kBC = 3, kBD = 4, kCD = 5;

double dot(std::span<const double> v) {
  double s = 0.0;
  for (double x : v) s += x * x;
  return s;
}

}  // namespace

std::vector<TupleObject> SquareConfig::tuples() const {
  std::vector<TupleObject> out;
  out.reserve(kPairOrder.size());
  for (const char* name : kPairOrder) {
    TupleObject t;
    t.label = name;
    for (const char* c = name; *c != '\0'; ++c) t.elements.emplace_back(points[*c - 'A']);
    out.push_back(std::move(t));
  }
  return out;
}

SquareConfig build_square_config(double gamma) {
  if (!(gamma > 0.0) || !std::isfinite(gamma)) throw ConfigError("gamma must be positive and finite");
  SquareConfig cfg;
  cfg.gamma = gamma;
  cfg.a = std::exp(-gamma);
  return cfg;
}

GramMatrix expected_gram_closed_form(double gamma) {
  const double a = build_square_config(gamma).a;
  GramMatrix g;
  g.labels.assign(kPairOrder.begin(), kPairOrder.end());
  g.values = SymmetricMatrix(kPairOrder.size());

  for (std::size_t i = 0; i < kPairOrder.size(); ++i) g.values.set(i, i, 2.0);

  const std::pair<std::size_t, std::size_t> one_plus_a[] = {
      {kAB, kAC}, {kAB, kBD}, {kBC, kBD}, {kBC, kAC},
      {kCD, kAC}, {kCD, kBD}, {kAD, kAC}, {kAD, kBD},
  };
  const std::pair<std::size_t, std::size_t> one_plus_a_sq[] = {
      {kAB, kBC}, {kBC, kCD}, {kCD, kAD}, {kAB, kAD},
  };
  const std::pair<std::size_t, std::size_t> two_a[] = {
      {kAB, kCD}, {kAD, kBC}, {kAC, kBD},
  };
  for (auto [i, j] : one_plus_a) g.values.set(i, j, 1.0 + a);
  for (auto [i, j] : one_plus_a_sq) g.values.set(i, j, 1.0 + a * a);
  for (auto [i, j] : two_a) g.values.set(i, j, 2.0 * a);
  return g;
}

CounterexampleReport run_counterexample(double gamma, double tol) {
  CounterexampleReport r;
  r.config = build_square_config(gamma);
  r.tolerance = tol;
  const double a = r.config.a;

  r.gram_computed = oa_gram(r.config.tuples(), r.config.base_kernel());
  r.gram_closed_form = expected_gram_closed_form(gamma);
  r.max_abs_gram_diff = max_abs_difference(r.gram_computed.values, r.gram_closed_form.values);
  if (!(r.max_abs_gram_diff <= kClosedFormTolerance)) {
    std::ostringstream os;
    os << "computed Gram deviates from the closed form by " << r.max_abs_gram_diff << " at gamma "
       << gamma;
    throw ConsistencyError(os.str());
  }

  const SymmetricMatrix& k = r.gram_computed.values;
  r.spectrum = jacobi_eigen(k);
  r.verdict = psd_check(r.spectrum, tol);

  r.witness_value = quadratic_form(k, kWitness);
  r.witness_expected = 8.0 * a * a - 8.0 * a;
  r.rayleigh_bound = r.witness_value / dot(kWitness);
  for (std::size_t n = 0; n < kNullDirections.size(); ++n)
    r.null_direction_values[n] = quadratic_form(k, kNullDirections[n]);

  r.distances = distances_from_gram(r.gram_computed);
  const SymmetricMatrix& d2 = r.distances.squared;
  r.pythagorean_residuals = {
      d2(kAB, kCD) - (d2(kAB, kAC) + d2(kAC, kCD)),
      d2(kAB, kCD) - (d2(kAB, kBD) + d2(kBD, kCD)),
      d2(kAD, kBC) - (d2(kAD, kAC) + d2(kAC, kBC)),
      d2(kAD, kBC) - (d2(kAD, kBD) + d2(kBD, kBC)),
  };
  r.diagonal_residuals = {
      d2(kAC, kBD) - d2(kAB, kCD),
      d2(kAC, kBD) - d2(kAD, kBC),
  };
  r.side_lengths_sq = {d2(kAB, kBC), d2(kBC, kCD), d2(kCD, kAD), d2(kAD, kAB)};

  // (AB, BC, CD, AD) would have to be a square with these sides, so its
  // diagonal (AB, CD) is fixed by Pythagoras; the kernel says otherwise.
  r.hyp_expected = std::sqrt(r.side_lengths_sq[0] + r.side_lengths_sq[1]);
  r.hyp_actual = r.distances.distances(kAB, kCD);
  r.contradiction_gap = r.hyp_expected - r.hyp_actual;

  r.refuted = !r.verdict.psd && r.contradiction_gap > tol;
  return r;
}

std::vector<SweepRow> gamma_sweep(const std::vector<double>& grid, double tol) {
  for (double g : grid)
    if (!(g > 0.0) || !std::isfinite(g)) throw ConfigError("sweep grid values must be positive");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double g : grid) {
    const CounterexampleReport r = run_counterexample(g, tol);
    rows.push_back({g, r.config.a, r.verdict.min_eigenvalue, r.witness_value, r.contradiction_gap,
                    r.refuted});
  }
  return rows;
}

MinKernelVerdict verify_min_kernel_psd(const std::vector<std::size_t>& lengths, double tol) {
  if (lengths.empty()) throw InputError("no lengths given");
  std::vector<TupleObject> tuples;
  tuples.reserve(lengths.size());
  for (std::size_t n : lengths) {
    if (n == 0) throw InputError("tuple lengths must be positive");
    tuples.push_back({"len" + std::to_string(n), std::vector<Element>(n, Element{std::string("1")})});
  }

  MinKernelVerdict v;
  v.lengths = lengths;
  v.gram = oa_gram(tuples, BaseKernel::constant_one());
  for (std::size_t i = 0; i < lengths.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (v.gram.values(i, j) != static_cast<double>(std::min(lengths[i], lengths[j])))
        ++v.entry_mismatches;
  v.spectrum = psd_check(jacobi_eigen(v.gram.values), tol);
  v.psd = v.entry_mismatches == 0 && v.spectrum.psd;
  return v;
}

}  // namespace oakernel::counterexample
