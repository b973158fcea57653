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

#include "oakernel/oa_kernel.hpp"

#include "oakernel/hungarian.hpp"

namespace oakernel {

namespace {

void check_tuple(const TupleObject& t, const BaseKernel& base) {
  if (t.elements.empty()) throw InputError("tuple '" + t.label + "' is empty");
  for (const auto& e : t.elements) {
    try {
      base.check_element(e);
    } catch (const InputError& err) {
      throw InputError("tuple '" + t.label + "': " + err.what());
    }
  }
}

}  // namespace

Matrix profit_matrix(const TupleObject& x, const TupleObject& y, const BaseKernel& base) {
  check_tuple(x, base);
  check_tuple(y, base);
  Matrix p(x.length(), y.length());
  for (std::size_t i = 0; i < x.length(); ++i)
    for (std::size_t j = 0; j < y.length(); ++j) p(i, j) = base(x.elements[i], y.elements[j]);
  return p;
}

double oa_eval(const TupleObject& x, const TupleObject& y, const BaseKernel& base) {
  // |y| >= |x| injects x into y; otherwise the solver injects y into x.
  return solve_max_assignment(profit_matrix(x, y, base)).value;
}

GramMatrix oa_gram(const std::vector<TupleObject>& tuples, const BaseKernel& base) {
  if (tuples.empty()) throw InputError("no tuples given");
  GramMatrix g;
  g.labels.reserve(tuples.size());
  for (const auto& t : tuples) g.labels.push_back(t.label);
  g.values = SymmetricMatrix(tuples.size());
  for (std::size_t i = 0; i < tuples.size(); ++i)
    for (std::size_t j = i; j < tuples.size(); ++j) g.values.set(i, j, oa_eval(tuples[i], tuples[j], base));
  return g;
}

}  // namespace oakernel
