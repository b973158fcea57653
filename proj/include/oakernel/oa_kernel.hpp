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

#include <string>
#include <vector>

#include "oakernel/base_kernel.hpp"
#include "oakernel/spectral.hpp"

namespace oakernel {

/// An object decomposed into an ordered, non-empty tuple of base elements.
struct TupleObject {
  std::string label;
  std::vector<Element> elements;

  [[nodiscard]] std::size_t length() const noexcept { return elements.size(); }
};

/// |x| x |y| matrix of base-kernel values k1(x_i, y_j).
Matrix profit_matrix(const TupleObject& x, const TupleObject& y, const BaseKernel& base);

/// Optimal assignment kernel: the maximum total base similarity over all
/// injections of the shorter tuple's elements into the longer one's.
double oa_eval(const TupleObject& x, const TupleObject& y, const BaseKernel& base);

/// Gram matrix of oa_eval over `tuples`, upper triangle computed and mirrored.
GramMatrix oa_gram(const std::vector<TupleObject>& tuples, const BaseKernel& base);

}  // namespace oakernel
