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
#include <string_view>
#include <vector>

#include <json.hpp>

#include "oakernel/base_kernel.hpp"
#include "oakernel/counterexample.hpp"
#include "oakernel/oa_kernel.hpp"
#include "oakernel/spectral.hpp"

namespace oakernel::io {

using nlohmann::json;

/// %.17g: lossless for IEEE doubles.
std::string format_double(double x);

/// {"type":"rbf","gamma":g} | {"type":"constant_one"} |
/// {"type":"table","labels":[...],"values":[[...]]}
BaseKernel base_kernel_from_json(const json& j);
json base_kernel_to_json(const BaseKernel& k);

struct TupleDataset {
  BaseKernel base;
  std::vector<TupleObject> tuples;
};

/// {"base_kernel": {...}, "tuples": [{"label": "AB", "elements": [[0,0],[1,0]]}, ...]}.
/// Elements are coordinate arrays, strings, or integers (read as labels).
/// Missing labels become "t0", "t1", ...
TupleDataset dataset_from_json(const json& j);

/// Parses a matrix from JSON ({"labels":[...],"values":[[...]]}, labels
/// optional) or from header-free row-major CSV. The format is detected from
/// the first non-blank character.
GramMatrix parse_matrix(std::string_view text);

std::string matrix_to_csv(const SymmetricMatrix& m);
json matrix_to_json(const GramMatrix& g);

json spectrum_to_json(const Spectrum& s, const PsdVerdict& verdict);
json report_to_json(const counterexample::CounterexampleReport& r);
json min_kernel_to_json(const counterexample::MinKernelVerdict& v);

inline constexpr std::string_view kSweepHeader =
    "gamma,a,lambda_min,witness_value,contradiction_gap,refuted";
std::string sweep_to_csv(const std::vector<counterexample::SweepRow>& rows);

/// "0.1,0.5,1" -> {0.1, 0.5, 1}. Throws InputError on malformed items.
std::vector<double> parse_double_list(std::string_view text);
std::vector<std::size_t> parse_size_list(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace oakernel::io
