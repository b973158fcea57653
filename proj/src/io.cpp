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

#include "oakernel/io.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace oakernel::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

double parse_double(std::string_view text) {
  const std::string_view t = trim(text);
  double value = 0.0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    throw InputError("not a number: '" + std::string(t) + "'");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

Matrix matrix_from_json(const json& values) {
  if (!values.is_array()) throw InputError("matrix values must be an array of rows");
  std::vector<std::vector<double>> rows;
  for (const auto& row : values) {
    if (!row.is_array()) throw InputError("matrix row must be an array");
    auto& out = rows.emplace_back();
    for (const auto& x : row) {
      if (!x.is_number()) throw InputError("matrix entries must be numbers");
      out.push_back(x.get<double>());
    }
  }
  return Matrix::from_rows(rows);
}

json matrix_rows(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    rows.push_back(std::move(row));
  }
  return rows;
}

json matrix_rows(const SymmetricMatrix& m) { return matrix_rows(m.to_dense()); }

json verdict_to_json(const PsdVerdict& v) {
  return {{"psd", v.psd},
          {"min_eigenvalue", v.min_eigenvalue},
          {"max_eigenvalue", v.max_eigenvalue},
          {"margin", v.margin},
          {"tolerance", v.tolerance}};
}

Element element_from_json(const json& e) {
  if (e.is_array()) {
    std::vector<double> coords;
    for (const auto& c : e) {
      if (!c.is_number()) throw InputError("point coordinates must be numbers");
      coords.push_back(c.get<double>());
    }
    return Point(std::move(coords));
  }
  if (e.is_string()) return e.get<std::string>();
  if (e.is_number_integer()) return std::to_string(e.get<long long>());
  throw InputError("tuple element must be a coordinate array, a string or an integer");
}

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("t" + std::to_string(i));
  return labels;
}

}  // namespace

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

BaseKernel base_kernel_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type") || !j["type"].is_string())
    throw InputError("base kernel must be an object with a string \"type\"");
  const auto type = j["type"].get<std::string>();
  if (type == "rbf") {
    if (!j.contains("gamma") || !j["gamma"].is_number())
      throw InputError("rbf base kernel needs a numeric \"gamma\"");
    return BaseKernel::rbf(j["gamma"].get<double>());
  }
  if (type == "constant_one") return BaseKernel::constant_one();
  if (type == "table") {
    if (!j.contains("labels") || !j["labels"].is_array() || !j.contains("values"))
      throw InputError("table base kernel needs \"labels\" and \"values\"");
    std::vector<std::string> labels;
    for (const auto& l : j["labels"]) {
      if (l.is_string()) labels.push_back(l.get<std::string>());
      else if (l.is_number_integer()) labels.push_back(std::to_string(l.get<long long>()));
      else throw InputError("table labels must be strings or integers");
    }
    return BaseKernel::table(std::move(labels), matrix_from_json(j["values"]));
  }
  throw InputError("unknown base kernel type '" + type + "'");
}

json base_kernel_to_json(const BaseKernel& k) {
  switch (k.kind()) {
    case BaseKernel::Kind::Rbf:
      return {{"type", "rbf"}, {"gamma", k.gamma()}};
    case BaseKernel::Kind::ConstantOne:
      return {{"type", "constant_one"}};
    case BaseKernel::Kind::Table:
      return {{"type", "table"}, {"labels", k.labels()}, {"values", matrix_rows(k.table_values())}};
  }
  return {};
}

TupleDataset dataset_from_json(const json& j) {
  if (!j.is_object() || !j.contains("base_kernel") || !j.contains("tuples"))
    throw InputError("dataset needs \"base_kernel\" and \"tuples\"");
  TupleDataset d{base_kernel_from_json(j["base_kernel"]), {}};
  if (!j["tuples"].is_array() || j["tuples"].empty())
    throw InputError("\"tuples\" must be a non-empty array");
  for (const auto& t : j["tuples"]) {
    if (!t.is_object() || !t.contains("elements") || !t["elements"].is_array())
      throw InputError("each tuple needs an \"elements\" array");
    TupleObject obj;
    obj.label = t.contains("label") ? t["label"].get<std::string>()
                                    : "t" + std::to_string(d.tuples.size());
    for (const auto& e : t["elements"]) obj.elements.push_back(element_from_json(e));
    if (obj.elements.empty()) throw InputError("tuple '" + obj.label + "' is empty");
    d.tuples.push_back(std::move(obj));
  }
  return d;
}

GramMatrix parse_matrix(std::string_view text) {
  const std::string_view body = trim(text);
  if (body.empty()) throw InputError("matrix input is empty");

  Matrix dense;
  std::vector<std::string> labels;
  if (body.front() == '{') {
    json j;
    try {
      j = json::parse(body);
    } catch (const json::parse_error& e) {
      throw InputError(std::string("invalid matrix JSON: ") + e.what());
    }
    if (!j.contains("values")) throw InputError("matrix JSON needs \"values\"");
    dense = matrix_from_json(j["values"]);
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
  } else {
    std::vector<std::vector<double>> rows;
    for (std::string_view line : split(body, '\n')) {
      line = trim(line);
      if (line.empty()) continue;
      auto& row = rows.emplace_back();
      for (std::string_view cell : split(line, ',')) row.push_back(parse_double(cell));
    }
    dense = Matrix::from_rows(rows);
  }
  if (dense.empty()) throw InputError("matrix is empty");
  if (labels.empty()) labels = default_labels(dense.rows());
  if (labels.size() != dense.rows()) throw InputError("label count does not match matrix size");
  for (double x : dense.data())
    if (!std::isfinite(x)) throw InputError("matrix has non-finite entries");
  SymmetricMatrix values = SymmetricMatrix::from_dense(dense, 1e-12);
  return {std::move(labels), std::move(values)};
}

std::string matrix_to_csv(const SymmetricMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j) out += ',';
      out += format_double(m(i, j));
    }
    out += '\n';
  }
  return out;
}

json matrix_to_json(const GramMatrix& g) {
  return {{"labels", g.labels}, {"values", matrix_rows(g.values)}};
}

json spectrum_to_json(const Spectrum& s, const PsdVerdict& verdict) {
  json j = verdict_to_json(verdict);
  j["eigenvalues"] = s.eigenvalues;
  j["eigenvectors"] = matrix_rows(s.eigenvectors);
  j["sweeps"] = s.sweeps;
  return j;
}

json report_to_json(const counterexample::CounterexampleReport& r) {
  json points = json::array();
  for (const auto& p : r.config.points) points.push_back(p.coords());
  json violations = json::array();
  for (const auto& v : r.distances.violations)
    violations.push_back({{"i", v.i}, {"j", v.j}, {"squared", v.squared}});

  return {
      {"config",
       {{"gamma", r.config.gamma},
        {"a", r.config.a},
        {"points", points},
        {"pair_order", counterexample::kPairOrder}}},
      {"tolerance", r.tolerance},
      {"gram_computed", matrix_to_json(r.gram_computed)},
      {"gram_closed_form", matrix_to_json(r.gram_closed_form)},
      {"max_abs_gram_diff", r.max_abs_gram_diff},
      {"spectrum", spectrum_to_json(r.spectrum, r.verdict)},
      {"witness", counterexample::kWitness},
      {"witness_value", r.witness_value},
      {"witness_expected", r.witness_expected},
      {"rayleigh_bound", r.rayleigh_bound},
      {"null_directions", counterexample::kNullDirections},
      {"null_direction_values", r.null_direction_values},
      {"distances_squared", matrix_rows(r.distances.squared)},
      {"distances", matrix_rows(r.distances.distances)},
      {"metric_violations", violations},
      {"pythagorean_residuals", r.pythagorean_residuals},
      {"diagonal_sq_residuals", r.diagonal_residuals},
      {"side_lengths_sq", r.side_lengths_sq},
      {"hyp_expected", r.hyp_expected},
      {"hyp_actual", r.hyp_actual},
      {"contradiction_gap", r.contradiction_gap},
      {"refuted", r.refuted},
  };
}

json min_kernel_to_json(const counterexample::MinKernelVerdict& v) {
  return {{"lengths", v.lengths},
          {"gram", matrix_to_json(v.gram)},
          {"entry_mismatches", v.entry_mismatches},
          {"spectrum", verdict_to_json(v.spectrum)},
          {"psd", v.psd}};
}

std::string sweep_to_csv(const std::vector<counterexample::SweepRow>& rows) {
  std::string out(kSweepHeader);
  out += '\n';
  for (const auto& r : rows) {
    out += format_double(r.gamma) + ',' + format_double(r.a) + ',' + format_double(r.lambda_min) +
           ',' + format_double(r.witness_value) + ',' + format_double(r.contradiction_gap) + ',' +
           (r.refuted ? "true" : "false") + '\n';
  }
  return out;
}

std::vector<double> parse_double_list(std::string_view text) {
  if (trim(text).empty()) throw InputError("empty list");
  std::vector<double> out;
  for (std::string_view item : split(text, ',')) out.push_back(parse_double(item));
  return out;
}

std::vector<std::size_t> parse_size_list(std::string_view text) {
  if (trim(text).empty()) throw InputError("empty list");
  std::vector<std::size_t> out;
  for (std::string_view item : split(text, ',')) {
    const std::string_view t = trim(item);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
      throw InputError("not a nonnegative integer: '" + std::string(t) + "'");
    out.push_back(value);
  }
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write '" + path + "'");
  out << contents;
}

}  // namespace oakernel::io
