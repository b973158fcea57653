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

#include "oakernel/cli.hpp"

#include <algorithm>
#include <functional>
#include <ostream>

#include <CLI11.hpp>

#include "oakernel/counterexample.hpp"
#include "oakernel/io.hpp"

namespace oakernel::cli {

namespace {

struct Options {
  std::string input;
  std::string output;
  std::string format = "json";
  double tol = kDefaultPsdTolerance;
  double gamma = 1.0;
  std::string grid = "0.1,0.25,0.5,1,2,5";
  std::string lengths;
};

class Emitter {
 public:
  Emitter(const Options& opts, std::ostream& out) : opts_(opts), out_(out) {}

  void operator()(const std::string& text) const {
    if (opts_.output.empty()) out_ << text;
    else io::write_file(opts_.output, text);
  }
  void operator()(const io::json& j) const { (*this)(j.dump(2) + "\n"); }

 private:
  const Options& opts_;
  std::ostream& out_;
};

void emit_matrix(const Emitter& emit, const Options& opts, const GramMatrix& g) {
  if (opts.format == "csv") emit(io::matrix_to_csv(g.values));
  else emit(io::matrix_to_json(g));
}

int cmd_gram(const Options& opts, const Emitter& emit) {
  const auto dataset = io::dataset_from_json(io::json::parse(io::read_file(opts.input)));
  emit_matrix(emit, opts, oa_gram(dataset.tuples, dataset.base));
  return kOk;
}

int cmd_spectrum(const Options& opts, const Emitter& emit) {
  const GramMatrix g = io::parse_matrix(io::read_file(opts.input));
  const Spectrum s = jacobi_eigen(g.values);
  emit(io::spectrum_to_json(s, psd_check(s, opts.tol)));
  return kOk;
}

int cmd_counterexample(const Options& opts, const Emitter& emit) {
  const auto report = counterexample::run_counterexample(opts.gamma, opts.tol);
  emit(io::report_to_json(report));
  return report.refuted ? kOk : kNegativeVerdict;
}

int cmd_sweep(const Options& opts, const Emitter& emit) {
  emit(io::sweep_to_csv(counterexample::gamma_sweep(io::parse_double_list(opts.grid), opts.tol)));
  return kOk;
}

int cmd_repair(const Options& opts, const Emitter& emit) {
  emit_matrix(emit, opts, psd_project_clip(io::parse_matrix(io::read_file(opts.input))));
  return kOk;
}

int cmd_verify_min_kernel(const Options& opts, const Emitter& emit) {
  const auto verdict =
      counterexample::verify_min_kernel_psd(io::parse_size_list(opts.lengths), opts.tol);
  emit(io::min_kernel_to_json(verdict));
  return verdict.psd ? kOk : kNegativeVerdict;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opts;
  CLI::App app{"Optimal assignment kernel: Gram matrices, spectral audit and PSD repair"};
  app.name(args.empty() ? "oakernel" : args.front());
  app.require_subcommand(1);

  auto add_tol = [&](CLI::App* sub) {
    sub->add_option("--tol", opts.tol, "Relative PSD tolerance")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--output", opts.output, "Output path (default: stdout)");
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", opts.format, "Matrix output format")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
  };

  std::function<int(const Options&, const Emitter&)> handler;
  auto bind = [&](CLI::App* sub, auto fn) { sub->callback([&handler, fn] { handler = fn; }); };

  auto* gram = app.add_subcommand("gram", "Gram matrix of a tuple dataset");
  gram->add_option("--input", opts.input, "Tuple dataset JSON")->required();
  add_output(gram);
  add_format(gram);
  bind(gram, cmd_gram);

  auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues and PSD verdict of a matrix file");
  spectrum->add_option("--input", opts.input, "Matrix file (JSON or CSV)")->required();
  add_tol(spectrum);
  add_output(spectrum);
  bind(spectrum, cmd_spectrum);

  auto* ce = app.add_subcommand("counterexample", "Square-corner counterexample report");
  ce->add_option("--gamma", opts.gamma, "RBF width")->check(CLI::PositiveNumber)->capture_default_str();
  add_tol(ce);
  add_output(ce);
  bind(ce, cmd_counterexample);

  auto* sweep = app.add_subcommand("sweep", "Counterexample over a grid of gamma values (CSV)");
  sweep->add_option("--grid", opts.grid, "Comma-separated gamma values")->capture_default_str();
  add_tol(sweep);
  add_output(sweep);
  bind(sweep, cmd_sweep);

  auto* repair = app.add_subcommand("repair", "Clip negative eigenvalues of a matrix file");
  repair->add_option("--input", opts.input, "Matrix file (JSON or CSV)")->required();
  add_output(repair);
  add_format(repair);
  bind(repair, cmd_repair);

  auto* mk = app.add_subcommand("verify-min-kernel", "PSD check of the min kernel on tuple lengths");
  mk->add_option("--lengths", opts.lengths, "Comma-separated positive lengths")->required();
  add_tol(mk);
  add_output(mk);
  bind(mk, cmd_verify_min_kernel);

  std::vector<std::string> rest(args.size() > 1 ? args.begin() + 1 : args.end(), args.end());
  std::reverse(rest.begin(), rest.end());
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kOk : kInputError;
  }

  try {
    return handler(opts, Emitter(opts, out));
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kInputError;
  } catch (const io::json::exception& e) {
    err << "input error: " << e.what() << '\n';
    return kInputError;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericError;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kConsistencyError;
  }
}

}  // namespace oakernel::cli
