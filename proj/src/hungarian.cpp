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

#include "oakernel/hungarian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace oakernel {

namespace {

// Profit matrix oriented so that rows are the smaller side.
struct Oriented {
  Matrix profits;
  bool transposed = false;
};

Oriented orient(const Matrix& p) {
  if (p.rows() > p.cols()) return {p.transposed(), true};
  return {p, false};
}

double max_entry(const Matrix& p) {
  double m = 0.0;
  for (double x : p.data()) m = std::max(m, x);
  return m;
}

Assignment to_assignment(const Oriented& o, const std::vector<std::size_t>& col_of_row) {
  Assignment a;
  const std::size_t r = o.profits.rows();
  a.pairs.reserve(r);
  for (std::size_t i = 0; i < r; ++i) {
    const std::size_t j = col_of_row[i];
    a.value += o.profits(i, j);
    a.pairs.emplace_back(o.transposed ? std::make_pair(j, i) : std::make_pair(i, j));
  }
  return a;
}

// Square min-cost solver with row/column potentials. Costs are
// max_profit - profit on real rows and max_profit on padding rows.
class SquareSolver {
 public:
  SquareSolver(const Matrix& profits, double max_profit)
      : profits_(profits), max_profit_(max_profit), n_(profits.cols()) {}

  double cost(std::size_t i, std::size_t j) const {
    return i < profits_.rows() ? max_profit_ - profits_(i, j) : max_profit_;
  }

  // Classical shortest-augmenting-path Hungarian method, 1-based internally.
  void solve() {
    const double inf = std::numeric_limits<double>::infinity();
    u_.assign(n_ + 1, 0.0);
    v_.assign(n_ + 1, 0.0);
    std::vector<std::size_t> match(n_ + 1, 0);  // match[col] = row, 0 = free
    std::vector<std::size_t> way(n_ + 1, 0);

    for (std::size_t row = 1; row <= n_; ++row) {
      match[0] = row;
      std::size_t col0 = 0;
      std::vector<double> min_slack(n_ + 1, inf);
      std::vector<char> used(n_ + 1, 0);
      do {
        used[col0] = 1;
        const std::size_t row0 = match[col0];
        double delta = inf;
        std::size_t col1 = 0;
        for (std::size_t j = 1; j <= n_; ++j) {
          if (used[j]) continue;
          const double slack = cost(row0 - 1, j - 1) - u_[row0] - v_[j];
          if (slack < min_slack[j]) {
            min_slack[j] = slack;
            way[j] = col0;
          }
          if (min_slack[j] < delta) {
            delta = min_slack[j];
            col1 = j;
          }
        }
        for (std::size_t j = 0; j <= n_; ++j) {
          if (used[j]) {
            u_[match[j]] += delta;
            v_[j] -= delta;
          } else {
            min_slack[j] -= delta;
          }
        }
        col0 = col1;
      } while (match[col0] != 0);
      do {
        const std::size_t col1 = way[col0];
        match[col0] = match[col1];
        col0 = col1;
      } while (col0 != 0);
    }

    col_of_row_.assign(n_, 0);
    row_of_col_.assign(n_, 0);
    for (std::size_t j = 1; j <= n_; ++j) {
      col_of_row_[match[j] - 1] = j - 1;
      row_of_col_[j - 1] = match[j] - 1;
    }
  }

  // Every optimal assignment uses only edges with zero reduced cost under the
  // optimal potentials, so the lexicographically smallest optimum is found by
  // greedy selection in the tight subgraph, keeping a perfect matching alive
  // via alternating paths.
  void canonicalize(std::size_t real_rows) {
    tight_tol_ = 1e-12 * std::max(1.0, max_profit_);
    for (std::size_t i = 0; i < real_rows; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        const std::size_t owner = row_of_col_[j];
        if (owner < i) continue;
        if (owner == i) break;
        if (!tight(i, j)) continue;
        std::vector<char> visited(n_, 0);
        if (reroute(owner, i, j, col_of_row_[i], visited)) {
          col_of_row_[i] = j;
          row_of_col_[j] = i;
          break;
        }
      }
    }
  }

  const std::vector<std::size_t>& col_of_row() const { return col_of_row_; }

 private:
  bool tight(std::size_t i, std::size_t j) const {
    return cost(i, j) - u_[i + 1] - v_[j + 1] <= tight_tol_;
  }

  // Finds an alternating path from `row` to the column `target` that avoids
  // `blocked` and rows <= `pivot`, and flips it.
  bool reroute(std::size_t row, std::size_t pivot, std::size_t blocked, std::size_t target,
               std::vector<char>& visited) {
    for (std::size_t c = 0; c < n_; ++c) {
      if (c == blocked || visited[c] || !tight(row, c)) continue;
      visited[c] = 1;
      bool ok = c == target;
      if (!ok) {
        const std::size_t next = row_of_col_[c];
        ok = next > pivot && reroute(next, pivot, blocked, target, visited);
      }
      if (ok) {
        col_of_row_[row] = c;
        row_of_col_[c] = row;
        return true;
      }
    }
    return false;
  }

  const Matrix& profits_;
  double max_profit_;
  std::size_t n_;
  double tight_tol_ = 0.0;
  std::vector<double> u_;
  std::vector<double> v_;
  std::vector<std::size_t> col_of_row_;
  std::vector<std::size_t> row_of_col_;
};

}  // namespace

void validate_profits(const Matrix& profits) {
  if (profits.rows() == 0 || profits.cols() == 0) throw InputError("profit matrix is empty");
  for (double x : profits.data()) {
    if (!std::isfinite(x)) throw InputError("profit matrix has non-finite entries");
    if (x < 0.0) throw InputError("profit matrix has negative entries");
  }
}

Assignment solve_max_assignment(const Matrix& profits) {
  validate_profits(profits);
  const Oriented o = orient(profits);

  SquareSolver solver(o.profits, max_entry(o.profits));
  solver.solve();
  const Assignment raw = to_assignment(o, solver.col_of_row());

  solver.canonicalize(o.profits.rows());
  Assignment canonical = to_assignment(o, solver.col_of_row());
  if (canonical.value < raw.value - 1e-14 * std::max(1.0, raw.value)) return raw;
  return canonical;
}

Assignment brute_force_assignment(const Matrix& profits) {
  validate_profits(profits);
  const Oriented o = orient(profits);
  const std::size_t r = o.profits.rows();
  const std::size_t c = o.profits.cols();
  if (r > kBruteForceMaxSide)
    throw InputError("brute-force assignment limited to " + std::to_string(kBruteForceMaxSide) +
                     " items on the smaller side");

  std::vector<std::size_t> current(r);
  std::vector<std::size_t> best;
  std::vector<char> used(c, 0);
  double best_value = -1.0;

  // Depth-first in lexicographic order; only strict improvements replace the
  // incumbent, so the first optimum in that order wins.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (depth == r) {
      double value = 0.0;
      for (std::size_t i = 0; i < r; ++i) value += o.profits(i, current[i]);
      if (value > best_value) {
        best_value = value;
        best = current;
      }
      return;
    }
    for (std::size_t j = 0; j < c; ++j) {
      if (used[j]) continue;
      used[j] = 1;
      current[depth] = j;
      self(self, depth + 1);
      used[j] = 0;
    }
  };
  search(search, 0);
  return to_assignment(o, best);
}

}  // namespace oakernel
