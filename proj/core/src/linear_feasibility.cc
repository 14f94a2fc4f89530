// Copyright 2026 The Pacing Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pacing/linear_feasibility.h"

#include <stdexcept>
#include <string>

namespace pacing {
namespace {

using Row = std::vector<Rational>;

// Tableau for: minimize the sum of artificial variables subject to
// A' y = b, y >= 0, where y = (x, slacks, artificials). The last entry of each
// row is its right-hand side. `objective` holds reduced costs, with its
// right-hand side equal to minus the current infeasibility.
struct Tableau {
  std::vector<Row> rows;
  Row objective;
  std::vector<std::size_t> basis;
  std::size_t num_columns = 0;

  void Pivot(std::size_t pivot_row, std::size_t column) {
    Row& prow = rows[pivot_row];
    const Rational inv = 1 / prow[column];
    for (Rational& entry : prow) {
      if (entry != 0) entry *= inv;
    }
    auto eliminate = [&](Row& row) {
      if (row[column] == 0) return;
      const Rational factor = row[column];
      for (std::size_t c = 0; c <= num_columns; ++c) {
        if (prow[c] != 0) row[c] -= factor * prow[c];
      }
    };
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != pivot_row) eliminate(rows[r]);
    }
    eliminate(objective);
    basis[pivot_row] = column;
  }
};

}  // namespace

void LinearSystem::Add(LinearConstraint constraint) {
  for (const auto& [var, coeff] : constraint.terms) {
    if (var >= num_variables_) {
      throw std::out_of_range("constraint references variable " +
                              std::to_string(var));
    }
  }
  constraints_.push_back(std::move(constraint));
}

bool LinearSystem::IsSatisfiedBy(const std::vector<Rational>& point) const {
  if (point.size() != num_variables_) return false;
  for (const Rational& v : point) {
    if (v < 0) return false;
  }
  for (const LinearConstraint& c : constraints_) {
    Rational lhs = 0;
    for (const auto& [var, coeff] : c.terms) lhs += coeff * point[var];
    switch (c.relation) {
      case Relation::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
      case Relation::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Relation::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
    }
  }
  return true;
}

std::optional<std::vector<Rational>> FindFeasiblePoint(
    const LinearSystem& system) {
  const std::size_t n = system.num_variables();
  const auto& constraints = system.constraints();
  const std::size_t rows = constraints.size();

  // Normalize to nonnegative right-hand sides, then lay out slack and
  // artificial columns after the structural ones.
  std::vector<Relation> relation(rows);
  std::vector<bool> flipped(rows, false);
  std::size_t num_slacks = 0;
  std::size_t num_artificials = 0;
  for (std::size_t r = 0; r < rows; ++r) {
    relation[r] = constraints[r].relation;
    if (constraints[r].rhs < 0) {
      flipped[r] = true;
      if (relation[r] == Relation::kLessEqual) {
        relation[r] = Relation::kGreaterEqual;
      } else if (relation[r] == Relation::kGreaterEqual) {
        relation[r] = Relation::kLessEqual;
      }
    }
    if (relation[r] != Relation::kEqual) ++num_slacks;
    if (relation[r] != Relation::kLessEqual) ++num_artificials;
  }

  Tableau t;
  t.num_columns = n + num_slacks + num_artificials;
  t.rows.assign(rows, Row(t.num_columns + 1));
  t.basis.assign(rows, 0);
  t.objective.assign(t.num_columns + 1, 0);
  const std::size_t first_artificial = n + num_slacks;

  std::size_t next_slack = n;
  std::size_t next_artificial = first_artificial;
  for (std::size_t r = 0; r < rows; ++r) {
    Row& row = t.rows[r];
    const Rational sign = flipped[r] ? -1 : 1;
    for (const auto& [var, coeff] : constraints[r].terms) {
      row[var] += sign * coeff;
    }
    row[t.num_columns] = sign * constraints[r].rhs;
    if (relation[r] == Relation::kLessEqual) {
      row[next_slack] = 1;
      t.basis[r] = next_slack++;
    } else {
      if (relation[r] == Relation::kGreaterEqual) row[next_slack++] = -1;
      row[next_artificial] = 1;
      t.basis[r] = next_artificial++;
      for (std::size_t c = 0; c < first_artificial; ++c) {
        if (row[c] != 0) t.objective[c] -= row[c];
      }
      t.objective[t.num_columns] -= row[t.num_columns];
    }
  }

  for (;;) {
    std::size_t entering = t.num_columns;
    for (std::size_t c = 0; c < t.num_columns; ++c) {
      if (t.objective[c] < 0) {
        entering = c;
        break;
      }
    }
    if (entering == t.num_columns) break;

    std::size_t leaving = rows;
    Rational best_ratio;
    for (std::size_t r = 0; r < rows; ++r) {
      const Rational& a = t.rows[r][entering];
      if (a <= 0) continue;
      Rational ratio = t.rows[r][t.num_columns] / a;
      if (leaving == rows || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[r] < t.basis[leaving])) {
        leaving = r;
        best_ratio = std::move(ratio);
      }
    }
    // Phase one is bounded below by zero, so some row always qualifies.
    if (leaving == rows) break;
    t.Pivot(leaving, entering);
  }

  if (t.objective[t.num_columns] != 0) return std::nullopt;
  std::vector<Rational> point(n, 0);
  for (std::size_t r = 0; r < rows; ++r) {
    if (t.basis[r] < n) point[t.basis[r]] = t.rows[r][t.num_columns];
  }
  return point;
}

}  // namespace pacing
