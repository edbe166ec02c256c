// Copyright 2026 The bbb Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BBB_SIMPLEX_H_
#define BBB_SIMPLEX_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bbb/rational.h"

namespace bbb {

enum class Relation { kLe, kGe, kEq };
enum class LpSense { kMinimize, kMaximize };

struct LpRow {
  std::map<int, Rational> coeffs;  // variable index -> coefficient
  Relation relation = Relation::kGe;
  Rational rhs;
  std::string name;
};

struct LpVariable {
  std::string name;
  std::optional<Rational> lower = Rational(0);  // nullopt: unbounded below
  std::optional<Rational> upper;                // nullopt: unbounded above
};

// An exact linear program. Rows are only ever appended.
class RationalLP {
 public:
  int AddVariable(std::string name, std::optional<Rational> lower = Rational(0),
                  std::optional<Rational> upper = std::nullopt);
  int AddRow(LpRow row);
  void SetObjective(int var, Rational coeff);
  void SetSense(LpSense sense) { sense_ = sense; }
  void SetBounds(int var, std::optional<Rational> lower,
                 std::optional<Rational> upper);

  int num_variables() const { return static_cast<int>(vars_.size()); }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  const LpVariable& variable(int j) const { return vars_[j]; }
  const LpRow& row(int i) const { return rows_[i]; }
  const std::vector<Rational>& objective() const { return objective_; }
  LpSense sense() const { return sense_; }

  // CPLEX-style LP text with coefficients written as p/q.
  std::string ToLpText() const;

 private:
  std::vector<LpVariable> vars_;
  std::vector<Rational> objective_;
  std::vector<LpRow> rows_;
  LpSense sense_ = LpSense::kMinimize;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };
const char* LpStatusName(LpStatus status);

struct LpResult {
  LpStatus status = LpStatus::kInfeasible;
  std::vector<Rational> x;
  Rational objective;
  // One dual value per row, in the sign convention of the stated sense:
  // for minimization, >= rows get y >= 0 and <= rows get y <= 0.
  std::vector<Rational> duals;
  int pivots = 0;
};

// Two-phase dense tableau simplex with Bland's rule, exact throughout. The
// returned x is a basic solution, hence a vertex of the feasible region.
LpResult SimplexSolve(const RationalLP& lp);

// Row activity sum_j coeff_j x_j.
Rational RowActivity(const LpRow& row, const std::vector<Rational>& x);
bool RowSatisfied(const LpRow& row, const std::vector<Rational>& x);

}  // namespace bbb

#endif  // BBB_SIMPLEX_H_
