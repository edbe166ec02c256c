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

#include "bbb/simplex.h"

#include <sstream>
#include <utility>

namespace bbb {

int RationalLP::AddVariable(std::string name, std::optional<Rational> lower,
                            std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) {
    throw InputError("variable " + name + " has empty bounds");
  }
  vars_.push_back(LpVariable{std::move(name), lower, upper});
  objective_.push_back(0);
  return num_variables() - 1;
}

int RationalLP::AddRow(LpRow row) {
  for (const auto& [j, c] : row.coeffs) {
    if (j < 0 || j >= num_variables()) {
      throw InputError("row references unknown variable " + std::to_string(j));
    }
  }
  if (row.name.empty()) row.name = "r" + std::to_string(num_rows());
  rows_.push_back(std::move(row));
  return num_rows() - 1;
}

void RationalLP::SetObjective(int var, Rational coeff) {
  objective_.at(var) = std::move(coeff);
}

void RationalLP::SetBounds(int var, std::optional<Rational> lower,
                           std::optional<Rational> upper) {
  if (lower && upper && *lower > *upper) {
    throw InputError("variable " + vars_.at(var).name + " has empty bounds");
  }
  vars_.at(var).lower = std::move(lower);
  vars_.at(var).upper = std::move(upper);
}

namespace {

void AppendTerm(std::ostringstream& out, const Rational& c,
                const std::string& name, bool first) {
  if (c < 0) {
    out << (first ? "-" : "- ");
  } else if (!first) {
    out << "+ ";
  }
  Rational abs_c = abs(c);
  if (abs_c != 1) out << ToString(abs_c) << " ";
  out << name;
}

}  // namespace

std::string RationalLP::ToLpText() const {
  std::ostringstream out;
  out << "\\ exact rational coefficients written as p/q\n";
  out << (sense_ == LpSense::kMinimize ? "Minimize" : "Maximize") << "\n obj:";
  bool first = true;
  for (int j = 0; j < num_variables(); ++j) {
    if (objective_[j] == 0) continue;
    out << " ";
    AppendTerm(out, objective_[j], vars_[j].name, first);
    first = false;
  }
  if (first) out << " 0";
  out << "\nSubject To\n";
  for (const LpRow& row : rows_) {
    out << " " << row.name << ":";
    bool row_first = true;
    for (const auto& [j, c] : row.coeffs) {
      if (c == 0) continue;
      out << " ";
      AppendTerm(out, c, vars_[j].name, row_first);
      row_first = false;
    }
    if (row_first) out << " 0";
    switch (row.relation) {
      case Relation::kLe:
        out << " <= ";
        break;
      case Relation::kGe:
        out << " >= ";
        break;
      case Relation::kEq:
        out << " = ";
        break;
    }
    out << ToString(row.rhs) << "\n";
  }
  out << "Bounds\n";
  for (const LpVariable& v : vars_) {
    out << " ";
    if (!v.lower && !v.upper) {
      out << v.name << " free\n";
      continue;
    }
    out << (v.lower ? ToString(*v.lower) : "-inf") << " <= " << v.name
        << " <= " << (v.upper ? ToString(*v.upper) : "+inf") << "\n";
  }
  out << "End\n";
  return out.str();
}

const char* LpStatusName(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

Rational RowActivity(const LpRow& row, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const auto& [j, c] : row.coeffs) total += c * x[j];
  return total;
}

bool RowSatisfied(const LpRow& row, const std::vector<Rational>& x) {
  Rational lhs = RowActivity(row, x);
  switch (row.relation) {
    case Relation::kLe:
      return lhs <= row.rhs;
    case Relation::kGe:
      return lhs >= row.rhs;
    case Relation::kEq:
      return lhs == row.rhs;
  }
  return false;
}

namespace {

// How an original variable maps onto nonnegative internal columns:
// x = offset + sign * col (+ sign_neg * col_neg for free variables).
struct Mapping {
  Rational offset;
  int sign = 1;
  int col = -1;
  int col_neg = -1;
};

struct StdRow {
  std::map<int, Rational> coeffs;
  Relation relation;
  Rational rhs;
  int user_row;  // -1 for internal bound rows
};

class Tableau {
 public:
  Tableau(int rows, int cols)
      : m_(rows), n_(cols), a_(rows, std::vector<Rational>(cols + 1)),
        basis_(rows, -1) {}

  Rational& at(int i, int j) { return a_[i][j]; }
  Rational& rhs(int i) { return a_[i][n_]; }
  int& basis(int i) { return basis_[i]; }

  void Pivot(int r, int c, std::vector<Rational>& cost_row) {
    ++pivots_;
    Rational p = a_[r][c];
    for (int j = 0; j <= n_; ++j) {
      if (a_[r][j] != 0) a_[r][j] /= p;
    }
    for (int i = 0; i < m_; ++i) {
      if (i == r || a_[i][c] == 0) continue;
      Rational f = a_[i][c];
      for (int j = 0; j <= n_; ++j) {
        if (a_[r][j] != 0) a_[i][j] -= f * a_[r][j];
      }
    }
    if (cost_row[c] != 0) {
      Rational f = cost_row[c];
      for (int j = 0; j <= n_; ++j) {
        if (a_[r][j] != 0) cost_row[j] -= f * a_[r][j];
      }
    }
    basis_[r] = c;
  }

  // Runs Bland's rule on `cost_row` (reduced costs, last entry = -z).
  // Columns with allowed[j] false never enter. Returns false if unbounded.
  bool Optimize(std::vector<Rational>& cost_row,
                const std::vector<bool>& allowed) {
    while (true) {
      int enter = -1;
      for (int j = 0; j < n_; ++j) {
        if (allowed[j] && cost_row[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter < 0) return true;
      int leave = -1;
      Rational best;
      for (int i = 0; i < m_; ++i) {
        if (a_[i][enter] <= 0) continue;
        Rational ratio = a_[i][n_] / a_[i][enter];
        if (leave < 0 || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave < 0) return false;
      Pivot(leave, enter, cost_row);
    }
  }

  // Reduced-cost row for costs c over all columns given the current basis.
  std::vector<Rational> CostRow(const std::vector<Rational>& c) {
    std::vector<Rational> row(n_ + 1);
    for (int j = 0; j < n_; ++j) row[j] = c[j];
    for (int i = 0; i < m_; ++i) {
      const Rational& cb = c[basis_[i]];
      if (cb == 0) continue;
      for (int j = 0; j <= n_; ++j) {
        if (a_[i][j] != 0) row[j] -= cb * a_[i][j];
      }
    }
    return row;
  }

  int pivots() const { return pivots_; }

 private:
  int m_, n_;
  std::vector<std::vector<Rational>> a_;
  std::vector<int> basis_;
  int pivots_ = 0;
};

}  // namespace

LpResult SimplexSolve(const RationalLP& lp) {
  const int nv = lp.num_variables();
  std::vector<Mapping> map(nv);
  std::vector<StdRow> rows;
  int ncols = 0;
  for (int j = 0; j < nv; ++j) {
    const LpVariable& v = lp.variable(j);
    Mapping& mp = map[j];
    mp.col = ncols++;
    if (v.lower) {
      mp.offset = *v.lower;
      if (v.upper) {
        rows.push_back(StdRow{{{mp.col, Rational(1)}}, Relation::kLe,
                              *v.upper - *v.lower, -1});
      }
    } else if (v.upper) {
      mp.offset = *v.upper;
      mp.sign = -1;
    } else {
      mp.col_neg = ncols++;
    }
  }
  const int user_begin = static_cast<int>(rows.size());
  for (int i = 0; i < lp.num_rows(); ++i) {
    const LpRow& row = lp.row(i);
    StdRow sr{{}, row.relation, row.rhs, i};
    for (const auto& [j, c] : row.coeffs) {
      if (c == 0) continue;
      const Mapping& mp = map[j];
      sr.rhs -= c * mp.offset;
      sr.coeffs[mp.col] += c * mp.sign;
      if (mp.col_neg >= 0) sr.coeffs[mp.col_neg] -= c;
    }
    rows.push_back(std::move(sr));
  }
  const int nstruct = ncols;
  const int m = static_cast<int>(rows.size());

  // Normalize to rhs >= 0, then add slack/surplus and artificial columns.
  std::vector<int> flipped(m, 1);
  for (int i = 0; i < m; ++i) {
    if (rows[i].rhs < 0) {
      flipped[i] = -1;
      rows[i].rhs = -rows[i].rhs;
      for (auto& [c, v] : rows[i].coeffs) v = -v;
      if (rows[i].relation == Relation::kLe) {
        rows[i].relation = Relation::kGe;
      } else if (rows[i].relation == Relation::kGe) {
        rows[i].relation = Relation::kLe;
      }
    }
  }
  std::vector<int> slack_col(m, -1), identity_col(m, -1);
  for (int i = 0; i < m; ++i) {
    if (rows[i].relation != Relation::kEq) slack_col[i] = ncols++;
  }
  const int first_artificial = ncols;
  for (int i = 0; i < m; ++i) {
    if (rows[i].relation == Relation::kLe) {
      identity_col[i] = slack_col[i];
    } else {
      identity_col[i] = ncols++;
    }
  }
  Tableau tab(m, ncols);
  for (int i = 0; i < m; ++i) {
    for (const auto& [c, v] : rows[i].coeffs) tab.at(i, c) = v;
    if (slack_col[i] >= 0) {
      tab.at(i, slack_col[i]) = rows[i].relation == Relation::kLe ? 1 : -1;
    }
    tab.at(i, identity_col[i]) = 1;
    tab.rhs(i) = rows[i].rhs;
    tab.basis(i) = identity_col[i];
  }

  LpResult result;
  std::vector<bool> allowed(ncols, true);
  if (first_artificial < ncols) {
    std::vector<Rational> phase1(ncols);
    for (int j = first_artificial; j < ncols; ++j) phase1[j] = 1;
    std::vector<Rational> cost = tab.CostRow(phase1);
    tab.Optimize(cost, allowed);
    if (cost[ncols] != 0) {  // -z != 0: artificials cannot all vanish
      result.status = LpStatus::kInfeasible;
      result.pivots = tab.pivots();
      return result;
    }
    // Drive zero-valued artificials out of the basis where possible.
    std::vector<Rational> dummy(ncols + 1);
    for (int i = 0; i < m; ++i) {
      if (tab.basis(i) < first_artificial) continue;
      for (int j = 0; j < first_artificial; ++j) {
        if (tab.at(i, j) != 0) {
          tab.Pivot(i, j, dummy);
          break;
        }
      }
    }
    for (int j = first_artificial; j < ncols; ++j) allowed[j] = false;
  }

  std::vector<Rational> c(ncols);
  const bool maximize = lp.sense() == LpSense::kMaximize;
  Rational constant = 0;
  for (int j = 0; j < nv; ++j) {
    Rational oj = maximize ? Rational(-lp.objective()[j]) : lp.objective()[j];
    const Mapping& mp = map[j];
    constant += oj * mp.offset;
    c[mp.col] += oj * mp.sign;
    if (mp.col_neg >= 0) c[mp.col_neg] -= oj;
  }
  std::vector<Rational> cost = tab.CostRow(c);
  if (!tab.Optimize(cost, allowed)) {
    result.status = LpStatus::kUnbounded;
    result.pivots = tab.pivots();
    return result;
  }

  std::vector<Rational> col_value(nstruct);
  for (int i = 0; i < m; ++i) {
    if (tab.basis(i) < nstruct) col_value[tab.basis(i)] = tab.rhs(i);
  }
  result.status = LpStatus::kOptimal;
  result.x.resize(nv);
  for (int j = 0; j < nv; ++j) {
    const Mapping& mp = map[j];
    result.x[j] = mp.offset + mp.sign * col_value[mp.col];
    if (mp.col_neg >= 0) result.x[j] -= col_value[mp.col_neg];
  }
  result.objective = 0;
  for (int j = 0; j < nv; ++j)
    result.objective += lp.objective()[j] * result.x[j];

  // y = c_B B^{-1}; column i of B^{-1} sits under the identity column of row
  // i, so y_i is minus the reduced cost of that (zero-cost) column.
  result.duals.resize(lp.num_rows());
  for (int i = user_begin; i < m; ++i) {
    Rational y = -cost[identity_col[i]];
    y *= flipped[i];
    if (maximize) y = -y;
    result.duals[rows[i].user_row] = y;
  }
  result.pivots = tab.pivots();
  return result;
}

}  // namespace bbb
