#pragma once

#include "mwcut/errors.hpp"
#include "mwcut/rational.hpp"

#include <cstddef>
#include <vector>

namespace mwcut::detail {

/// Exact solver for the covering LP
///
///     minimize   sum_v d_v
///     subject to sum_{v in S_j} d_v >= 1   for every constraint j
///                d >= 0
///
/// It runs primal simplex with Bland's rule on the packing dual
///
///     maximize   sum_j y_j
///     subject to sum_{j : v in S_j} y_j <= 1   for every variable v
///                y >= 0
///
/// whose all-slack basis is feasible, so no phase one is needed. A new
/// covering constraint is a new dual column; the current basis stays primal
/// feasible and the next solve continues from it. The covering optimum is read
/// from the dual prices of the slack columns.
class CoveringLp {
 public:
  explicit CoveringLp(int variables)
      : m_(variables), rows_(variables, std::vector<Rational>(variables)), rhs_(variables, Rational(1)),
        obj_(variables), basis_(variables) {
    for (int i = 0; i < m_; ++i) {
      rows_[i][i] = Rational(1);
      basis_[i] = i;
    }
  }

  int variables() const { return m_; }
  std::size_t constraints() const { return obj_.size() - static_cast<std::size_t>(m_); }
  std::size_t pivots() const { return pivots_; }

  /// Adds sum_{v in support} d_v >= 1. `support` must be nonempty.
  void add_constraint(const std::vector<int>& support) {
    if (support.empty()) throw ConsistencyError("CoveringLp: empty constraint support");
    // Column of B^-1 a; B^-1 sits in the slack columns.
    for (int i = 0; i < m_; ++i) {
      Rational entry;
      for (int v : support) {
        const Rational& b = rows_[i][v];
        if (!b.is_zero()) entry += b;
      }
      rows_[i].push_back(entry);
    }
    Rational reduced(-1);
    for (int v : support) reduced += obj_[v];
    obj_.push_back(reduced);
  }

  void solve() {
    const std::size_t cols = obj_.size();
    while (true) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j) {
        if (obj_[j].sign() < 0) {
          enter = j;
          break;
        }
      }
      if (enter == cols) return;

      int leave = -1;
      Rational best_ratio;
      for (int i = 0; i < m_; ++i) {
        const Rational& a = rows_[i][enter];
        if (a.sign() <= 0) continue;
        Rational ratio = rhs_[i] / a;
        if (leave < 0 || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = ratio;
        }
      }
      if (leave < 0) throw ConsistencyError("CoveringLp: dual unbounded (covering LP infeasible)");
      pivot(leave, enter);
    }
  }

  const Rational& value() const { return obj_value_; }

  /// Optimal covering solution d_v, v = 0..variables-1.
  std::vector<Rational> solution() const { return {obj_.begin(), obj_.begin() + m_}; }

 private:
  void pivot(int r, std::size_t c) {
    ++pivots_;
    const std::size_t cols = obj_.size();
    Rational inv = Rational(1) / rows_[r][c];
    auto& prow = rows_[r];
    for (std::size_t j = 0; j < cols; ++j) {
      if (!prow[j].is_zero()) prow[j] *= inv;
    }
    rhs_[r] *= inv;

    auto eliminate = [&](std::vector<Rational>& row, Rational& rhs) {
      Rational factor = row[c];
      if (factor.is_zero()) return;
      for (std::size_t j = 0; j < cols; ++j) {
        if (!prow[j].is_zero()) row[j] -= factor * prow[j];
      }
      rhs -= factor * rhs_[r];
    };
    for (int i = 0; i < m_; ++i) {
      if (i != r) eliminate(rows_[i], rhs_[i]);
    }
    eliminate(obj_, obj_value_);
    basis_[r] = static_cast<int>(c);
  }

  int m_;
  std::vector<std::vector<Rational>> rows_;
  std::vector<Rational> rhs_;
  std::vector<Rational> obj_;  // z_j - c_j
  Rational obj_value_;
  std::vector<int> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace mwcut::detail
