#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "gelab/rational.hpp"

namespace gelab::lp {

// minimize c.x subject to A x = b, x >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;  // rows
  std::vector<Rational> b;
  std::vector<Rational> c;

  std::size_t rows() const noexcept { return a.size(); }
  std::size_t cols() const noexcept { return c.size(); }
};

enum class LpStatus { optimal, infeasible, unbounded };

struct LpSolution {
  LpStatus status = LpStatus::infeasible;
  std::vector<Rational> x;       // basic solution
  Rational objective = 0;
  std::vector<Rational> duals;   // y with c - A^T y >= 0 at optimality
};

namespace detail {

// Dense two-phase tableau simplex over exact rationals with Bland's rule.
// One artificial per row; artificial columns stay in the tableau after
// phase one (barred from entering) so the duals can be read off them.
class Tableau {
 public:
  explicit Tableau(const LinearProgram& lp) : m_(lp.rows()), k_(lp.cols()) {
    for (const auto& row : lp.a) {
      if (row.size() != k_) throw std::invalid_argument("constraint row width differs from cost vector");
    }
    if (lp.b.size() != m_) throw std::invalid_argument("rhs length differs from row count");
    t_.assign(m_, std::vector<Rational>(k_ + m_));
    rhs_.resize(m_);
    sign_.assign(m_, 1);
    basis_.resize(m_);
    for (std::size_t i = 0; i < m_; ++i) {
      bool flip = lp.b[i] < 0;
      sign_[i] = flip ? -1 : 1;
      for (std::size_t j = 0; j < k_; ++j) t_[i][j] = flip ? Rational(-lp.a[i][j]) : lp.a[i][j];
      t_[i][k_ + i] = 1;
      rhs_[i] = flip ? Rational(-lp.b[i]) : lp.b[i];
      basis_[i] = k_ + i;
    }
  }

  // Returns false when the constraints are infeasible.
  bool phase_one() {
    std::vector<Rational> cost(k_ + m_);
    for (std::size_t i = 0; i < m_; ++i) cost[k_ + i] = 1;
    price(cost);
    iterate(k_ + m_);
    if (objective_ != 0) return false;
    // Drive zero-level artificials out of the basis where a structural
    // column allows it; rows left with an artificial are redundant.
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        if (t_[i][j] != 0) {
          pivot(i, j);
          break;
        }
      }
    }
    return true;
  }

  // Returns false when unbounded.
  bool phase_two(const std::vector<Rational>& c) {
    std::vector<Rational> cost(k_ + m_);
    for (std::size_t j = 0; j < k_; ++j) cost[j] = c[j];
    price(cost);
    return iterate(k_);
  }

  std::vector<Rational> primal() const {
    std::vector<Rational> x(k_);
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < k_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  // Phase-two reduced cost of artificial i is -y'_i for the sign-normalised
  // system; undo the row flip to get the dual of the original row.
  std::vector<Rational> duals() const {
    std::vector<Rational> y(m_);
    for (std::size_t i = 0; i < m_; ++i) y[i] = sign_[i] > 0 ? Rational(-reduced_[k_ + i]) : reduced_[k_ + i];
    return y;
  }

  const Rational& objective() const noexcept { return objective_; }

 private:
  void price(const std::vector<Rational>& cost) {
    reduced_ = cost;
    objective_ = 0;
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < k_ + m_; ++j) {
        if (t_[i][j] != 0) reduced_[j] -= cb * t_[i][j];
      }
      objective_ += cb * rhs_[i];
    }
  }

  // Bland's rule: lowest-index improving column enters; among tied ratios the
  // row whose basic variable has the lowest index leaves.
  bool iterate(std::size_t enter_limit) {
    for (;;) {
      std::size_t enter = enter_limit;
      for (std::size_t j = 0; j < enter_limit; ++j) {
        if (reduced_[j] < 0) {
          enter = j;
          break;
        }
      }
      if (enter == enter_limit) return true;

      std::size_t leave = m_;
      Rational best_ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (!(t_[i][enter] > 0)) continue;
        Rational ratio = rhs_[i] / t_[i][enter];
        if (leave == m_ || ratio < best_ratio || (ratio == best_ratio && basis_[i] < basis_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  void pivot(std::size_t r, std::size_t col) {
    const std::size_t width = k_ + m_;
    Rational inv = 1 / t_[r][col];
    std::vector<std::size_t> nonzero;
    for (std::size_t j = 0; j < width; ++j) {
      if (t_[r][j] != 0) {
        t_[r][j] *= inv;
        nonzero.push_back(j);
      }
    }
    rhs_[r] *= inv;
    auto eliminate = [&](std::vector<Rational>& row, Rational& value) {
      Rational factor = row[col];
      if (factor == 0) return;
      for (std::size_t j : nonzero) row[j] -= factor * t_[r][j];
      value -= factor * rhs_[r];
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(t_[i], rhs_[i]);
    }
    // The objective row stores reduced costs and -z; eliminate on a negated
    // copy of z to keep objective_ = c_B . x_B.
    Rational neg_objective = -objective_;
    eliminate(reduced_, neg_objective);
    objective_ = -neg_objective;
    basis_[r] = col;
  }

  std::size_t m_;
  std::size_t k_;
  std::vector<std::vector<Rational>> t_;
  std::vector<Rational> rhs_;
  std::vector<int> sign_;
  std::vector<std::size_t> basis_;
  std::vector<Rational> reduced_;
  Rational objective_ = 0;
};

}  // namespace detail

inline LpSolution solve(const LinearProgram& lp) {
  detail::Tableau tab(lp);
  LpSolution out;
  if (!tab.phase_one()) {
    out.status = LpStatus::infeasible;
    return out;
  }
  if (!tab.phase_two(lp.c)) {
    out.status = LpStatus::unbounded;
    return out;
  }
  out.status = LpStatus::optimal;
  out.x = tab.primal();
  out.objective = tab.objective();
  out.duals = tab.duals();
  return out;
}

// A basic feasible point of A x = b, x >= 0, if one exists.
inline std::optional<std::vector<Rational>> find_feasible(const LinearProgram& lp) {
  detail::Tableau tab(lp);
  if (!tab.phase_one()) return std::nullopt;
  return tab.primal();
}

}  // namespace gelab::lp
