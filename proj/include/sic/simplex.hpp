#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "sic/rational.hpp"

namespace sic {

/// maximize objective·x subject to rows[i]·x <= rhs[i], x >= 0.
template <class T>
struct LinearProgram {
  std::vector<T> objective;
  std::vector<std::vector<T>> rows;
  std::vector<T> rhs;

  std::size_t variables() const { return objective.size(); }
  std::size_t constraints() const { return rows.size(); }

  void add_row(std::vector<T> coefficients, T bound) {
    rows.push_back(std::move(coefficients));
    rhs.push_back(std::move(bound));
  }
};

enum class LpStatus { optimal, unbounded, infeasible };

std::string to_string(LpStatus s);

template <class T>
struct LpResult {
  LpStatus status = LpStatus::infeasible;
  T value{};
  std::vector<T> solution;  // primal x
  std::vector<T> dual;      // one multiplier per row, >= 0
  std::size_t pivots = 0;
};

class LpError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Sign tests used by the simplex; exact for Rational, thresholded for double.
template <class T>
struct SimplexTraits;

template <>
struct SimplexTraits<Rational> {
  static bool positive(const Rational& v) { return v.sign() > 0; }
  static bool negative(const Rational& v) { return v.sign() < 0; }
};

template <>
struct SimplexTraits<double> {
  static constexpr double eps = 1e-11;
  static bool positive(double v) { return v > eps; }
  static bool negative(double v) { return v < -eps; }
};

namespace detail {

// Dictionary form: basic[i] = value[i] + sum_j coef[i][j] * nonbasic[j],
// z = z0 + sum_j cost[j] * nonbasic[j]. Labels 0..n-1 are structural
// variables, n..n+m-1 slacks, n+m the phase-one auxiliary.
template <class T>
class Dictionary {
  using Tr = SimplexTraits<T>;

 public:
  Dictionary(const LinearProgram<T>& lp, bool with_auxiliary)
      : m_(lp.constraints()), n_(lp.variables()) {
    const std::size_t cols = n_ + (with_auxiliary ? 1 : 0);
    coef_.assign(m_, std::vector<T>(cols, T(0)));
    value_.resize(m_);
    basic_.resize(m_);
    nonbasic_.resize(cols);
    for (std::size_t j = 0; j < n_; ++j) nonbasic_[j] = j;
    if (with_auxiliary) nonbasic_[n_] = n_ + m_;
    for (std::size_t i = 0; i < m_; ++i) {
      if (lp.rows[i].size() != n_) throw LpError("row " + std::to_string(i) + " has wrong width");
      basic_[i] = n_ + i;
      value_[i] = lp.rhs[i];
      for (std::size_t j = 0; j < n_; ++j) coef_[i][j] = -lp.rows[i][j];
      if (with_auxiliary) coef_[i][n_] = T(1);
    }
    cost_.assign(cols, T(0));
    z0_ = T(0);
  }

  void set_objective(const std::vector<T>& by_label) {
    // by_label is indexed by variable label; express it over the nonbasics.
    z0_ = T(0);
    cost_.assign(nonbasic_.size(), T(0));
    for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
      if (nonbasic_[j] < by_label.size()) cost_[j] = by_label[nonbasic_[j]];
    }
    for (std::size_t i = 0; i < m_; ++i) {
      if (basic_[i] >= by_label.size()) continue;
      const T& c = by_label[basic_[i]];
      if (!Tr::positive(c) && !Tr::negative(c)) continue;
      z0_ += c * value_[i];
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) cost_[j] += c * coef_[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t e) {
    const T pivot_coef = coef_[r][e];
    const T inv = T(1) / pivot_coef;
    // Row r now expresses the entering variable.
    value_[r] = -value_[r] * inv;
    for (std::size_t j = 0; j < coef_[r].size(); ++j) {
      coef_[r][j] = (j == e) ? inv : -coef_[r][j] * inv;
    }
    std::swap(basic_[r], nonbasic_[e]);
    const auto& prow = coef_[r];
    auto eliminate = [&](T& constant, std::vector<T>& row) {
      const T factor = row[e];
      if (!Tr::positive(factor) && !Tr::negative(factor)) return;
      constant += factor * value_[r];
      for (std::size_t j = 0; j < row.size(); ++j) {
        row[j] = (j == e) ? factor * prow[j] : row[j] + factor * prow[j];
      }
    };
    for (std::size_t i = 0; i < m_; ++i) {
      if (i != r) eliminate(value_[i], coef_[i]);
    }
    eliminate(z0_, cost_);
    ++pivots_;
  }

  // Bland's rule. Returns false if unbounded.
  bool optimize() {
    while (true) {
      std::size_t enter = nonbasic_.size();
      for (std::size_t j = 0; j < nonbasic_.size(); ++j) {
        if (Tr::positive(cost_[j]) && (enter == nonbasic_.size() || nonbasic_[j] < nonbasic_[enter])) {
          enter = j;
        }
      }
      if (enter == nonbasic_.size()) return true;
      std::size_t leave = m_;
      T best_ratio{};
      for (std::size_t i = 0; i < m_; ++i) {
        if (!Tr::negative(coef_[i][enter])) continue;
        T ratio = value_[i] / (-coef_[i][enter]);
        if (leave == m_ || Tr::negative(ratio - best_ratio) ||
            (!Tr::positive(ratio - best_ratio) && basic_[i] < basic_[leave])) {
          leave = i;
          best_ratio = std::move(ratio);
        }
      }
      if (leave == m_) return false;
      pivot(leave, enter);
    }
  }

  std::size_t rows() const { return m_; }
  std::size_t basic(std::size_t i) const { return basic_[i]; }
  std::size_t nonbasic(std::size_t j) const { return nonbasic_[j]; }
  std::size_t nonbasic_count() const { return nonbasic_.size(); }
  const T& value(std::size_t i) const { return value_[i]; }
  const T& coef(std::size_t i, std::size_t j) const { return coef_[i][j]; }
  const T& objective_value() const { return z0_; }
  const T& cost(std::size_t j) const { return cost_[j]; }
  std::size_t pivots() const { return pivots_; }

  void drop_nonbasic(std::size_t e) {
    for (auto& row : coef_) row.erase(row.begin() + static_cast<std::ptrdiff_t>(e));
    cost_.erase(cost_.begin() + static_cast<std::ptrdiff_t>(e));
    nonbasic_.erase(nonbasic_.begin() + static_cast<std::ptrdiff_t>(e));
  }

 private:
  std::size_t m_, n_;
  std::vector<std::vector<T>> coef_;
  std::vector<T> value_;
  std::vector<std::size_t> basic_, nonbasic_;
  std::vector<T> cost_;
  T z0_{};
  std::size_t pivots_ = 0;
};

}  // namespace detail

/// Two-phase dictionary simplex with Bland's anti-cycling rule. With T = Rational
/// every pivot is exact; the optimal result carries a dual solution with equal
/// objective (strong-duality certificate).
template <class T>
LpResult<T> lp_solve(const LinearProgram<T>& lp) {
  using Tr = SimplexTraits<T>;
  if (lp.rhs.size() != lp.rows.size()) throw LpError("rhs length does not match row count");
  const std::size_t m = lp.constraints(), n = lp.variables();

  std::size_t most_negative = m;
  for (std::size_t i = 0; i < m; ++i) {
    if (Tr::negative(lp.rhs[i]) && (most_negative == m || lp.rhs[i] < lp.rhs[most_negative])) {
      most_negative = i;
    }
  }

  LpResult<T> result;
  detail::Dictionary<T> dict(lp, most_negative != m);
  if (most_negative != m) {
    // Phase one: maximize -x_aux over {Ax - x_aux <= b}.
    const std::size_t aux = n + m;
    std::vector<T> phase_one(aux + 1, T(0));
    phase_one[aux] = T(-1);
    dict.set_objective(phase_one);
    dict.pivot(most_negative, n);
    dict.optimize();
    if (Tr::negative(dict.objective_value())) {
      result.status = LpStatus::infeasible;
      result.pivots = dict.pivots();
      return result;
    }
    for (std::size_t i = 0; i < dict.rows(); ++i) {
      if (dict.basic(i) != aux) continue;
      for (std::size_t j = 0; j < dict.nonbasic_count(); ++j) {
        if (Tr::positive(dict.coef(i, j)) || Tr::negative(dict.coef(i, j))) {
          dict.pivot(i, j);
          break;
        }
      }
      break;
    }
    for (std::size_t j = 0; j < dict.nonbasic_count(); ++j) {
      if (dict.nonbasic(j) == aux) {
        dict.drop_nonbasic(j);
        break;
      }
    }
  }

  dict.set_objective(lp.objective);
  if (!dict.optimize()) {
    result.status = LpStatus::unbounded;
    result.pivots = dict.pivots();
    return result;
  }

  result.status = LpStatus::optimal;
  result.value = dict.objective_value();
  result.solution.assign(n, T(0));
  for (std::size_t i = 0; i < dict.rows(); ++i) {
    if (dict.basic(i) < n) result.solution[dict.basic(i)] = dict.value(i);
  }
  result.dual.assign(m, T(0));
  for (std::size_t j = 0; j < dict.nonbasic_count(); ++j) {
    const std::size_t label = dict.nonbasic(j);
    if (label >= n && label < n + m) result.dual[label - n] = -dict.cost(j);
  }
  result.pivots = dict.pivots();
  return result;
}

inline LpResult<Rational> lp_solve_exact(const LinearProgram<Rational>& lp) { return lp_solve(lp); }

/// Re-checks an optimal result by substitution: primal feasibility, dual
/// feasibility (y >= 0, A^T y >= c) and equal objectives. Exact for Rational.
bool verify_lp_certificate(const LinearProgram<Rational>& lp, const LpResult<Rational>& result);

}  // namespace sic
