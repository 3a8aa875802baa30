#include "sic/simplex.hpp"

namespace sic {

std::string to_string(LpStatus s) {
  switch (s) {
    case LpStatus::optimal: return "optimal";
    case LpStatus::unbounded: return "unbounded";
    case LpStatus::infeasible: return "infeasible";
  }
  return "unknown";
}

bool verify_lp_certificate(const LinearProgram<Rational>& lp, const LpResult<Rational>& result) {
  if (result.status != LpStatus::optimal) return false;
  const std::size_t m = lp.constraints(), n = lp.variables();
  if (result.solution.size() != n || result.dual.size() != m) return false;

  Rational primal;
  for (std::size_t j = 0; j < n; ++j) {
    if (result.solution[j].sign() < 0) return false;
    primal += lp.objective[j] * result.solution[j];
  }
  for (std::size_t i = 0; i < m; ++i) {
    Rational lhs;
    for (std::size_t j = 0; j < n; ++j) lhs += lp.rows[i][j] * result.solution[j];
    if (lhs > lp.rhs[i]) return false;
  }

  Rational dual;
  for (std::size_t i = 0; i < m; ++i) {
    if (result.dual[i].sign() < 0) return false;
    dual += lp.rhs[i] * result.dual[i];
  }
  for (std::size_t j = 0; j < n; ++j) {
    Rational col;
    for (std::size_t i = 0; i < m; ++i) col += lp.rows[i][j] * result.dual[i];
    if (col < lp.objective[j]) return false;
  }
  return primal == result.value && dual == result.value;
}

}  // namespace sic
