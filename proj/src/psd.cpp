#include "sic/psd.hpp"

#include <algorithm>

namespace sic {

bool is_hermitian(const ExactMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!m(i, i).is_real()) return false;
    for (std::size_t j = i + 1; j < m.cols(); ++j) {
      if (!(m(i, j) == m(j, i).conj())) return false;
    }
  }
  return true;
}

Rational quadratic_form(const ExactMatrix& m, const ExactVector& x) {
  GaussianRational acc;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (x[i].is_zero()) continue;
    GaussianRational row;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (!x[j].is_zero()) row += m(i, j) * x[j];
    }
    acc += x[i].conj() * row;
  }
  return acc.re;
}

PsdResult psd_check_exact(const ExactMatrix& m) {
  if (!is_hermitian(m)) throw NotHermitianError("matrix is not Hermitian");
  const std::size_t n = m.rows();
  ExactMatrix s = m;  // Schur complement lives on the indices in `remaining`
  std::vector<std::size_t> remaining(n);
  for (std::size_t i = 0; i < n; ++i) remaining[i] = i;

  struct Step {
    std::size_t pivot;
    std::vector<std::size_t> others;
    std::vector<GaussianRational> row;  // s(pivot, other) at elimination time
    Rational diag;
  };
  std::vector<Step> steps;

  auto fail = [&](ExactVector z) {
    // Extend z from the current Schur block back through the eliminated pivots.
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
      GaussianRational acc;
      for (std::size_t k = 0; k < it->others.size(); ++k) acc += it->row[k] * z[it->others[k]];
      z[it->pivot] = -(acc / GaussianRational(it->diag));
    }
    PsdResult r;
    r.psd = false;
    r.witness_value = quadratic_form(m, z);
    r.witness = std::move(z);
    return r;
  };

  while (!remaining.empty()) {
    std::size_t best = remaining.size();
    for (std::size_t k = 0; k < remaining.size(); ++k) {
      const Rational& d = s(remaining[k], remaining[k]).re;
      if (d.sign() < 0) {
        ExactVector z(n);
        z[remaining[k]] = GaussianRational(1);
        return fail(std::move(z));
      }
      if (best == remaining.size() || d > s(remaining[best], remaining[best]).re) best = k;
    }
    const std::size_t p = remaining[best];
    const Rational diag = s(p, p).re;
    if (diag.is_zero()) {
      for (std::size_t a : remaining) {
        for (std::size_t b : remaining) {
          if (a != b && !s(a, b).is_zero()) {
            ExactVector z(n);
            z[a] = GaussianRational(1);
            z[b] = -s(a, b).conj();
            return fail(std::move(z));
          }
        }
      }
      break;  // trailing block is exactly zero
    }
    Step step{p, {}, {}, diag};
    remaining.erase(remaining.begin() + static_cast<std::ptrdiff_t>(best));
    for (std::size_t j : remaining) {
      step.others.push_back(j);
      step.row.push_back(s(p, j));
    }
    for (std::size_t a : remaining) {
      if (s(a, p).is_zero()) continue;
      const GaussianRational factor = s(a, p) / GaussianRational(diag);
      for (std::size_t b : remaining) {
        if (!s(p, b).is_zero()) s(a, b) -= factor * s(p, b);
      }
    }
    steps.push_back(std::move(step));
  }

  LdlFactorization f;
  f.rank = steps.size();
  for (const auto& st : steps) {
    f.order.push_back(st.pivot);
    f.pivots.push_back(st.diag);
  }
  for (std::size_t i : remaining) f.order.push_back(i);
  std::vector<std::size_t> position(n);
  for (std::size_t k = 0; k < n; ++k) position[f.order[k]] = k;
  f.lower = ExactMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) f.lower(k, k) = GaussianRational(1);
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const auto& st = steps[k];
    for (std::size_t t = 0; t < st.others.size(); ++t) {
      // L(i, k) = s(i, p) / d = conj(s(p, i)) / d
      f.lower(position[st.others[t]], k) = st.row[t].conj() / GaussianRational(st.diag);
    }
  }
  PsdResult r;
  r.psd = true;
  r.factorization = std::move(f);
  return r;
}

ExactMatrix reconstruct(const LdlFactorization& f, std::size_t n) {
  ExactMatrix permuted(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      GaussianRational acc;
      for (std::size_t k = 0; k < f.rank; ++k) {
        if (f.lower(i, k).is_zero() || f.lower(j, k).is_zero()) continue;
        acc += f.lower(i, k) * GaussianRational(f.pivots[k]) * f.lower(j, k).conj();
      }
      permuted(i, j) = acc;
    }
  }
  ExactMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(f.order[i], f.order[j]) = permuted(i, j);
  return out;
}

PsdResult psd_check_exact_real_embedding(const ExactMatrix& m) {
  if (!is_hermitian(m)) throw NotHermitianError("matrix is not Hermitian");
  const std::size_t n = m.rows();
  ExactMatrix real(2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      real(i, j) = GaussianRational(m(i, j).re);
      real(i + n, j + n) = GaussianRational(m(i, j).re);
      real(i, j + n) = GaussianRational(-m(i, j).im);
      real(i + n, j) = GaussianRational(m(i, j).im);
    }
  }
  PsdResult embedded = psd_check_exact(real);
  if (embedded.psd) return embedded;
  PsdResult r;
  r.witness.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    r.witness[i] = GaussianRational(embedded.witness[i].re, embedded.witness[i + n].re);
  }
  r.witness_value = quadratic_form(m, r.witness);
  return r;
}

}  // namespace sic
