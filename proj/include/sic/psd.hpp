#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

#include "sic/rational.hpp"

namespace sic {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using ExactVector = std::vector<GaussianRational>;

class NotHermitianError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// P M P^T = L D L^H restricted to the pivoted block; the unpivoted trailing
/// block of the Schur complement is exactly zero.
struct LdlFactorization {
  std::vector<std::size_t> order;  // pivot order, then the zero block
  std::vector<Rational> pivots;    // D, one entry per pivot, all > 0
  ExactMatrix lower;               // unit lower triangular, indexed in `order`
  std::size_t rank = 0;
};

struct PsdResult {
  bool psd = false;
  std::optional<LdlFactorization> factorization;  // when psd
  ExactVector witness;                            // when not psd: x^H M x < 0
  Rational witness_value;                         // x^H M x
};

bool is_hermitian(const ExactMatrix& m);

/// x^H M x; real for Hermitian M.
Rational quadratic_form(const ExactMatrix& m, const ExactVector& x);

/// Exact PSD test by LDL^H with diagonal pivoting: a negative pivot, or a zero
/// pivot with a nonzero entry left in its row, yields a certified witness.
PsdResult psd_check_exact(const ExactMatrix& m);

/// Same verdict computed on the real symmetric embedding [[Re, -Im], [Im, Re]];
/// the witness is mapped back to a complex vector.
PsdResult psd_check_exact_real_embedding(const ExactMatrix& m);

/// Rebuilds P^T L D L^H P; used to audit factorizations.
ExactMatrix reconstruct(const LdlFactorization& f, std::size_t n);

}  // namespace sic
