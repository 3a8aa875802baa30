#pragma once

#include <complex>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "sic/graph.hpp"
#include "sic/psd.hpp"

namespace sic {

using ComplexVector = std::vector<std::complex<double>>;

class ProjectorError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Rank-one projectors v v^H / <v, v> given by their (unnormalized) vectors,
/// either over Q(i) or as complex doubles.
class ProjectorSet {
 public:
  static ProjectorSet exact(int dimension, std::vector<ExactVector> vectors);
  static ProjectorSet numeric(int dimension, std::vector<ComplexVector> vectors);

  bool is_exact() const { return exact_; }
  int dimension() const { return dimension_; }
  std::size_t size() const { return numeric_.size(); }

  /// Only meaningful for exact sets.
  const std::vector<ExactVector>& exact_vectors() const { return exact_vectors_; }
  /// Always available; exact sets are converted.
  const std::vector<ComplexVector>& numeric_vectors() const { return numeric_; }

  ExactMatrix exact_projector(std::size_t i) const;
  /// Unit vector along v_i.
  ComplexVector unit_vector(std::size_t i) const;

  /// Embeds every vector in dimension d + extra by appending zeros.
  ProjectorSet padded(int extra) const;
  /// Appends one more vector (same mode).
  ProjectorSet with_exact_vector(ExactVector v) const;

 private:
  bool exact_ = false;
  int dimension_ = 0;
  std::vector<ExactVector> exact_vectors_;
  std::vector<ComplexVector> numeric_;
};

/// <a, b> = sum conj(a_k) b_k
GaussianRational inner(const ExactVector& a, const ExactVector& b);
std::complex<double> inner(const ComplexVector& a, const ComplexVector& b);

/// Vector-file reader: first non-comment line is d, then one vector per line
/// with d whitespace-separated entries; '#' starts a comment. Exact entries are
/// "p/q" or "p/q+r/si"; numeric entries are decimals, optionally "a+bi".
ProjectorSet read_vector_file(std::istream& in, bool exact);
ProjectorSet read_vector_file(const std::string& path, bool exact);

/// Writes decimal entries with 17 significant digits (numeric mode) or p/q text.
void write_vector_file(std::ostream& out, const ProjectorSet& s);

/// Edge {i, j} iff the projectors are orthogonal: exactly for exact sets,
/// |<v^_i, v^_j>| <= tol for numeric ones (tol > 0). Parallel vectors are an
/// error, as are numeric overlaps inside (tol, 10 tol).
Graph orthogonality_graph(const ProjectorSet& s, double tol = 1e-9);

}  // namespace sic
