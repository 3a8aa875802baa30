#pragma once

#include <complex>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sic/graph.hpp"
#include "sic/projectors.hpp"
#include "sic/psd.hpp"
#include "sic/rational.hpp"

namespace sic {

enum class SicStatus { sic, not_sic, undecided };

std::string to_string(SicStatus s);

/// A state x that forces sum_{j in I} w_j >= forced_weight for every w with
/// sum_i w_i Pi_i >= 1. With forced_weight >= 1 this contradicts y < 1. An
/// empty I means x is orthogonal to every projector, so the operator
/// condition itself fails.
struct Obstruction {
  ExactVector state;          // exact sets
  ComplexVector numeric_state;
  VertexSet independent_set;
  Rational forced_weight;
};

struct SicCertificate {
  SicStatus status = SicStatus::undecided;
  std::vector<Rational> w;
  Rational y;
  /// Factorization of sum_i w_i Pi_i - 1 (exact sets with status SIC).
  std::optional<LdlFactorization> psd_witness;
  /// Numeric sets cannot be PSD-verified exactly; their SIC verdict rests on
  /// a floating eigenvalue margin.
  bool exact_psd = false;
  std::optional<Obstruction> obstruction;
  int rounds = 0;
  double min_eigenvalue = 0;  // of sum_i w_i Pi_i at the last iterate
  Graph graph;
  std::string diagnostics;
};

struct CertifyOptions {
  int max_rounds = 500;
  double orthogonality_tol = 1e-9;
  /// Convergence when lambda_min(sum w Pi) >= 1 - this.
  double eigen_tol = 1e-9;
  /// Rationalization ladder for the exact phase.
  std::vector<std::int64_t> denominators = {1000, 1000000, 1000000000};
};

/// Decides whether the set admits w >= 0, 0 <= y < 1 with
///   sum_{j in I} w_j <= y  for every independent set I of the orthogonality graph
///   sum_i w_i Pi_i >= 1.
/// Floating cutting planes (minimum-eigenvector cuts) find candidate weights;
/// SIC is reported only after exact verification. NOT_SIC requires an explicit
/// obstruction state; anything else is UNDECIDED.
SicCertificate certify_sic(const ProjectorSet& s, const CertifyOptions& options = {});

/// Re-checks an obstruction from scratch in exact arithmetic.
bool verify_obstruction(const ProjectorSet& s, const Graph& g, const Obstruction& o);

/// Re-checks a SIC certificate from scratch: every maximal independent set has
/// weight <= y < 1 and sum_i w_i Pi_i - 1 is PSD (exact sets only).
bool verify_sic_certificate(const ProjectorSet& s, const SicCertificate& cert);

/// Noncontextuality inequality
///   sum_i w_i <Pi_i> - sum_{i~j} (w_i + w_j) <Pi_i Pi_j> <= y
/// over the orthogonality graph.
struct Inequality {
  Graph graph;
  std::vector<std::pair<int, Rational>> singletons;
  std::vector<std::pair<std::pair<int, int>, Rational>> pairs;  // coefficient -(w_i + w_j)
  Rational bound;
};

Inequality emit_inequality(const ProjectorSet& s, const SicCertificate& cert);

void write_inequality(std::ostream& out, const Inequality& ineq);
void write_certificate(std::ostream& out, const SicCertificate& cert);

/// Maximum of the inequality's left side over deterministic 0/1 assignments,
/// attained on independent sets: max_I sum_{i in I} w_i.
Rational noncontextual_bound(const Graph& g, const std::vector<Rational>& w);

/// tr(rho sum_i w_i Pi_i) for a unit vector; throws if |psi| != 1.
double quantum_value(const ProjectorSet& s, const std::vector<Rational>& w, const ComplexVector& psi);
/// Same for a density matrix (row-major d x d, Hermitian, unit trace).
double quantum_value(const ProjectorSet& s, const std::vector<Rational>& w,
                     const std::vector<std::complex<double>>& rho, int dimension);
/// min over states of the quantum value: lambda_min(sum_i w_i Pi_i).
double minimum_quantum_value(const ProjectorSet& s, const std::vector<Rational>& w);

}  // namespace sic
