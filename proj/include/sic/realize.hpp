#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sic/graph.hpp"
#include "sic/projectors.hpp"

namespace sic {

enum class Field { real, complex };

enum class RealizationStatus { found, degenerate, failed };

std::string to_string(RealizationStatus s);

struct RealizationOptions {
  Field field = Field::real;
  int restarts = 50;
  double tol = 1e-12;    // on the residual
  double delta = 1e-6;   // on min pairwise distinctness
  std::uint64_t seed = 1;
  int workers = 0;       // 0: OpenMP default
  int max_iterations = 3000;
};

struct RealizationResult {
  RealizationStatus status = RealizationStatus::failed;
  std::vector<ComplexVector> vectors;  // unit vectors of the selected restart
  double residual = 0;                 // sum over edges of |<v_i, v_j>|^2
  double min_pairwise_distinctness = 1;  // min over non-edges of 1 - |<v_i, v_j>|
  int restart = 0;                     // index of the selected restart
  std::vector<double> restart_residuals;
};

/// f(u) = sum over edges of |<u_i, u_j>|^2 / (|u_i|^2 |u_j|^2) at the packed
/// parameters (real: n*d entries; complex: interleaved re, im pairs), with the
/// gradient with respect to those parameters when `gradient` is non-null.
double realization_objective(const Graph& g, int d, Field field, const double* params, double* gradient);

/// Multi-start L-BFGS on the objective above. Restart k starts from a Gaussian
/// configuration seeded with seed + k; restarts run in parallel. The selected
/// run is the first of: found, degenerate, failed, and within a class the
/// lowest residual, ties broken by lowest restart index.
RealizationResult find_realization(const Graph& g, int d, const RealizationOptions& options = {});

/// The same search with the restarts run one after another.
RealizationResult find_realization_serial(const Graph& g, int d, const RealizationOptions& options = {});

/// Edges orthogonal, non-edges not parallel: exactly for exact sets, within
/// tol (on |<v^_i, v^_j>| and 1 - |<v^_i, v^_j>|) for numeric ones.
bool verify_realization(const Graph& g, const ProjectorSet& vectors, double tol = 1e-6);

/// Residual and distinctness of unit vectors.
double realization_residual(const Graph& g, const std::vector<ComplexVector>& vectors);
double min_pairwise_distinctness(const Graph& g, const std::vector<ComplexVector>& vectors);

}  // namespace sic
