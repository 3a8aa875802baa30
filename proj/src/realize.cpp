#include "sic/realize.hpp"

#include <ceres/gradient_problem.h>
#include <ceres/gradient_problem_solver.h>
#include <omp.h>

#include <algorithm>
#include <cmath>
#include <complex>
#include <random>

namespace sic {

namespace {

using cd = std::complex<double>;

std::vector<ComplexVector> unpack(int n, int d, Field field, const double* x) {
  std::vector<ComplexVector> u(n, ComplexVector(d));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < d; ++k)
      u[i][k] = field == Field::real ? cd(x[i * d + k], 0.0) : cd(x[2 * (i * d + k)], x[2 * (i * d + k) + 1]);
  return u;
}

double norm2(const ComplexVector& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return s;
}

class Objective final : public ceres::FirstOrderFunction {
 public:
  Objective(const Graph& g, int d, Field field) : g_(g), d_(d), field_(field) {}

  bool Evaluate(const double* parameters, double* cost, double* gradient) const override {
    *cost = realization_objective(g_, d_, field_, parameters, gradient);
    return std::isfinite(*cost);
  }

  int NumParameters() const override { return g_.order() * d_ * (field_ == Field::real ? 1 : 2); }

 private:
  Graph g_;
  int d_;
  Field field_;
};

struct RestartOutcome {
  RealizationStatus status;
  std::vector<ComplexVector> vectors;
  double residual;
  double distinctness;
};

RestartOutcome run_restart(const Graph& g, int d, const RealizationOptions& options, int k) {
  const int n = g.order();
  const int params = n * d * (options.field == Field::real ? 1 : 2);
  std::mt19937_64 rng(options.seed + static_cast<std::uint64_t>(k));
  std::normal_distribution<double> gauss;
  std::vector<double> x(params);
  for (auto& v : x) v = gauss(rng);

  if (g.edge_count() > 0) {
    ceres::GradientProblem problem(new Objective(g, d, options.field));
    ceres::GradientProblemSolver::Options solver;
    solver.line_search_direction_type = ceres::LBFGS;
    solver.max_num_iterations = options.max_iterations;
    solver.function_tolerance = 1e-300;
    solver.gradient_tolerance = 1e-300;
    solver.parameter_tolerance = 1e-300;
    solver.logging_type = ceres::SILENT;
    ceres::GradientProblemSolver::Summary summary;
    ceres::Solve(solver, problem, x.data(), &summary);
  }

  auto u = unpack(n, d, options.field, x.data());
  for (auto& v : u) {
    const double nv = std::sqrt(norm2(v));
    for (auto& c : v) c /= nv;
  }
  const double residual = realization_residual(g, u);
  const double distinct = min_pairwise_distinctness(g, u);
  RealizationStatus status = RealizationStatus::failed;
  if (residual <= options.tol) {
    status = distinct >= options.delta ? RealizationStatus::found : RealizationStatus::degenerate;
  }
  return {status, std::move(u), residual, distinct};
}

void check_arguments(const Graph& g, int d, const RealizationOptions& options) {
  if (d < 2) throw GraphError("dimension must be at least 2");
  if (options.restarts < 1) throw GraphError("restarts must be positive");
  if (!(options.tol > 0) || !(options.delta > 0)) throw GraphError("tol and delta must be positive");
  if (g.order() < 1) throw GraphError("graph must have a vertex");
}

RealizationResult select(std::vector<RestartOutcome> outcomes) {
  auto rank = [](RealizationStatus s) { return static_cast<int>(s); };
  std::size_t best = 0;
  for (std::size_t k = 1; k < outcomes.size(); ++k) {
    const auto& a = outcomes[k];
    const auto& b = outcomes[best];
    if (rank(a.status) < rank(b.status) || (a.status == b.status && a.residual < b.residual)) best = k;
  }
  RealizationResult r;
  r.status = outcomes[best].status;
  r.vectors = std::move(outcomes[best].vectors);
  r.residual = outcomes[best].residual;
  r.min_pairwise_distinctness = outcomes[best].distinctness;
  r.restart = static_cast<int>(best);
  for (const auto& o : outcomes) r.restart_residuals.push_back(o.residual);
  return r;
}

}  // namespace

std::string to_string(RealizationStatus s) {
  switch (s) {
    case RealizationStatus::found: return "found";
    case RealizationStatus::degenerate: return "degenerate";
    case RealizationStatus::failed: return "failed";
  }
  return "unknown";
}

double realization_objective(const Graph& g, int d, Field field, const double* params, double* gradient) {
  const int n = g.order();
  const auto u = unpack(n, d, field, params);
  std::vector<double> norms(n);
  for (int i = 0; i < n; ++i) norms[i] = norm2(u[i]);
  std::vector<ComplexVector> grad;
  if (gradient) grad.assign(n, ComplexVector(d));
  double f = 0;
  for (auto [i, j] : g.edges()) {
    cd a = 0;
    for (int k = 0; k < d; ++k) a += std::conj(u[i][k]) * u[j][k];
    const double denom = norms[i] * norms[j];
    const double p = std::norm(a) / denom;
    f += p;
    if (!gradient) continue;
    // 2 d/d conj(u): the real gradient packed as (re, im)
    for (int k = 0; k < d; ++k) {
      grad[i][k] += 2.0 * std::conj(a) * u[j][k] / denom - 2.0 * p * u[i][k] / norms[i];
      grad[j][k] += 2.0 * a * u[i][k] / denom - 2.0 * p * u[j][k] / norms[j];
    }
  }
  if (gradient) {
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < d; ++k) {
        if (field == Field::real) {
          gradient[i * d + k] = grad[i][k].real();
        } else {
          gradient[2 * (i * d + k)] = grad[i][k].real();
          gradient[2 * (i * d + k) + 1] = grad[i][k].imag();
        }
      }
    }
  }
  return f;
}

RealizationResult find_realization(const Graph& g, int d, const RealizationOptions& options) {
  check_arguments(g, d, options);
  std::vector<RestartOutcome> outcomes(options.restarts);
  const int workers = options.workers > 0 ? options.workers : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(workers)
  for (int k = 0; k < options.restarts; ++k) outcomes[k] = run_restart(g, d, options, k);
  return select(std::move(outcomes));
}

RealizationResult find_realization_serial(const Graph& g, int d, const RealizationOptions& options) {
  check_arguments(g, d, options);
  std::vector<RestartOutcome> outcomes;
  for (int k = 0; k < options.restarts; ++k) outcomes.push_back(run_restart(g, d, options, k));
  return select(std::move(outcomes));
}

double realization_residual(const Graph& g, const std::vector<ComplexVector>& vectors) {
  double r = 0;
  for (auto [i, j] : g.edges()) r += std::norm(inner(vectors[i], vectors[j]));
  return r;
}

double min_pairwise_distinctness(const Graph& g, const std::vector<ComplexVector>& vectors) {
  double best = 1;
  for (int i = 0; i < g.order(); ++i)
    for (int j = i + 1; j < g.order(); ++j)
      if (!g.adjacent(i, j)) best = std::min(best, 1 - std::abs(inner(vectors[i], vectors[j])));
  return best;
}

bool verify_realization(const Graph& g, const ProjectorSet& vectors, double tol) {
  if (static_cast<int>(vectors.size()) != g.order()) throw GraphError("one vector per vertex required");
  const int n = g.order();
  if (vectors.is_exact()) {
    const auto& v = vectors.exact_vectors();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const GaussianRational ip = inner(v[i], v[j]);
        if (g.adjacent(i, j) ? !ip.is_zero() : ip.norm() == inner(v[i], v[i]).re * inner(v[j], v[j]).re) {
          return false;
        }
      }
    }
    return true;
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double overlap = std::abs(inner(vectors.unit_vector(i), vectors.unit_vector(j)));
      if (g.adjacent(i, j) ? overlap > tol : 1 - overlap <= tol) return false;
    }
  }
  return true;
}

}  // namespace sic
