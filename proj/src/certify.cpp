#include "sic/certify.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <ostream>
#include <sstream>

#include "sic/independent_sets.hpp"
#include "sic/simplex.hpp"

namespace sic {

namespace {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

std::string describe_state(const ExactVector& x) {
  int nonzero = -1, count = 0;
  for (std::size_t k = 0; k < x.size(); ++k) {
    if (!x[k].is_zero()) {
      nonzero = static_cast<int>(k);
      ++count;
    }
  }
  if (count == 1) return "e" + std::to_string(nonzero + 1);
  std::string out = "(";
  for (std::size_t k = 0; k < x.size(); ++k) out += (k ? ", " : "") + x[k].str();
  return out + ")";
}

// Basis of {x : <r, x> = 0 for every r in rows}.
std::vector<ExactVector> nullspace(const std::vector<ExactVector>& rows, std::size_t dim) {
  std::vector<ExactVector> a;
  for (const auto& r : rows) {
    ExactVector conj_row(dim);
    for (std::size_t k = 0; k < dim; ++k) conj_row[k] = r[k].conj();
    a.push_back(std::move(conj_row));
  }
  std::vector<int> pivot_col;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim && rank < a.size(); ++col) {
    std::size_t p = rank;
    while (p < a.size() && a[p][col].is_zero()) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    const GaussianRational inv = GaussianRational(1) / a[rank][col];
    for (auto& x : a[rank]) x *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == rank || a[i][col].is_zero()) continue;
      const GaussianRational f = a[i][col];
      for (std::size_t k = 0; k < dim; ++k) a[i][k] -= f * a[rank][k];
    }
    pivot_col.push_back(static_cast<int>(col));
    ++rank;
  }
  std::vector<ExactVector> basis;
  for (std::size_t free = 0; free < dim; ++free) {
    if (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free)) != pivot_col.end()) continue;
    ExactVector x(dim);
    x[free] = GaussianRational(1);
    for (std::size_t r = 0; r < rank; ++r) x[pivot_col[r]] = -a[r][free];
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<VectorXcd> numeric_nullspace(const std::vector<ComplexVector>& rows, int dim, double tol) {
  if (rows.empty()) {
    std::vector<VectorXcd> all;
    for (int k = 0; k < dim; ++k) all.push_back(VectorXcd::Unit(dim, k));
    return all;
  }
  MatrixXcd a(rows.size(), dim);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (int k = 0; k < dim; ++k) a(i, k) = std::conj(rows[i][k]);
  Eigen::JacobiSVD<MatrixXcd> svd(a, Eigen::ComputeFullV);
  std::vector<VectorXcd> out;
  const auto& sv = svd.singularValues();
  for (int k = 0; k < dim; ++k) {
    const double s = k < sv.size() ? sv(k) : 0.0;
    if (s <= tol) out.push_back(svd.matrixV().col(k));
  }
  return out;
}

Rational norm2(const ExactVector& v) { return inner(v, v).re; }

MatrixXcd numeric_projector(const ComplexVector& unit) {
  const int d = static_cast<int>(unit.size());
  MatrixXcd p(d, d);
  for (int a = 0; a < d; ++a)
    for (int b = 0; b < d; ++b) p(a, b) = unit[a] * std::conj(unit[b]);
  return p;
}

MatrixXcd weighted_sum(const std::vector<MatrixXcd>& projectors, const std::vector<double>& w) {
  MatrixXcd m = MatrixXcd::Zero(projectors[0].rows(), projectors[0].cols());
  for (std::size_t i = 0; i < projectors.size(); ++i) m += w[i] * projectors[i];
  return m;
}

std::vector<double> to_doubles(const std::vector<Rational>& w) {
  std::vector<double> out;
  for (const auto& x : w) out.push_back(x.to_double());
  return out;
}

std::vector<MatrixXcd> numeric_projectors(const ProjectorSet& s) {
  std::vector<MatrixXcd> out;
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(numeric_projector(s.unit_vector(i)));
  return out;
}

ExactMatrix exact_weighted_sum(const std::vector<ExactMatrix>& projectors, const std::vector<Rational>& w,
                               std::size_t d) {
  ExactMatrix m(d, d);
  for (std::size_t i = 0; i < projectors.size(); ++i) {
    if (w[i].is_zero()) continue;
    const GaussianRational wi(w[i]);
    for (std::size_t a = 0; a < d; ++a)
      for (std::size_t b = 0; b < d; ++b) m(a, b) += wi * projectors[i](a, b);
  }
  return m;
}

Rational max_set_weight(const std::vector<VertexSet>& sets, const std::vector<Rational>& w) {
  Rational best;
  for (auto s : sets) {
    Rational load;
    for (int v : s.members()) load += w[v];
    best = std::max(best, load);
  }
  return best;
}

std::optional<Obstruction> find_exact_obstruction(const ProjectorSet& s, const Graph& g) {
  const auto& vs = s.exact_vectors();
  const std::size_t d = s.dimension(), n = vs.size();
  if (auto common = nullspace(vs, d); !common.empty()) {
    return Obstruction{common.front(), {}, VertexSet(), Rational(0)};
  }
  // Vertices whose singleton is a maximal independent set first, then the rest.
  std::vector<int> order;
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(static_cast<int>(i)) == static_cast<int>(n) - 1) order.push_back(static_cast<int>(i));
  for (std::size_t i = 0; i < n; ++i)
    if (g.degree(static_cast<int>(i)) != static_cast<int>(n) - 1) order.push_back(static_cast<int>(i));
  for (int i : order) {
    std::vector<ExactVector> others;
    for (std::size_t j = 0; j < n; ++j)
      if (static_cast<int>(j) != i) others.push_back(vs[j]);
    for (const auto& x : nullspace(others, d)) {
      const GaussianRational overlap = inner(vs[i], x);
      if (overlap.is_zero()) continue;
      const Rational forced = norm2(x) * norm2(vs[i]) / overlap.norm();
      return Obstruction{x, {}, VertexSet{i}, forced};
    }
  }
  return std::nullopt;
}

std::optional<Obstruction> find_numeric_obstruction(const ProjectorSet& s, double tol) {
  const std::size_t n = s.size();
  const int d = s.dimension();
  std::vector<ComplexVector> units;
  for (std::size_t i = 0; i < n; ++i) units.push_back(s.unit_vector(i));
  auto to_vec = [](const VectorXcd& v) { return ComplexVector(v.data(), v.data() + v.size()); };
  if (auto common = numeric_nullspace(units, d, tol); !common.empty()) {
    return Obstruction{{}, to_vec(common.front()), VertexSet(), Rational(0)};
  }
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<ComplexVector> others;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others.push_back(units[j]);
    for (const auto& x : numeric_nullspace(others, d, tol)) {
      const double overlap = std::norm(inner(units[i], to_vec(x)));
      if (overlap <= tol) continue;
      return Obstruction{{}, to_vec(x), VertexSet{static_cast<int>(i)},
                         rationalize(x.squaredNorm() / overlap, 1000000000)};
    }
  }
  return std::nullopt;
}

double min_eigen(const MatrixXcd& m, VectorXcd* vec = nullptr) {
  Eigen::SelfAdjointEigenSolver<MatrixXcd> es(m);
  if (vec) *vec = es.eigenvectors().col(0);
  return es.eigenvalues()(0);
}

}  // namespace

std::string to_string(SicStatus s) {
  switch (s) {
    case SicStatus::sic: return "SIC";
    case SicStatus::not_sic: return "NOT_SIC";
    case SicStatus::undecided: return "UNDECIDED";
  }
  return "UNKNOWN";
}

SicCertificate certify_sic(const ProjectorSet& s, const CertifyOptions& options) {
  SicCertificate cert;
  cert.graph = orthogonality_graph(s, options.orthogonality_tol);
  const Graph& g = cert.graph;
  const std::size_t n = s.size();
  const int d = s.dimension();
  if (n == 0) {
    cert.status = SicStatus::not_sic;
    cert.obstruction = Obstruction{ExactVector(d), ComplexVector(d), VertexSet(), Rational(0)};
    if (s.is_exact()) cert.obstruction->state[0] = GaussianRational(1);
    cert.obstruction->numeric_state[0] = 1.0;
    cert.diagnostics = "empty projector set";
    return cert;
  }

  cert.obstruction = s.is_exact() ? find_exact_obstruction(s, g)
                                  : find_numeric_obstruction(s, options.orthogonality_tol);
  if (cert.obstruction) {
    cert.status = SicStatus::not_sic;
    if (s.is_exact()) cert.obstruction->numeric_state = [&] {
      ComplexVector out;
      for (const auto& x : cert.obstruction->state) out.emplace_back(x.re.to_double(), x.im.to_double());
      return out;
    }();
    return cert;
  }

  std::vector<VertexSet> sets;
  try {
    sets = maximal_independent_sets(g);
  } catch (const CapacityError& e) {
    cert.diagnostics = e.what();
    return cert;
  }

  // Phase one: minimize y over the polyhedral outer approximation.
  const auto projectors = numeric_projectors(s);
  std::vector<std::vector<double>> cuts;
  cuts.emplace_back(n, 1.0 / d);  // maximally mixed state
  std::vector<double> w(n, 0.0);
  double y = 0;
  bool converged = false;
  for (int round = 1; round <= options.max_rounds; ++round) {
    cert.rounds = round;
    LinearProgram<double> lp;
    lp.objective.assign(n + 1, 0.0);
    lp.objective[n] = -1.0;
    for (auto set : sets) {
      std::vector<double> row(n + 1, 0.0);
      for (int v : set.members()) row[v] = 1.0;
      row[n] = -1.0;
      lp.add_row(std::move(row), 0.0);
    }
    for (const auto& cut : cuts) {
      std::vector<double> row(n + 1, 0.0);
      for (std::size_t i = 0; i < n; ++i) row[i] = -cut[i];
      lp.add_row(std::move(row), -1.0);
    }
    const auto solved = lp_solve(lp);
    if (solved.status != LpStatus::optimal) {
      cert.diagnostics = "cutting-plane LP " + to_string(solved.status);
      return cert;
    }
    w.assign(solved.solution.begin(), solved.solution.begin() + static_cast<std::ptrdiff_t>(n));
    y = solved.solution[n];
    if (y >= 1.0) {
      std::ostringstream msg;
      msg << "relaxation already forces y >= 1 (y = " << y << ") in round " << round;
      cert.diagnostics = msg.str();
      cert.min_eigenvalue = min_eigen(weighted_sum(projectors, w));
      return cert;
    }
    VectorXcd x;
    cert.min_eigenvalue = min_eigen(weighted_sum(projectors, w), &x);
    if (cert.min_eigenvalue >= 1.0 - options.eigen_tol) {
      converged = true;
      break;
    }
    std::vector<double> cut(n);
    for (std::size_t i = 0; i < n; ++i) cut[i] = (x.adjoint() * projectors[i] * x)(0, 0).real();
    cuts.push_back(std::move(cut));
  }
  if (!converged) {
    std::ostringstream msg;
    msg << "no numeric convergence after " << options.max_rounds << " rounds (lambda_min = "
        << cert.min_eigenvalue << ", y = " << y << "); trying exact verification anyway";
    cert.diagnostics = msg.str();
  }

  // Phase two: rationalize, rescale so that lambda_min >= 1, verify exactly.
  std::vector<ExactMatrix> exact_projectors;
  if (s.is_exact()) {
    for (std::size_t i = 0; i < n; ++i) exact_projectors.push_back(s.exact_projector(i));
  }
  for (std::int64_t den : options.denominators) {
    std::vector<Rational> wr(n);
    for (std::size_t i = 0; i < n; ++i) wr[i] = w[i] > 0 ? rationalize(w[i], den) : Rational(0);
    const double lambda = min_eigen(weighted_sum(projectors, to_doubles(wr)));
    if (!(lambda > 0)) continue;
    const Rational base = rationalize(1.0 / lambda, den);
    for (long bump : {0L, 1000000000L, 1000000L, 1000L}) {
      const Rational scale = bump ? base * (Rational(1) + Rational(1, bump)) : base;
      std::vector<Rational> ws(n);
      for (std::size_t i = 0; i < n; ++i) ws[i] = wr[i] * scale;
      const Rational ys = max_set_weight(sets, ws);
      if (ys >= Rational(1)) break;
      if (s.is_exact()) {
        ExactMatrix m = exact_weighted_sum(exact_projectors, ws, d);
        for (int a = 0; a < d; ++a) m(a, a) -= GaussianRational(1);
        auto psd = psd_check_exact(m);
        if (!psd.psd) continue;
        cert.psd_witness = std::move(psd.factorization);
        cert.exact_psd = true;
      } else {
        if (min_eigen(weighted_sum(projectors, to_doubles(ws))) < 1.0 + 1e-10) continue;
      }
      cert.status = SicStatus::sic;
      cert.w = std::move(ws);
      cert.y = ys;
      cert.min_eigenvalue = min_eigen(weighted_sum(projectors, to_doubles(cert.w)));
      return cert;
    }
  }
  if (cert.diagnostics.empty()) cert.diagnostics = "exact verification failed on every rationalization";
  return cert;
}

bool verify_obstruction(const ProjectorSet& s, const Graph& g, const Obstruction& o) {
  if (!s.is_exact()) return false;
  const auto& vs = s.exact_vectors();
  if (o.state.size() != static_cast<std::size_t>(s.dimension()) || norm2(o.state).is_zero()) return false;
  if (!is_independent(g, o.independent_set)) return false;
  Rational captured;
  for (std::size_t j = 0; j < vs.size(); ++j) {
    const GaussianRational overlap = inner(vs[j], o.state);
    if (o.independent_set.contains(static_cast<int>(j))) {
      captured += overlap.norm() / norm2(vs[j]);
    } else if (!overlap.is_zero()) {
      return false;
    }
  }
  // x^H (sum w Pi) x >= |x|^2 with only the members of I contributing forces
  // sum_{I} w >= |x|^2 / max_i |<v_i, x>|^2 / |v_i|^2 >= |x|^2 / captured.
  if (o.independent_set.empty()) return captured.is_zero();
  const Rational forced = norm2(o.state) / captured;
  return forced >= Rational(1) && forced == o.forced_weight;
}

bool verify_sic_certificate(const ProjectorSet& s, const SicCertificate& cert) {
  const std::size_t n = s.size();
  if (cert.status != SicStatus::sic || cert.w.size() != n) return false;
  if (cert.y.sign() < 0 || cert.y >= Rational(1)) return false;
  for (const auto& wi : cert.w)
    if (wi.sign() < 0) return false;
  const Graph g = orthogonality_graph(s);
  for (auto set : maximal_independent_sets(g)) {
    Rational load;
    for (int v : set.members()) load += cert.w[v];
    if (load > cert.y) return false;
  }
  if (!s.is_exact()) return minimum_quantum_value(s, cert.w) >= 1.0;
  const int d = s.dimension();
  std::vector<ExactMatrix> projectors;
  for (std::size_t i = 0; i < n; ++i) projectors.push_back(s.exact_projector(i));
  ExactMatrix m = exact_weighted_sum(projectors, cert.w, d);
  for (int a = 0; a < d; ++a) m(a, a) -= GaussianRational(1);
  return psd_check_exact(m).psd;
}

Inequality emit_inequality(const ProjectorSet& s, const SicCertificate& cert) {
  if (cert.status != SicStatus::sic) {
    throw ProjectorError("an inequality needs a SIC certificate, got " + to_string(cert.status));
  }
  if (cert.w.size() != s.size()) throw ProjectorError("certificate does not match the projector set");
  Inequality ineq;
  ineq.graph = cert.graph.order() == static_cast<int>(s.size()) ? cert.graph : orthogonality_graph(s);
  for (std::size_t i = 0; i < s.size(); ++i) ineq.singletons.emplace_back(static_cast<int>(i), cert.w[i]);
  for (auto [i, j] : ineq.graph.edges()) ineq.pairs.push_back({{i, j}, -(cert.w[i] + cert.w[j])});
  ineq.bound = cert.y;
  return ineq;
}

void write_inequality(std::ostream& out, const Inequality& ineq) {
  out << "inequality terms " << ineq.singletons.size() << " pairs " << ineq.pairs.size() << '\n';
  for (const auto& [i, c] : ineq.singletons) out << "  " << c << " <P" << i + 1 << ">\n";
  for (const auto& [e, c] : ineq.pairs) out << "  " << c << " <P" << e.first + 1 << " P" << e.second + 1 << ">\n";
  out << "  <= " << ineq.bound << '\n';
}

void write_certificate(std::ostream& out, const SicCertificate& cert) {
  out << "status " << to_string(cert.status) << '\n';
  out << "rounds " << cert.rounds << '\n';
  if (cert.status == SicStatus::sic) {
    out << "y " << cert.y << '\n';
    out << "w";
    for (const auto& wi : cert.w) out << ' ' << wi;
    out << '\n';
    out << "psd " << (cert.exact_psd ? "exact" : "numeric") << '\n';
    if (cert.psd_witness) {
      out << "psd_rank " << cert.psd_witness->rank << '\n';
      out << "psd_pivots";
      for (const auto& p : cert.psd_witness->pivots) out << ' ' << p;
      out << '\n';
    }
  }
  if (cert.obstruction) {
    const auto& o = *cert.obstruction;
    if (!o.state.empty()) {
      out << "obstruction state = " << describe_state(o.state) << '\n';
    } else {
      out << "obstruction state = (";
      for (std::size_t k = 0; k < o.numeric_state.size(); ++k) out << (k ? ", " : "") << o.numeric_state[k];
      out << ")\n";
    }
    out << "obstruction independent_set {";
    bool first = true;
    for (int v : o.independent_set.members()) {
      out << (first ? "" : ",") << v + 1;
      first = false;
    }
    out << "}\n";
    if (!o.independent_set.empty()) out << "obstruction forced_weight " << o.forced_weight << '\n';
  }
  if (!cert.diagnostics.empty()) out << "diagnostics " << cert.diagnostics << '\n';
}

Rational noncontextual_bound(const Graph& g, const std::vector<Rational>& w) {
  if (static_cast<int>(w.size()) != g.order()) throw GraphError("weight vector length mismatch");
  for (const auto& x : w)
    if (x.sign() < 0) throw GraphError("weights must be non-negative");
  return max_weight_independent_set(g, w).weight;
}

double quantum_value(const ProjectorSet& s, const std::vector<Rational>& w, const ComplexVector& psi) {
  if (w.size() != s.size() || static_cast<int>(psi.size()) != s.dimension()) {
    throw ProjectorError("dimension mismatch in quantum_value");
  }
  double nrm = 0;
  for (const auto& x : psi) nrm += std::norm(x);
  if (std::abs(nrm - 1.0) > 1e-9) throw ProjectorError("state is not normalized");
  double value = 0;
  for (std::size_t i = 0; i < s.size(); ++i) value += w[i].to_double() * std::norm(inner(s.unit_vector(i), psi));
  return value;
}

double quantum_value(const ProjectorSet& s, const std::vector<Rational>& w,
                     const std::vector<std::complex<double>>& rho, int dimension) {
  if (w.size() != s.size() || dimension != s.dimension() ||
      rho.size() != static_cast<std::size_t>(dimension) * dimension) {
    throw ProjectorError("dimension mismatch in quantum_value");
  }
  MatrixXcd r(dimension, dimension);
  for (int a = 0; a < dimension; ++a)
    for (int b = 0; b < dimension; ++b) r(a, b) = rho[a * dimension + b];
  if (std::abs(r.trace() - 1.0) > 1e-9 || (r - r.adjoint()).norm() > 1e-9 || min_eigen(r) < -1e-9) {
    throw ProjectorError("density matrix must be Hermitian, PSD and of unit trace");
  }
  const MatrixXcd m = weighted_sum(numeric_projectors(s), to_doubles(w));
  return (r * m).trace().real();
}

double minimum_quantum_value(const ProjectorSet& s, const std::vector<Rational>& w) {
  if (w.size() != s.size()) throw ProjectorError("weight vector length mismatch");
  return min_eigen(weighted_sum(numeric_projectors(s), to_doubles(w)));
}

}  // namespace sic
