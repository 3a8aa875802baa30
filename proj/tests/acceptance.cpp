// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <omp.h>

#include <Eigen/Dense>

#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "oracles.hpp"
#include "sic/canonical.hpp"
#include "sic/certify.hpp"
#include "sic/coloring.hpp"
#include "sic/enumeration.hpp"
#include "sic/graph6.hpp"
#include "sic/known_graphs.hpp"
#include "sic/realize.hpp"
#include "sic/simplex.hpp"

using namespace sic;

namespace {

const std::string kFixtures = SIC_FIXTURE_DIR;

// Collects failed sub-checks; a criterion passes when none failed.
class Check {
 public:
  void require(bool ok, const std::string& what) {
    if (!ok) failures_.push_back(what);
  }
  void note(const std::string& s) { notes_ += (notes_.empty() ? "" : "; ") + s; }
  bool ok() const { return failures_.empty(); }
  std::string detail() const {
    if (ok()) return notes_;
    std::string out = "failed:";
    for (const auto& f : failures_) out += " [" + f + "]";
    return out;
  }

 private:
  std::vector<std::string> failures_;
  std::string notes_;
};

std::string str(const Rational& r) { return r.str(); }

EnumerationOptions parallel_options() {
  EnumerationOptions o;
  o.workers = omp_get_max_threads();
  return o;
}

void census_to_twelve(Check& c1, Check& c2) {
  EnumerationOptions opts = parallel_options();
  opts.chi_greater_than = 3;
  const auto report = enumerate_square_free_connected(12, {}, opts);
  c1.require(report.total == 143129, "total " + std::to_string(report.total) + " != 143129");
  c1.note("total " + std::to_string(report.total));
  for (int n = 1; n <= 7; ++n) {
    std::uint64_t oracle_count = 0;
    for (const Graph& g : brute_force_enumerate(n))
      if (!oracle::has_four_cycle(g) && is_connected(g)) ++oracle_count;
    c1.require(report.counts[n] == oracle_count,
               "n=" + std::to_string(n) + ": " + std::to_string(report.counts[n]) + " vs brute force " +
                   std::to_string(oracle_count));
  }
  c1.note("n<=7 counts match brute force");

  c2.require(report.filtered.size() == 1, std::to_string(report.filtered.size()) + " graphs pass chi > 3");
  if (report.filtered.size() == 1) {
    const Graph g = parse_graph6(report.filtered[0]);
    const Rational chi_f = fractional_chromatic_number(g).value;
    c2.require(g.order() == 12, "order " + std::to_string(g.order()));
    c2.require(chi_f == Rational(3), "chi_f " + str(chi_f));
    c2.require(chromatic_number(g).value == 4, "chi != 4");
    c2.note(report.filtered[0] + " n=12 chi_f=" + str(chi_f));
  }
}

void thirteen(Check& c) {
  // Direct verification of the published strings.
  const std::vector<std::pair<std::string_view, Rational>> published_chi_f = {
      {known::kThirteenVertexChiAbove3[4], Rational(19, 6)},
      {known::kThirteenVertexChiAbove3[5], Rational(35, 11)},
      {known::kThirteenVertexChiAbove3[7], Rational(13, 4)}};
  int above_three = 0;
  for (auto g6 : known::kThirteenVertexChiAbove3) {
    const Graph g = parse_graph6(g6);
    const std::string s(g6);
    c.require(g.order() == 13 && !oracle::has_four_cycle(g) && is_connected(g), s + " not square-free connected");
    c.require(chromatic_number(g).value > 3, s + " has chi <= 3");
    const Rational chi_f = fractional_chromatic_number(g).value;
    if (chi_f > Rational(3)) {
      ++above_three;
      bool listed = false;
      for (const auto& [p, v] : published_chi_f) listed = listed || (p == s && v == chi_f);
      c.require(listed, s + " chi_f " + str(chi_f) + " not as published");
    }
  }
  c.require(above_three == 3, std::to_string(above_three) + " published graphs with chi_f > 3");
  c.note("8 published strings verified directly");

  // Full census of order 13.
  const auto census = thirteen_vertex_census(parallel_options());
  c.require(census.chi_gt3.size() == 8, std::to_string(census.chi_gt3.size()) + " classes with chi > 3");
  c.require(census.matches_published_list, "census differs from the published list");
  std::set<std::string> published;
  for (auto g6 : known::kThirteenVertexChiAbove3) published.insert(encode_graph6(canonical_form(parse_graph6(g6)).graph));
  std::set<std::string> found;
  for (const auto& g6 : census.chi_gt3) found.insert(encode_graph6(canonical_form(parse_graph6(g6)).graph));
  c.require(found == published, "canonical forms differ from the published list");
  std::multiset<std::string> values;
  for (const auto& [g6, v] : census.chi_f_gt3) values.insert(v.str());
  c.require(values == std::multiset<std::string>{"19/6", "35/11", "13/4"}, "chi_f > 3 values differ");
  c.note("n=13 census: " + std::to_string(census.report.counts[13]) + " graphs, 8 with chi>3, chi_f>3 at 19/6 35/11 13/4");
}

void yu_oh_pipeline(Check& c) {
  const Graph yo = parse_graph6(known::kYuOh);
  const Rational chi_f = fractional_chromatic_number(yo).value;
  c.require(chi_f == Rational(35, 11), "chi_f(G_YO) = " + str(chi_f));
  const auto s = read_vector_file(kFixtures + "/yu_oh.vec", true);
  c.require(isomorphic(orthogonality_graph(s), yo), "fixture graph is not G_YO");
  const auto cert = certify_sic(s);
  c.require(cert.status == SicStatus::sic, "status " + to_string(cert.status));
  if (cert.status != SicStatus::sic) return;
  c.require(cert.exact_psd && verify_sic_certificate(s, cert), "certificate does not re-verify exactly");
  c.require(cert.y < Rational(1), "y >= 1");
  const auto ineq = emit_inequality(s, cert);
  const Rational bound = noncontextual_bound(ineq.graph, cert.w);
  c.require(bound == cert.y, "noncontextual bound " + str(bound) + " != y");
  c.require(oracle::inequality_sweep(ineq.graph, cert.w) == cert.y, "assignment sweep disagrees with y");
  std::mt19937_64 rng(20240101);
  std::normal_distribution<double> gauss;
  double worst = 1e300;
  for (int t = 0; t < 100; ++t) {
    ComplexVector psi(3);
    double nrm = 0;
    for (auto& x : psi) {
      x = {gauss(rng), gauss(rng)};
      nrm += std::norm(x);
    }
    for (auto& x : psi) x /= std::sqrt(nrm);
    worst = std::min(worst, quantum_value(s, cert.w, psi));
  }
  c.require(worst > cert.y.to_double(), "a random state does not violate the inequality");
  std::ostringstream note;
  note << "y=" << cert.y << ", min quantum value over 100 states " << worst;
  c.note(note.str());
}

void cone_reproduction(Check& c) {
  const Graph cone_graph = cone(parse_graph6(known::kYuOh));
  const Rational chi_f = fractional_chromatic_number(cone_graph).value;
  c.require(chi_f == Rational(46, 11), "chi_f(cone) = " + str(chi_f));
  c.require(rh_sic_graph_test(cone_graph, 4, 1), "coloring test fails in d=4");
  const auto s = read_vector_file(kFixtures + "/cone_yu_oh_d4.vec", true);
  c.require(isomorphic(orthogonality_graph(s), cone_graph), "fixture graph is not cone(G_YO)");
  const auto cert = certify_sic(s);
  c.require(cert.status == SicStatus::not_sic, "status " + to_string(cert.status));
  if (!cert.obstruction) return;
  ExactVector e4(4);
  e4[3] = GaussianRational(1);
  c.require(cert.obstruction->state == e4, "obstruction state is not e4");
  c.require(verify_obstruction(s, cert.graph, *cert.obstruction), "obstruction does not replay");
  c.note("chi_f=46/11, NOT_SIC with state e4");
}

Eigen::MatrixXcd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXcd out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = {m(i, j).re.to_double(), m(i, j).im.to_double()};
  return out;
}

void properties(Check& c) {
  // graph6 round trip on every labeled graph with n <= 7
  std::uint64_t round_trips = 0;
  for (int n = 1; n <= 7; ++n) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = oracle::from_edge_mask(n, mask);
      const std::string text = encode_graph6(g);
      if (text != oracle::graph6_reference(g) || parse_graph6(text) != g) {
        c.require(false, "graph6 round trip n=" + std::to_string(n));
        break;
      }
      ++round_trips;
    }
  }

  // canonical form constant on orbits
  std::mt19937_64 rng(3);
  bool orbit_ok = true;
  for (int t = 0; t < 50; ++t) {
    const int n = 2 + t % 11;
    const Graph g = oracle::random_graph(n, 0.2 + 0.1 * (t % 5), rng);
    const Graph reference = canonical_form(g).graph;
    for (int k = 0; k < 100; ++k)
      orbit_ok = orbit_ok && canonical_form(relabel(g, oracle::random_permutation(n, rng))).graph == reference;
  }
  c.require(orbit_ok, "canonical form differs within an orbit");

  // LP certificates on every solve: fractional clique programs and random boxes
  int lp_solves = 0;
  std::vector<Graph> suite = {cycle_graph(5), complete_graph(4), parse_graph6(known::kYuOh),
                              cone(parse_graph6(known::kYuOh))};
  for (auto g6 : known::kThirteenVertexChiAbove3) suite.push_back(parse_graph6(g6));
  for (const Graph& g : suite) {
    LinearProgram<Rational> lp;
    lp.objective.assign(g.order(), Rational(1));
    for (auto set : maximal_independent_sets(g)) {
      std::vector<Rational> row(g.order());
      for (int v : set.members()) row[v] = Rational(1);
      lp.add_row(std::move(row), Rational(1));
    }
    const auto r = lp_solve_exact(lp);
    c.require(r.status == LpStatus::optimal && verify_lp_certificate(lp, r), "fractional clique certificate");
    ++lp_solves;
  }
  std::uniform_int_distribution<int> coef(-3, 6), rhs(-2, 10);
  for (int t = 0; t < 200; ++t) {
    const int n = 2 + t % 5, m = 2 + t % 7;
    LinearProgram<Rational> lp;
    for (int j = 0; j < n; ++j) lp.objective.emplace_back(coef(rng));
    for (int i = 0; i < m; ++i) {
      std::vector<Rational> row;
      for (int j = 0; j < n; ++j) row.emplace_back(coef(rng));
      lp.add_row(std::move(row), Rational(rhs(rng)));
    }
    for (int j = 0; j < n; ++j) {
      std::vector<Rational> row(n);
      row[j] = Rational(1);
      lp.add_row(std::move(row), Rational(7));
    }
    const auto r = lp_solve_exact(lp);
    if (r.status == LpStatus::optimal) {
      c.require(verify_lp_certificate(lp, r), "random LP certificate");
      ++lp_solves;
    } else {
      c.require(r.status == LpStatus::infeasible, "bounded LP reported unbounded");
    }
  }

  // exact PSD verdicts against floating eigenvalue signs
  int psd_checked = 0;
  std::uniform_int_distribution<int> small(-5, 5), den(1, 5), shift(-1, 6);
  auto rational = [&] { return Rational(small(rng), den(rng)); };
  while (psd_checked < 1000) {
    const std::size_t n = 1 + psd_checked % 8;
    ExactMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      m(i, i) = GaussianRational(rational() + Rational(shift(rng)));
      for (std::size_t j = i + 1; j < n; ++j) {
        m(i, j) = GaussianRational(rational() / Rational(3), rational() / Rational(3));
        m(j, i) = m(i, j).conj();
      }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(to_eigen(m));
    if (es.eigenvalues().cwiseAbs().minCoeff() < 1e-6) continue;  // not well conditioned
    const auto exact = psd_check_exact(m);
    c.require(exact.psd == (es.eigenvalues().minCoeff() > 0), "psd verdict disagrees with eigenvalues");
    if (!exact.psd) c.require(quadratic_form(m, exact.witness).sign() < 0, "psd witness is not negative");
    ++psd_checked;
  }

  // noncontextual bound against the 2^n assignment sweep
  suite.push_back(parse_graph6(known::kYuOhMinusEdge));
  {
    std::ifstream in(kFixtures + "/fig1c.g6");
    std::string g6;
    std::getline(in, g6);
    suite.push_back(parse_graph6(g6));
  }
  std::uniform_int_distribution<int> weight(0, 12);
  int sweeps = 0;
  for (const Graph& g : suite) {
    if (g.order() > 16) continue;
    for (int trial = 0; trial < 2; ++trial) {
      std::vector<Rational> w;
      for (int i = 0; i < g.order(); ++i) w.emplace_back(weight(rng), 7);
      c.require(noncontextual_bound(g, w) == oracle::inequality_sweep(g, w), "bound differs from the sweep");
      ++sweeps;
    }
  }

  // realize gradient against central differences
  std::normal_distribution<double> gauss;
  double worst = 0;
  for (const Graph& g : {parse_graph6(known::kYuOh), complete_graph(4), cycle_graph(5)}) {
    for (Field field : {Field::real, Field::complex}) {
      std::vector<double> x(g.order() * 3 * (field == Field::real ? 1 : 2));
      for (auto& v : x) v = gauss(rng);
      std::vector<double> grad(x.size());
      realization_objective(g, 3, field, x.data(), grad.data());
      double diff = 0, scale = 0;
      for (std::size_t k = 0; k < x.size(); ++k) {
        const double h = 1e-6 * std::max(1.0, std::abs(x[k])), keep = x[k];
        x[k] = keep + h;
        const double up = realization_objective(g, 3, field, x.data(), nullptr);
        x[k] = keep - h;
        const double down = realization_objective(g, 3, field, x.data(), nullptr);
        x[k] = keep;
        const double fd = (up - down) / (2 * h);
        diff += (fd - grad[k]) * (fd - grad[k]);
        scale += grad[k] * grad[k];
      }
      worst = std::max(worst, std::sqrt(diff / scale));
    }
  }
  c.require(worst < 1e-6, "gradient relative error " + std::to_string(worst));

  std::ostringstream note;
  note << round_trips << " graph6 round trips, 5000 relabelings, " << lp_solves << " LP certificates, "
       << psd_checked << " PSD verdicts, " << sweeps << " bound sweeps, gradient error " << worst;
  c.note(note.str());
}

void realizations(Check& c) {
  RealizationOptions opts;
  opts.restarts = 50;
  opts.tol = 1e-12;
  opts.delta = 1e-6;
  const auto yo = find_realization(parse_graph6(known::kYuOh), 3, opts);
  c.require(yo.status == RealizationStatus::found && yo.residual <= 1e-12, "G_YO: " + to_string(yo.status));
  c.require(verify_realization(parse_graph6(known::kYuOh), ProjectorSet::numeric(3, yo.vectors)),
            "G_YO realization does not verify");
  const auto c4 = find_realization(cycle_graph(4), 3, opts);
  c.require(c4.status == RealizationStatus::degenerate, "C4: " + to_string(c4.status));
  opts.field = Field::complex;
  const auto k4 = find_realization(complete_graph(4), 3, opts);
  c.require(k4.status == RealizationStatus::failed, "K4: " + to_string(k4.status));
  double k4_min = 1e300;
  for (double r : k4.restart_residuals) k4_min = std::min(k4_min, r);
  std::ostringstream note;
  note << "G_YO residual " << yo.residual << ", C4 distinctness " << c4.min_pairwise_distinctness
       << ", K4 min residual over 50 restarts " << k4_min;
  c.note(note.str());
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    std::string title;
    std::function<void(Check&)> run;
  };
  Check c1, c2;
  bool census_done = false;
  auto census = [&] {
    if (!census_done) census_to_twelve(c1, c2);
    census_done = true;
  };
  const std::vector<Criterion> criteria = {
      {1, "enumeration census through n = 12", [&](Check& c) { census(); c = c1; }},
      {2, "unique 12-vertex graph with chi > 3",
       [&](Check& c) {
         census();
         c = c2;
         c.note("filtered during the run of 1");
       }},
      {3, "thirteen-vertex census", thirteen},
      {4, "Yu-Oh pipeline", yu_oh_pipeline},
      {5, "SIC graph without a SIC realization in d = 4", cone_reproduction},
      {6, "property suites", properties},
      {7, "realization outcomes", realizations},
  };
  bool all = true;
  for (const auto& crit : criteria) {
    Check c;
    const auto start = std::chrono::steady_clock::now();
    try {
      crit.run(c);
    } catch (const std::exception& e) {
      c.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && c.ok();
    std::cout << (c.ok() ? "PASS" : "FAIL") << ' ' << crit.id << ' ' << crit.title << " (" << c.detail() << "; "
              << std::fixed << std::setprecision(1) << seconds << " s)" << std::defaultfloat << std::endl;
  }
  return all ? 0 : 1;
}
