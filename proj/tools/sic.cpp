// Command-line driver: enumerate, graph, certify, inequality, realize.

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "sic/certify.hpp"
#include "sic/coloring.hpp"
#include "sic/enumeration.hpp"
#include "sic/graph6.hpp"
#include "sic/realize.hpp"

namespace {

constexpr int kOk = 0;
constexpr int kInternal = 1;
constexpr int kBadInput = 2;
constexpr int kNegative = 3;   // NOT_SIC, degenerate
constexpr int kUnresolved = 4;  // UNDECIDED, failed

struct Config {
  int max_n = 0;
  std::optional<int> chi_gt;
  int dim = 3;
  double tol = -1;  // subcommand default when negative
  double delta = 1e-6;
  int restarts = 50;
  std::uint64_t seed = 1;
  int workers = 1;
  bool exact = false;
  bool numeric = false;
  bool complex = false;
  std::string output;
  std::string query;
  std::string graph6;
  std::string input;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to --output when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty()) return;
    file_ = std::make_unique<std::ofstream>(path);
    if (!*file_) throw ConfigError("cannot open output file " + path);
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

int enumerate(const Config& c) {
  if (c.max_n < 1 || c.max_n > sic::kMaxEnumerationOrder) throw ConfigError("--max-n must be in 1..13");
  if (c.workers < 1) throw ConfigError("--workers must be at least 1");
  if (c.chi_gt && *c.chi_gt < 0) throw ConfigError("--chi-gt must be non-negative");
  Output out(c.output);
  auto& os = out.stream();
  sic::EnumerationOptions opts;
  opts.workers = c.workers;
  opts.chi_greater_than = c.chi_gt;
  sic::GraphSink sink;
  if (!c.chi_gt) sink = [&](const sic::Graph& g) { os << sic::encode_graph6(g) << '\n'; };
  const auto report = sic::enumerate_square_free_connected(c.max_n, sink, opts);
  for (const auto& g6 : report.filtered) os << g6 << '\n';
  for (int n = 1; n <= c.max_n; ++n) os << n << ' ' << report.counts[n] << '\n';
  os << "total " << report.total << '\n';
  if (c.chi_gt) os << "chi_gt " << *c.chi_gt << ' ' << report.filtered.size() << '\n';
  return kOk;
}

int graph(const Config& c) {
  const sic::Graph g = sic::parse_graph6(c.graph6);
  Output out(c.output);
  auto& os = out.stream();
  if (c.query == "chi") {
    os << sic::chromatic_number(g).value << '\n';
  } else if (c.query == "chif") {
    os << sic::fractional_chromatic_number(g).value << '\n';
  } else if (c.query == "square-free") {
    os << (sic::is_square_free(g) ? "true" : "false") << '\n';
  } else if (c.query == "connected") {
    os << (sic::is_connected(g) ? "true" : "false") << '\n';
  } else if (c.query == "cone") {
    os << sic::encode_graph6(sic::cone(g)) << '\n';
  } else {
    throw ConfigError("unknown query " + c.query);
  }
  return kOk;
}

sic::SicCertificate run_certify(const Config& c, const sic::ProjectorSet& s) {
  sic::CertifyOptions opts;
  if (c.tol >= 0) {
    if (!(c.tol > 0)) throw ConfigError("--tol must be positive");
    opts.orthogonality_tol = c.tol;
  }
  return sic::certify_sic(s, opts);
}

int status_code(sic::SicStatus s) {
  switch (s) {
    case sic::SicStatus::sic: return kOk;
    case sic::SicStatus::not_sic: return kNegative;
    case sic::SicStatus::undecided: return kUnresolved;
  }
  return kInternal;
}

int certify(const Config& c, bool inequality_only) {
  const auto s = sic::read_vector_file(c.input, !c.numeric);
  const auto cert = run_certify(c, s);
  Output out(c.output);
  auto& os = out.stream();
  if (!inequality_only) sic::write_certificate(os, cert);
  if (cert.status == sic::SicStatus::sic) {
    const auto ineq = sic::emit_inequality(s, cert);
    sic::write_inequality(os, ineq);
    if (inequality_only) os << "noncontextual_bound " << sic::noncontextual_bound(ineq.graph, cert.w) << '\n';
  } else if (inequality_only) {
    sic::write_certificate(std::cerr, cert);
    std::cerr << "no inequality: the set is " << sic::to_string(cert.status) << '\n';
  }
  return status_code(cert.status);
}

int realize(const Config& c) {
  const sic::Graph g = sic::parse_graph6(c.graph6);
  sic::RealizationOptions opts;
  opts.field = c.complex ? sic::Field::complex : sic::Field::real;
  opts.restarts = c.restarts;
  opts.tol = c.tol < 0 ? 1e-12 : c.tol;
  opts.delta = c.delta;
  opts.seed = c.seed;
  opts.workers = c.workers;
  if (c.dim < 2 || c.restarts < 1 || !(opts.tol > 0) || !(opts.delta > 0) || c.workers < 1) {
    throw ConfigError("need --dim >= 2, --restarts >= 1, --workers >= 1, --tol > 0, --delta > 0");
  }
  const auto r = sic::find_realization(g, c.dim, opts);
  Output out(c.output);
  auto& os = out.stream();
  os << std::setprecision(17);
  os << "status " << sic::to_string(r.status) << '\n';
  os << "residual " << r.residual << '\n';
  os << "min_distinctness " << r.min_pairwise_distinctness << '\n';
  os << "restart " << r.restart << '\n';
  if (r.status == sic::RealizationStatus::found) sic::write_vector_file(os, sic::ProjectorSet::numeric(c.dim, r.vectors));
  switch (r.status) {
    case sic::RealizationStatus::found: return kOk;
    case sic::RealizationStatus::degenerate: return kNegative;
    case sic::RealizationStatus::failed: return kUnresolved;
  }
  return kInternal;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"square-free graphs, state-independent contextuality certificates and orthogonal realizations"};
  app.require_subcommand(1);
  Config c;

  auto* en = app.add_subcommand("enumerate", "list square-free connected graphs up to --max-n vertices");
  en->add_option("--max-n", c.max_n, "largest order (1..13)")->required();
  en->add_option("--chi-gt", c.chi_gt, "print only graphs with chromatic number above this");
  en->add_option("--workers", c.workers, "OpenMP threads");
  en->add_option("--output", c.output, "write here instead of stdout");

  auto* gr = app.add_subcommand("graph", "exact graph queries");
  gr->add_option("query", c.query, "chi | chif | square-free | connected | cone")
      ->required()
      ->check(CLI::IsMember({"chi", "chif", "square-free", "connected", "cone"}));
  gr->add_option("graph6", c.graph6, "graph in graph6")->required();
  gr->add_option("--output", c.output, "write here instead of stdout");

  auto* ce = app.add_subcommand("certify", "decide whether a set of rays is SIC");
  auto* in = app.add_subcommand("inequality", "print the noncontextuality inequality of a SIC set");
  for (auto* cmd : {ce, in}) {
    cmd->add_option("vectors", c.input, "vector file")->required();
    auto* ex = cmd->add_flag("--exact", c.exact, "rational entries (default)");
    auto* nu = cmd->add_flag("--numeric", c.numeric, "decimal entries");
    ex->excludes(nu);
    cmd->add_option("--tol", c.tol, "orthogonality tolerance in numeric mode");
    cmd->add_option("--output", c.output, "write here instead of stdout");
  }

  auto* re = app.add_subcommand("realize", "search for an orthogonal representation");
  re->add_option("graph6", c.graph6, "graph in graph6")->required();
  re->add_option("--dim", c.dim, "dimension");
  re->add_option("--tol", c.tol, "residual threshold (default 1e-12)");
  re->add_option("--delta", c.delta, "distinctness threshold");
  re->add_option("--restarts", c.restarts, "random restarts");
  re->add_option("--seed", c.seed, "base seed; restart k uses seed + k");
  re->add_option("--workers", c.workers, "OpenMP threads");
  re->add_flag("--complex", c.complex, "complex entries instead of real");
  re->add_option("--output", c.output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadInput;
  }

  try {
    if (en->parsed()) return enumerate(c);
    if (gr->parsed()) return graph(c);
    if (ce->parsed()) return certify(c, false);
    if (in->parsed()) return certify(c, true);
    if (re->parsed()) return realize(c);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const sic::Graph6Error& e) {
    std::cerr << "error: graph6: " << e.what() << '\n';
    return kBadInput;
  } catch (const sic::ProjectorError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const sic::GraphError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kBadInput;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
  return kInternal;
}
