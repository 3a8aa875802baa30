#include "doctest.h"

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

namespace {

const std::string kCli = SIC_CLI_PATH;
const std::string kFixtures = SIC_FIXTURE_DIR;

struct Run {
  int code;
  std::string out;
};

// Arguments are single-quoted; graph6 never contains a quote character.
Run run(const std::string& args) {
  const std::string cmd = "'" + kCli + "' " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  while (std::size_t got = fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), got);
  const int status = pclose(pipe);
  return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixture(const std::string& name) { return "'" + kFixtures + "/" + name + "'"; }

bool has_line(const std::string& text, const std::string& line) {
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);)
    if (l == line) return true;
  return false;
}

int count_graph6_lines(const std::string& text) {
  std::istringstream in(text);
  int n = 0;
  for (std::string l; std::getline(in, l);)
    if (!l.empty() && l.find(' ') == std::string::npos) ++n;
  return n;
}

}  // namespace

TEST_CASE("enumerate") {
  const auto small = run("enumerate --max-n 4");
  CHECK(small.code == 0);
  CHECK(count_graph6_lines(small.out) == 7);
  for (const char* l : {"1 1", "2 1", "3 2", "4 3", "total 7"}) CHECK(has_line(small.out, l));

  const auto filtered = run("enumerate --max-n 12 --chi-gt 3 --workers 2");
  CHECK(filtered.code == 0);
  CHECK(has_line(filtered.out, "total 143129"));
  CHECK(count_graph6_lines(filtered.out) == 1);
  std::ifstream pinned(kFixtures + "/fig1c.g6");
  std::string fig1c;
  std::getline(pinned, fig1c);
  CHECK(has_line(filtered.out, fig1c));

  CHECK(run("enumerate --max-n 0").code == 2);
  CHECK(run("enumerate --max-n 14").code == 2);
  CHECK(run("enumerate --max-n 5 --workers 0").code == 2);
  CHECK(run("enumerate").code == 2);
  CHECK(run("enumerate --max-n 3 --output /nonexistent/dir/x").code == 2);
}

TEST_CASE("enumerate writes to --output and is reproducible") {
  const std::string path = "cli_enumerate_output.txt";
  CHECK(run("enumerate --max-n 8 --workers 3 --output " + path).code == 0);
  std::ifstream in(path);
  std::stringstream written;
  written << in.rdbuf();
  const auto direct = run("enumerate --max-n 8 --workers 1");
  CHECK(written.str() == direct.out);
  std::remove(path.c_str());
}

TEST_CASE("graph queries") {
  auto q = [](const std::string& query, const std::string& g6) { return run("graph " + query + " '" + g6 + "'"); };
  CHECK(q("chif", "L?AB?vOLDPHa`o").out == "35/11\n");
  CHECK(q("chif", "L?ABEagE`gH``c").out == "19/6\n");
  CHECK(q("chif", "L?`D@bCUCbDgWc").out == "13/4\n");
  CHECK(q("chif", "Bw").out == "3/1\n");
  CHECK(q("chi", "L?AB?vOLDPHa`o").out == "4\n");
  CHECK(q("square-free", "Cr").out == "false\n");  // C4
  CHECK(q("square-free", "L?AB?vOLDPHa`o").out == "true\n");
  CHECK(q("connected", "B_").out == "false\n");
  CHECK(q("connected", "Bg").out == "true\n");
  CHECK(q("cone", "Bw").out == "C~\n");
  const auto cone_chif = run("graph chif \"$('" + kCli + "' graph cone 'L?AB?vOLDPHa`o')\"");
  CHECK(cone_chif.out == "46/11\n");

  CHECK(q("chi", "L?AB").code == 2);
  CHECK(q("chi", "C\x01").code == 2);
  CHECK(q("diameter", "Bw").code == 2);
}

TEST_CASE("certify and inequality") {
  const auto yo = run("certify " + fixture("yu_oh.vec"));
  CHECK(yo.code == 0);
  CHECK(has_line(yo.out, "status SIC"));
  CHECK(has_line(yo.out, "y 33/35"));
  CHECK(has_line(yo.out, "inequality terms 13 pairs 24"));
  CHECK(has_line(yo.out, "  <= 33/35"));
  CHECK(run("certify --exact " + fixture("yu_oh.vec")).out == yo.out);

  const auto cone = run("certify " + fixture("cone_yu_oh_d4.vec"));
  CHECK(cone.code == 3);
  CHECK(has_line(cone.out, "obstruction state = e4"));
  CHECK(has_line(cone.out, "obstruction independent_set {14}"));

  const auto basis = run("certify " + fixture("basis.vec"));
  CHECK(basis.code == 3);
  CHECK(has_line(basis.out, "status NOT_SIC"));

  const auto numeric = run("certify --numeric " + fixture("yu_oh.vec"));
  CHECK(numeric.code == 0);
  CHECK(has_line(numeric.out, "psd numeric"));
  CHECK(run("certify --numeric --tol 1e-6 " + fixture("cone_yu_oh_d4.vec")).code == 3);

  const auto ineq = run("inequality " + fixture("yu_oh.vec"));
  CHECK(ineq.code == 0);
  CHECK(has_line(ineq.out, "noncontextual_bound 33/35"));
  CHECK(run("inequality " + fixture("cone_yu_oh_d4.vec")).code == 3);

  CHECK(run("certify /nonexistent.vec").code == 2);
  CHECK(run("certify --exact --numeric " + fixture("yu_oh.vec")).code == 2);
  CHECK(run("certify " + fixture("g_yo.g6")).code == 2);  // not a vector file
  CHECK(run("certify --numeric --tol 0 " + fixture("yu_oh.vec")).code == 2);
}

TEST_CASE("realize") {
  const auto yo = run("realize 'L?AB?vOLDPHa`o' --dim 3 --restarts 50 --tol 1e-12 --delta 1e-6 --seed 1");
  CHECK(yo.code == 0);
  CHECK(has_line(yo.out, "status found"));
  CHECK(run("realize 'Cr' --dim 3").code == 3);                // C4
  CHECK(run("realize 'C~' --dim 3 --complex").code == 4);       // K4
  CHECK(run("realize 'C~' --dim 4").code == 0);
  CHECK(run("realize 'Cr' --dim 1").code == 2);
  CHECK(run("realize 'Cr' --dim 3 --restarts 0").code == 2);
  CHECK(run("realize 'C' --dim 3").code == 2);

  // Same input and seed give byte-identical output for any worker count.
  const auto a = run("realize 'L?AB?vOLDPHa`o' --dim 3 --seed 7 --workers 1");
  const auto b = run("realize 'L?AB?vOLDPHa`o' --dim 3 --seed 7 --workers 4");
  CHECK(a.out == b.out);
  CHECK(run("realize 'L?AB?vOLDPHa`o' --dim 3 --seed 8").out != a.out);
}

TEST_CASE("found realizations round-trip through certify") {
  const std::string path = "cli_realization.txt";
  const auto r = run("realize 'L?AB?vOLDPHa`o' --dim 3");
  REQUIRE(r.code == 0);
  // Drop the four header lines and keep the vector file.
  std::istringstream in(r.out);
  std::ofstream out(path);
  std::string line;
  for (int i = 0; i < 4; ++i) std::getline(in, line);
  while (std::getline(in, line)) out << line << '\n';
  out.close();
  const auto cert = run("certify --numeric --tol 1e-9 " + path);
  CHECK(cert.code == 0);
  std::remove(path.c_str());
}
