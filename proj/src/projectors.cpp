#include "sic/projectors.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace sic {

namespace {

ComplexVector to_numeric(const ExactVector& v) {
  ComplexVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(x.re.to_double(), x.im.to_double());
  return out;
}

double norm(const ComplexVector& v) {
  double s = 0;
  for (const auto& x : v) s += std::norm(x);
  return std::sqrt(s);
}

std::complex<double> parse_numeric_entry(const std::string& token) {
  std::string t;
  for (char c : token)
    if (c != '*') t.push_back(c);
  if (t.empty()) throw ProjectorError("empty entry");
  auto to_double = [&](const std::string& s) {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw ProjectorError("malformed number '" + token + "'");
    return v;
  };
  try {
    if (t.back() != 'i') return {to_double(t), 0.0};
    t.pop_back();
    std::size_t split = std::string::npos;
    for (std::size_t k = t.size(); k-- > 1;) {
      if ((t[k] == '+' || t[k] == '-') && t[k - 1] != 'e' && t[k - 1] != 'E') {
        split = k;
        break;
      }
    }
    auto imag = [&](const std::string& s) {
      if (s.empty() || s == "+") return 1.0;
      if (s == "-") return -1.0;
      return to_double(s);
    };
    if (split == std::string::npos) return {0.0, imag(t)};
    return {to_double(t.substr(0, split)), imag(t.substr(split))};
  } catch (const std::logic_error&) {
    throw ProjectorError("malformed number '" + token + "'");
  }
}

}  // namespace

ProjectorSet ProjectorSet::exact(int dimension, std::vector<ExactVector> vectors) {
  if (dimension < 1) throw ProjectorError("dimension must be positive");
  ProjectorSet s;
  s.exact_ = true;
  s.dimension_ = dimension;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != dimension) {
      throw ProjectorError("vector " + std::to_string(i) + " has wrong length");
    }
    bool zero = true;
    for (const auto& x : vectors[i]) zero = zero && x.is_zero();
    if (zero) throw ProjectorError("vector " + std::to_string(i) + " is zero");
    s.numeric_.push_back(to_numeric(vectors[i]));
  }
  s.exact_vectors_ = std::move(vectors);
  return s;
}

ProjectorSet ProjectorSet::numeric(int dimension, std::vector<ComplexVector> vectors) {
  if (dimension < 1) throw ProjectorError("dimension must be positive");
  ProjectorSet s;
  s.dimension_ = dimension;
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    if (static_cast<int>(vectors[i].size()) != dimension) {
      throw ProjectorError("vector " + std::to_string(i) + " has wrong length");
    }
    if (!(norm(vectors[i]) > 0)) throw ProjectorError("vector " + std::to_string(i) + " is zero");
  }
  s.numeric_ = std::move(vectors);
  return s;
}

ExactMatrix ProjectorSet::exact_projector(std::size_t i) const {
  if (!exact_) throw ProjectorError("exact projector requested from a numeric set");
  const auto& v = exact_vectors_.at(i);
  const GaussianRational norm2 = inner(v, v);
  ExactMatrix p(dimension_, dimension_);
  for (int a = 0; a < dimension_; ++a)
    for (int b = 0; b < dimension_; ++b) p(a, b) = v[a] * v[b].conj() / norm2;
  return p;
}

ComplexVector ProjectorSet::unit_vector(std::size_t i) const {
  ComplexVector v = numeric_.at(i);
  const double nv = norm(v);
  for (auto& x : v) x /= nv;
  return v;
}

ProjectorSet ProjectorSet::padded(int extra) const {
  if (exact_) {
    auto vs = exact_vectors_;
    for (auto& v : vs) v.resize(v.size() + extra);
    return exact(dimension_ + extra, std::move(vs));
  }
  auto vs = numeric_;
  for (auto& v : vs) v.resize(v.size() + extra);
  return numeric(dimension_ + extra, std::move(vs));
}

ProjectorSet ProjectorSet::with_exact_vector(ExactVector v) const {
  if (!exact_) throw ProjectorError("cannot append an exact vector to a numeric set");
  auto vs = exact_vectors_;
  vs.push_back(std::move(v));
  return exact(dimension_, std::move(vs));
}

GaussianRational inner(const ExactVector& a, const ExactVector& b) {
  GaussianRational acc;
  for (std::size_t k = 0; k < a.size(); ++k) acc += a[k].conj() * b[k];
  return acc;
}

std::complex<double> inner(const ComplexVector& a, const ComplexVector& b) {
  std::complex<double> acc;
  for (std::size_t k = 0; k < a.size(); ++k) acc += std::conj(a[k]) * b[k];
  return acc;
}

ProjectorSet read_vector_file(std::istream& in, bool exact) {
  int dimension = 0;
  std::vector<ExactVector> exact_vectors;
  std::vector<ComplexVector> numeric_vectors;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (dimension == 0) {
      try {
        std::size_t used = 0;
        dimension = std::stoi(tokens[0], &used);
        if (used != tokens[0].size() || tokens.size() != 1 || dimension < 1) throw std::invalid_argument("");
      } catch (const std::logic_error&) {
        throw ProjectorError(where + "expected a positive dimension");
      }
      continue;
    }
    if (static_cast<int>(tokens.size()) != dimension) {
      throw ProjectorError(where + "expected " + std::to_string(dimension) + " entries, got " +
                           std::to_string(tokens.size()));
    }
    try {
      if (exact) {
        ExactVector v;
        for (const auto& t : tokens) v.push_back(GaussianRational::parse(t));
        exact_vectors.push_back(std::move(v));
      } else {
        ComplexVector v;
        for (const auto& t : tokens) v.push_back(parse_numeric_entry(t));
        numeric_vectors.push_back(std::move(v));
      }
    } catch (const std::exception& e) {
      throw ProjectorError(where + e.what());
    }
  }
  if (dimension == 0) throw ProjectorError("vector file has no dimension line");
  return exact ? ProjectorSet::exact(dimension, std::move(exact_vectors))
               : ProjectorSet::numeric(dimension, std::move(numeric_vectors));
}

ProjectorSet read_vector_file(const std::string& path, bool exact) {
  std::ifstream in(path);
  if (!in) throw ProjectorError("cannot open " + path);
  return read_vector_file(in, exact);
}

void write_vector_file(std::ostream& out, const ProjectorSet& s) {
  out << s.dimension() << '\n';
  if (s.is_exact()) {
    for (const auto& v : s.exact_vectors()) {
      for (std::size_t k = 0; k < v.size(); ++k) out << (k ? " " : "") << v[k].str();
      out << '\n';
    }
    return;
  }
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (const auto& v : s.numeric_vectors()) {
    for (std::size_t k = 0; k < v.size(); ++k) {
      out << (k ? " " : "") << v[k].real();
      if (v[k].imag() != 0) out << std::showpos << v[k].imag() << std::noshowpos << 'i';
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

Graph orthogonality_graph(const ProjectorSet& s, double tol) {
  const int n = static_cast<int>(s.size());
  if (n > kMaxVertices) throw ProjectorError("at most 64 projectors are supported");
  Graph g(n);
  if (s.is_exact()) {
    const auto& vs = s.exact_vectors();
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        const GaussianRational ip = inner(vs[i], vs[j]);
        if (ip.is_zero()) {
          g.add_edge(i, j);
        } else if (ip.norm() == inner(vs[i], vs[i]).re * inner(vs[j], vs[j]).re) {
          throw ProjectorError("vectors " + std::to_string(i) + " and " + std::to_string(j) +
                               " define the same projector");
        }
      }
    }
    return g;
  }
  if (!(tol > 0)) throw ProjectorError("numeric orthogonality needs tol > 0");
  std::vector<ComplexVector> unit(n);
  for (int i = 0; i < n; ++i) unit[i] = s.unit_vector(i);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const double overlap = std::abs(inner(unit[i], unit[j]));
      if (overlap <= tol) {
        g.add_edge(i, j);
      } else if (overlap < 10 * tol) {
        throw ProjectorError("ambiguous orthogonality between " + std::to_string(i) + " and " +
                             std::to_string(j));
      } else if (1 - overlap <= tol) {
        throw ProjectorError("vectors " + std::to_string(i) + " and " + std::to_string(j) +
                             " define the same projector");
      }
    }
  }
  return g;
}

}  // namespace sic
