#include "nsurf/io.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <Eigen/Dense>

namespace nsurf {

namespace {

std::string labels_string(const std::vector<Vertex>& labels, const char* sep = " ") {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(labels[i]);
  }
  return out;
}

}  // namespace

SimplicialComplex parse_complex(std::string_view text, std::vector<std::string>* warnings) {
  std::vector<Face> facets;
  std::vector<std::size_t> facet_lines;
  std::size_t arity = 0;
  std::size_t line_no = 0;

  std::istringstream lines{std::string(text)};
  std::string line;
  while (std::getline(lines, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    Face facet;
    std::string token;
    while (tokens >> token) {
      if (token.find_first_not_of("0123456789") != std::string::npos)
        throw std::runtime_error("line " + std::to_string(line_no) + ": non-integer token '" +
                                 token + "'");
      if (token.size() > 9)
        throw std::runtime_error("line " + std::to_string(line_no) + ": label too large");
      const int label = std::stoi(token);
      if (label < 1)
        throw std::runtime_error("line " + std::to_string(line_no) + ": labels must be >= 1");
      facet.push_back(label);
    }
    if (facet.empty()) continue;
    if (arity == 0) arity = facet.size();
    if (facet.size() != arity)
      throw std::runtime_error("line " + std::to_string(line_no) + ": expected " +
                               std::to_string(arity) + " labels, found " +
                               std::to_string(facet.size()));
    std::sort(facet.begin(), facet.end());
    if (std::adjacent_find(facet.begin(), facet.end()) != facet.end())
      throw std::runtime_error("line " + std::to_string(line_no) + ": repeated label");
    facets.push_back(std::move(facet));
    facet_lines.push_back(line_no);
  }
  if (facets.empty()) throw std::runtime_error("empty complex document");

  // drop duplicates, keeping first occurrences in order
  std::vector<Face> unique_facets;
  for (std::size_t i = 0; i < facets.size(); ++i) {
    if (std::find(unique_facets.begin(), unique_facets.end(), facets[i]) != unique_facets.end()) {
      if (warnings)
        warnings->push_back("line " + std::to_string(facet_lines[i]) + ": duplicate facet " +
                            labels_string(facets[i]) + " ignored");
      continue;
    }
    unique_facets.push_back(facets[i]);
  }
  return SimplicialComplex::from_facets(std::move(unique_facets));
}

SimplicialComplex read_complex_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_complex(buffer.str(), warnings);
}

std::string render_complex(const SimplicialComplex& k, std::string_view comment) {
  std::string out;
  if (!comment.empty()) {
    std::istringstream lines{std::string(comment)};
    std::string line;
    while (std::getline(lines, line)) out += "# " + line + "\n";
  }
  for (const Face& f : k.facets()) out += labels_string(f) + "\n";
  return out;
}

namespace {

// Deterministic coordinates for the ambient vertices: the three Laplacian
// eigenvectors after the constant one, sign-fixed and row-normalized.
std::vector<std::array<double, 3>> spectral_layout(const SimplicialComplex& m) {
  const auto& vertices = m.vertices();
  const int n = static_cast<int>(vertices.size());
  auto index = [&](Vertex v) {
    return static_cast<int>(std::lower_bound(vertices.begin(), vertices.end(), v) -
                            vertices.begin());
  };
  Eigen::MatrixXd laplacian = Eigen::MatrixXd::Zero(n, n);
  for (const Face& e : m.faces().faces(1)) {
    const int a = index(e[0]), b = index(e[1]);
    laplacian(a, b) -= 1;
    laplacian(b, a) -= 1;
    laplacian(a, a) += 1;
    laplacian(b, b) += 1;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(laplacian);
  const Eigen::MatrixXd& vecs = solver.eigenvectors();  // ascending eigenvalues

  std::vector<std::array<double, 3>> coords(static_cast<std::size_t>(n), {0.0, 0.0, 0.0});
  for (int c = 0; c < 3; ++c) {
    if (c + 1 >= n) break;
    Eigen::VectorXd col = vecs.col(c + 1);
    // fixed sign: the first entry of largest magnitude is positive
    int anchor = 0;
    for (int i = 1; i < n; ++i)
      if (std::abs(col(i)) > std::abs(col(anchor))) anchor = i;
    if (col(anchor) < 0) col = -col;
    for (int i = 0; i < n; ++i) coords[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = col(i);
  }
  for (auto& p : coords) {
    const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2]);
    if (norm > 1e-9)
      for (double& x : p) x /= norm;
  }
  return coords;
}

std::string format_coord(double x) {
  if (std::abs(x) < 5e-7) x = 0.0;  // avoid "-0.000000"
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.6f", x);
  return buffer;
}

}  // namespace

std::string off_string(const Slicing& s) {
  const SimplicialComplex& m = *s.ambient;
  const auto layout = spectral_layout(m);
  const auto& vertices = m.vertices();
  auto position = [&](Vertex v) {
    return layout[static_cast<std::size_t>(
        std::lower_bound(vertices.begin(), vertices.end(), v) - vertices.begin())];
  };

  std::string out = "OFF\n";
  out += std::to_string(s.verts.size()) + " " + std::to_string(s.facets.size()) + " 0\n";
  for (const SlicingVertex& v : s.verts) {
    const auto a = position(v.upper), b = position(v.lower);
    out += format_coord((a[0] + b[0]) / 2) + " " + format_coord((a[1] + b[1]) / 2) + " " +
           format_coord((a[2] + b[2]) / 2) + "\n";
  }
  for (const SlicingFacet& f : s.facets) {
    out += std::to_string(f.size);
    for (int i = 0; i < f.size; ++i)
      out += " " + std::to_string(f.ring[static_cast<std::size_t>(i)]);
    out += "\n";
  }
  return out;
}

void write_off(const Slicing& s, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << off_string(s);
  if (!out) throw std::runtime_error("write failed: " + path);
}

std::string render_stats(const SlicingStats& st) {
  std::ostringstream out;
  out << "f-vector (n, e, t, q) = (" << st.n << ", " << st.e << ", " << st.t << ", " << st.q
      << ")\n";
  out << "chi = " << st.chi << "\n";
  out << "orientable = " << (st.orientable ? "yes" : "no") << "\n";
  out << "genus = " << st.genus.str();
  if (!st.orientable) out << " (crosscaps = " << st.crosscaps << ")";
  out << "\n";
  out << "components = " << st.components << " (vertex-linking: " << st.vertex_linking_components
      << ")\n";
  return out.str();
}

std::string render_report(const BoundReport& report) {
  std::ostringstream out;
  out << std::left << std::setw(26) << "check" << std::setw(12) << "lhs" << std::setw(12) << "rhs"
      << "verdict\n";
  for (const CheckRecord& r : report.records) {
    out << std::left << std::setw(26) << r.name;
    if (r.applicable) {
      out << std::setw(12) << r.lhs.str() << std::setw(12) << r.rhs.str()
          << to_string(r.verdict);
      if (!r.reason.empty()) out << " (" << r.reason << ")";
    } else {
      out << std::setw(12) << "-" << std::setw(12) << "-"
          << to_string(r.verdict) << " (" << r.reason << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string render_rows_tsv(const SearchResult& result) {
  std::ostringstream out;
  out << "v1\tsize1\tn\te\tt\tq\tchi\torientable\tgenus\tcomponents\tvlc\twn\torbit\tbounds\n";
  for (const SearchRow& row : result.rows) {
    out << labels_string(row.v1, ",") << "\t" << row.v1.size() << "\t" << row.stats.n << "\t"
        << row.stats.e << "\t" << row.stats.t << "\t" << row.stats.q << "\t" << row.stats.chi
        << "\t" << (row.stats.orientable ? "yes" : "no") << "\t" << row.stats.genus.str() << "\t"
        << row.stats.components << "\t" << row.stats.vertex_linking_components << "\t"
        << (row.weakly_neighborly ? "yes" : "no") << "\t" << row.orbit_size << "\t"
        << row.bound_digest << "\n";
  }
  return out.str();
}

std::string render_rows_table(const SearchResult& result) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "V1" << std::right << std::setw(5) << "n" << std::setw(5)
      << "e" << std::setw(5) << "t" << std::setw(5) << "q" << std::setw(6) << "chi" << std::setw(8)
      << "orient" << std::setw(7) << "genus" << std::setw(6) << "comp" << std::setw(4) << "wn"
      << std::setw(7) << "orbit" << "  bounds\n";
  for (const SearchRow& row : result.rows) {
    out << std::left << std::setw(22) << ("{" + labels_string(row.v1, ",") + "}") << std::right
        << std::setw(5) << row.stats.n << std::setw(5) << row.stats.e << std::setw(5)
        << row.stats.t << std::setw(5) << row.stats.q << std::setw(6) << row.stats.chi
        << std::setw(8) << (row.stats.orientable ? "yes" : "no") << std::setw(7)
        << row.stats.genus.str() << std::setw(6) << row.stats.components << std::setw(4)
        << (row.weakly_neighborly ? "y" : "n") << std::setw(7) << row.orbit_size << "  "
        << row.bound_digest << "\n";
  }
  const auto types = result.type_summary();
  out << "rows: " << result.rows.size() << ", distinct types: " << types.size() << "\n";
  for (const auto& [sig, count] : types) {
    out << "  (n=" << sig.n << ", e=" << sig.e << ", t=" << sig.t << ", q=" << sig.q
        << ", chi=" << sig.chi << ", " << (sig.orientable ? "orientable" : "non-orientable")
        << ") x" << count << "\n";
  }
  return out.str();
}

std::string render_extremal_table(const std::vector<ExtremalRow>& rows,
                                  const ReferenceFamily* reference) {
  std::ostringstream out;
  out << std::left << std::setw(22) << "V1" << std::right << std::setw(7) << "genus"
      << std::setw(5) << "n" << std::setw(5) << "q" << std::setw(10) << "thm";
  if (reference) out << "   " << std::right << std::setw(7) << "ref-g" << std::setw(7) << "ref-n"
                     << std::setw(7) << "ref-q" << "  diff";
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const ExtremalRow& row = rows[i];
    out << std::left << std::setw(22) << ("{" + labels_string(row.v1, ",") + "}") << std::right
        << std::setw(7) << row.stats.genus.str() << std::setw(5)
        << (row.span_dim1_part ? std::to_string(*row.span_dim1_part) : std::string("-"))
        << std::setw(5) << row.stats.q << std::setw(10) << to_string(row.quadrangulated);
    if (reference && i < reference->rows.size()) {
      const ReferenceRow& ref = reference->rows[i];
      out << "   " << std::right << std::setw(7) << ref.genus_num << std::setw(7) << ref.n
          << std::setw(7) << ref.q;
      std::string diff;
      if (row.stats.genus != Rational(ref.genus_num)) diff += " g!";
      if (!row.span_dim1_part || *row.span_dim1_part != ref.n) diff += " n!";
      if (row.stats.q != ref.q) diff += " q!";
      out << " " << (diff.empty() ? " =" : diff);
    }
    out << "\n";
  }
  return out.str();
}

}  // namespace nsurf
