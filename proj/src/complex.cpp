#include "nsurf/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nsurf {

long long binom(long long n, long long k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

std::string to_string(const FVector& f) {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < f.entries.size(); ++i) {
    if (i) out << ", ";
    out << f.entries[i];
  }
  out << ")";
  return out.str();
}

namespace {

std::string face_string(const Face& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << " ";
    out << f[i];
  }
  return out.str();
}

}  // namespace

FaceSet::FaceSet(const std::vector<Face>& generators) {
  std::set<Face> closure;
  for (const Face& g : generators) {
    if (g.empty()) throw std::invalid_argument("empty face");
    if (!std::is_sorted(g.begin(), g.end()) ||
        std::adjacent_find(g.begin(), g.end()) != g.end())
      throw std::invalid_argument("face is not strictly increasing: " + face_string(g));
    if (g.front() < 1) throw std::invalid_argument("vertex labels must be positive");
    if (g.size() > 24) throw std::invalid_argument("face dimension too large");
    // all nonempty subsets
    const unsigned full = (1u << g.size()) - 1;
    for (unsigned mask = 1; mask <= full; ++mask) {
      Face sub;
      for (std::size_t i = 0; i < g.size(); ++i)
        if (mask & (1u << i)) sub.push_back(g[i]);
      closure.insert(std::move(sub));
    }
  }
  for (const Face& f : closure) {
    const std::size_t dim = f.size() - 1;
    if (by_dim_.size() <= dim) by_dim_.resize(dim + 1);
    by_dim_[dim].push_back(f);
  }
  // std::set iterates faces sorted by size-then-lex only per vector; enforce lex per level
  for (auto& level : by_dim_) std::sort(level.begin(), level.end());
}

const std::vector<Face>& FaceSet::faces(int dim) const {
  static const std::vector<Face> empty;
  if (dim < 0 || dim > dimension()) return empty;
  return by_dim_[static_cast<std::size_t>(dim)];
}

bool FaceSet::contains(const Face& f) const {
  if (f.empty()) return false;
  const int dim = static_cast<int>(f.size()) - 1;
  const auto& level = faces(dim);
  return std::binary_search(level.begin(), level.end(), f);
}

FVector FaceSet::f_vector() const {
  FVector f;
  f.entries.reserve(by_dim_.size());
  for (const auto& level : by_dim_) f.entries.push_back(static_cast<long long>(level.size()));
  return f;
}

long long FaceSet::size() const {
  long long total = 0;
  for (const auto& level : by_dim_) total += static_cast<long long>(level.size());
  return total;
}

long long euler_characteristic(const FaceSet& faces) {
  long long chi = 0;
  long long sign = 1;
  for (int d = 0; d <= faces.dimension(); ++d, sign = -sign)
    chi += sign * static_cast<long long>(faces.faces(d).size());
  return chi;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  if (facets.empty()) throw std::invalid_argument("complex needs at least one facet");
  for (Face& f : facets) {
    std::sort(f.begin(), f.end());
    if (f.empty()) throw std::invalid_argument("empty facet");
    if (f.front() < 1)
      throw std::invalid_argument("vertex labels must be positive, got " + face_string(f));
    if (std::adjacent_find(f.begin(), f.end()) != f.end())
      throw std::invalid_argument("repeated vertex in facet " + face_string(f));
    if (f.size() != facets.front().size())
      throw std::invalid_argument("facets of mixed dimension: " + face_string(f));
  }
  std::sort(facets.begin(), facets.end());
  auto dup = std::adjacent_find(facets.begin(), facets.end());
  if (dup != facets.end())
    throw std::invalid_argument("duplicate facet " + face_string(*dup));

  SimplicialComplex k;
  k.facets_ = std::move(facets);
  k.faces_ = FaceSet(k.facets_);
  for (const Face& v : k.faces_.faces(0)) k.vertices_.push_back(v[0]);
  return k;
}

FVector f_vector(const SimplicialComplex& k) { return k.faces().f_vector(); }

long long euler_characteristic(const SimplicialComplex& k) {
  return euler_characteristic(k.faces());
}

SimplicialComplex link(const SimplicialComplex& k, Vertex v) {
  std::vector<Face> result;
  for (const Face& f : k.facets()) {
    if (!std::binary_search(f.begin(), f.end(), v)) continue;
    Face g;
    for (Vertex w : f)
      if (w != v) g.push_back(w);
    result.push_back(std::move(g));
  }
  if (result.empty())
    throw std::invalid_argument("link: " + std::to_string(v) + " is not a vertex");
  return SimplicialComplex::from_facets(std::move(result));
}

FaceSet span(const SimplicialComplex& k, const std::vector<Vertex>& w) {
  std::vector<Vertex> sorted = w;
  std::sort(sorted.begin(), sorted.end());
  for (Vertex v : sorted)
    if (!std::binary_search(k.vertices().begin(), k.vertices().end(), v))
      throw std::invalid_argument("span: " + std::to_string(v) + " is not a vertex");
  std::vector<Face> inside;
  for (int d = 0; d <= k.faces().dimension(); ++d)
    for (const Face& f : k.faces().faces(d))
      if (std::includes(sorted.begin(), sorted.end(), f.begin(), f.end()))
        inside.push_back(f);
  return FaceSet(inside);  // re-closing a closed set is a no-op
}

std::map<Face, std::vector<int>> ridge_to_facets(const SimplicialComplex& k) {
  std::map<Face, std::vector<int>> incidence;
  const auto& facets = k.facets();
  for (int fi = 0; fi < static_cast<int>(facets.size()); ++fi) {
    const Face& f = facets[static_cast<std::size_t>(fi)];
    for (std::size_t drop = 0; drop < f.size(); ++drop) {
      Face ridge;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) ridge.push_back(f[i]);
      incidence[std::move(ridge)].push_back(fi);
    }
  }
  return incidence;
}

std::vector<Face> boundary_ridges(const SimplicialComplex& k) {
  std::vector<Face> result;
  for (const auto& [ridge, tets] : ridge_to_facets(k))
    if (tets.size() == 1) result.push_back(ridge);
  return result;
}

namespace {

// Union-find on 0..n-1.
struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  int components() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }
};

int vertex_index(const std::vector<Vertex>& vertices, Vertex v) {
  auto it = std::lower_bound(vertices.begin(), vertices.end(), v);
  return static_cast<int>(it - vertices.begin());
}

// Shape analysis of a pure 2-complex, enough to recognize spheres and disks.
struct SurfaceAnalysis {
  bool edge_degrees_ok = true;  // every edge in at most two triangles
  bool closed = true;           // every edge in exactly two
  bool vertex_figures_ok = true;  // one cycle (interior) or one path (boundary) per vertex
  bool connected = true;
  long long chi = 0;
  std::string detail;

  bool closed_surface() const {
    return edge_degrees_ok && closed && vertex_figures_ok && connected;
  }
  bool is_sphere() const { return closed_surface() && chi == 2; }
  bool is_disk() const {
    return edge_degrees_ok && !closed && vertex_figures_ok && connected && chi == 1;
  }
};

SurfaceAnalysis analyze_surface(const SimplicialComplex& l) {
  SurfaceAnalysis a;
  a.chi = euler_characteristic(l);

  auto incidence = ridge_to_facets(l);  // edge -> triangles
  for (const auto& [edge, tris] : incidence) {
    if (tris.size() > 2) {
      a.edge_degrees_ok = false;
      a.detail = "edge " + face_string(edge) + " lies in " + std::to_string(tris.size()) + " triangles";
      return a;
    }
    if (tris.size() != 2) a.closed = false;
  }

  // Vertex figures: for each vertex, the graph made of the opposite edges of
  // its triangles must be a single cycle (or a single path on the boundary).
  for (Vertex v : l.vertices()) {
    std::map<Vertex, int> degree;
    int local_edges = 0;
    Dsu local(l.vertices().size());
    for (const Face& f : l.facets()) {
      if (!std::binary_search(f.begin(), f.end(), v)) continue;
      Face rest;
      for (Vertex w : f)
        if (w != v) rest.push_back(w);
      ++degree[rest[0]];
      ++degree[rest[1]];
      ++local_edges;
      local.unite(vertex_index(l.vertices(), rest[0]), vertex_index(l.vertices(), rest[1]));
    }
    int odd = 0;
    bool too_big = false;
    for (const auto& [w, d] : degree) {
      if (d == 1) ++odd;
      if (d > 2) too_big = true;
    }
    // connectivity of the figure: all touched vertices in one class
    int roots = 0;
    std::set<int> classes;
    for (const auto& [w, d] : degree) classes.insert(local.find(vertex_index(l.vertices(), w)));
    roots = static_cast<int>(classes.size());
    const bool cycle = !too_big && odd == 0 && roots == 1 &&
                       local_edges == static_cast<int>(degree.size());
    const bool path = !too_big && odd == 2 && roots == 1 &&
                      local_edges == static_cast<int>(degree.size()) - 1;
    if (!cycle && !path) {
      a.vertex_figures_ok = false;
      a.detail = "vertex figure of " + std::to_string(v) + " is not a cycle or a path";
      return a;
    }
  }

  // global connectivity through edges
  Dsu dsu(l.vertices().size());
  for (const Face& e : l.faces().faces(1))
    dsu.unite(vertex_index(l.vertices(), e[0]), vertex_index(l.vertices(), e[1]));
  a.connected = dsu.components() == 1;
  if (!a.connected) a.detail = "not connected";
  return a;
}

}  // namespace

bool is_connected(const SimplicialComplex& k) {
  Dsu dsu(k.vertices().size());
  for (const Face& e : k.faces().faces(1))
    dsu.unite(vertex_index(k.vertices(), e[0]), vertex_index(k.vertices(), e[1]));
  return dsu.components() == 1;
}

ManifoldReport is_combinatorial_3_manifold(const SimplicialComplex& k) {
  if (k.dimension() != 3)
    throw std::invalid_argument("manifold test requires a pure 3-dimensional complex");

  ManifoldReport report;
  for (const auto& [tri, tets] : ridge_to_facets(k)) {
    if (tets.size() > 2) {
      report.verdict = ManifoldVerdict::No;
      report.certificate =
          "triangle " + face_string(tri) + " lies in " + std::to_string(tets.size()) + " tetrahedra";
      return report;
    }
  }
  const auto boundary = boundary_ridges(k);
  report.closed = boundary.empty();

  // Boundary vertices are those on a boundary triangle.
  std::set<Vertex> boundary_vertices;
  for (const Face& tri : boundary) boundary_vertices.insert(tri.begin(), tri.end());

  bool all_spheres = true;
  bool all_closed_surfaces = true;
  bool bounded_ok = true;
  std::string first_bad;
  std::string first_nonsphere;
  for (Vertex v : k.vertices()) {
    const SurfaceAnalysis a = analyze_surface(link(k, v));
    const bool on_boundary = boundary_vertices.count(v) > 0;
    if (report.closed) {
      if (!a.closed_surface()) {
        all_closed_surfaces = false;
        all_spheres = false;
        if (first_bad.empty())
          first_bad = "link of vertex " + std::to_string(v) + ": " +
                      (a.detail.empty() ? "not a closed surface" : a.detail);
      } else if (!a.is_sphere()) {
        all_spheres = false;
        if (first_nonsphere.empty())
          first_nonsphere = "link of vertex " + std::to_string(v) +
                            " is a closed surface with euler characteristic " +
                            std::to_string(a.chi);
      }
    } else {
      const bool ok = on_boundary ? a.is_disk() : a.is_sphere();
      if (!ok) {
        bounded_ok = false;
        if (first_bad.empty())
          first_bad = "link of vertex " + std::to_string(v) + " is not a " +
                      (on_boundary ? "disk" : "sphere") +
                      (a.detail.empty() ? "" : " (" + a.detail + ")");
      }
    }
  }

  if (report.closed) {
    if (all_spheres) {
      report.verdict = ManifoldVerdict::Yes;
    } else if (all_closed_surfaces) {
      report.verdict = ManifoldVerdict::PseudomanifoldOnly;
      report.certificate = first_nonsphere;
    } else {
      report.verdict = ManifoldVerdict::No;
      report.certificate = first_bad;
    }
  } else {
    report.verdict = ManifoldVerdict::No;  // "closed combinatorial manifold" fails
    report.bounded_manifold = bounded_ok;
    report.certificate = bounded_ok
        ? "boundary triangle " + face_string(boundary.front()) + " lies in one tetrahedron"
        : first_bad;
  }
  return report;
}

Orientability orientability(const SimplicialComplex& k) {
  const auto incidence = ridge_to_facets(k);
  for (const auto& [ridge, facets] : incidence)
    if (facets.size() != 2)
      throw std::invalid_argument("orientability needs every ridge in exactly two facets, ridge " +
                                  face_string(ridge) + " is in " + std::to_string(facets.size()));

  // adjacency with the parity of the dropped vertex position on both sides
  const auto& facets = k.facets();
  std::vector<std::vector<std::pair<int, int>>> adj(facets.size());  // (other, sign rule)
  for (const auto& [ridge, pair] : incidence) {
    const int f = pair[0], g = pair[1];
    auto drop_parity = [&](int fi) {
      const Face& face = facets[static_cast<std::size_t>(fi)];
      for (std::size_t i = 0; i < face.size(); ++i)
        if (!std::binary_search(ridge.begin(), ridge.end(), face[i])) return static_cast<int>(i) % 2;
      throw std::logic_error("ridge not contained in its facet");
    };
    // Induced orientations on the shared ridge must cancel:
    // sign(f) * (-1)^i == -sign(g) * (-1)^j.
    const int rule = (drop_parity(f) + drop_parity(g)) % 2;  // 0: opposite signs, 1: equal signs
    adj[static_cast<std::size_t>(f)].push_back({g, rule});
    adj[static_cast<std::size_t>(g)].push_back({f, rule});
  }

  std::vector<int> sign(facets.size(), 0);
  std::vector<int> stack;
  sign[0] = 1;
  stack.push_back(0);
  bool consistent = true;
  while (!stack.empty()) {
    const int f = stack.back();
    stack.pop_back();
    for (const auto& [g, rule] : adj[static_cast<std::size_t>(f)]) {
      const int expected =
          rule == 0 ? -sign[static_cast<std::size_t>(f)] : sign[static_cast<std::size_t>(f)];
      if (sign[static_cast<std::size_t>(g)] == 0) {
        sign[static_cast<std::size_t>(g)] = expected;
        stack.push_back(g);
      } else if (sign[static_cast<std::size_t>(g)] != expected) {
        consistent = false;  // keep flooding so the connectivity check below stays valid
      }
    }
  }
  if (std::count(sign.begin(), sign.end(), 0) > 0)
    throw std::invalid_argument("orientation propagation needs a facet-connected complex");
  return consistent ? Orientability::Orientable : Orientability::NonOrientable;
}

bool is_k_neighborly(const SimplicialComplex& k, int neighborliness) {
  if (neighborliness < 1) throw std::invalid_argument("neighborliness must be positive");
  const FVector f = f_vector(k);
  return f[neighborliness - 1] == binom(f[0], neighborliness);
}

LbtDsReport lbt_ds_check(const SimplicialComplex& k) {
  LbtDsReport report;
  report.f = f_vector(k);
  if (k.dimension() != 3) {
    report.reason = "not a 3-dimensional complex";
    return report;
  }
  const ManifoldReport m = is_combinatorial_3_manifold(k);
  if (m.verdict != ManifoldVerdict::Yes || !m.closed) {
    report.reason = m.closed ? "not a combinatorial manifold: " + m.certificate
                             : "complex has boundary";
    return report;
  }
  report.applicable = true;
  const long long f0 = report.f[0], f1 = report.f[1], f2 = report.f[2], f3 = report.f[3];
  report.lower_slack = f1 - (4 * f0 - 10);
  report.upper_slack = binom(f0, 2) - f1;
  report.ds_alternating = f0 - f1 + f2 - f3;
  report.ds_triangles = 2 * f2 - 4 * f3;
  return report;
}

}  // namespace nsurf
