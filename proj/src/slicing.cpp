#include "nsurf/slicing.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nsurf/homology.hpp"

namespace nsurf {

namespace {

std::string face_string(const Face& f) {
  std::ostringstream out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out << " ";
    out << f[i];
  }
  return out.str();
}

std::string cut_edge_string(const SlicingVertex& v) {
  return "(" + std::to_string(v.upper) + "|" + std::to_string(v.lower) + ")";
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int a) {
    while (parent[static_cast<std::size_t>(a)] != a) {
      parent[static_cast<std::size_t>(a)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(a)])];
      a = parent[static_cast<std::size_t>(a)];
    }
    return a;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

bool VertexPartition::in_v1(Vertex v) const {
  return std::binary_search(v1.begin(), v1.end(), v);
}

Rational VertexPartition::imbalance() const {
  return Rational(static_cast<long long>(v2.size()) - static_cast<long long>(v1.size()), 2);
}

VertexPartition make_partition(const SimplicialComplex& m, std::vector<Vertex> v1) {
  std::sort(v1.begin(), v1.end());
  if (std::adjacent_find(v1.begin(), v1.end()) != v1.end())
    throw std::invalid_argument("partition: repeated label in V1");
  if (v1.empty()) throw std::invalid_argument("partition: V1 is empty");
  const auto& vertices = m.vertices();
  for (Vertex v : v1)
    if (!std::binary_search(vertices.begin(), vertices.end(), v))
      throw std::invalid_argument("partition: " + std::to_string(v) + " is not a vertex");
  VertexPartition p;
  p.v1 = std::move(v1);
  std::set_difference(vertices.begin(), vertices.end(), p.v1.begin(), p.v1.end(),
                      std::back_inserter(p.v2));
  if (p.v2.empty()) throw std::invalid_argument("partition: V2 is empty");
  return p;
}

int Slicing::find_vertex(Vertex upper, Vertex lower) const {
  const SlicingVertex key{upper, lower};
  const auto it = std::lower_bound(verts.begin(), verts.end(), key);
  if (it == verts.end() || !(*it == key)) return -1;
  return static_cast<int>(it - verts.begin());
}

Slicing slice(const SimplicialComplex& m, const VertexPartition& p) {
  if (m.dimension() != 3)
    throw std::invalid_argument("slicing requires a 3-dimensional complex");

  Slicing s;
  s.ambient = &m;
  s.partition = p;

  // Any boundary triangle split by the partition would give the level set a
  // boundary curve, which this construction does not represent.
  for (const Face& tri : boundary_ridges(m)) {
    int upper = 0;
    for (Vertex v : tri) upper += p.in_v1(v) ? 1 : 0;
    if (upper != 0 && upper != 3)
      throw std::invalid_argument("partition separates boundary triangle " + face_string(tri));
  }

  for (const Face& e : m.faces().faces(1)) {
    const bool a = p.in_v1(e[0]), b = p.in_v1(e[1]);
    if (a == b) continue;
    s.verts.push_back(a ? SlicingVertex{e[0], e[1]} : SlicingVertex{e[1], e[0]});
  }
  std::sort(s.verts.begin(), s.verts.end());

  for (const Face& tri : m.faces().faces(2)) {
    std::vector<Vertex> up, down;
    for (Vertex v : tri) (p.in_v1(v) ? up : down).push_back(v);
    if (up.empty() || down.empty()) continue;
    // a mixed triangle meets the level set in one normal arc
    int a, b;
    if (up.size() == 1) {
      a = s.find_vertex(up[0], down[0]);
      b = s.find_vertex(up[0], down[1]);
    } else {
      a = s.find_vertex(up[0], down[0]);
      b = s.find_vertex(up[1], down[0]);
    }
    s.edges.push_back(std::minmax(a, b));
  }
  std::sort(s.edges.begin(), s.edges.end());

  for (int ti = 0; ti < static_cast<int>(m.facets().size()); ++ti) {
    const Face& tet = m.facets()[static_cast<std::size_t>(ti)];
    std::vector<Vertex> up, down;
    for (Vertex v : tet) (p.in_v1(v) ? up : down).push_back(v);
    if (up.empty() || down.empty()) continue;
    SlicingFacet facet;
    facet.tet = ti;
    if (up.size() == 1 && down.size() == 3) {
      facet.size = 3;
      for (int i = 0; i < 3; ++i)
        facet.ring[static_cast<std::size_t>(i)] = s.find_vertex(up[0], down[static_cast<std::size_t>(i)]);
    } else if (up.size() == 3 && down.size() == 1) {
      facet.size = 3;
      for (int i = 0; i < 3; ++i)
        facet.ring[static_cast<std::size_t>(i)] = s.find_vertex(up[static_cast<std::size_t>(i)], down[0]);
    } else {
      // 2|2: the ring alternates shared-upper / shared-lower, so both
      // diagonals (same upper or same lower twice removed) stay non-edges
      facet.size = 4;
      facet.ring[0] = s.find_vertex(up[0], down[0]);
      facet.ring[1] = s.find_vertex(up[0], down[1]);
      facet.ring[2] = s.find_vertex(up[1], down[1]);
      facet.ring[3] = s.find_vertex(up[1], down[0]);
    }
    for (int i = 0; i < facet.size; ++i)
      if (facet.ring[static_cast<std::size_t>(i)] < 0)
        throw std::logic_error("slicing facet references a missing cut edge");
    s.facets.push_back(facet);
  }
  return s;
}

namespace {

std::pair<int, int> ring_edge(const SlicingFacet& f, int i) {
  const int a = f.ring[static_cast<std::size_t>(i)];
  const int b = f.ring[static_cast<std::size_t>((i + 1) % f.size)];
  return std::minmax(a, b);
}

bool has_edge(const Slicing& s, std::pair<int, int> e) {
  return std::binary_search(s.edges.begin(), s.edges.end(), e);
}

// edge index -> the (facet, ring position) pairs traversing it
std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> edge_incidence(const Slicing& s) {
  std::map<std::pair<int, int>, std::vector<std::pair<int, int>>> inc;
  for (int fi = 0; fi < static_cast<int>(s.facets.size()); ++fi) {
    const SlicingFacet& f = s.facets[static_cast<std::size_t>(fi)];
    for (int i = 0; i < f.size; ++i) inc[ring_edge(f, i)].push_back({fi, i});
  }
  return inc;
}

}  // namespace

SlicingStats stats(const Slicing& s) {
  SlicingStats st;
  st.n = static_cast<long long>(s.verts.size());
  st.e = static_cast<long long>(s.edges.size());
  for (const SlicingFacet& f : s.facets) (f.size == 3 ? st.t : st.q) += 1;
  st.chi = st.n - st.e + st.t + st.q;

  const auto incidence = edge_incidence(s);
  if (incidence.size() != s.edges.size())
    throw std::logic_error("facet rings traverse unknown edges");
  for (const auto& [e, users] : incidence)
    if (users.size() != 2)
      throw std::invalid_argument("slicing is not closed: edge " +
                                  cut_edge_string(s.verts[static_cast<std::size_t>(e.first)]) + "-" +
                                  cut_edge_string(s.verts[static_cast<std::size_t>(e.second)]) +
                                  " lies in " + std::to_string(users.size()) + " facets");

  // connected components of the surface
  Dsu dsu(s.verts.size());
  for (const auto& [a, b] : s.edges) dsu.unite(a, b);
  std::map<int, std::vector<int>> comps;
  for (int v = 0; v < static_cast<int>(s.verts.size()); ++v)
    comps[dsu.find(v)].push_back(v);
  st.components = static_cast<long long>(comps.size());

  // vertex-linking components use only one upper and one lower ambient label
  for (const auto& [root, members] : comps) {
    std::set<Vertex> uppers, lowers;
    for (int v : members) {
      uppers.insert(s.verts[static_cast<std::size_t>(v)].upper);
      lowers.insert(s.verts[static_cast<std::size_t>(v)].lower);
    }
    if (uppers.size() == 1 || lowers.size() == 1) st.vertex_linking_components += 1;
  }

  // orientability by propagating facet orientations across shared edges; a
  // coherent orientation traverses every edge once in each direction
  std::vector<int> flip(s.facets.size(), -1);
  bool orientable = true;
  for (std::size_t seed = 0; seed < s.facets.size(); ++seed) {
    if (flip[seed] != -1) continue;
    flip[seed] = 0;
    std::vector<int> stack{static_cast<int>(seed)};
    while (!stack.empty()) {
      const int fi = stack.back();
      stack.pop_back();
      const SlicingFacet& f = s.facets[static_cast<std::size_t>(fi)];
      for (int i = 0; i < f.size; ++i) {
        const auto e = ring_edge(f, i);
        const bool forward =
            f.ring[static_cast<std::size_t>(i)] == e.first;  // ring traverses e as (lo -> hi)?
        for (const auto& [gi, gpos] : incidence.at(e)) {
          if (gi == fi && gpos == i) continue;
          const SlicingFacet& g = s.facets[static_cast<std::size_t>(gi)];
          const bool gforward = g.ring[static_cast<std::size_t>(gpos)] == e.first;
          // opposite traversal <=> same flip state
          const int expected = (forward != gforward) ? flip[static_cast<std::size_t>(fi)]
                                                     : 1 - flip[static_cast<std::size_t>(fi)];
          if (flip[static_cast<std::size_t>(gi)] == -1) {
            flip[static_cast<std::size_t>(gi)] = expected;
            stack.push_back(gi);
          } else if (flip[static_cast<std::size_t>(gi)] != expected) {
            orientable = false;
          }
        }
      }
    }
  }
  st.orientable = orientable;
  st.genus = Rational(2 - st.chi, 2);
  st.crosscaps = orientable ? 0 : 2 - st.chi;
  return st;
}

Trace trace(const Slicing& s, Vertex x) {
  const auto& vertices = s.ambient->vertices();
  if (!std::binary_search(vertices.begin(), vertices.end(), x))
    throw std::invalid_argument("trace: " + std::to_string(x) + " is not an ambient vertex");
  Trace t;
  t.anchor = x;
  t.upper_side = s.partition.in_v1(x);

  auto anchored = [&](int v) {
    const SlicingVertex& sv = s.verts[static_cast<std::size_t>(v)];
    return (t.upper_side ? sv.upper : sv.lower) == x;
  };

  std::set<int> closure;
  for (int ei = 0; ei < static_cast<int>(s.edges.size()); ++ei) {
    const auto& [a, b] = s.edges[static_cast<std::size_t>(ei)];
    if (anchored(a) && anchored(b)) {
      t.edges.push_back({a, b});
      closure.insert(a);
      closure.insert(b);
    }
  }
  for (int fi = 0; fi < static_cast<int>(s.facets.size()); ++fi) {
    const SlicingFacet& f = s.facets[static_cast<std::size_t>(fi)];
    if (f.size != 3) continue;  // quadrilaterals never lie in one star
    bool all = true;
    for (int i = 0; i < 3; ++i) all = all && anchored(f.ring[static_cast<std::size_t>(i)]);
    if (all) t.triangles.push_back(fi);
  }
  t.vertices.assign(closure.begin(), closure.end());
  for (int v = 0; v < static_cast<int>(s.verts.size()); ++v)
    if (anchored(v) && !closure.count(v)) t.isolated.push_back(v);
  return t;
}

StructureReport validate_structure(const Slicing& s) {
  StructureReport report;
  auto fail = [&](const std::string& why) {
    if (report.ok) {
      report.ok = false;
      report.violation = why;
    }
  };

  const long long nv = static_cast<long long>(s.verts.size());
  for (const auto& [a, b] : s.edges) {
    if (a < 0 || b < 0 || a >= nv || b >= nv || a == b) {
      fail("edge with invalid endpoints");
      return report;
    }
    const SlicingVertex& va = s.verts[static_cast<std::size_t>(a)];
    const SlicingVertex& vb = s.verts[static_cast<std::size_t>(b)];
    if (va.upper != vb.upper && va.lower != vb.lower)
      fail("edge " + cut_edge_string(va) + "-" + cut_edge_string(vb) +
           " shares neither an upper nor a lower label");
  }

  for (const SlicingFacet& f : s.facets) {
    if (f.size != 3 && f.size != 4) {
      fail("facet of size " + std::to_string(f.size));
      return report;
    }
    for (int i = 0; i < f.size; ++i) {
      const int v = f.ring[static_cast<std::size_t>(i)];
      if (v < 0 || v >= nv) {
        fail("facet ring references vertex " + std::to_string(v));
        return report;
      }
    }
    auto at = [&](int i) { return s.verts[static_cast<std::size_t>(f.ring[static_cast<std::size_t>(i)])]; };
    if (f.size == 3) {
      const bool same_upper = at(0).upper == at(1).upper && at(1).upper == at(2).upper;
      const bool same_lower = at(0).lower == at(1).lower && at(1).lower == at(2).lower;
      if (!same_upper && !same_lower)
        fail("triangle without a common corner label (tet " + std::to_string(f.tet) + ")");
      continue;
    }
    // quadrilateral: corners are {x,y} x {a,b}
    std::set<Vertex> uppers, lowers;
    for (int i = 0; i < 4; ++i) {
      uppers.insert(at(i).upper);
      lowers.insert(at(i).lower);
    }
    if (uppers.size() != 2 || lowers.size() != 2) {
      fail("quadrilateral corners are not a 2x2 label grid (tet " + std::to_string(f.tet) + ")");
      continue;
    }
    for (int i = 0; i < 4; ++i) {
      const SlicingVertex& a = at(i);
      const SlicingVertex& b = at((i + 1) % 4);
      if (a.upper != b.upper && a.lower != b.lower)
        fail("quadrilateral ring does not alternate shared labels (tet " + std::to_string(f.tet) + ")");
      if (!has_edge(s, ring_edge(f, i)))
        fail("quadrilateral side is not an edge of the slicing (tet " + std::to_string(f.tet) + ")");
    }
    for (int i = 0; i < 2; ++i) {
      const auto diag = std::minmax(f.ring[static_cast<std::size_t>(i)], f.ring[static_cast<std::size_t>(i + 2)]);
      if (has_edge(s, diag))
        fail("quadrilateral diagonal is an edge of the slicing (tet " + std::to_string(f.tet) + ")");
    }
  }

  // Each quadrilateral meets the trace of each of its four ambient labels in
  // exactly one of its sides.
  std::map<Vertex, std::set<std::pair<int, int>>> trace_edges;
  auto edges_of_trace = [&](Vertex x) -> const std::set<std::pair<int, int>>& {
    auto it = trace_edges.find(x);
    if (it == trace_edges.end()) {
      const Trace t = trace(s, x);
      it = trace_edges.emplace(x, std::set<std::pair<int, int>>(t.edges.begin(), t.edges.end())).first;
    }
    return it->second;
  };
  for (const SlicingFacet& f : s.facets) {
    if (f.size != 4 || !report.ok) continue;
    std::set<Vertex> labels;
    for (int i = 0; i < 4; ++i) {
      labels.insert(s.verts[static_cast<std::size_t>(f.ring[static_cast<std::size_t>(i)])].upper);
      labels.insert(s.verts[static_cast<std::size_t>(f.ring[static_cast<std::size_t>(i)])].lower);
    }
    for (Vertex x : labels) {
      int shared = 0;
      for (int i = 0; i < 4; ++i)
        if (edges_of_trace(x).count(ring_edge(f, i))) ++shared;
      if (shared != 1)
        fail("quadrilateral in tet " + std::to_string(f.tet) + " shares " + std::to_string(shared) +
             " edges with the trace of " + std::to_string(x));
    }
  }
  return report;
}

bool is_weakly_neighborly(std::size_t num_vertices, const std::vector<std::vector<int>>& rings) {
  std::vector<bool> covered(num_vertices * num_vertices, false);
  auto mark = [&](int a, int b) {
    covered[static_cast<std::size_t>(a) * num_vertices + static_cast<std::size_t>(b)] = true;
    covered[static_cast<std::size_t>(b) * num_vertices + static_cast<std::size_t>(a)] = true;
  };
  for (const auto& ring : rings)
    for (std::size_t i = 0; i < ring.size(); ++i)
      for (std::size_t j = i + 1; j < ring.size(); ++j) mark(ring[i], ring[j]);
  for (std::size_t a = 0; a < num_vertices; ++a)
    for (std::size_t b = a + 1; b < num_vertices; ++b)
      if (!covered[a * num_vertices + b]) return false;
  return true;
}

bool is_weakly_neighborly(const Slicing& s) {
  std::vector<std::vector<int>> rings;
  rings.reserve(s.facets.size());
  for (const SlicingFacet& f : s.facets)
    rings.push_back(std::vector<int>(f.ring.begin(), f.ring.begin() + f.size));
  return is_weakly_neighborly(s.verts.size(), rings);
}

Rational genus_via_span(const SimplicialComplex& m, const VertexPartition& p) {
  const ManifoldReport report = is_combinatorial_3_manifold(m);
  if (report.verdict != ManifoldVerdict::Yes || !report.closed)
    throw std::invalid_argument("genus via span needs a closed combinatorial 3-manifold");
  if (!is_connected(m) || orientability(m) != Orientability::Orientable)
    throw std::invalid_argument("genus via span needs a connected orientable ambient manifold");
  const Slicing s = slice(m, p);
  if (stats(s).components != 1)
    throw std::invalid_argument("genus via span needs a connected slicing");

  // For a genus-g splitting surface both sides are handlebodies, so each
  // span is homotopy equivalent to a wedge of g circles.
  const Rational g1 = 1 - Rational(euler_characteristic(span(m, p.v1)));
  const Rational g2 = 1 - Rational(euler_characteristic(span(m, p.v2)));
  if (g1 != g2)
    throw std::logic_error("the two spans disagree on the genus: " + g1.str() + " vs " + g2.str());
  return g1;
}

namespace {

// position partition of the quadrilateral corners in the sorted tetrahedron:
// {0,1}|{2,3} -> 4, {0,2}|{1,3} -> 5, {0,3}|{1,2} -> 6
int quad_type_from_pair(int lo, int hi) {
  if (lo == 0 && hi == 1) return 4;
  if (lo == 2 && hi == 3) return 4;
  if (lo == 0 && hi == 2) return 5;
  if (lo == 1 && hi == 3) return 5;
  return 6;  // {0,3} or {1,2}
}

// Normal arcs of one tetrahedron's piece on the triangle tri (a subset of
// tet): for each corner of tri, does the piece cut off that corner?
std::array<long long, 3> arcs_on_triangle(const Face& tet, const std::array<long long, 7>& piece,
                                          const Face& tri) {
  std::array<long long, 3> arcs{0, 0, 0};
  auto corner_index = [&](Vertex v) {
    for (int i = 0; i < 3; ++i)
      if (tri[static_cast<std::size_t>(i)] == v) return i;
    return -1;
  };
  // triangle types isolate one tet corner
  for (int c = 0; c < 4; ++c) {
    if (piece[static_cast<std::size_t>(c)] == 0) continue;
    const int i = corner_index(tet[static_cast<std::size_t>(c)]);
    if (i >= 0) arcs[static_cast<std::size_t>(i)] += piece[static_cast<std::size_t>(c)];
  }
  // a quadrilateral meets the triangle in the arc cutting off whichever
  // side of its pair partition has exactly one corner on the triangle
  for (int qt = 4; qt <= 6; ++qt) {
    if (piece[static_cast<std::size_t>(qt)] == 0) continue;
    static const int pairs[3][2][2] = {{{0, 1}, {2, 3}}, {{0, 2}, {1, 3}}, {{0, 3}, {1, 2}}};
    for (const auto& side : pairs[qt - 4]) {
      const int i0 = corner_index(tet[static_cast<std::size_t>(side[0])]);
      const int i1 = corner_index(tet[static_cast<std::size_t>(side[1])]);
      if ((i0 >= 0) != (i1 >= 0)) arcs[static_cast<std::size_t>(i0 >= 0 ? i0 : i1)] += piece[static_cast<std::size_t>(qt)];
    }
  }
  return arcs;
}

CompatibilityReport check_arcs(const SimplicialComplex& m, const NormalCoordinates& coords) {
  CompatibilityReport report;
  for (const auto& [tri, tets] : ridge_to_facets(m)) {
    std::vector<std::array<long long, 3>> sides;
    for (int ti : tets)
      sides.push_back(arcs_on_triangle(m.facets()[static_cast<std::size_t>(ti)],
                                       coords.per_tet[static_cast<std::size_t>(ti)], tri));
    report.equations_checked += 3;
    bool ok = true;
    if (tets.size() == 2) {
      ok = sides[0] == sides[1];
    } else {
      for (const auto& arcs : sides)
        ok = ok && arcs == std::array<long long, 3>{0, 0, 0};
    }
    if (!ok && report.compatible) {
      report.compatible = false;
      report.violation = "arc mismatch on triangle " + face_string(tri);
    }
  }
  return report;
}

}  // namespace

NormalCoordinates add(const NormalCoordinates& a, const NormalCoordinates& b) {
  if (a.per_tet.size() != b.per_tet.size())
    throw std::invalid_argument("normal coordinates over different complexes");
  NormalCoordinates sum = a;
  for (std::size_t i = 0; i < sum.per_tet.size(); ++i)
    for (std::size_t j = 0; j < 7; ++j) sum.per_tet[i][j] += b.per_tet[i][j];
  return sum;
}

std::pair<NormalCoordinates, CompatibilityReport> normal_coordinates(const Slicing& s) {
  const SimplicialComplex& m = *s.ambient;
  NormalCoordinates coords;
  coords.per_tet.assign(m.facets().size(), {0, 0, 0, 0, 0, 0, 0});
  for (const SlicingFacet& f : s.facets) {
    const Face& tet = m.facets()[static_cast<std::size_t>(f.tet)];
    auto position = [&](Vertex v) {
      for (int i = 0; i < 4; ++i)
        if (tet[static_cast<std::size_t>(i)] == v) return i;
      throw std::logic_error("slicing facet label outside its tetrahedron");
    };
    std::vector<int> upper_positions;
    for (int i = 0; i < 4; ++i)
      if (s.partition.in_v1(tet[static_cast<std::size_t>(i)])) upper_positions.push_back(i);
    if (f.size == 3) {
      // the isolated corner is on whichever side has one vertex
      const SlicingVertex corner = s.verts[static_cast<std::size_t>(f.ring[0])];
      const Vertex isolated = upper_positions.size() == 1 ? corner.upper : corner.lower;
      coords.per_tet[static_cast<std::size_t>(f.tet)][static_cast<std::size_t>(position(isolated))] += 1;
    } else {
      coords.per_tet[static_cast<std::size_t>(f.tet)]
                    [static_cast<std::size_t>(quad_type_from_pair(upper_positions[0], upper_positions[1]))] += 1;
    }
  }
  return {coords, check_arcs(m, coords)};
}

AdmissibilityReport admissible_as_slicing(const SimplicialComplex& m,
                                          const NormalCoordinates& coords) {
  AdmissibilityReport report;
  auto fail = [&](const std::string& why) {
    if (report.admissible) {
      report.admissible = false;
      report.reason = why;
    }
  };
  if (coords.per_tet.size() != m.facets().size()) {
    fail("coordinate count does not match the tetrahedron count");
    return report;
  }
  for (std::size_t ti = 0; ti < coords.per_tet.size(); ++ti) {
    long long total = 0;
    for (long long c : coords.per_tet[ti]) {
      if (c < 0) fail("negative coordinate in tetrahedron " + std::to_string(ti));
      total += c;
    }
    if (total > 1)
      fail("tetrahedron " + std::to_string(ti) + " carries " + std::to_string(total) +
           " normal pieces; a slicing has at most one");
  }
  if (!report.admissible) return report;
  const CompatibilityReport arcs = check_arcs(m, coords);
  if (!arcs.compatible) fail(arcs.violation);
  return report;
}

}  // namespace nsurf
