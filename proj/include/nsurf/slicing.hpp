#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "nsurf/complex.hpp"

namespace nsurf {

// Bipartition of the vertex set of a 3-manifold into two nonempty parts.
struct VertexPartition {
  std::vector<Vertex> v1;  // sorted
  std::vector<Vertex> v2;  // sorted complement

  bool in_v1(Vertex v) const;
  // Half the size difference |v2| - |v1|; enters the main lower bound.
  Rational imbalance() const;
};

// Builds the partition (v1, complement) and validates that v1 is a nonempty
// proper subset of the vertices of m.
VertexPartition make_partition(const SimplicialComplex& m, std::vector<Vertex> v1);

// Vertex of a slicing: the ambient edge it cuts, recorded as (upper | lower)
// with upper in V1 and lower in V2.
struct SlicingVertex {
  Vertex upper = 0;
  Vertex lower = 0;
  auto operator<=>(const SlicingVertex&) const = default;
};

// Polygonal facet of a slicing: a triangle or a quadrilateral, listed as a
// boundary ring of slicing-vertex indices.  Quadrilateral rings alternate
// "share the upper label" / "share the lower label", so the two diagonals
// are never edges.
struct SlicingFacet {
  std::array<int, 4> ring{-1, -1, -1, -1};
  int size = 0;
  int tet = -1;  // index into ambient.facets()

  bool is_quad() const { return size == 4; }
};

// The level surface separating V1 from V2: a polygonal complex embedded in
// the ambient triangulation, one facet per mixed tetrahedron.
struct Slicing {
  const SimplicialComplex* ambient = nullptr;
  VertexPartition partition;
  std::vector<SlicingVertex> verts;              // sorted by (upper, lower)
  std::vector<std::pair<int, int>> edges;        // index pairs, lexicographically sorted
  std::vector<SlicingFacet> facets;              // in ambient facet order

  int find_vertex(Vertex upper, Vertex lower) const;  // -1 when absent
};

// Cuts m along the partition.  Requirements: dim m == 3 and every boundary
// triangle of m lies entirely in one part (otherwise the level set would be
// a surface with boundary, which this representation does not model).
Slicing slice(const SimplicialComplex& m, const VertexPartition& p);

// Exact invariants of a slicing.  The genus column uses (2 - chi) / 2 for
// both orientabilities, so non-orientable surfaces get half-integer entries;
// the crosscap count 2 - chi is also reported.
struct SlicingStats {
  long long n = 0, e = 0, t = 0, q = 0;  // vertices, edges, triangles, quadrilaterals
  long long chi = 0;
  bool orientable = false;
  Rational genus;
  long long crosscaps = 0;
  long long components = 0;
  long long vertex_linking_components = 0;  // components with at most one upper and one lower label
};

SlicingStats stats(const Slicing& s);

// Trace of an ambient vertex x: the subcomplex of the slicing living in the
// closed star of x.  For x in V1 it consists of the edges whose two cut
// edges share the upper label x, the triangles all of whose corners do, and
// their closure; symmetrically for x in V2.  Anchored vertices missing from
// that closure are reported as isolated.
struct Trace {
  Vertex anchor = 0;
  bool upper_side = false;
  std::vector<int> triangles;                // facet indices
  std::vector<std::pair<int, int>> edges;    // slicing edges anchored at x
  std::vector<int> vertices;                 // closure of the above
  std::vector<int> isolated;                 // anchored vertices outside the closure
};

Trace trace(const Slicing& s, Vertex x);

// Structural invariants every slicing must satisfy: each edge's cut edges
// share an upper or a lower label; triangles have a common corner label;
// quadrilateral rings alternate shared labels, their diagonals are not
// edges; every quadrilateral shares exactly one edge with each of the four
// traces it touches.  A violation indicates a construction bug.
struct StructureReport {
  bool ok = true;
  std::string violation;  // first failure, with the offending cell
};

StructureReport validate_structure(const Slicing& s);

// Every pair of distinct slicing vertices shares an edge or a facet.
bool is_weakly_neighborly(const Slicing& s);

// Same test on raw polygon data: rings index into 0..num_vertices-1.
bool is_weakly_neighborly(std::size_t num_vertices,
                          const std::vector<std::vector<int>>& rings);

// Genus of the slicing computed from the ambient complex alone:
// 1 - chi(span(V1)), which for a connected slicing of a closed orientable
// combinatorial 3-manifold equals the surface genus.  Preconditions are
// checked; a mismatch between the two spans is a logic error.
Rational genus_via_span(const SimplicialComplex& m, const VertexPartition& p);

// Normal coordinates of a slicing: per tetrahedron, four triangle counts
// (indexed by the corner the triangle cuts off, in sorted vertex order)
// followed by three quadrilateral counts (indexed by the pair partition
// {01|23}, {02|13}, {03|12} of sorted corner positions).
struct NormalCoordinates {
  std::vector<std::array<long long, 7>> per_tet;
};

NormalCoordinates add(const NormalCoordinates& a, const NormalCoordinates& b);

struct CompatibilityReport {
  bool compatible = true;
  long long equations_checked = 0;  // three corner-arc equations per triangle
  std::string violation;
};

// Coordinates of a slicing, plus verification of the matching equations:
// for every triangle of the ambient complex, the three normal arc counts
// agree from both sides (interior) or vanish (boundary).
std::pair<NormalCoordinates, CompatibilityReport> normal_coordinates(const Slicing& s);

struct AdmissibilityReport {
  bool admissible = true;
  std::string reason;
};

// Can this coordinate vector arise as a slicing of m?  Requires nonnegative
// entries, at most one normal piece per tetrahedron, compatible arcs across
// interior triangles and no arcs on boundary triangles.
AdmissibilityReport admissible_as_slicing(const SimplicialComplex& m,
                                          const NormalCoordinates& coords);

}  // namespace nsurf
