#pragma once

#include <map>
#include <string>
#include <vector>

#include "nsurf/base.hpp"

namespace nsurf {

// f-vector of a complex: entries[k] counts the k-dimensional faces.
struct FVector {
  std::vector<long long> entries;

  long long operator[](int k) const {
    return (k >= 0 && k < static_cast<int>(entries.size())) ? entries[static_cast<std::size_t>(k)] : 0;
  }
  int dimension() const { return static_cast<int>(entries.size()) - 1; }
  bool operator==(const FVector&) const = default;
};

std::string to_string(const FVector& f);

// A finite set of faces closed under taking subsets.  Construction closes
// the given generators, so the invariant holds by definition.
class FaceSet {
 public:
  FaceSet() = default;
  explicit FaceSet(const std::vector<Face>& generators);

  int dimension() const { return static_cast<int>(by_dim_.size()) - 1; }
  const std::vector<Face>& faces(int dim) const;
  bool contains(const Face& f) const;
  FVector f_vector() const;
  long long size() const;

 private:
  std::vector<std::vector<Face>> by_dim_;  // each level sorted lexicographically
};

long long euler_characteristic(const FaceSet& faces);

// Pure simplicial complex given by its facets.  Immutable after construction.
class SimplicialComplex {
 public:
  // Sorts each facet and validates: equal arity, labels >= 1, no repeated
  // label inside a facet, no duplicate facets.  Throws std::invalid_argument.
  static SimplicialComplex from_facets(std::vector<Face> facets);

  int dimension() const { return static_cast<int>(facets_[0].size()) - 1; }
  const std::vector<Face>& facets() const { return facets_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const FaceSet& faces() const { return faces_; }
  bool has_face(const Face& f) const { return faces_.contains(f); }

 private:
  SimplicialComplex() = default;

  std::vector<Face> facets_;    // sorted, duplicate-free
  std::vector<Vertex> vertices_;
  FaceSet faces_;
};

FVector f_vector(const SimplicialComplex& k);
long long euler_characteristic(const SimplicialComplex& k);

// Link of a vertex: facets containing v, with v removed.  Throws if v is not
// a vertex of the complex.
SimplicialComplex link(const SimplicialComplex& k, Vertex v);

// Faces spanned by the vertex subset w (the induced subcomplex).  Throws if
// w contains a label that is not a vertex of the complex.
FaceSet span(const SimplicialComplex& k, const std::vector<Vertex>& w);

// Ridges (codimension-1 faces) contained in exactly one facet.
std::vector<Face> boundary_ridges(const SimplicialComplex& k);

// Incidence from each ridge to the facets containing it.
std::map<Face, std::vector<int>> ridge_to_facets(const SimplicialComplex& k);

// Is the 1-skeleton connected?  (Complexes here are nonempty by construction.)
bool is_connected(const SimplicialComplex& k);

enum class ManifoldVerdict {
  Yes,                // every vertex link is a 2-sphere, every triangle in two tetrahedra
  PseudomanifoldOnly, // links are closed connected surfaces but not all spheres
  No,
};

struct ManifoldReport {
  ManifoldVerdict verdict = ManifoldVerdict::No;
  bool closed = false;           // every triangle lies in exactly two tetrahedra
  bool bounded_manifold = false; // boundary present, interior links spheres, boundary links disks
  std::string certificate;       // witness for a negative or non-sphere answer
};

// Decides whether a pure 3-dimensional complex is a closed combinatorial
// 3-manifold.  Throws std::invalid_argument when dimension != 3.
ManifoldReport is_combinatorial_3_manifold(const SimplicialComplex& k);

enum class Orientability { Orientable, NonOrientable };

// Orientability of a connected closed pseudomanifold, decided by propagating
// facet orientations across ridges.  Throws when the input is not a
// connected complex with every ridge in exactly two facets.
Orientability orientability(const SimplicialComplex& k);

// f_{k-1} == binom(f_0, k): every k vertices span a face.
bool is_k_neighborly(const SimplicialComplex& k, int neighborliness);

// Classical face-count constraints for closed combinatorial 3-manifolds:
// lower bound 4 f0 - 10 <= f1, trivial upper bound f1 <= binom(f0, 2),
// and the two Dehn-Sommerville relations.
struct LbtDsReport {
  bool applicable = false;   // requires a closed combinatorial 3-manifold
  std::string reason;        // why not, when inapplicable
  FVector f;
  long long lower_slack = 0; // f1 - (4 f0 - 10)               >= 0
  long long upper_slack = 0; // binom(f0, 2) - f1              >= 0
  long long ds_alternating = 0; // f0 - f1 + f2 - f3           == 0
  long long ds_triangles = 0;   // 2 f2 - 4 f3                 == 0
  bool ok() const {
    return applicable && lower_slack >= 0 && upper_slack >= 0 &&
           ds_alternating == 0 && ds_triangles == 0;
  }
};

LbtDsReport lbt_ds_check(const SimplicialComplex& k);

}  // namespace nsurf
