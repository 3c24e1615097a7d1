#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nsurf/complex.hpp"
#include "nsurf/permutation.hpp"

namespace nsurf {

// Orbit of a face under the group generated by the given permutations.
// When expected_length is set, any other length is a hard error: orbit
// lengths are part of a construction's definition and a mismatch means the
// generators or the seed are wrong.
std::vector<Face> orbit(const std::vector<Permutation>& generators, const Face& seed,
                        std::optional<std::size_t> expected_length = {});

// Facets of the cyclic 4-polytope boundary on num_vertices = 2k >= 6
// vertices, assembled from dihedral orbits of the facets
// {1,2,j,j+1} (j = 3..k) and {1,2,k+1,k+2}.
SimplicialComplex cyclic_polytope_boundary(int num_vertices);

// Independent description of the same facet set: a 4-subset of {1..n} is a
// facet iff every maximal run of consecutive labels avoiding both 1 and n
// has even length (Gale's evenness condition).
std::vector<Face> gale_evenness_facets(int num_vertices);

// Named example complexes:
//   boundary-simplex:<d>  boundary of the d-simplex
//   bdC4:<k>              cyclic 4-polytope boundary on 2k vertices
//   C1                    12-tetrahedron triangulation of S^2 x [0,1]
//   C2                    14-tetrahedron triangulation, same boundary as C1
//   gruenbaum-sphere-10   10-vertex 3-sphere with f = (10,40,60,30)
//   s2xs1-15              15-vertex sphere bundle over S^1 (75 tetrahedra)
// Each constructed complex is verified (facet counts, manifold property,
// neighborliness where claimed) before it is returned.
SimplicialComplex builtin(std::string_view name);

std::vector<std::string> builtin_names();

// Generators of a vertex symmetry group for a builtin complex (possibly
// empty).  Useful for symmetry-reduced enumeration.
std::vector<Permutation> builtin_symmetry(std::string_view name);

}  // namespace nsurf
