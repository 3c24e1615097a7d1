#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "nsurf/builders.hpp"
#include "nsurf/complex.hpp"
#include "nsurf/homology.hpp"
#include "nsurf/permutation.hpp"

using namespace nsurf;

TEST_CASE("cycle notation round trip") {
  const auto p = Permutation::from_cycles("(1,2,3)(5,6)", 6);
  CHECK(p(1) == 2);
  CHECK(p(3) == 1);
  CHECK(p(4) == 4);
  CHECK(p(5) == 6);
  CHECK(p.degree() == 6);
  CHECK_THROWS_AS(p(7), std::out_of_range);
  CHECK(Permutation::from_cycles("()", 3) == Permutation(3));
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2)(2,3)", 3), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,2", 2), std::invalid_argument);
  CHECK_THROWS_AS(Permutation::from_cycles("(1,x)", 2), std::invalid_argument);
}

TEST_CASE("composition, inverse and face images") {
  const auto r = Permutation::cycle({1, 2, 3, 4}, 4);
  const auto s = Permutation::from_cycles("(2,4)", 4);
  CHECK(r.then(r.inverse()).is_identity());
  CHECK(r.then(s)(1) == 4);  // 1 -> 2 under r, then 2 -> 4 under s
  CHECK(r.apply({1, 2}) == Face{2, 3});
  CHECK(r.apply({4, 1}) == Face{1, 2});
  const auto wide = s.extended(6);
  CHECK(wide.degree() == 6);
  CHECK(wide(6) == 6);
}

TEST_CASE("group generation") {
  const auto s3 = generate_group({Permutation::from_cycles("(1,2)", 3),
                                  Permutation::from_cycles("(1,2,3)", 3)});
  CHECK(s3.size() == 6);
  const auto trivial = generate_group({Permutation(4)});
  CHECK(trivial.size() == 1);
  CHECK_THROWS_AS(generate_group({Permutation::cycle({1, 2, 3, 4, 5, 6, 7, 8}, 8)}, 4),
                  std::runtime_error);
}

TEST_CASE("orbit of a face under the hexagon symmetries") {
  const auto gens = builtin_symmetry("bdC4:3");
  REQUIRE(gens.size() == 2);
  CHECK(generate_group(gens).size() == 12);
  const auto long_orbit = orbit(gens, {1, 2, 3, 4}, 6);
  const auto short_orbit = orbit(gens, {1, 2, 4, 5}, 3);
  CHECK(long_orbit.size() == 6);
  CHECK(short_orbit.size() == 3);
  std::set<Face> all(long_orbit.begin(), long_orbit.end());
  all.insert(short_orbit.begin(), short_orbit.end());
  CHECK(all.size() == 9);
  CHECK_THROWS_AS(orbit(gens, {1, 2, 3, 4}, 5), std::runtime_error);
}

TEST_CASE("cyclic 4-polytope boundary on six vertices") {
  const auto k = cyclic_polytope_boundary(6);
  const std::vector<Face> expected = {{1, 2, 3, 4}, {1, 2, 3, 6}, {1, 2, 4, 5},
                                      {1, 2, 5, 6}, {1, 3, 4, 6}, {1, 4, 5, 6},
                                      {2, 3, 4, 5}, {2, 3, 5, 6}, {3, 4, 5, 6}};
  CHECK(k.facets() == expected);
  // every facet has two odd and two even labels
  for (const Face& f : k.facets())
    CHECK(std::count_if(f.begin(), f.end(), [](Vertex v) { return v % 2 == 1; }) == 2);
}

TEST_CASE("cyclic polytope boundaries match the Gale evenness description") {
  for (int k = 3; k <= 6; ++k) {
    const int n = 2 * k;
    const auto built = cyclic_polytope_boundary(n);
    CHECK(built.facets() == gale_evenness_facets(n));
    CHECK(f_vector(built)[3] == static_cast<long long>(n) * (n - 3) / 2);
  }
  CHECK(f_vector(cyclic_polytope_boundary(6))[3] == 9);
  CHECK(f_vector(cyclic_polytope_boundary(8))[3] == 20);
  CHECK(f_vector(cyclic_polytope_boundary(10))[3] == 35);
  CHECK(f_vector(cyclic_polytope_boundary(12))[3] == 54);
  CHECK_THROWS_AS(cyclic_polytope_boundary(4), std::invalid_argument);
  CHECK_THROWS_AS(cyclic_polytope_boundary(7), std::invalid_argument);
}

TEST_CASE("cyclic polytope boundaries are 2-neighborly spheres") {
  for (int n : {6, 8, 10}) {
    const auto k = cyclic_polytope_boundary(n);
    const auto rep = is_combinatorial_3_manifold(k);
    CHECK(rep.verdict == ManifoldVerdict::Yes);
    CHECK(rep.closed);
    CHECK(is_k_neighborly(k, 2));
    CHECK(orientability(k) == Orientability::Orientable);
    CHECK(betti_numbers(k) == BettiVector{1, 0, 0, 1});
  }
}

TEST_CASE("cylinder with eight boundary triangles") {
  const auto k = builtin("C1");
  CHECK(k.facets().size() == 12);
  const auto rep = is_combinatorial_3_manifold(k);
  CHECK(rep.verdict == ManifoldVerdict::No);
  CHECK(rep.bounded_manifold);
  const auto boundary = boundary_ridges(k);
  const std::vector<Face> expected = {{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4},
                                      {5, 6, 7}, {5, 6, 8}, {5, 7, 8}, {6, 7, 8}};
  CHECK(boundary == expected);
  CHECK(euler_characteristic(k.faces()) == 2);  // retracts onto a sphere
}

TEST_CASE("second cylinder") {
  const auto k = builtin("C2");
  CHECK(k.facets().size() == 14);
  const auto rep = is_combinatorial_3_manifold(k);
  CHECK(rep.bounded_manifold);
  const auto boundary = boundary_ridges(k);
  REQUIRE(boundary.size() == 8);
  // the boundary is two disjoint 2-spheres, four triangles each
  const auto bd = SimplicialComplex::from_facets(boundary);
  CHECK(betti_numbers(bd) == BettiVector{2, 0, 2});
  CHECK(euler_characteristic(k.faces()) == 2);
}

TEST_CASE("ten vertex sphere") {
  const auto k = builtin("gruenbaum-sphere-10");
  CHECK(f_vector(k) == FVector{{10, 40, 60, 30}});
  const auto rep = is_combinatorial_3_manifold(k);
  CHECK(rep.verdict == ManifoldVerdict::Yes);
  CHECK(rep.closed);
  CHECK(orientability(k) == Orientability::Orientable);
  CHECK(betti_numbers(k) == BettiVector{1, 0, 0, 1});
  CHECK_FALSE(is_k_neighborly(k, 2));
  // the five missing edges form a perfect matching on the vertices
  std::set<std::pair<Vertex, Vertex>> present;
  for (const Face& e : k.faces().faces(1)) present.insert({e[0], e[1]});
  std::vector<int> missing_degree(11, 0);
  int missing = 0;
  for (Vertex a = 1; a <= 10; ++a)
    for (Vertex b = a + 1; b <= 10; ++b)
      if (!present.count({a, b})) {
        ++missing;
        ++missing_degree[static_cast<std::size_t>(a)];
        ++missing_degree[static_cast<std::size_t>(b)];
      }
  CHECK(missing == 5);
  for (Vertex v = 1; v <= 10; ++v) CHECK(missing_degree[static_cast<std::size_t>(v)] == 1);
}

TEST_CASE("fifteen vertex sphere bundle") {
  const auto k = builtin("s2xs1-15");
  CHECK(f_vector(k) == FVector{{15, 90, 150, 75}});
  const auto rep = is_combinatorial_3_manifold(k);
  CHECK(rep.verdict == ManifoldVerdict::Yes);
  CHECK(rep.closed);
  CHECK_FALSE(is_k_neighborly(k, 2));
  // missing edges are exactly the pairs at cyclic distance 7
  for (Vertex a = 1; a <= 15; ++a)
    for (Vertex b = a + 1; b <= 15; ++b) {
      const int gap = std::min(b - a, 15 - (b - a));
      CHECK(k.has_face({a, b}) == (gap != 7));
    }
  // a closed 3-manifold is orientable exactly when its top betti number is 1
  const auto betti = betti_numbers(k);
  CHECK((orientability(k) == Orientability::Orientable) == (betti[3] == 1));
  CHECK(betti[1] == 1);  // a sphere bundle over the circle either way
}

TEST_CASE("boundary simplex builtin") {
  const auto s2 = builtin("boundary-simplex:3");
  CHECK(f_vector(s2) == FVector{{4, 6, 4}});
  const auto s3 = builtin("boundary-simplex:4");
  CHECK(f_vector(s3) == FVector{{5, 10, 10, 5}});
  CHECK(is_combinatorial_3_manifold(s3).verdict == ManifoldVerdict::Yes);
}

TEST_CASE("builtin name handling") {
  CHECK_THROWS_AS(builtin("nope"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("bdC4:2"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("bdC4:x"), std::invalid_argument);
  CHECK_THROWS_AS(builtin("boundary-simplex"), std::invalid_argument);
  CHECK_FALSE(builtin_names().empty());
  for (const auto& name : builtin_names())
    if (name.find(':') == std::string::npos) CHECK_NOTHROW(builtin(name));
}

TEST_CASE("declared symmetries preserve the facet sets") {
  for (const std::string name : {"bdC4:3", "bdC4:4", "gruenbaum-sphere-10", "s2xs1-15"}) {
    const auto k = builtin(name);
    const std::set<Face> facets(k.facets().begin(), k.facets().end());
    const auto gens = builtin_symmetry(name);
    CHECK_FALSE(gens.empty());
    for (const auto& g : gens)
      for (const Face& f : facets) CHECK(facets.count(g.apply(f)) == 1);
  }
  CHECK(builtin_symmetry("C1").empty());
}
