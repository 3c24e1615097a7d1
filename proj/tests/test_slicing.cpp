#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "nsurf/builders.hpp"
#include "nsurf/homology.hpp"
#include "nsurf/slicing.hpp"
#include "oracles.hpp"

using namespace nsurf;

namespace {

SlicingStats slice_stats(const SimplicialComplex& m, std::vector<Vertex> v1) {
  return stats(slice(m, make_partition(m, std::move(v1))));
}

}  // namespace

TEST_CASE("partition construction and validation") {
  const auto m = builtin("boundary-simplex:4");
  const auto p = make_partition(m, {3, 1});
  CHECK(p.v1 == std::vector<Vertex>{1, 3});
  CHECK(p.v2 == std::vector<Vertex>{2, 4, 5});
  CHECK(p.in_v1(1));
  CHECK_FALSE(p.in_v1(2));
  CHECK(p.imbalance() == Rational(1, 2));
  CHECK_THROWS_AS(make_partition(m, {}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(m, {1, 2, 3, 4, 5}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(m, {1, 9}), std::invalid_argument);
  CHECK_THROWS_AS(make_partition(m, {1, 1}), std::invalid_argument);
}

TEST_CASE("vertex figure of the 4-simplex boundary") {
  const auto m = builtin("boundary-simplex:4");
  const auto s = slice(m, make_partition(m, {1}));
  REQUIRE(s.verts.size() == 4);
  for (const auto& v : s.verts) CHECK(v.upper == 1);
  CHECK(s.edges.size() == 6);
  REQUIRE(s.facets.size() == 4);
  for (const auto& f : s.facets) CHECK(f.size == 3);
  const auto st = stats(s);
  CHECK(st.n == 4);
  CHECK(st.e == 6);
  CHECK(st.t == 4);
  CHECK(st.q == 0);
  CHECK(st.chi == 2);
  CHECK(st.orientable);
  CHECK(st.genus == 0);
  CHECK(st.components == 1);
  CHECK(st.vertex_linking_components == 1);
  CHECK(validate_structure(s).ok);
  CHECK(is_weakly_neighborly(s));
}

TEST_CASE("prism slicing of the 4-simplex boundary") {
  const auto m = builtin("boundary-simplex:4");
  const auto s = slice(m, make_partition(m, {1, 2}));
  const auto st = stats(s);
  CHECK(st.n == 6);
  CHECK(st.e == 9);
  CHECK(st.t == 2);
  CHECK(st.q == 3);
  CHECK(st.chi == 2);
  CHECK(st.genus == 0);
  CHECK(st.vertex_linking_components == 0);
  CHECK(validate_structure(s).ok);
  CHECK(is_weakly_neighborly(s));
  // quadrilateral rings alternate upper-sharing and lower-sharing edges
  for (const auto& f : s.facets) {
    if (!f.is_quad()) continue;
    for (int i = 0; i < 4; ++i) {
      const auto& a = s.verts[static_cast<std::size_t>(f.ring[static_cast<std::size_t>(i)])];
      const auto& b =
          s.verts[static_cast<std::size_t>(f.ring[static_cast<std::size_t>((i + 1) % 4)])];
      CHECK((a.upper == b.upper) != (a.lower == b.lower));
    }
  }
}

TEST_CASE("grid torus inside the cyclic polytope boundary") {
  const auto m = builtin("bdC4:3");
  const auto s = slice(m, make_partition(m, {1, 3, 5}));
  const auto st = stats(s);
  CHECK(st.n == 9);
  CHECK(st.e == 18);
  CHECK(st.t == 0);
  CHECK(st.q == 9);
  CHECK(st.chi == 0);
  CHECK(st.orientable);
  CHECK(st.genus == 1);
  CHECK(st.components == 1);
  CHECK(validate_structure(s).ok);
  CHECK(is_weakly_neighborly(s));

  SUBCASE("trace of an upper vertex is a cycle of length three") {
    const auto tr = trace(s, 1);
    CHECK(tr.upper_side);
    CHECK(tr.triangles.empty());
    CHECK(tr.edges.size() == 3);
    REQUIRE(tr.vertices.size() == 3);
    std::set<SlicingVertex> got;
    for (int idx : tr.vertices) got.insert(s.verts[static_cast<std::size_t>(idx)]);
    CHECK(got == std::set<SlicingVertex>{{1, 2}, {1, 4}, {1, 6}});
    CHECK(tr.isolated.empty());
  }
  SUBCASE("traces on one side are pairwise disjoint and cover the surface") {
    std::set<int> seen;
    for (Vertex x : {1, 3, 5}) {
      const auto tr = trace(s, x);
      for (int idx : tr.vertices) {
        CHECK(seen.count(idx) == 0);
        seen.insert(idx);
      }
    }
    CHECK(seen.size() == s.verts.size());
  }
  SUBCASE("lower-side trace") {
    const auto tr = trace(s, 2);
    CHECK_FALSE(tr.upper_side);
    CHECK(tr.edges.size() == 3);
    CHECK_THROWS_AS(trace(s, 42), std::invalid_argument);
  }
}

TEST_CASE("trace of a vertex figure") {
  const auto m = builtin("boundary-simplex:4");
  const auto s = slice(m, make_partition(m, {1}));
  const auto top = trace(s, 1);
  CHECK(top.triangles.size() == 4);
  CHECK(top.edges.size() == 6);
  CHECK(top.vertices.size() == 4);
  CHECK(top.isolated.empty());
  // on the other side each vertex sits alone in its trace
  const auto low = trace(s, 2);
  CHECK(low.triangles.empty());
  CHECK(low.edges.empty());
  REQUIRE(low.isolated.size() == 1);
  CHECK(s.verts[static_cast<std::size_t>(low.isolated[0])] == SlicingVertex{1, 2});
}

TEST_CASE("slicings of the shelled balls") {
  const auto c1 = builtin("C1");
  const auto s1 = slice(c1, make_partition(c1, {1, 2, 3, 4}));
  const auto st1 = stats(s1);
  CHECK(st1.t == 8);
  CHECK(st1.q == 4);
  CHECK(st1.chi == 2);
  CHECK(st1.genus == 0);
  CHECK(2 * st1.e == 3 * st1.t + 4 * st1.q);
  CHECK(validate_structure(s1).ok);

  const auto c2 = builtin("C2");
  const auto s2 = slice(c2, make_partition(c2, {1, 2, 3, 4}));
  const auto st2 = stats(s2);
  CHECK(st2.t == 8);
  CHECK(st2.q == 6);
  CHECK(st2.n == 12);
  CHECK(st2.e == 24);
  CHECK(st2.chi == 2);
  CHECK_FALSE(is_weakly_neighborly(s2));
  CHECK(validate_structure(s2).ok);
}

TEST_CASE("partitions that separate a boundary triangle are rejected") {
  const auto c1 = builtin("C1");
  CHECK_THROWS_AS(slice(c1, make_partition(c1, {1})), std::invalid_argument);
  const auto tet = SimplicialComplex::from_facets({{1, 2, 3, 4}});
  CHECK_THROWS_AS(slice(tet, make_partition(tet, {1})), std::invalid_argument);
}

TEST_CASE("only dimension three is supported") {
  const auto s2 = builtin("boundary-simplex:3");
  CHECK_THROWS_AS(slice(s2, make_partition(s2, {1})), std::invalid_argument);
}

TEST_CASE("stats rejects a surface with boundary") {
  const auto m = builtin("boundary-simplex:4");
  auto s = slice(m, make_partition(m, {1}));
  s.facets.pop_back();  // tear a hole
  CHECK_THROWS_AS(stats(s), std::invalid_argument);
}

TEST_CASE("structure validation flags a fabricated edge") {
  const auto m = builtin("bdC4:3");
  auto s = slice(m, make_partition(m, {1, 3, 5}));
  const int a = s.find_vertex(1, 2);
  const int b = s.find_vertex(3, 4);
  REQUIRE(a >= 0);
  REQUIRE(b >= 0);
  s.edges.push_back({std::min(a, b), std::max(a, b)});
  std::sort(s.edges.begin(), s.edges.end());
  const auto report = validate_structure(s);
  CHECK_FALSE(report.ok);
  CHECK_FALSE(report.violation.empty());
}

TEST_CASE("raw weak neighborliness") {
  CHECK(is_weakly_neighborly(4, {{0, 1, 2, 3}}));
  CHECK_FALSE(is_weakly_neighborly(5, {{0, 1, 2, 3}}));
  CHECK_FALSE(is_weakly_neighborly(6, {{0, 1, 2}, {3, 4, 5}}));
  // cross-check the slicing-level test against the definition
  for (const char* name : {"boundary-simplex:4", "bdC4:3"}) {
    const auto m = builtin(name);
    for (const std::vector<Vertex> v1 : {std::vector<Vertex>{1}, {1, 2}, {1, 3}}) {
      const auto s = slice(m, make_partition(m, v1));
      std::vector<std::vector<int>> rings;
      for (const auto& f : s.facets) {
        std::vector<int> ring(f.ring.begin(), f.ring.begin() + f.size);
        rings.push_back(std::move(ring));
      }
      CHECK(is_weakly_neighborly(s) == oracle::weakly_neighborly(s.verts.size(), rings));
    }
  }
}

TEST_CASE("genus from the vertex spans") {
  const auto m = builtin("bdC4:3");
  CHECK(genus_via_span(m, make_partition(m, {1, 3, 5})) == 1);
  const auto d4 = builtin("boundary-simplex:4");
  CHECK(genus_via_span(d4, make_partition(d4, {1})) == 0);
  CHECK(genus_via_span(d4, make_partition(d4, {1, 2})) == 0);
  // agreement with the surface genus on a bigger example
  const auto g10 = builtin("gruenbaum-sphere-10");
  const auto odd = make_partition(g10, {1, 3, 5, 7, 9});
  CHECK(genus_via_span(g10, odd) == 6);
  CHECK(stats(slice(g10, odd)).genus == 6);
}

TEST_CASE("genus via span requires a connected slicing") {
  const auto g10 = builtin("gruenbaum-sphere-10");
  // a missing edge gives a slicing with two vertex-figure components
  std::vector<Vertex> pair;
  for (Vertex a = 1; a <= 10 && pair.empty(); ++a)
    for (Vertex b = a + 1; b <= 10; ++b)
      if (!g10.has_face({a, b})) {
        pair = {a, b};
        break;
      }
  REQUIRE(pair.size() == 2);
  const auto p = make_partition(g10, pair);
  CHECK(stats(slice(g10, p)).components == 2);
  CHECK_THROWS_AS(genus_via_span(g10, p), std::invalid_argument);
  // non-manifold ambients are rejected too
  const auto pseudo = SimplicialComplex::from_facets(
      oracle::suspension(oracle::projective_plane_6(), 7, 8));
  CHECK_THROWS_AS(genus_via_span(pseudo, make_partition(pseudo, {7})), std::invalid_argument);
}

TEST_CASE("quadrilateral-only slicings versus vertex figures") {
  // zero quadrilaterals forces a disjoint union of vertex figures
  const auto d4 = builtin("boundary-simplex:4");
  for (unsigned mask = 1; mask < 31; ++mask) {
    std::vector<Vertex> v1;
    for (int i = 0; i < 5; ++i)
      if (mask & (1u << i)) v1.push_back(i + 1);
    const auto st = slice_stats(d4, v1);
    if (st.q == 0) CHECK(st.components == st.vertex_linking_components);
  }
}

TEST_CASE("stats are symmetric under swapping the parts") {
  for (const char* name : {"boundary-simplex:4", "bdC4:3", "C1"}) {
    const auto m = builtin(name);
    const std::vector<std::vector<Vertex>> parts =
        std::string(name) == "C1"
            ? std::vector<std::vector<Vertex>>{{1, 2, 3, 4}}
            : std::vector<std::vector<Vertex>>{{1}, {1, 2}, {1, 3}};
    for (const auto& v1 : parts) {
      const auto p = make_partition(m, v1);
      const auto a = stats(slice(m, p));
      const auto b = stats(slice(m, make_partition(m, p.v2)));
      CHECK(a.n == b.n);
      CHECK(a.e == b.e);
      CHECK(a.t == b.t);
      CHECK(a.q == b.q);
      CHECK(a.chi == b.chi);
      CHECK(a.orientable == b.orientable);
      CHECK(a.genus == b.genus);
      CHECK(a.components == b.components);
    }
  }
}

TEST_CASE("stats are invariant under relabeling the ambient complex") {
  const auto m = builtin("bdC4:3");
  const std::map<Vertex, Vertex> relabel = {{1, 9}, {2, 2}, {3, 11}, {4, 4}, {5, 7}, {6, 1}};
  std::vector<Face> mapped;
  for (Face f : m.facets()) {
    for (Vertex& v : f) v = relabel.at(v);
    std::sort(f.begin(), f.end());
    mapped.push_back(std::move(f));
  }
  const auto m2 = SimplicialComplex::from_facets(mapped);
  const auto a = stats(slice(m, make_partition(m, {1, 3, 5})));
  const auto b = stats(slice(m2, make_partition(m2, {9, 11, 7})));
  CHECK(a.n == b.n);
  CHECK(a.e == b.e);
  CHECK(a.t == b.t);
  CHECK(a.q == b.q);
  CHECK(a.chi == b.chi);
  CHECK(a.orientable == b.orientable);
  CHECK(a.genus == b.genus);
}

TEST_CASE("normal coordinates of a vertex figure") {
  const auto m = builtin("boundary-simplex:4");
  const auto s = slice(m, make_partition(m, {1}));
  const auto [coords, compat] = normal_coordinates(s);
  REQUIRE(compat.compatible);
  CHECK(compat.equations_checked == 3 * f_vector(m)[2]);
  REQUIRE(coords.per_tet.size() == 5);
  // vertex 1 is the smallest label, so its triangles cut off corner 0
  for (std::size_t i = 0; i + 1 < coords.per_tet.size(); ++i) {
    CHECK(coords.per_tet[i][0] == 1);
    for (int j = 1; j < 7; ++j) CHECK(coords.per_tet[i][static_cast<std::size_t>(j)] == 0);
  }
  for (int j = 0; j < 7; ++j) CHECK(coords.per_tet.back()[static_cast<std::size_t>(j)] == 0);
  CHECK(admissible_as_slicing(m, coords).admissible);
}

TEST_CASE("normal coordinates of the grid torus are pure quadrilaterals") {
  const auto m = builtin("bdC4:3");
  const auto s = slice(m, make_partition(m, {1, 3, 5}));
  const auto [coords, compat] = normal_coordinates(s);
  REQUIRE(compat.compatible);
  long long quads = 0;
  for (const auto& tet : coords.per_tet) {
    long long total = 0;
    for (int j = 0; j < 7; ++j) total += tet[static_cast<std::size_t>(j)];
    CHECK(total == 1);
    for (int j = 4; j < 7; ++j) quads += tet[static_cast<std::size_t>(j)];
  }
  CHECK(quads == 9);
  CHECK(admissible_as_slicing(m, coords).admissible);
}

TEST_CASE("sums of overlapping vertex figures are not admissible") {
  const auto m = builtin("boundary-simplex:4");
  const auto [c1, ok1] = normal_coordinates(slice(m, make_partition(m, {1})));
  const auto [c2, ok2] = normal_coordinates(slice(m, make_partition(m, {2})));
  REQUIRE(ok1.compatible);
  REQUIRE(ok2.compatible);
  const auto sum = add(c1, c2);
  const auto rep = admissible_as_slicing(m, sum);
  CHECK_FALSE(rep.admissible);
  CHECK_FALSE(rep.reason.empty());
}

TEST_CASE("admissibility rejects malformed coordinate vectors") {
  const auto m = builtin("boundary-simplex:4");
  NormalCoordinates wrong_size;
  wrong_size.per_tet.resize(3);
  CHECK_FALSE(admissible_as_slicing(m, wrong_size).admissible);
  NormalCoordinates negative;
  negative.per_tet.resize(5);
  negative.per_tet[0][4] = -1;
  CHECK_FALSE(admissible_as_slicing(m, negative).admissible);
  // a single quadrilateral in one tetrahedron has unmatched arcs
  NormalCoordinates lonely;
  lonely.per_tet.resize(5);
  lonely.per_tet[0][4] = 1;
  CHECK_FALSE(admissible_as_slicing(m, lonely).admissible);
}
