#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "nsurf/bounds.hpp"
#include "nsurf/builders.hpp"

using namespace nsurf;

namespace {

BoundReport evaluate(const SimplicialComplex& m, std::vector<Vertex> v1) {
  const auto p = make_partition(m, std::move(v1));
  return evaluate_all(m, p, slice(m, p));
}

const CheckRecord& get(const BoundReport& r, std::string_view name) {
  const auto* rec = r.find(name);
  REQUIRE(rec != nullptr);
  return *rec;
}

}  // namespace

TEST_CASE("every record is internally consistent") {
  const auto m = builtin("bdC4:4");
  for (const std::vector<Vertex> v1 :
       {std::vector<Vertex>{1}, {1, 2}, {1, 3, 5, 7}, {1, 2, 3}}) {
    const auto report = evaluate(m, v1);
    for (const auto& rec : report.records) {
      if (!rec.applicable) {
        CHECK(rec.verdict == Verdict::PreconditionUnmet);
        CHECK_FALSE(rec.reason.empty());
        continue;
      }
      CHECK(rec.reason.empty());
      if (rec.verdict == Verdict::Equality) CHECK(rec.lhs == rec.rhs);
      if (rec.verdict != Verdict::Equality) CHECK(rec.lhs != rec.rhs);
    }
  }
}

TEST_CASE("grid torus meets several bounds with equality") {
  const auto report = evaluate(builtin("bdC4:3"), {1, 3, 5});
  CHECK_FALSE(report.any_violated());
  const auto& gu = get(report, "genus-upper");
  CHECK(gu.verdict == Verdict::Equality);
  CHECK(gu.lhs == 1);
  CHECK(gu.rhs == 1);
  const auto& mb = get(report, "main-bound");
  CHECK(mb.verdict == Verdict::Equality);
  CHECK(mb.lhs == 9);
  CHECK(mb.rhs == 9);
  const auto& qb = get(report, "quadrangulated");
  CHECK(qb.verdict == Verdict::Equality);
  CHECK(qb.rhs == 9);
  const auto& ka = get(report, "kalelkar");
  CHECK(ka.verdict == Verdict::Holds);
  CHECK(ka.rhs == Rational(63, 2));
  const auto& cj = get(report, "conjecture");
  CHECK(cj.verdict == Verdict::Holds);
  CHECK(cj.rhs == 3);
  const auto& hw = get(report, "heawood-quadrangulation");
  CHECK(hw.verdict == Verdict::Equality);
  CHECK(hw.lhs == 81);
  CHECK(hw.rhs == 81);
  for (const char* name : {"wn-edges", "wn-vertices", "wn-quads", "wn-agreement"})
    CHECK(get(report, name).verdict == Verdict::Equality);
  const auto& sb = get(report, "wn-span-boundary");
  CHECK(sb.verdict == Verdict::Equality);
  CHECK(sb.lhs == 0);
  CHECK(sb.rhs == 0);
}

TEST_CASE("vertex figure of the 4-simplex boundary") {
  const auto report = evaluate(builtin("boundary-simplex:4"), {1});
  CHECK_FALSE(report.any_violated());
  const auto& gu = get(report, "genus-upper");
  CHECK(gu.verdict == Verdict::Equality);  // 0 <= 0
  CHECK(gu.rhs == 0);
  const auto& ka = get(report, "kalelkar");
  CHECK(ka.verdict == Verdict::Equality);  // 0 <= 0
  const auto& mb = get(report, "main-bound");
  CHECK(mb.verdict == Verdict::Holds);
  CHECK(mb.rhs == Rational(-1));  // 4*0 + 15/2 - (4 + 2*(9/4))
  const auto& qb = get(report, "quadrangulated");
  CHECK(qb.verdict == Verdict::Equality);  // 0 >= 3(1 + 0 - 1)
  const auto& cj = get(report, "conjecture");
  CHECK(cj.verdict == Verdict::Equality);  // 0 >= 3 - 3 = 0
  CHECK(get(report, "heawood-quadrangulation").verdict == Verdict::PreconditionUnmet);
  const auto& sb = get(report, "wn-span-boundary");
  CHECK(sb.verdict == Verdict::Equality);
  CHECK(sb.lhs == 24);  // 1*4*(15 - 4 - 1 - 4)
  CHECK(sb.rhs == 24);
}

TEST_CASE("prism slicing satisfies the main bound with equality") {
  const auto report = evaluate(builtin("boundary-simplex:4"), {1, 2});
  const auto& mb = get(report, "main-bound");
  CHECK(mb.verdict == Verdict::Equality);
  CHECK(mb.lhs == 3);
  CHECK(mb.rhs == 3);  // 0 + 15/2 - (4 + 1/2)
  const auto& sb = get(report, "wn-span-boundary");
  CHECK(sb.verdict == Verdict::Equality);
  CHECK(sb.lhs == 24);  // 2*3*(15 - 6 - 2 - 3)
}

TEST_CASE("bounds on a slicing of a ball") {
  const auto report = evaluate(builtin("C2"), {1, 2, 3, 4});
  const auto& gu = get(report, "genus-upper");
  CHECK_FALSE(gu.applicable);  // ambient is not closed
  const auto& mb = get(report, "main-bound");
  CHECK_FALSE(mb.applicable);
  const auto& we = get(report, "wn-edges");
  CHECK(we.applicable);
  CHECK(we.verdict == Verdict::Holds);  // 24 < 66 - 12
  const auto& ag = get(report, "wn-agreement");
  CHECK(ag.verdict == Verdict::Equality);  // not weakly neighborly, all three strict
  CHECK(ag.lhs == 0);
  CHECK(get(report, "wn-span-boundary").applicable == false);
}

TEST_CASE("non two-neighborly ambients leave the main bound inapplicable") {
  const auto g10 = builtin("gruenbaum-sphere-10");
  const auto report = evaluate(g10, {1, 3, 5, 7, 9});
  const auto& mb = get(report, "main-bound");
  CHECK_FALSE(mb.applicable);
  CHECK(mb.reason.find("2-neighborly") != std::string::npos);
  // while the quadrangulated bound is tight there
  const auto& qb = get(report, "quadrangulated");
  CHECK(qb.verdict == Verdict::Equality);
  CHECK(qb.lhs == 30);
  CHECK(qb.rhs == 30);  // 3 (5 + 6 - 1)
  const auto& gu = get(report, "genus-upper");
  CHECK(gu.verdict == Verdict::Equality);  // 6 == binom(4, 2)
  CHECK(gu.rhs == 6);
}

TEST_CASE("kalelkar bound applies only to orientable slicings") {
  const auto m = builtin("s2xs1-15");
  const auto p = make_partition(m, {1, 4, 7});
  const auto s = slice(m, p);
  const auto st = stats(s);
  const auto rec = check_kalelkar(s);
  CHECK(rec.applicable == st.orientable);
  if (rec.applicable) CHECK(rec.verdict != Verdict::Violated);
}

TEST_CASE("quadrangulated bound picks the larger qualifying side") {
  // both spans of the odd/even split of the 10-vertex sphere are
  // 1-dimensional with five vertices each
  const auto g10 = builtin("gruenbaum-sphere-10");
  const auto rec = check_quadrangulated_bound(
      g10, make_partition(g10, {1, 3, 5, 7, 9}),
      slice(g10, make_partition(g10, {1, 3, 5, 7, 9})));
  CHECK(rec.applicable);
  CHECK(rec.rhs == 30);
  // here only the singleton side qualifies: span of four vertices of the
  // 4-simplex boundary contains a triangle
  const auto d4 = builtin("boundary-simplex:4");
  const auto rec2 = check_quadrangulated_bound(d4, make_partition(d4, {1}),
                                               slice(d4, make_partition(d4, {1})));
  CHECK(rec2.applicable);
  CHECK(rec2.rhs == 0);  // n = 1, g = 0
  // and here neither side qualifies
  const auto c2 = builtin("C2");
  const auto rec3 = check_quadrangulated_bound(c2, make_partition(c2, {1, 2, 3, 4}),
                                               slice(c2, make_partition(c2, {1, 2, 3, 4})));
  CHECK_FALSE(rec3.applicable);
}

TEST_CASE("heawood quadrangulation inequality flags impossible stats") {
  SlicingStats pillow;
  pillow.n = 4;
  pillow.e = 4;
  pillow.t = 0;
  pillow.q = 2;
  pillow.chi = 2;
  const auto rec = check_heawood_quadrangulation(pillow);
  CHECK(rec.applicable);
  CHECK(rec.verdict == Verdict::Violated);  // (2n-9)^2 = 1 < 81 - 64
  SlicingStats with_triangles;
  with_triangles.t = 1;
  CHECK_FALSE(check_heawood_quadrangulation(with_triangles).applicable);
}

TEST_CASE("conjectured bound never fails on the builtin families") {
  for (const char* name : {"boundary-simplex:4", "bdC4:3", "bdC4:4"}) {
    const auto m = builtin(name);
    const int n = static_cast<int>(m.vertices().size());
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
      std::vector<Vertex> v1;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) v1.push_back(m.vertices()[static_cast<std::size_t>(i)]);
      const auto s = slice(m, make_partition(m, v1));
      CHECK(check_conjecture(s).verdict != Verdict::Violated);
    }
  }
}

TEST_CASE("ambient profiles") {
  const auto p1 = profile_ambient(builtin("bdC4:4"));
  CHECK(p1.manifold.closed);
  CHECK(p1.two_neighborly);
  CHECK(p1.orientable_known);
  CHECK(p1.orientable);
  const auto p2 = profile_ambient(builtin("gruenbaum-sphere-10"));
  CHECK(p2.manifold.closed);
  CHECK_FALSE(p2.two_neighborly);
  const auto p3 = profile_ambient(builtin("C1"));
  CHECK_FALSE(p3.manifold.closed);
  CHECK(p3.manifold.bounded_manifold);
}

TEST_CASE("sanity records cover vertex capacity and the tetrahedron budget") {
  const auto report = evaluate(builtin("bdC4:3"), {1, 3, 5});
  const auto& vc = get(report, "vertex-capacity");
  CHECK(vc.verdict == Verdict::Equality);  // 9 == 3 * 3 on a 2-neighborly ambient
  const auto& tb = get(report, "tet-budget");
  CHECK(tb.verdict == Verdict::Equality);  // every tetrahedron is mixed
  const auto report2 = evaluate(builtin("gruenbaum-sphere-10"), {1});
  CHECK(get(report2, "vertex-capacity").lhs < get(report2, "vertex-capacity").rhs);
}
