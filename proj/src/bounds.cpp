#include "nsurf/bounds.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace nsurf {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Equality: return "equality";
    case Verdict::Violated: return "violated";
    case Verdict::PreconditionUnmet: return "precondition-unmet";
  }
  return "?";
}

bool BoundReport::any_violated() const {
  return std::any_of(records.begin(), records.end(),
                     [](const CheckRecord& r) { return r.violated(); });
}

const CheckRecord* BoundReport::find(std::string_view name) const {
  for (const CheckRecord& r : records)
    if (r.name == name) return &r;
  return nullptr;
}

namespace {

enum class Direction { AtMost, AtLeast };

CheckRecord compared(std::string name, Rational lhs, Rational rhs, Direction dir) {
  CheckRecord r;
  r.name = std::move(name);
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  if (r.lhs == r.rhs)
    r.verdict = Verdict::Equality;
  else if (dir == Direction::AtMost ? r.lhs < r.rhs : r.lhs > r.rhs)
    r.verdict = Verdict::Holds;
  else
    r.verdict = Verdict::Violated;
  return r;
}

CheckRecord unmet(std::string name, std::string reason) {
  CheckRecord r;
  r.name = std::move(name);
  r.applicable = false;
  r.reason = std::move(reason);
  r.verdict = Verdict::PreconditionUnmet;
  return r;
}

bool closed_manifold(const AmbientProfile& pr) {
  return pr.manifold.verdict == ManifoldVerdict::Yes && pr.manifold.closed;
}

CheckRecord genus_upper_impl(const AmbientProfile& pr, const SlicingStats& st) {
  const char* name = "genus-upper";
  if (!closed_manifold(pr)) return unmet(name, "ambient is not a closed combinatorial 3-manifold");
  if (!pr.connected) return unmet(name, "ambient is not connected");
  if (!pr.orientable_known || !pr.orientable) return unmet(name, "ambient is not orientable");
  if (st.components != 1) return unmet(name, "slicing is not connected");
  const long long half = pr.f[0] / 2;  // vertex count is 2*half or 2*half + 1
  return compared(name, st.genus, Rational(binom(half - 1, 2)), Direction::AtMost);
}

CheckRecord kalelkar_impl(const SlicingStats& st) {
  const char* name = "kalelkar";
  if (st.components != 1) return unmet(name, "slicing is not connected");
  if (!st.orientable) return unmet(name, "slicing is not orientable");
  return compared(name, st.genus, Rational(7 * st.q, 2), Direction::AtMost);
}

CheckRecord main_bound_impl(const AmbientProfile& pr, const VertexPartition& p,
                            const SlicingStats& st) {
  const char* name = "main-bound";
  if (!closed_manifold(pr)) return unmet(name, "ambient is not a closed combinatorial 3-manifold");
  if (!pr.two_neighborly) return unmet(name, "ambient is not 2-neighborly");
  const Rational c = p.imbalance();
  const Rational rhs = 4 * st.genus + Rational(3 * pr.f[0], 2) - (4 + 2 * c * c);
  return compared(name, Rational(st.q), rhs, Direction::AtLeast);
}

CheckRecord quadrangulated_impl(const SimplicialComplex& m, const VertexPartition& p,
                                const SlicingStats& st) {
  const char* name = "quadrangulated";
  if (st.components != 1) return unmet(name, "slicing is not connected");
  // a part qualifies when its span has no triangle; the stronger bound
  // (larger right-hand side, i.e. the larger qualifying part) is reported
  long long n = -1;
  for (const auto& part : {p.v1, p.v2}) {
    if (span(m, part).dimension() > 1) continue;
    n = std::max(n, static_cast<long long>(part.size()));
  }
  if (n < 0) return unmet(name, "both spans contain a triangle");
  return compared(name, Rational(st.q), 3 * (n + st.genus - 1), Direction::AtLeast);
}

CheckRecord conjecture_impl(const SlicingStats& st) {
  return compared("conjecture", Rational(st.q), 3 - Rational(3 * st.chi, 2), Direction::AtLeast);
}

CheckRecord heawood_impl(const SlicingStats& st) {
  const char* name = "heawood-quadrangulation";
  if (st.t != 0) return unmet(name, "slicing has triangles");
  if (st.n == 0) return unmet(name, "slicing is empty");
  // n >= (9 + sqrt(81 - 32 chi)) / 2, compared exactly via squares
  CheckRecord r = compared(name, Rational((2 * st.n - 9) * (2 * st.n - 9)),
                           Rational(81 - 32 * st.chi), Direction::AtLeast);
  if (2 * st.n - 9 < 0 && r.verdict != Verdict::Violated) r.verdict = Verdict::Violated;
  return r;
}

// the four weak-neighborliness conditions and the boundary-product identity
std::vector<CheckRecord> wn_impl(const Slicing& s, const SlicingStats& st) {
  std::vector<CheckRecord> out;
  const bool wn = is_weakly_neighborly(s);
  const long long n = st.n, q = st.q, chi = st.chi;
  out.push_back(compared("wn-edges", Rational(st.e), Rational(binom(n, 2) - 2 * q),
                         Direction::AtMost));
  out.push_back(compared("wn-vertices", Rational((2 * n - 7) * (2 * n - 7)),
                         Rational(49 + 8 * q - 24 * chi), Direction::AtLeast));
  out.push_back(compared("wn-quads", Rational(q), Rational(binom(n - 3, 2) + 3 * chi - 6),
                         Direction::AtMost));

  // the definition and the three identities must agree: all four or none
  const bool b = out[0].verdict == Verdict::Equality;
  const bool c = out[1].verdict == Verdict::Equality;
  const bool d = out[2].verdict == Verdict::Equality;
  // the definition versus the three equality characterizations
  CheckRecord agree;
  agree.name = "wn-agreement";
  agree.lhs = Rational((wn ? 1 : 0) + (b ? 1 : 0) + (c ? 1 : 0) + (d ? 1 : 0));
  agree.rhs = Rational(wn ? 4 : 0);
  agree.verdict = agree.lhs == agree.rhs ? Verdict::Equality : Verdict::Violated;
  out.push_back(std::move(agree));

  if (!wn) {
    out.push_back(unmet("wn-span-boundary", "slicing is not weakly neighborly"));
  } else {
    std::set<Vertex> uppers, lowers;
    for (const SlicingVertex& v : s.verts) {
      uppers.insert(v.upper);
      lowers.insert(v.lower);
    }
    const long long n1 = static_cast<long long>(uppers.size());
    const long long n2 = static_cast<long long>(lowers.size());
    CheckRecord r = compared("wn-span-boundary", Rational(n1 * n2 * (15 - n1 * n2 - n1 - n2)),
                             Rational(12 * chi), Direction::AtMost);
    if (r.verdict != Verdict::Equality) r.verdict = Verdict::Violated;  // it is an identity
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

AmbientProfile profile_ambient(const SimplicialComplex& m) {
  AmbientProfile pr;
  pr.f = f_vector(m);
  pr.manifold = is_combinatorial_3_manifold(m);
  pr.connected = is_connected(m);
  pr.two_neighborly = is_k_neighborly(m, 2);
  if (pr.manifold.closed && pr.manifold.verdict != ManifoldVerdict::No) {
    try {
      pr.orientable = orientability(m) == Orientability::Orientable;
      pr.orientable_known = true;
    } catch (const std::invalid_argument&) {
      pr.orientable_known = false;
    }
  }
  return pr;
}

CheckRecord check_genus_upper(const SimplicialComplex& m, const VertexPartition& p,
                              const Slicing& s) {
  (void)p;
  return genus_upper_impl(profile_ambient(m), stats(s));
}

CheckRecord check_kalelkar(const SlicingStats& st) { return kalelkar_impl(st); }
CheckRecord check_kalelkar(const Slicing& s) { return kalelkar_impl(stats(s)); }

CheckRecord check_main_bound(const SimplicialComplex& m, const VertexPartition& p,
                             const Slicing& s) {
  return main_bound_impl(profile_ambient(m), p, stats(s));
}

CheckRecord check_quadrangulated_bound(const SimplicialComplex& m, const VertexPartition& p,
                                       const Slicing& s) {
  return quadrangulated_impl(m, p, stats(s));
}

CheckRecord check_conjecture(const SlicingStats& st) { return conjecture_impl(st); }
CheckRecord check_conjecture(const Slicing& s) { return conjecture_impl(stats(s)); }

CheckRecord check_heawood_quadrangulation(const SlicingStats& st) { return heawood_impl(st); }

std::vector<CheckRecord> check_wn_conditions(const SimplicialComplex& m, const VertexPartition& p,
                                             const Slicing& s) {
  (void)m;
  (void)p;
  return wn_impl(s, stats(s));
}

BoundReport evaluate_all(const SimplicialComplex& m, const VertexPartition& p, const Slicing& s,
                         const AmbientProfile* profile) {
  AmbientProfile local;
  if (!profile) {
    local = profile_ambient(m);
    profile = &local;
  }
  const SlicingStats st = stats(s);

  BoundReport report;
  report.records.push_back(compared(
      "vertex-capacity", Rational(st.n),
      Rational(static_cast<long long>(p.v1.size()) * static_cast<long long>(p.v2.size())),
      Direction::AtMost));
  report.records.push_back(
      compared("tet-budget", Rational(st.t + st.q), Rational(profile->f[3]), Direction::AtMost));
  report.records.push_back(genus_upper_impl(*profile, st));
  report.records.push_back(kalelkar_impl(st));
  report.records.push_back(main_bound_impl(*profile, p, st));
  report.records.push_back(quadrangulated_impl(m, p, st));
  report.records.push_back(conjecture_impl(st));
  report.records.push_back(heawood_impl(st));
  for (CheckRecord& r : wn_impl(s, st)) report.records.push_back(std::move(r));
  return report;
}

}  // namespace nsurf
