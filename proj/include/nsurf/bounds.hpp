#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nsurf/slicing.hpp"

namespace nsurf {

enum class Verdict { Holds, Equality, Violated, PreconditionUnmet };

std::string_view to_string(Verdict v);

// One checked inequality or identity.  lhs and rhs are the two sides as
// evaluated; Equality refines Holds.  When preconditions fail the record
// carries the reason instead of a verdict.
struct CheckRecord {
  std::string name;
  bool applicable = true;
  std::string reason;
  Rational lhs;
  Rational rhs;
  Verdict verdict = Verdict::PreconditionUnmet;

  bool violated() const { return verdict == Verdict::Violated; }
};

struct BoundReport {
  std::vector<CheckRecord> records;

  bool any_violated() const;
  const CheckRecord* find(std::string_view name) const;
};

// Facts about the ambient complex that every check needs; computing them
// once per complex keeps enumeration over all partitions cheap.
struct AmbientProfile {
  FVector f;
  ManifoldReport manifold;
  bool connected = false;
  bool orientable_known = false;
  bool orientable = false;
  bool two_neighborly = false;
};

AmbientProfile profile_ambient(const SimplicialComplex& m);

// genus-upper: a slicing of a closed orientable combinatorial 3-manifold is
// a Heegaard-like splitting surface, so g <= binom(n-1, 2) with
// n = floor(f0 / 2).  Needs a connected slicing.
CheckRecord check_genus_upper(const SimplicialComplex& m, const VertexPartition& p,
                              const Slicing& s);

// kalelkar: g <= 7q/2 for a closed connected orientable normal surface.
CheckRecord check_kalelkar(const SlicingStats& st);
CheckRecord check_kalelkar(const Slicing& s);

// main-bound: q >= 4g + (3/2) n - (4 + 2 c^2) for slicings of 2-neighborly
// closed combinatorial 3-manifolds, with n the ambient vertex count and
// c the partition imbalance.
CheckRecord check_main_bound(const SimplicialComplex& m, const VertexPartition& p,
                             const Slicing& s);

// quadrangulated-bound: q >= 3 (n + g - 1) when some span(V_i) is
// 1-dimensional, with n = |V_i|; the larger applicable right-hand side wins.
// Needs a connected slicing.
CheckRecord check_quadrangulated_bound(const SimplicialComplex& m,
                                       const VertexPartition& p, const Slicing& s);

// conjecture: q >= 3 - (3/2) chi for every slicing.  A violation here would
// be a counterexample, so it is reported, never thrown.
CheckRecord check_conjecture(const SlicingStats& st);
CheckRecord check_conjecture(const Slicing& s);

// Weak neighborliness, four equivalent formulations evaluated independently:
//   wn-edges      e  <= binom(n,2) - 2q
//   wn-vertices   (2n - 7)^2 >= 49 + 8q - 24 chi
//   wn-quads      q  <= binom(n,2) - 3(n - chi)
//   wn-agreement  the definition and the three identities agree
// plus, when the slicing is weakly neighborly:
//   wn-span-boundary   n1 n2 (15 - n1 n2 - n1 - n2) == 12 chi, where n_i
//                      counts the V_i vertices meeting a cut edge.
std::vector<CheckRecord> check_wn_conditions(const SimplicialComplex& m,
                                             const VertexPartition& p, const Slicing& s);

// heawood-quadrangulation: (2n - 9)^2 >= 81 - 32 chi for closed slicings
// with t == 0 (a quadrangulation analogue of the Heawood inequality).
CheckRecord check_heawood_quadrangulation(const SlicingStats& st);

// Runs every check above plus two sanity inequalities (n <= |V1||V2|,
// t + q <= f3).  The precomputed ambient profile is optional.
BoundReport evaluate_all(const SimplicialComplex& m, const VertexPartition& p,
                         const Slicing& s, const AmbientProfile* profile = nullptr);

}  // namespace nsurf
