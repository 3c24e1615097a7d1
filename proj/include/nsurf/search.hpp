#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsurf/bounds.hpp"
#include "nsurf/permutation.hpp"
#include "nsurf/slicing.hpp"

namespace nsurf {

// Enumeration request over the vertex bipartitions of one complex.  The
// canonical representative of {V1, V2} puts the smallest vertex into V1.
// Complexes with more than 24 vertices must fix part_sizes (the full search
// space doubles per vertex); 63 vertices is the hard bitmask limit.
struct SearchSpec {
  const SimplicialComplex* complex = nullptr;
  std::optional<std::pair<int, int>> part_sizes;  // unordered {|V1|, |V2|}
  bool connected_only = false;
  bool wn_only = false;
  std::optional<std::pair<Rational, Rational>> genus_range;     // inclusive
  std::optional<std::pair<long long, long long>> quad_range;    // inclusive
  std::vector<Permutation> symmetry;  // vertex symmetries; orbit representatives only
  int jobs = 1;
};

// Combinatorial type of a slicing, for classification summaries.
struct TypeSignature {
  long long n = 0, e = 0, t = 0, q = 0, chi = 0;
  bool orientable = false;
  auto operator<=>(const TypeSignature&) const = default;
};

TypeSignature type_of(const SlicingStats& st);

struct SearchRow {
  std::vector<Vertex> v1;
  SlicingStats stats;
  bool weakly_neighborly = false;
  std::size_t orbit_size = 1;    // partitions represented by this row
  std::string bound_digest;      // per-bound verdict codes, fixed order
};

struct SearchResult {
  std::vector<SearchRow> rows;   // sorted by V1 label sequence

  // Distinct (signature, multiplicity) pairs, counting orbit sizes.
  std::vector<std::pair<TypeSignature, std::size_t>> type_summary() const;
};

// Deterministic: output is a pure function of the spec, independent of jobs.
SearchResult enumerate_slicings(const SearchSpec& spec);

// Same search restricted to weakly neighborly slicings.
SearchResult find_weakly_neighborly(SearchSpec spec);

// One row of a genus/quad table over a fixed family of partitions.
struct ExtremalRow {
  std::vector<Vertex> v1;
  SlicingStats stats;
  std::optional<long long> span_dim1_part;  // |V_i| for a 1-dimensional span(V_i), if any
  Verdict quadrangulated;                   // verdict of the quadrangulated bound
};

std::vector<ExtremalRow> extremal_rows(const SimplicialComplex& m,
                                       const std::vector<std::vector<Vertex>>& parts);

// Published table values for the builtin slicing families.  Fixed data:
// recomputation must never overwrite these, only be compared against them.
struct ReferenceRow {
  long long genus_num = 0;  // published genus (integer in the references)
  long long n = 0;          // published |V_i| column
  long long q = 0;          // published quadrilateral count
};

struct ReferenceFamily {
  std::string complex_name;
  std::vector<std::vector<Vertex>> parts;
  std::vector<ReferenceRow> rows;
};

const ReferenceFamily* reference_family(std::string_view builtin_name);

}  // namespace nsurf
