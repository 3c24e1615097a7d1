#include "nsurf/search.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <stdexcept>
#include <thread>

namespace nsurf {

TypeSignature type_of(const SlicingStats& st) {
  return {st.n, st.e, st.t, st.q, st.chi, st.orientable};
}

std::vector<std::pair<TypeSignature, std::size_t>> SearchResult::type_summary() const {
  std::map<TypeSignature, std::size_t> counts;
  for (const SearchRow& row : rows) counts[type_of(row.stats)] += row.orbit_size;
  return {counts.begin(), counts.end()};
}

namespace {

const char* verdict_code(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "ho";
    case Verdict::Equality: return "eq";
    case Verdict::Violated: return "VI";
    case Verdict::PreconditionUnmet: return "na";
  }
  return "??";
}

std::string digest_of(const BoundReport& report) {
  static const std::pair<const char*, const char*> columns[] = {
      {"genus-upper", "gu"}, {"kalelkar", "ka"}, {"main-bound", "mb"},
      {"quadrangulated", "qb"}, {"conjecture", "cj"}};
  std::string digest;
  for (const auto& [name, code] : columns) {
    const CheckRecord* r = report.find(name);
    if (!digest.empty()) digest += ",";
    digest += std::string(code) + "=" + (r ? verdict_code(r->verdict) : "??");
  }
  return digest;
}

// partition masks over vertex indices; bit 0 is the smallest vertex
struct MaskContext {
  const SimplicialComplex* m = nullptr;
  std::vector<Vertex> vertices;
  std::vector<std::vector<int>> group;      // index permutations, identity included
  std::vector<Face> boundary;               // boundary triangles as index triples
  AmbientProfile profile;
};

std::uint64_t normalize(std::uint64_t mask, std::uint64_t full) {
  return (mask & 1) ? mask : (~mask & full);
}

std::uint64_t apply_perm(const std::vector<int>& perm, std::uint64_t mask) {
  std::uint64_t image = 0;
  while (mask) {
    const int i = std::countr_zero(mask);
    mask &= mask - 1;
    image |= std::uint64_t{1} << perm[static_cast<std::size_t>(i)];
  }
  return image;
}

// smallest mask in the orbit of the (unordered) partition, and the orbit size
std::pair<std::uint64_t, std::size_t> canonical(const MaskContext& ctx, std::uint64_t mask,
                                                std::uint64_t full) {
  if (ctx.group.empty()) return {mask, 1};
  std::set<std::uint64_t> images;
  for (const auto& perm : ctx.group) images.insert(normalize(apply_perm(perm, mask), full));
  return {*images.begin(), images.size()};
}

bool splits_boundary(const MaskContext& ctx, std::uint64_t mask) {
  for (const Face& tri : ctx.boundary) {
    int inside = 0;
    for (Vertex i : tri) inside += (mask >> i) & 1;
    if (inside != 0 && inside != 3) return true;
  }
  return false;
}

bool process_mask(const MaskContext& ctx, const SearchSpec& spec, std::uint64_t mask,
                  std::uint64_t full, SearchRow* out) {
  const int n = static_cast<int>(ctx.vertices.size());
  if (spec.part_sizes) {
    const int a = std::popcount(mask);
    const auto [s1, s2] = *spec.part_sizes;
    if (!((a == s1 && n - a == s2) || (a == s2 && n - a == s1))) return false;
  }
  const auto [canon, orbit_size] = canonical(ctx, mask, full);
  if (canon != mask) return false;
  if (splits_boundary(ctx, mask)) return false;

  VertexPartition p;
  for (int i = 0; i < n; ++i)
    ((mask >> i) & 1 ? p.v1 : p.v2).push_back(ctx.vertices[static_cast<std::size_t>(i)]);

  const Slicing s = slice(*ctx.m, p);
  const SlicingStats st = stats(s);
  if (spec.connected_only && st.components != 1) return false;
  if (spec.genus_range && (st.genus < spec.genus_range->first || st.genus > spec.genus_range->second))
    return false;
  if (spec.quad_range && (st.q < spec.quad_range->first || st.q > spec.quad_range->second))
    return false;
  const bool wn = is_weakly_neighborly(s);
  if (spec.wn_only && !wn) return false;

  out->v1 = p.v1;
  out->stats = st;
  out->weakly_neighborly = wn;
  out->orbit_size = orbit_size;
  out->bound_digest = digest_of(evaluate_all(*ctx.m, p, s, &ctx.profile));
  return true;
}

}  // namespace

SearchResult enumerate_slicings(const SearchSpec& spec) {
  if (!spec.complex) throw std::invalid_argument("search needs a complex");
  const SimplicialComplex& m = *spec.complex;
  if (m.dimension() != 3) throw std::invalid_argument("search needs a 3-dimensional complex");

  MaskContext ctx;
  ctx.m = &m;
  ctx.vertices = m.vertices();
  const int n = static_cast<int>(ctx.vertices.size());
  if (n < 2) throw std::invalid_argument("search needs at least two vertices");
  if (n > 63) throw std::invalid_argument("more than 63 vertices cannot be enumerated");
  if (n > 24 && !spec.part_sizes)
    throw std::invalid_argument("full enumeration beyond 24 vertices needs fixed part sizes");
  if (spec.part_sizes) {
    const auto [s1, s2] = *spec.part_sizes;
    if (s1 < 1 || s2 < 1 || s1 + s2 != n)
      throw std::invalid_argument("part sizes must be positive and sum to the vertex count");
  }

  if (!spec.symmetry.empty()) {
    int degree = 0;
    for (const Permutation& g : spec.symmetry) degree = std::max(degree, g.degree());
    degree = std::max(degree, ctx.vertices.back());
    std::vector<Permutation> gens;
    for (const Permutation& g : spec.symmetry) gens.push_back(g.extended(degree));
    for (const Permutation& g : generate_group(gens)) {
      std::vector<int> perm(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) {
        const Vertex image = g(ctx.vertices[static_cast<std::size_t>(i)]);
        const auto it = std::lower_bound(ctx.vertices.begin(), ctx.vertices.end(), image);
        if (it == ctx.vertices.end() || *it != image)
          throw std::invalid_argument("symmetry generator does not preserve the vertex set");
        perm[static_cast<std::size_t>(i)] = static_cast<int>(it - ctx.vertices.begin());
      }
      ctx.group.push_back(std::move(perm));
    }
  }

  // boundary triangles as index triples, for the mixed-boundary skip
  for (const Face& tri : boundary_ridges(m)) {
    Face idx;
    for (Vertex v : tri) {
      const auto it = std::lower_bound(ctx.vertices.begin(), ctx.vertices.end(), v);
      idx.push_back(static_cast<int>(it - ctx.vertices.begin()));
    }
    ctx.boundary.push_back(std::move(idx));
  }
  ctx.profile = profile_ambient(m);

  const std::uint64_t full = (n == 63) ? ~std::uint64_t{0} >> 1 : (std::uint64_t{1} << n) - 1;
  const int jobs = std::clamp(spec.jobs, 1, 256);

  // candidate masks: smallest vertex in V1, V2 nonempty
  std::vector<std::vector<SearchRow>> parts(static_cast<std::size_t>(jobs));
  auto worker = [&](int which) {
    std::uint64_t index = 0;
    for (std::uint64_t mask = 1; mask < full; mask += 2, ++index) {
      if (static_cast<int>(index % static_cast<std::uint64_t>(jobs)) != which) continue;
      SearchRow row;
      if (process_mask(ctx, spec, mask, full, &row))
        parts[static_cast<std::size_t>(which)].push_back(std::move(row));
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (std::thread& t : threads) t.join();
  }

  SearchResult result;
  for (auto& part : parts)
    for (SearchRow& row : part) result.rows.push_back(std::move(row));
  std::sort(result.rows.begin(), result.rows.end(),
            [](const SearchRow& a, const SearchRow& b) { return a.v1 < b.v1; });
  return result;
}

SearchResult find_weakly_neighborly(SearchSpec spec) {
  spec.wn_only = true;
  return enumerate_slicings(spec);
}

std::vector<ExtremalRow> extremal_rows(const SimplicialComplex& m,
                                       const std::vector<std::vector<Vertex>>& parts) {
  std::vector<ExtremalRow> rows;
  for (const auto& v1 : parts) {
    const VertexPartition p = make_partition(m, v1);
    const Slicing s = slice(m, p);
    ExtremalRow row;
    row.v1 = p.v1;
    row.stats = stats(s);
    long long best = -1;
    for (const auto& part : {p.v1, p.v2}) {
      if (span(m, part).dimension() > 1) continue;
      best = std::max(best, static_cast<long long>(part.size()));
    }
    if (best >= 0) row.span_dim1_part = best;
    row.quadrangulated = check_quadrangulated_bound(m, p, s).verdict;
    rows.push_back(std::move(row));
  }
  return rows;
}

const ReferenceFamily* reference_family(std::string_view builtin_name) {
  // Published family tables; the computed rows are diffed against these and
  // any disagreement is flagged, never patched over.
  static const ReferenceFamily ten_vertex{
      "gruenbaum-sphere-10",
      {{1}, {1, 3}, {1, 3, 5}, {1, 3, 5, 7}, {1, 3, 5, 7, 9}},
      {{0, 1, 0}, {0, 2, 3}, {1, 3, 9}, {4, 3, 18}, {5, 6, 30}},
  };
  static const ReferenceFamily fifteen_vertex{
      "s2xs1-15",
      {{1, 4, 7}, {1, 4, 7, 10}, {1, 4, 7, 10, 13}},
      {{1, 3, 9}, {3, 4, 18}, {6, 5, 30}},
  };
  if (builtin_name == "gruenbaum-sphere-10") return &ten_vertex;
  if (builtin_name == "s2xs1-15") return &fifteen_vertex;
  return nullptr;
}

}  // namespace nsurf
