#include "nsurf/builders.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

namespace nsurf {

std::vector<Face> orbit(const std::vector<Permutation>& generators, const Face& seed,
                        std::optional<std::size_t> expected_length) {
  Face start = seed;
  std::sort(start.begin(), start.end());
  std::set<Face> seen{start};
  std::vector<Face> frontier{start};
  while (!frontier.empty()) {
    std::vector<Face> next;
    for (const Face& f : frontier)
      for (const Permutation& g : generators) {
        Face image = g.apply(f);  // throws when a label exceeds the degree
        if (seen.insert(image).second) next.push_back(std::move(image));
      }
    frontier = std::move(next);
  }
  if (expected_length && seen.size() != *expected_length)
    throw std::runtime_error("orbit length " + std::to_string(seen.size()) + ", expected " +
                             std::to_string(*expected_length));
  return {seen.begin(), seen.end()};
}

namespace {

std::vector<Permutation> dihedral_generators(int k) {
  const int n = 2 * k;
  const Permutation rotation = Permutation::cycle([&] {
    std::vector<Vertex> c(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) c[static_cast<std::size_t>(i)] = i + 1;
    return c;
  }());
  std::string reflection_text;
  for (int j = 2; j <= k; ++j)
    reflection_text += "(" + std::to_string(j) + "," + std::to_string(n + 2 - j) + ")";
  const Permutation reflection = Permutation::from_cycles(reflection_text, n);
  return {rotation, reflection};
}

}  // namespace

SimplicialComplex cyclic_polytope_boundary(int num_vertices) {
  if (num_vertices < 6 || num_vertices % 2 != 0)
    throw std::invalid_argument("cyclic 4-polytope boundary needs an even vertex count >= 6");
  const int k = num_vertices / 2;
  const auto gens = dihedral_generators(k);

  std::vector<Face> facets;
  // Orbits of {1,2,j,j+1}: full dihedral orbits of length 2k, except the
  // "antipodal" seed {1,2,k+1,k+2} whose orbit closes after k steps.
  for (int j = 3; j <= k; ++j) {
    auto part = orbit(gens, Face{1, 2, j, j + 1}, static_cast<std::size_t>(2 * k));
    facets.insert(facets.end(), part.begin(), part.end());
  }
  auto antipodal = orbit(gens, Face{1, 2, k + 1, k + 2}, static_cast<std::size_t>(k));
  facets.insert(facets.end(), antipodal.begin(), antipodal.end());

  const long long expected = 2LL * k * (k - 2) + k;
  if (static_cast<long long>(facets.size()) != expected)
    throw std::runtime_error("cyclic polytope boundary has " + std::to_string(facets.size()) +
                             " facets, expected " + std::to_string(expected));
  SimplicialComplex result = SimplicialComplex::from_facets(std::move(facets));  // rejects orbit overlaps
  const ManifoldReport report = is_combinatorial_3_manifold(result);
  if (report.verdict != ManifoldVerdict::Yes || !report.closed)
    throw std::runtime_error("cyclic polytope boundary is not a closed manifold: " +
                             report.certificate);
  if (!is_k_neighborly(result, 2))
    throw std::runtime_error("cyclic polytope boundary is not 2-neighborly");
  return result;
}

std::vector<Face> gale_evenness_facets(int num_vertices) {
  if (num_vertices < 6 || num_vertices % 2 != 0)
    throw std::invalid_argument("Gale evenness needs an even vertex count >= 6");
  const int n = num_vertices;
  std::vector<Face> facets;
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      for (int c = b + 1; c <= n; ++c)
        for (int d = c + 1; d <= n; ++d) {
          const Face f{a, b, c, d};
          // maximal runs of consecutive labels; runs touching 1 or n are exempt
          bool ok = true;
          std::size_t i = 0;
          while (i < f.size()) {
            std::size_t j = i;
            while (j + 1 < f.size() && f[j + 1] == f[j] + 1) ++j;
            const bool exempt = f[i] == 1 || f[j] == n;
            if (!exempt && (j - i + 1) % 2 != 0) { ok = false; break; }
            i = j + 1;
          }
          if (ok) facets.push_back(f);
        }
  return facets;
}

namespace {

const std::vector<Face> kShellFacets12 = {
    {1, 2, 3, 5}, {1, 2, 4, 5}, {1, 3, 4, 5}, {2, 3, 4, 6}, {2, 3, 5, 6}, {2, 4, 5, 6},
    {3, 4, 5, 7}, {3, 4, 6, 7}, {3, 5, 6, 7}, {4, 5, 6, 8}, {4, 5, 7, 8}, {4, 6, 7, 8},
};

const std::vector<Face> kShellFacets14 = {
    {1, 2, 3, 7}, {1, 2, 4, 5}, {1, 2, 5, 7}, {1, 3, 4, 6}, {1, 3, 6, 7},
    {1, 4, 5, 6}, {1, 5, 6, 7}, {2, 3, 4, 8}, {2, 3, 7, 8}, {2, 4, 5, 8},
    {2, 5, 7, 8}, {3, 4, 6, 8}, {3, 6, 7, 8}, {4, 5, 6, 8},
};

SimplicialComplex verified_shell(const std::vector<Face>& facets, const char* name) {
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  const ManifoldReport report = is_combinatorial_3_manifold(k);
  if (report.closed || !report.bounded_manifold)
    throw std::runtime_error(std::string(name) + ": expected a bounded manifold, got " +
                             report.certificate);
  if (boundary_ridges(k).size() != 8 || euler_characteristic(k) != 2)
    throw std::runtime_error(std::string(name) + ": boundary is not a pair of tetrahedra shells");
  return k;
}

std::vector<Permutation> gruenbaum_generators() {
  return {Permutation::from_cycles("(1,4,7,6,9,2)(3,10)(5,8)"),
          Permutation::from_cycles("(1,7,3,9)(2,8,4,6)", 10)};
}

SimplicialComplex gruenbaum_sphere() {
  const auto facets = orbit(gruenbaum_generators(), Face{1, 2, 3, 4}, 30);
  SimplicialComplex k = SimplicialComplex::from_facets(facets);
  const ManifoldReport report = is_combinatorial_3_manifold(k);
  if (report.verdict != ManifoldVerdict::Yes || !report.closed)
    throw std::runtime_error("gruenbaum-sphere-10: not a closed manifold: " + report.certificate);
  if (f_vector(k) != FVector{{10, 40, 60, 30}})
    throw std::runtime_error("gruenbaum-sphere-10: unexpected f-vector " + to_string(f_vector(k)));
  return k;
}

SimplicialComplex sphere_bundle_15() {
  const auto rotation = std::vector<Permutation>{Permutation::cycle(
      {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15})};
  std::vector<Face> facets;
  for (const Face& seed : {Face{1, 2, 3, 5}, Face{1, 2, 3, 12}, Face{1, 2, 4, 6},
                           Face{1, 2, 5, 7}, Face{1, 2, 6, 7}}) {
    const auto part = orbit(rotation, seed, 15);
    facets.insert(facets.end(), part.begin(), part.end());
  }
  SimplicialComplex k = SimplicialComplex::from_facets(std::move(facets));
  if (k.facets().size() != 75)
    throw std::runtime_error("s2xs1-15: facet count " + std::to_string(k.facets().size()));
  const ManifoldReport report = is_combinatorial_3_manifold(k);
  if (report.verdict != ManifoldVerdict::Yes || !report.closed)
    throw std::runtime_error("s2xs1-15: not a closed manifold: " + report.certificate);
  return k;
}

SimplicialComplex boundary_simplex(int d) {
  if (d < 1 || d > 23) throw std::invalid_argument("boundary-simplex dimension out of range");
  std::vector<Face> facets;
  // all d-subsets of {1..d+1}
  for (int skip = 1; skip <= d + 1; ++skip) {
    Face f;
    for (int v = 1; v <= d + 1; ++v)
      if (v != skip) f.push_back(v);
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

// Splits "stem:42" into the stem and the number; no number gives -1.
std::pair<std::string, int> split_name(std::string_view name) {
  const auto colon = name.find(':');
  if (colon == std::string_view::npos) return {std::string(name), -1};
  const std::string stem(name.substr(0, colon));
  const std::string arg(name.substr(colon + 1));
  if (arg.empty() || arg.find_first_not_of("0123456789") != std::string::npos)
    throw std::invalid_argument("bad numeric suffix in '" + std::string(name) + "'");
  if (arg.size() > 6) throw std::invalid_argument("numeric suffix too large");
  return {stem, std::stoi(arg)};
}

}  // namespace

SimplicialComplex builtin(std::string_view name) {
  const auto [stem, arg] = split_name(name);
  if (stem == "boundary-simplex") {
    if (arg < 0) throw std::invalid_argument("boundary-simplex needs a dimension, e.g. boundary-simplex:4");
    return boundary_simplex(arg);
  }
  if (stem == "bdC4") {
    if (arg < 0) throw std::invalid_argument("bdC4 needs a parameter k, e.g. bdC4:4");
    return cyclic_polytope_boundary(2 * arg);  // verified there
  }
  if (stem == "C1") return verified_shell(kShellFacets12, "C1");
  if (stem == "C2") return verified_shell(kShellFacets14, "C2");
  if (stem == "gruenbaum-sphere-10") return gruenbaum_sphere();
  if (stem == "s2xs1-15") return sphere_bundle_15();
  std::string known;
  for (const auto& n : builtin_names()) known += (known.empty() ? "" : ", ") + n;
  throw std::invalid_argument("unknown builtin '" + std::string(name) + "' (known: " + known + ")");
}

std::vector<std::string> builtin_names() {
  return {"boundary-simplex:<d>", "bdC4:<k>", "C1", "C2", "gruenbaum-sphere-10", "s2xs1-15"};
}

std::vector<Permutation> builtin_symmetry(std::string_view name) {
  const auto [stem, arg] = split_name(name);
  if (stem == "bdC4" && arg >= 3) return dihedral_generators(arg);
  if (stem == "gruenbaum-sphere-10") return gruenbaum_generators();
  if (stem == "s2xs1-15")
    return {Permutation::cycle({1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15})};
  if (stem == "boundary-simplex" && arg >= 1) {
    std::vector<Vertex> full(static_cast<std::size_t>(arg) + 1);
    for (int i = 0; i <= arg; ++i) full[static_cast<std::size_t>(i)] = i + 1;
    return {Permutation::from_cycles("(1,2)", arg + 1), Permutation::cycle(full)};
  }
  return {};
}

}  // namespace nsurf
