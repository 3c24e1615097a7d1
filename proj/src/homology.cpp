#include "nsurf/homology.hpp"

#include <algorithm>
#include <vector>

namespace nsurf {

namespace {

// Rank of a sparse integer matrix over Q by fraction-free style elimination
// on exact rationals.  Rows are kept dense; the matrices here are small.
long long rational_rank(std::vector<std::vector<Rational>> m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size();
  const std::size_t cols = m[0].size();
  long long rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t pivot = row;
    while (pivot < rows && m[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[pivot], m[row]);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m[r][col] == 0) continue;
      const Rational factor = m[r][col] / m[row][col];
      for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
    }
    ++row;
    ++rank;
  }
  return rank;
}

// Boundary operator from k-faces to (k-1)-faces as a dense matrix; entry
// signs follow the alternating sum over vertex positions.
std::vector<std::vector<Rational>> boundary_matrix(const FaceSet& fs, int k) {
  const auto& domain = fs.faces(k);
  const auto& codomain = fs.faces(k - 1);
  std::vector<std::vector<Rational>> m(
      codomain.size(), std::vector<Rational>(domain.size(), Rational(0)));
  for (std::size_t j = 0; j < domain.size(); ++j) {
    const Face& f = domain[j];
    int sign = 1;
    for (std::size_t drop = 0; drop < f.size(); ++drop, sign = -sign) {
      Face sub;
      for (std::size_t i = 0; i < f.size(); ++i)
        if (i != drop) sub.push_back(f[i]);
      const auto it = std::lower_bound(codomain.begin(), codomain.end(), sub);
      m[static_cast<std::size_t>(it - codomain.begin())][j] = sign;
    }
  }
  return m;
}

}  // namespace

BettiVector betti_numbers(const FaceSet& faces) {
  const int d = faces.dimension();
  if (d < 0) return {};
  std::vector<long long> rank(static_cast<std::size_t>(d) + 2, 0);  // rank[k] = rank of boundary_k
  for (int k = 1; k <= d; ++k)
    rank[static_cast<std::size_t>(k)] = rational_rank(boundary_matrix(faces, k));
  BettiVector betti(static_cast<std::size_t>(d) + 1, 0);
  for (int k = 0; k <= d; ++k) {
    const long long cells = static_cast<long long>(faces.faces(k).size());
    betti[static_cast<std::size_t>(k)] =
        cells - rank[static_cast<std::size_t>(k)] - rank[static_cast<std::size_t>(k) + 1];
  }
  return betti;
}

BettiVector betti_numbers(const SimplicialComplex& k) { return betti_numbers(k.faces()); }

}  // namespace nsurf
