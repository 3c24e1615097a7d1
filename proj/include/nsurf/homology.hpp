#pragma once

#include <vector>

#include "nsurf/complex.hpp"

namespace nsurf {

// Rational Betti numbers b_0 .. b_d, computed from exact ranks of the
// simplicial boundary matrices over Q.
using BettiVector = std::vector<long long>;

BettiVector betti_numbers(const FaceSet& faces);
BettiVector betti_numbers(const SimplicialComplex& k);

}  // namespace nsurf
