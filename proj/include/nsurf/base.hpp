#pragma once

#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace nsurf {

// Vertex labels are positive integers; they need not be contiguous.
using Vertex = int;

// A face is a strictly increasing list of vertex labels.
using Face = std::vector<Vertex>;

// All verdicts and reported quantities are exact; genus of a slicing can be
// a half-integer in the non-orientable case, hence rationals throughout.
using Rational = boost::multiprecision::cpp_rational;

// Exact binomial coefficient; 0 whenever k < 0 or k > n.
long long binom(long long n, long long k);

}  // namespace nsurf
