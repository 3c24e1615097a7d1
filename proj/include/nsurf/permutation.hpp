#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "nsurf/base.hpp"

namespace nsurf {

// Permutation of {1, ..., degree}.
class Permutation {
 public:
  explicit Permutation(int degree);  // identity

  // Parses disjoint cycle notation, e.g. "(1,4,7,6,9,2)(3,10)(5,8)".
  // Whitespace is tolerated; labels may also be space-separated.  The degree
  // is max(min_degree, largest label).  Throws on malformed text or when a
  // label repeats across cycles.
  static Permutation from_cycles(std::string_view text, int min_degree = 0);

  // Single cycle given as a label list.
  static Permutation cycle(const std::vector<Vertex>& labels, int min_degree = 0);

  int degree() const { return static_cast<int>(image_.size()); }
  Vertex operator()(Vertex v) const;  // throws std::out_of_range
  Permutation inverse() const;

  // Composition: (this->then(g))(v) == g((*this)(v)).
  Permutation then(const Permutation& g) const;

  // Identity on the added labels.
  Permutation extended(int degree) const;

  // Image of a face, re-sorted.
  Face apply(const Face& f) const;

  bool is_identity() const;
  const std::vector<Vertex>& images() const { return image_; }
  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<Vertex> image_;  // image_[v-1] is the image of v
};

// Closure of the generators under composition (finite, so inverses come for
// free).  All elements share the common degree.  Throws when the group would
// exceed max_size elements.
std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t max_size = 1000000);

}  // namespace nsurf
