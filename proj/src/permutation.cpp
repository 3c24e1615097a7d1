#include "nsurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

namespace nsurf {

Permutation::Permutation(int degree) {
  if (degree < 0) throw std::invalid_argument("negative permutation degree");
  image_.resize(static_cast<std::size_t>(degree));
  std::iota(image_.begin(), image_.end(), 1);
}

Permutation Permutation::from_cycles(std::string_view text, int min_degree) {
  std::vector<std::vector<Vertex>> cycles;
  std::size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
  skip_ws();
  while (i < text.size()) {
    if (text[i] != '(') throw std::invalid_argument("expected '(' in cycle notation");
    ++i;
    std::vector<Vertex> cycle;
    while (true) {
      skip_ws();
      if (i < text.size() && text[i] == ')') { ++i; break; }
      if (i < text.size() && text[i] == ',') { ++i; continue; }
      if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
        throw std::invalid_argument("malformed cycle notation");
      long value = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        value = value * 10 + (text[i] - '0');
        if (value > 1000000) throw std::invalid_argument("label too large in cycle notation");
        ++i;
      }
      if (value < 1) throw std::invalid_argument("labels in cycles must be positive");
      cycle.push_back(static_cast<Vertex>(value));
    }
    if (!cycle.empty()) cycles.push_back(std::move(cycle));
    skip_ws();
  }

  int degree = min_degree;
  std::set<Vertex> seen;
  for (const auto& cycle : cycles)
    for (Vertex v : cycle) {
      degree = std::max(degree, v);
      if (!seen.insert(v).second)
        throw std::invalid_argument("label " + std::to_string(v) + " repeats across cycles");
    }

  Permutation p(degree);
  for (const auto& cycle : cycles)
    for (std::size_t j = 0; j < cycle.size(); ++j)
      p.image_[static_cast<std::size_t>(cycle[j]) - 1] = cycle[(j + 1) % cycle.size()];
  return p;
}

Permutation Permutation::cycle(const std::vector<Vertex>& labels, int min_degree) {
  std::string text = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) text += ",";
    text += std::to_string(labels[i]);
  }
  text += ")";
  return from_cycles(text, min_degree);
}

Vertex Permutation::operator()(Vertex v) const {
  if (v < 1 || v > degree())
    throw std::out_of_range("label " + std::to_string(v) + " outside permutation domain 1.." +
                            std::to_string(degree()));
  return image_[static_cast<std::size_t>(v) - 1];
}

Permutation Permutation::inverse() const {
  Permutation p(degree());
  for (Vertex v = 1; v <= degree(); ++v)
    p.image_[static_cast<std::size_t>(image_[static_cast<std::size_t>(v) - 1]) - 1] = v;
  return p;
}

Permutation Permutation::then(const Permutation& g) const {
  const int d = std::max(degree(), g.degree());
  const Permutation a = extended(d), b = g.extended(d);
  Permutation p(d);
  for (Vertex v = 1; v <= d; ++v) p.image_[static_cast<std::size_t>(v) - 1] = b(a(v));
  return p;
}

Permutation Permutation::extended(int degree) const {
  if (degree < this->degree()) throw std::invalid_argument("cannot shrink a permutation");
  Permutation p(degree);
  std::copy(image_.begin(), image_.end(), p.image_.begin());
  return p;
}

Face Permutation::apply(const Face& f) const {
  Face g;
  g.reserve(f.size());
  for (Vertex v : f) g.push_back((*this)(v));
  std::sort(g.begin(), g.end());
  return g;
}

bool Permutation::is_identity() const {
  for (Vertex v = 1; v <= degree(); ++v)
    if (image_[static_cast<std::size_t>(v) - 1] != v) return false;
  return true;
}

std::vector<Permutation> generate_group(const std::vector<Permutation>& generators,
                                        std::size_t max_size) {
  int degree = 1;
  for (const auto& g : generators) degree = std::max(degree, g.degree());
  std::vector<Permutation> gens;
  gens.reserve(generators.size());
  for (const auto& g : generators) gens.push_back(g.extended(degree));

  std::set<std::vector<Vertex>> seen;
  std::queue<Permutation> frontier;
  std::vector<Permutation> group;
  const Permutation id(degree);
  seen.insert(id.images());
  group.push_back(id);
  frontier.push(id);
  while (!frontier.empty()) {
    const Permutation p = frontier.front();
    frontier.pop();
    for (const auto& g : gens) {
      Permutation next = p.then(g);
      if (seen.insert(next.images()).second) {
        if (group.size() >= max_size)
          throw std::runtime_error("group exceeds " + std::to_string(max_size) + " elements");
        group.push_back(next);
        frontier.push(std::move(next));
      }
    }
  }
  return group;
}

}  // namespace nsurf
