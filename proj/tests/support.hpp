#pragma once

#include <random>
#include <vector>

#include "earkit/complex.hpp"

namespace testing_support {

// Random pure complex of rank dim+1 on at most `max_vertices` vertices.
inline earkit::SimplicialComplex random_pure_complex(std::mt19937_64& rng, int dim, int max_vertices) {
  std::uniform_int_distribution<int> nv(dim + 2, max_vertices);
  const int n = nv(rng);
  std::vector<earkit::Face> candidates;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    if (__builtin_popcount(mask) != dim + 1) continue;
    earkit::Face f;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) f.push_back(v + 1);
    }
    candidates.push_back(f);
  }
  std::shuffle(candidates.begin(), candidates.end(), rng);
  std::uniform_int_distribution<std::size_t> nf(1, std::min<std::size_t>(candidates.size(), 14));
  candidates.resize(nf(rng));
  return earkit::SimplicialComplex::from_facets(candidates);
}

}  // namespace testing_support
