#include "earkit/generators.hpp"

#include <algorithm>
#include <bit>
#include <map>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

// Boundary of the simplex on {first, ..., first + count - 1}.
std::vector<Face> boundary_facets(int first, int count) {
  std::vector<Face> out;
  for (int skip = 0; skip < count; ++skip) {
    Face f;
    for (int t = 0; t < count; ++t) {
      if (t != skip) f.push_back(first + t);
    }
    out.push_back(std::move(f));
  }
  return out;
}

SimplicialComplex cone(const SimplicialComplex& base, Vertex apex) {
  std::vector<Face> facets;
  for (Face f : base.facets()) {
    f.push_back(apex);
    facets.push_back(std::move(f));
  }
  if (facets.empty()) facets.push_back({apex});
  return SimplicialComplex::from_facets(std::move(facets));
}

}  // namespace

SimplicialComplex simplex_boundary(int d) {
  if (d < 1) throw InputError("simplex_boundary needs d >= 1");
  return SimplicialComplex::from_facets(boundary_facets(1, d + 1));
}

SimplicialComplex cross_polytope_boundary(int d) {
  if (d < 1) throw InputError("cross_polytope_boundary needs d >= 1");
  std::vector<Face> facets;
  for (std::uint32_t choice = 0; choice < (std::uint32_t{1} << d); ++choice) {
    Face f;
    for (int k = 0; k < d; ++k) f.push_back(2 * k + 1 + static_cast<int>(choice >> k & 1U));
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex ps_sphere(const std::vector<int>& parts) {
  if (parts.empty()) throw InputError("ps_sphere needs at least one part");
  SimplicialComplex out;
  int next = 1;
  for (int p : parts) {
    if (p < 2) throw InputError("ps_sphere parts must have at least 2 vertices");
    const SimplicialComplex piece = SimplicialComplex::from_facets(boundary_facets(next, p));
    out = out.is_void() ? piece : join(out, piece);
    next += p;
  }
  return out;
}

SimplicialComplex uniform_matroid_complex(int k, int n) {
  if (k < 1 || k > n) throw InputError("uniform matroid needs 1 <= k <= n");
  std::vector<Face> facets;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    if (std::popcount(mask) != k) continue;
    Face f;
    for (int v = 0; v < n; ++v) {
      if (mask >> v & 1U) f.push_back(v + 1);
    }
    facets.push_back(std::move(f));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

std::vector<SimplicialComplex> uniform_matroid_ears(int k, int n) {
  if (k < 0 || k >= n) throw InputError("uniform matroid ears need 0 <= k < n");
  if (k == 0) return {SimplicialComplex::empty_face()};
  if (n == k + 1) return {simplex_boundary(k)};
  // U_{k,n} = U_{k,n-1} ∪ n * U_{k-1,n-1}; coning the link's ears extends the
  // decomposition of the deletion.
  std::vector<SimplicialComplex> out = uniform_matroid_ears(k, n - 1);
  for (const SimplicialComplex& ear : uniform_matroid_ears(k - 1, n - 1)) out.push_back(cone(ear, n));
  return out;
}

std::pair<SimplicialComplex, Coloring> barycentric_sd_simplex_boundary(int d) {
  if (d > kMaxBarycentricDimension) {
    throw GuardRefusal("barycentric subdivision refused for d = " + std::to_string(d),
                       kMaxBarycentricDimension);
  }
  if (d < 1) throw InputError("barycentric subdivision needs d >= 1");
  const int ground = d + 1;
  const std::uint32_t full = (std::uint32_t{1} << ground) - 1;
  std::vector<std::uint32_t> subsets;
  for (std::uint32_t s = 1; s < full; ++s) subsets.push_back(s);
  auto members = [ground](std::uint32_t s) {
    std::vector<int> out;
    for (int v = 0; v < ground; ++v) {
      if (s >> v & 1U) out.push_back(v);
    }
    return out;
  };
  std::sort(subsets.begin(), subsets.end(), [&](std::uint32_t a, std::uint32_t b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : members(a) < members(b);
  });
  std::map<std::uint32_t, Vertex> label;
  std::map<Vertex, Color> colors;
  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto v = static_cast<Vertex>(i + 1);
    label[subsets[i]] = v;
    colors[v] = std::popcount(subsets[i]) - 1;
  }
  std::vector<Face> facets;
  Face chain;
  auto extend = [&](auto&& self, std::uint32_t current) -> void {
    chain.push_back(label.at(current));
    if (std::popcount(current) == ground - 1) {
      facets.push_back(chain);
    } else {
      for (int v = 0; v < ground; ++v) {
        if (!(current >> v & 1U)) self(self, current | (std::uint32_t{1} << v));
      }
    }
    chain.pop_back();
  };
  for (int v = 0; v < ground; ++v) extend(extend, std::uint32_t{1} << v);
  return {SimplicialComplex::from_facets(std::move(facets)), Coloring(d, colors)};
}

}  // namespace earkit
