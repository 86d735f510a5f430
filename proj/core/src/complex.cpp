#include "earkit/complex.hpp"

#include <algorithm>
#include <string>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

void normalize_face(Face& face) {
  std::sort(face.begin(), face.end());
  face.erase(std::unique(face.begin(), face.end()), face.end());
}

// Appends every subset of `facet` to `out[size]`.
void expand_subsets(const Face& facet, std::vector<std::vector<Face>>& out) {
  const std::size_t k = facet.size();
  const std::uint64_t total = std::uint64_t{1} << k;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Face sub;
    for (std::size_t b = 0; b < k; ++b) {
      if (mask >> b & 1U) sub.push_back(facet[b]);
    }
    out[sub.size()].push_back(std::move(sub));
  }
}

}  // namespace

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Count binomial(Count n, Count k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Count result = 1;
  for (Count i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return result;
}

SimplicialComplex SimplicialComplex::from_facets(std::vector<Face> facets) {
  SimplicialComplex out;
  if (facets.empty()) return out;

  for (auto& face : facets) {
    for (Vertex v : face) {
      if (v <= 0) {
        throw InputError("vertex labels must be positive, got " + std::to_string(v));
      }
    }
    normalize_face(face);
  }
  std::sort(facets.begin(), facets.end());
  facets.erase(std::unique(facets.begin(), facets.end()), facets.end());

  // Keep a face unless some strictly larger face contains it.
  std::vector<std::size_t> order(facets.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return facets[a].size() > facets[b].size();
  });
  std::vector<Face> kept;
  for (std::size_t idx : order) {
    const Face& candidate = facets[idx];
    bool absorbed = false;
    for (const Face& big : kept) {
      if (big.size() > candidate.size() && is_subset(candidate, big)) {
        absorbed = true;
        break;
      }
    }
    if (!absorbed) kept.push_back(candidate);
  }
  std::sort(kept.begin(), kept.end());

  out.void_ = false;
  out.facets_ = std::move(kept);
  std::size_t max_size = 0;
  for (const Face& f : out.facets_) {
    max_size = std::max(max_size, f.size());
    out.vertices_.insert(out.vertices_.end(), f.begin(), f.end());
  }
  normalize_face(out.vertices_);
  out.dim_ = static_cast<int>(max_size) - 1;
  return out;
}

SimplicialComplex SimplicialComplex::empty_face() { return from_facets({Face{}}); }

bool SimplicialComplex::is_pure() const {
  return std::all_of(facets_.begin(), facets_.end(), [&](const Face& f) {
    return static_cast<int>(f.size()) == rank();
  });
}

bool SimplicialComplex::contains(std::span<const Vertex> face) const {
  return std::any_of(facets_.begin(), facets_.end(),
                     [&](const Face& facet) { return is_subset(face, facet); });
}

std::vector<std::vector<Face>> SimplicialComplex::faces_by_size() const {
  if (void_) return {};
  std::vector<std::vector<Face>> out(static_cast<std::size_t>(rank()) + 1);
  for (const Face& facet : facets_) expand_subsets(facet, out);
  for (auto& level : out) {
    std::sort(level.begin(), level.end());
    level.erase(std::unique(level.begin(), level.end()), level.end());
  }
  return out;
}

std::vector<Face> SimplicialComplex::faces_of_size(int k) const {
  if (void_ || k < 0 || k > rank()) return {};
  std::vector<Face> out;
  for (const Face& facet : facets_) {
    if (static_cast<int>(facet.size()) < k) continue;
    // Enumerate k-subsets by index combination.
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    const int n = static_cast<int>(facet.size());
    while (true) {
      Face sub;
      sub.reserve(static_cast<std::size_t>(k));
      for (int i : idx) sub.push_back(facet[static_cast<std::size_t>(i)]);
      out.push_back(std::move(sub));
      int pos = k - 1;
      while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - k + pos) --pos;
      if (pos < 0) break;
      ++idx[static_cast<std::size_t>(pos)];
      for (int j = pos + 1; j < k; ++j) {
        idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
      }
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

FVector f_vector(const SimplicialComplex& complex) {
  if (complex.is_void()) throw InputError("f-vector of the void complex is undefined");
  FVector f;
  for (const auto& level : complex.faces_by_size()) {
    f.values.push_back(static_cast<Count>(level.size()));
  }
  return f;
}

HVector h_vector(const FVector& f) {
  const int d = f.d();
  HVector h;
  h.values.assign(f.size(), 0);
  for (int i = 0; i <= d; ++i) {
    Count sum = 0;
    for (int j = 0; j <= i; ++j) {
      const Count sign = ((i - j) % 2 == 0) ? 1 : -1;
      sum += sign * binomial(d - j, d - i) * f[static_cast<std::size_t>(j)];
    }
    h.values[static_cast<std::size_t>(i)] = sum;
  }
  return h;
}

HVector h_vector(const SimplicialComplex& complex) { return h_vector(f_vector(complex)); }

FVector f_from_h(const HVector& h) {
  const int d = h.d();
  FVector f;
  f.values.assign(h.size(), 0);
  for (int j = 0; j <= d; ++j) {
    Count sum = 0;
    for (int i = 0; i <= j; ++i) {
      sum += binomial(d - i, d - j) * h[static_cast<std::size_t>(i)];
    }
    f.values[static_cast<std::size_t>(j)] = sum;
  }
  return f;
}

SimplicialComplex link(const SimplicialComplex& complex, std::span<const Vertex> face) {
  Face sigma(face.begin(), face.end());
  normalize_face(sigma);
  std::vector<Face> pieces;
  for (const Face& facet : complex.facets()) {
    if (!is_subset(sigma, facet)) continue;
    Face rest;
    std::set_difference(facet.begin(), facet.end(), sigma.begin(), sigma.end(),
                        std::back_inserter(rest));
    pieces.push_back(std::move(rest));
  }
  if (pieces.empty()) throw InputError("link: face is not in the complex");
  return SimplicialComplex::from_facets(std::move(pieces));
}

SimplicialComplex deletion(const SimplicialComplex& complex, std::span<const Vertex> removed) {
  if (complex.is_void()) return complex;
  Face gone(removed.begin(), removed.end());
  normalize_face(gone);
  std::vector<Face> pieces;
  pieces.reserve(complex.facets().size());
  for (const Face& facet : complex.facets()) {
    Face rest;
    std::set_difference(facet.begin(), facet.end(), gone.begin(), gone.end(),
                        std::back_inserter(rest));
    pieces.push_back(std::move(rest));
  }
  return SimplicialComplex::from_facets(std::move(pieces));
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
  if (a.is_void() || b.is_void()) return {};
  std::vector<Vertex> shared;
  std::set_intersection(a.vertices().begin(), a.vertices().end(), b.vertices().begin(),
                        b.vertices().end(), std::back_inserter(shared));
  if (!shared.empty()) throw InputError("join: vertex sets must be disjoint");
  std::vector<Face> facets;
  facets.reserve(a.facets().size() * b.facets().size());
  for (const Face& fa : a.facets()) {
    for (const Face& fb : b.facets()) {
      Face u = fa;
      u.insert(u.end(), fb.begin(), fb.end());
      facets.push_back(std::move(u));
    }
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex closure(std::vector<Face> faces) {
  return SimplicialComplex::from_facets(std::move(faces));
}

std::vector<Count> short_h(const SimplicialComplex& complex, int m) {
  if (complex.is_void()) throw InputError("short_h: void complex");
  if (!complex.is_pure()) throw InputError("short_h: complex must be pure");
  const int d = complex.rank();
  if (m < 0 || m > d) throw InputError("short_h: need 0 <= m <= d");
  std::vector<Count> total(static_cast<std::size_t>(d - m + 1), 0);
  for (const Face& sigma : complex.faces_of_size(m)) {
    const HVector h = h_vector(link(complex, sigma));
    for (std::size_t i = 0; i < h.size() && i < total.size(); ++i) total[i] += h[i];
  }
  return total;
}

std::optional<std::pair<int, int>> short_h_recursion_failure(const SimplicialComplex& complex) {
  const int d = complex.rank();
  std::vector<std::vector<Count>> levels;
  for (int m = 0; m <= d; ++m) levels.push_back(short_h(complex, m));
  for (int m = 0; m + 1 <= d; ++m) {
    const auto& cur = levels[static_cast<std::size_t>(m)];
    const auto& next = levels[static_cast<std::size_t>(m + 1)];
    for (int i = 1; i <= d - m; ++i) {
      const auto k = static_cast<std::size_t>(i);
      const Count lhs = (m + 1) * next[k - 1];
      const Count rhs = i * cur[k] + (d - m - i + 1) * cur[k - 1];
      if (lhs != rhs) return std::make_pair(m, i);
    }
  }
  return std::nullopt;
}

}  // namespace earkit
