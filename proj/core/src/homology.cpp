#include "earkit/homology.hpp"

#include <algorithm>
#include <set>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

// Boundary map from faces of size k to faces of size k - 1.
ExactMatrix boundary_matrix(const std::vector<Face>& lower, const std::vector<Face>& upper,
                            const Field& field) {
  ExactMatrix m(field, lower.size(), upper.size());
  for (std::size_t col = 0; col < upper.size(); ++col) {
    const Face& face = upper[col];
    for (std::size_t i = 0; i < face.size(); ++i) {
      Face facet_of_face;
      facet_of_face.reserve(face.size() - 1);
      for (std::size_t t = 0; t < face.size(); ++t) {
        if (t != i) facet_of_face.push_back(face[t]);
      }
      const auto it = std::lower_bound(lower.begin(), lower.end(), facet_of_face);
      const auto row = static_cast<std::size_t>(it - lower.begin());
      m.set(row, col, (i % 2 == 0) ? 1 : -1);
    }
  }
  return m;
}

// Betti numbers β̃_{-1} .. β̃_{max_degree}; higher degrees are not computed.
BettiVector betti_up_to(const SimplicialComplex& complex, const Field& field, int max_degree) {
  if (complex.is_void()) throw InputError("homology of the void complex is undefined");
  const auto levels = complex.faces_by_size();
  const int d = complex.rank();
  const int top = std::min(max_degree, d - 1);
  // ranks[k] = rank of ∂_k : C_k -> C_{k-1}, faces indexed by cardinality.
  std::vector<Count> ranks(static_cast<std::size_t>(d) + 2, 0);
  for (int k = 1; k <= std::min(d, top + 2); ++k) {
    const auto& lower = levels[static_cast<std::size_t>(k - 1)];
    const auto& upper = levels[static_cast<std::size_t>(k)];
    ranks[static_cast<std::size_t>(k)] =
        static_cast<Count>(rank(boundary_matrix(lower, upper, field)));
  }
  BettiVector out;
  out.field = field;
  for (int j = -1; j <= top; ++j) {
    const auto k = static_cast<std::size_t>(j + 1);
    const Count chains = static_cast<Count>(levels[k].size());
    out.values.push_back(chains - ranks[k] - ranks[k + 1]);
  }
  return out;
}

ManifoldCheck sphere_check(const SimplicialComplex& complex, const Field& field) {
  ManifoldCheck out;
  if (complex.is_void()) {
    out.detail = "void complex";
    return out;
  }
  if (!complex.is_pure()) {
    out.detail = "not pure";
    return out;
  }
  const int d = complex.rank();
  for (const auto& level : complex.faces_by_size()) {
    for (const Face& sigma : level) {
      const int expected = d - 1 - static_cast<int>(sigma.size());
      const BettiVector b = reduced_betti(link(complex, sigma), field);
      if (!b.is_sphere_homology(expected)) {
        out.witness = sigma;
        out.detail = "link is not a homology " + std::to_string(expected) + "-sphere";
        return out;
      }
    }
  }
  out.ok = true;
  return out;
}

// All s-subsets of `pool`, in lexicographic order; stops early when `visit`
// returns false. Returns false iff stopped early.
template <class Visit>
bool for_each_subset(const std::vector<Vertex>& pool, int s, Visit&& visit) {
  const int n = static_cast<int>(pool.size());
  if (s > n) return true;
  std::vector<int> idx(static_cast<std::size_t>(s));
  for (int i = 0; i < s; ++i) idx[static_cast<std::size_t>(i)] = i;
  std::vector<Vertex> subset(static_cast<std::size_t>(s));
  while (true) {
    for (int i = 0; i < s; ++i) {
      subset[static_cast<std::size_t>(i)] = pool[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
    }
    if (!visit(subset)) return false;
    int pos = s - 1;
    while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == n - s + pos) --pos;
    if (pos < 0) return true;
    ++idx[static_cast<std::size_t>(pos)];
    for (int j = pos + 1; j < s; ++j) {
      idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
  }
}

// Checks Δ - A for every |A| = s; fills `failure` and returns false on the
// first violation.
bool deletions_of_size_ok(const SimplicialComplex& complex, int s, const Field& field,
                          QcmResult& failure) {
  return for_each_subset(complex.vertices(), s, [&](const std::vector<Vertex>& removed) {
    const SimplicialComplex rest = deletion(complex, removed);
    if (rest.dim() != complex.dim()) {
      failure.qcm = false;
      failure.witness_set = removed;
      failure.reason = "deleting the set lowers the dimension";
      return false;
    }
    const CmResult cm = is_cm(rest, field);
    if (!cm.cm) {
      failure.qcm = false;
      failure.witness_set = removed;
      failure.reason = "deletion is not Cohen-Macaulay";
      return false;
    }
    return true;
  });
}

void require_guard(const SimplicialComplex& complex, std::size_t vertex_guard) {
  if (complex.num_vertices() > vertex_guard) {
    throw GuardRefusal("q-CM sweep refused: " + std::to_string(complex.num_vertices()) +
                           " vertices exceeds the vertex guard",
                       vertex_guard);
  }
}

}  // namespace

Count BettiVector::operator[](int j) const {
  const auto k = static_cast<std::size_t>(j + 1);
  return (j < -1 || k >= values.size()) ? 0 : values[k];
}

bool BettiVector::acyclic() const {
  return std::all_of(values.begin(), values.end(), [](Count c) { return c == 0; });
}

bool BettiVector::is_sphere_homology(int k) const {
  for (int j = -1; j <= max_dim(); ++j) {
    if ((*this)[j] != (j == k ? 1 : 0)) return false;
  }
  return k <= max_dim();
}

BettiVector reduced_betti(const SimplicialComplex& complex, const Field& field) {
  return betti_up_to(complex, field, complex.dim());
}

CmResult is_cm(const SimplicialComplex& complex, const Field& field) {
  CmResult out;
  if (complex.is_void()) return out;
  const int d = complex.rank();
  for (const auto& level : complex.faces_by_size()) {
    for (const Face& sigma : level) {
      const int limit = d - static_cast<int>(sigma.size()) - 1;  // need β̃_j = 0 for j < limit
      if (limit <= -1) continue;
      const BettiVector b = betti_up_to(link(complex, sigma), field, limit - 1);
      for (int j = -1; j < limit; ++j) {
        if (b[j] != 0) {
          out.cm = false;
          out.witness_face = sigma;
          out.witness_degree = j;
          return out;
        }
      }
    }
  }
  return out;
}

QcmResult is_qcm(const SimplicialComplex& complex, int q, const Field& field,
                 std::size_t vertex_guard) {
  if (q < 1) throw InputError("q-CM needs q >= 1");
  require_guard(complex, vertex_guard);
  QcmResult out;
  const CmResult base = is_cm(complex, field);
  if (!base.cm) {
    out.qcm = false;
    out.witness_set = std::vector<Vertex>{};
    out.reason = "complex is not Cohen-Macaulay";
    return out;
  }
  for (int s = 1; s <= q - 1; ++s) {
    if (!deletions_of_size_ok(complex, s, field, out)) return out;
  }
  return out;
}

ConnectivityResult cm_connectivity(const SimplicialComplex& complex, const Field& field,
                                   std::size_t vertex_guard) {
  require_guard(complex, vertex_guard);
  ConnectivityResult out;
  const CmResult base = is_cm(complex, field);
  if (!base.cm) {
    out.first_failure.qcm = false;
    out.first_failure.witness_set = std::vector<Vertex>{};
    out.first_failure.reason = "complex is not Cohen-Macaulay";
    return out;
  }
  out.connectivity = 1;
  const int n = static_cast<int>(complex.num_vertices());
  for (int s = 1; s <= n; ++s) {
    if (!deletions_of_size_ok(complex, s, field, out.first_failure)) return out;
    out.connectivity = s + 1;
  }
  return out;
}

ManifoldCheck check_homology_sphere(const SimplicialComplex& complex, const Field& field) {
  return sphere_check(complex, field);
}

bool is_homology_sphere(const SimplicialComplex& complex, const Field& field) {
  return sphere_check(complex, field).ok;
}

BallCheck is_homology_ball(const SimplicialComplex& complex, const Field& field) {
  BallCheck out;
  if (complex.is_void()) {
    out.detail = "void complex";
    return out;
  }
  if (!complex.is_pure()) {
    out.detail = "not pure";
    return out;
  }
  const int d = complex.rank();
  std::vector<Face> boundary_faces;
  std::set<Face> boundary_set;
  for (const auto& level : complex.faces_by_size()) {
    for (const Face& sigma : level) {
      const int expected = d - 1 - static_cast<int>(sigma.size());
      const BettiVector b = reduced_betti(link(complex, sigma), field);
      const bool acyclic = b.acyclic();
      if (sigma.empty() && !acyclic) {
        out.witness = sigma;
        out.detail = "complex is not acyclic";
        return out;
      }
      if (!acyclic && !b.is_sphere_homology(expected)) {
        out.witness = sigma;
        out.detail = "link is neither acyclic nor a homology " + std::to_string(expected) + "-sphere";
        return out;
      }
      if (acyclic && !sigma.empty()) {
        boundary_faces.push_back(sigma);
        boundary_set.insert(sigma);
      }
    }
  }
  out.boundary = boundary_faces.empty() ? SimplicialComplex::empty_face()
                                        : SimplicialComplex::from_facets(boundary_faces);
  // The acyclic-link faces must themselves form a subcomplex.
  for (const auto& level : out.boundary.faces_by_size()) {
    for (const Face& tau : level) {
      if (!tau.empty() && boundary_set.count(tau) == 0) {
        out.witness = tau;
        out.detail = "faces with acyclic links do not form a subcomplex";
        return out;
      }
    }
  }
  const ManifoldCheck sphere = sphere_check(out.boundary, field);
  if (!sphere.ok || out.boundary.dim() != d - 2) {
    out.witness = sphere.witness;
    out.detail = "boundary is not a homology " + std::to_string(d - 2) + "-sphere";
    return out;
  }
  out.ok = true;
  return out;
}

}  // namespace earkit
