#pragma once

// Reduced simplicial homology over a field, Reisner's Cohen-Macaulay test,
// q-CM / CM-connectivity, and homology ball/sphere recognition.

#include <optional>
#include <string>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/linalg.hpp"

namespace earkit {

inline constexpr std::size_t kDefaultVertexGuard = 20;

/// Reduced Betti numbers β̃_{-1} .. β̃_{dim}.
struct BettiVector {
  Field field = Field::rationals();
  std::vector<Count> values;  // values[j + 1] = β̃_j

  Count operator[](int j) const;
  int max_dim() const { return static_cast<int>(values.size()) - 2; }
  bool acyclic() const;
  /// True iff β̃_j = [j == k] for all j.
  bool is_sphere_homology(int k) const;
  bool operator==(const BettiVector&) const = default;
};

BettiVector reduced_betti(const SimplicialComplex& complex, const Field& field);

struct CmResult {
  bool cm = true;
  /// On failure: a face σ and degree j with H̃_j(lk σ) != 0, j < d - |σ| - 1.
  std::optional<Face> witness_face;
  int witness_degree = 0;
};

CmResult is_cm(const SimplicialComplex& complex, const Field& field);

struct QcmResult {
  bool qcm = true;
  /// On failure: the deleted vertex set (empty = Δ itself is not CM).
  std::optional<std::vector<Vertex>> witness_set;
  std::string reason;
};

/// Checks every vertex set A with |A| <= q - 1. Throws GuardRefusal when the
/// complex has more than `vertex_guard` vertices.
QcmResult is_qcm(const SimplicialComplex& complex, int q, const Field& field,
                 std::size_t vertex_guard = kDefaultVertexGuard);

struct ConnectivityResult {
  /// Largest q with Δ q-CM; 0 when Δ is not CM.
  int connectivity = 0;
  /// Why (connectivity + 1)-CM fails.
  QcmResult first_failure;
};

ConnectivityResult cm_connectivity(const SimplicialComplex& complex, const Field& field,
                                   std::size_t vertex_guard = kDefaultVertexGuard);

struct ManifoldCheck {
  bool ok = false;
  /// Face whose link has the wrong homology (∅ stands for Δ itself).
  std::optional<Face> witness;
  std::string detail;
};

ManifoldCheck check_homology_sphere(const SimplicialComplex& complex, const Field& field);
bool is_homology_sphere(const SimplicialComplex& complex, const Field& field);

struct BallCheck {
  bool ok = false;
  /// Faces whose links are acyclic; verified to be a homology sphere of one
  /// lower dimension when ok.
  SimplicialComplex boundary;
  std::optional<Face> witness;
  std::string detail;
};

BallCheck is_homology_ball(const SimplicialComplex& complex, const Field& field);

}  // namespace earkit
