#pragma once

// Convex ear decompositions, read homologically: Δ_1 a homology sphere, each
// later ear a homology ball meeting the earlier ears exactly in its boundary.
// Polytopality of the ears is not checked.

#include <optional>
#include <string>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/homology.hpp"
#include "earkit/linalg.hpp"

namespace earkit {

struct EarCondition {
  bool ok = true;
  std::optional<int> ear;  // 1-based index of the failing ear
  std::optional<Face> witness;
  std::string detail;
};

struct EarReport {
  std::size_t m = 0;
  EarCondition condition1;  // Δ_1 sphere, Δ_j balls, all pure of full dimension
  EarCondition condition2;  // Δ_j ∩ (Δ_1 ∪ ... ∪ Δ_{j-1}) = ∂Δ_j
  EarCondition condition3;  // Δ_1 ∪ ... ∪ Δ_m = Δ
  bool polytopal_verified = false;
  /// ∂Δ_j for j >= 2 (index 0 holds the void complex for Δ_1).
  std::vector<SimplicialComplex> boundaries;

  bool ok() const { return condition1.ok && condition2.ok && condition3.ok; }
};

/// Throws InputError when an ear is not a subcomplex of Δ.
EarReport verify_ears(const SimplicialComplex& complex, const std::vector<SimplicialComplex>& ears,
                      const Field& field = Field::rationals());

struct ComphReport {
  bool ok = false;
  std::vector<Count> lhs;  // h_{d-i}(Δ), i = 0..d
  std::vector<Count> rhs;  // Σ_j h_i(Δ_j)
  std::vector<HVector> ear_h;
  std::vector<Count> complementary;  // h̄(Δ)
  std::vector<Count> boundary_g_sum;  // Σ_{j>=2} g_i(∂Δ_j), i = 0..floor(d/2)
  bool g_identity_ok = false;
};

/// h_{d-i}(Δ) = Σ_j h_i(Δ_j) for 0 <= i <= d, and h̄_i(Δ) = Σ_{j>=2} g_i(∂Δ_j).
ComphReport comph_check(const SimplicialComplex& complex, const std::vector<SimplicialComplex>& ears,
                        const Field& field = Field::rationals());

struct TwoCmReport {
  int connectivity = 0;
  bool ok = false;
};

TwoCmReport two_cm_consequence(const SimplicialComplex& complex, const Field& field = Field::rationals(),
                               std::size_t vertex_guard = kDefaultVertexGuard);

}  // namespace earkit
