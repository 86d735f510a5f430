#pragma once

// Type A_{n-1} buildings over GF(q): the order complex of proper nonzero
// subspaces of GF(q)^n, its chamber graph, apartments, projections and the
// ear decomposition by apartments through a base chamber.

#include <cstdint>
#include <string>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/ears.hpp"
#include "earkit/flags.hpp"
#include "earkit/galois.hpp"

namespace earkit {

inline constexpr std::size_t kDefaultChamberGuard = 5000;
inline constexpr std::size_t kDefaultGeodesicGuard = 100000;

/// A subspace in reduced row-echelon form; rows are dim vectors of length n.
struct Subspace {
  int dim = 0;
  std::vector<std::vector<int>> rows;

  auto operator<=>(const Subspace&) const = default;
};

/// Number of complete flags of GF(q)^n: Π_{k=1}^{n} (1 + q + ... + q^{k-1}).
Count chamber_count(int n, int q);

using ChamberId = std::size_t;

class Building {
 public:
  /// Throws InputError for n outside 2..4 or an unsupported q, and
  /// GuardRefusal when the chamber count exceeds `chamber_guard`.
  static Building build(int n, int q, std::size_t chamber_guard = kDefaultChamberGuard);

  int n() const { return n_; }
  int q() const { return q_; }
  const SimplicialComplex& complex() const { return complex_; }
  /// Color of a vertex is dim - 1.
  const Coloring& coloring() const { return coloring_; }
  /// Vertex v is subspaces()[v - 1].
  const std::vector<Subspace>& subspaces() const { return subspaces_; }

  std::size_t num_chambers() const { return chambers_.size(); }
  const Face& chamber(ChamberId c) const { return chambers_.at(c); }
  /// Throws InputError if `face` is not a chamber.
  ChamberId chamber_id(const Face& face) const;
  const std::vector<ChamberId>& neighbors(ChamberId c) const { return neighbors_.at(c); }

  std::vector<int> distances_from(ChamberId c) const;
  int distance(ChamberId a, ChamberId b) const;
  /// Every minimal gallery from a to b. Throws GuardRefusal beyond `guard` paths.
  std::vector<std::vector<ChamberId>> geodesics(ChamberId a, ChamberId b,
                                                std::size_t guard = kDefaultGeodesicGuard) const;
  /// Length of the longest element, C(n, 2).
  int diameter() const { return n_ * (n_ - 1) / 2; }
  std::vector<ChamberId> opposite_chambers(ChamberId c) const;

  /// Chambers on geodesics from a to its opposite b, checked to number n!
  /// and to form a homology sphere. Throws InputError when b is not opposite a.
  std::vector<ChamberId> apartment_of(ChamberId a, ChamberId b) const;
  SimplicialComplex subcomplex(const std::vector<ChamberId>& chambers) const;

  /// The unique chamber containing the nonempty face ρ nearest to τ.
  ChamberId projection(const Face& rho, ChamberId tau) const;

 private:
  int n_ = 0;
  int q_ = 0;
  SimplicialComplex complex_;
  Coloring coloring_;
  std::vector<Subspace> subspaces_;
  std::vector<Face> chambers_;
  std::vector<std::vector<ChamberId>> neighbors_;
};

struct BuildingEars {
  ChamberId base = 0;
  std::vector<ChamberId> order;  // σ_1 .. σ_m
  std::vector<std::vector<ChamberId>> ear_chambers;
  std::vector<SimplicialComplex> ears;
  EarReport report;
};

/// "lex" (chamber order) or "random:<seed>". Throws InputError otherwise.
std::vector<ChamberId> opposite_order(const Building& building, ChamberId base, const std::string& spec);

/// Δ_1 = Σ_1 and Δ_j = chambers of Σ_j in no earlier Σ_i. The result is run
/// through verify_ears; VerificationError names the failing condition.
BuildingEars ear_decomposition(const Building& building, ChamberId base,
                               const std::vector<ChamberId>& order);

/// h_A = Σ_{w ∈ D(A)} q^{ℓ(w)} with A read through the color convention of flags.hpp.
FlagVector flag_h_formula(int n, int q);
FlagVector flag_h_direct(const Building& building);

}  // namespace earkit
