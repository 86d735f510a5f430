#pragma once

// Standard example complexes with canonical vertex numberings.
//
//   simplex_boundary(d)          vertices 1..d+1
//   cross_polytope_boundary(d)   antipodal pairs (2k-1, 2k), k = 1..d
//   ps_sphere(parts)             consecutive blocks of parts[0], parts[1], ... vertices
//   uniform_matroid_complex(k,n) vertices 1..n
//   barycentric subdivision      proper nonempty subsets of [d+1], numbered by
//                                (cardinality, lexicographic); color = cardinality - 1

#include <utility>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/flags.hpp"

namespace earkit {

/// Boundary of the d-simplex, dimension d-1. Requires d >= 1.
SimplicialComplex simplex_boundary(int d);
/// Boundary of the d-dimensional cross-polytope. Requires d >= 1.
SimplicialComplex cross_polytope_boundary(int d);
/// Join of ∂(simplex on p vertices) over p in parts; each p >= 2.
SimplicialComplex ps_sphere(const std::vector<int>& parts);
/// All subsets of [n] of size <= k. Requires 1 <= k <= n.
SimplicialComplex uniform_matroid_complex(int k, int n);
/// Ears of a PS-ear decomposition of U_{k,n}, Δ_1 first.
std::vector<SimplicialComplex> uniform_matroid_ears(int k, int n);

inline constexpr int kMaxBarycentricDimension = 5;
/// Order complex of proper nonempty subsets of [d+1], balanced by cardinality.
/// Throws GuardRefusal for d > kMaxBarycentricDimension.
std::pair<SimplicialComplex, Coloring> barycentric_sd_simplex_boundary(int d);

}  // namespace earkit
