#pragma once

// Finite abstract simplicial complexes stored by their facets.

#include <cstdint>
#include <span>
#include <optional>
#include <utility>
#include <vector>

namespace earkit {

using Vertex = int;
/// A face is a strictly increasing list of positive vertex labels.
using Face = std::vector<Vertex>;
using Count = std::int64_t;

/// f_i = number of faces of cardinality i, for i = 0..d.
struct FVector {
  std::vector<Count> values;

  std::size_t size() const { return values.size(); }
  Count operator[](std::size_t i) const { return values[i]; }
  int d() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const FVector&) const = default;
};

/// h-vector (h_0..h_d); the linear transform of the f-vector.
struct HVector {
  std::vector<Count> values;

  std::size_t size() const { return values.size(); }
  Count operator[](std::size_t i) const { return values[i]; }
  int d() const { return static_cast<int>(values.size()) - 1; }
  bool operator==(const HVector&) const = default;
};

class SimplicialComplex {
 public:
  /// The void complex: no faces at all, not even the empty face.
  SimplicialComplex() = default;

  /// Keeps the inclusion-maximal sets of `facets`. An empty list gives the
  /// void complex; a list holding only the empty set gives {∅}.
  /// Throws InputError on non-positive labels.
  static SimplicialComplex from_facets(std::vector<Face> facets);

  /// The complex {∅} whose only face is the empty face.
  static SimplicialComplex empty_face();

  bool is_void() const { return void_; }
  /// Dimension; -1 for {∅} and for the void complex.
  int dim() const { return dim_; }
  /// d = dim + 1, the cardinality of the largest face.
  int rank() const { return dim_ + 1; }

  const std::vector<Face>& facets() const { return facets_; }
  /// Vertex support, sorted.
  const std::vector<Vertex>& vertices() const { return vertices_; }
  std::size_t num_vertices() const { return vertices_.size(); }

  bool is_pure() const;
  bool contains(std::span<const Vertex> face) const;

  /// All faces grouped by cardinality: result[k] lists the faces of size k in
  /// lexicographic order. result[0] = {∅} for a nonvoid complex.
  std::vector<std::vector<Face>> faces_by_size() const;
  /// Faces of one cardinality, lexicographic.
  std::vector<Face> faces_of_size(int k) const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Face> facets_;
  std::vector<Vertex> vertices_;
  int dim_ = -1;
  bool void_ = true;
};

FVector f_vector(const SimplicialComplex& complex);
HVector h_vector(const FVector& f);
HVector h_vector(const SimplicialComplex& complex);
FVector f_from_h(const HVector& h);

SimplicialComplex link(const SimplicialComplex& complex, std::span<const Vertex> face);
/// Removes every face meeting `removed`.
SimplicialComplex deletion(const SimplicialComplex& complex, std::span<const Vertex> removed);
SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b);
/// Subcomplex generated by an arbitrary collection of faces.
SimplicialComplex closure(std::vector<Face> faces);

/// Short simplicial h-vector: entry i is the sum of h_i(lk σ) over faces σ of
/// cardinality m. Requires a pure complex and 0 <= m <= d; the result has
/// d - m + 1 entries.
std::vector<Count> short_h(const SimplicialComplex& complex, int m);

/// First (m, i) violating (m+1) h̃^{(m+1)}_{i-1} = i h̃^{(m)}_i + (d-m-i+1) h̃^{(m)}_{i-1},
/// over 0 <= m <= d-1 and 1 <= i <= d-m. Pure complexes only.
std::optional<std::pair<int, int>> short_h_recursion_failure(const SimplicialComplex& complex);

/// Binomial coefficient with C(n, k) = 0 outside 0 <= k <= n.
Count binomial(Count n, Count k);

bool is_subset(std::span<const Vertex> small, std::span<const Vertex> big);

}  // namespace earkit
