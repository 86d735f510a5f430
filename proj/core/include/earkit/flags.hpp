#pragma once

// Balanced colorings and flag f/h-vectors.

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "earkit/complex.hpp"

namespace earkit {

using Color = int;
/// Subset of colors {0..d-1}; bit c set iff color c is present.
using ColorSet = std::uint32_t;

class Coloring {
 public:
  Coloring() = default;
  Coloring(int num_colors, std::map<Vertex, Color> color_of);

  int num_colors() const { return num_colors_; }
  /// Throws InputError if the vertex has no color.
  Color of(Vertex v) const;
  bool has(Vertex v) const { return color_of_.count(v) != 0; }
  const std::map<Vertex, Color>& map() const { return color_of_; }

  /// Optional display names for colors (e.g. poset ranks).
  std::vector<std::string> legend;

  /// Color set of a face; throws if a vertex is uncolored.
  ColorSet colors_of(const Face& face) const;

 private:
  int num_colors_ = 0;
  std::map<Vertex, Color> color_of_;
};

/// Flag f- or h-vector indexed by color subsets.
class FlagVector {
 public:
  FlagVector() = default;
  explicit FlagVector(int num_colors)
      : num_colors_(num_colors), values_(std::size_t{1} << num_colors, 0) {}

  int num_colors() const { return num_colors_; }
  Count operator[](ColorSet a) const { return values_.at(a); }
  Count& operator[](ColorSet a) { return values_.at(a); }
  const std::vector<Count>& values() const { return values_; }

  /// Sum of entries over subsets of the given size.
  Count rank_sum(int size) const;

  bool operator==(const FlagVector&) const = default;

 private:
  int num_colors_ = 0;
  std::vector<Count> values_;
};

int popcount(ColorSet a);

/// True iff every face is rainbow. Throws InputError on an uncolored vertex.
bool check_balanced(const SimplicialComplex& complex, const Coloring& coloring);

/// Δ_A: faces all of whose vertices have colors in A.
SimplicialComplex color_restriction(const SimplicialComplex& complex,
                                    const Coloring& coloring, ColorSet allowed);

/// Throws InputError if the complex is not balanced under `coloring`.
FlagVector flag_f(const SimplicialComplex& complex, const Coloring& coloring);
FlagVector flag_h(const SimplicialComplex& complex, const Coloring& coloring);

/// h_A = Σ_{B⊆A} (-1)^{|A-B|} f_B.
FlagVector flag_h_from_f(const FlagVector& f);
/// f_A = Σ_{B⊆A} h_B.
FlagVector flag_f_from_h(const FlagVector& h);

}  // namespace earkit
