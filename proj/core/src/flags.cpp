#include "earkit/flags.hpp"

#include <bit>
#include <string>

#include "earkit/errors.hpp"

namespace earkit {

Coloring::Coloring(int num_colors, std::map<Vertex, Color> color_of)
    : num_colors_(num_colors), color_of_(std::move(color_of)) {
  if (num_colors < 0 || num_colors > 30) throw InputError("coloring: bad number of colors");
  for (const auto& [v, c] : color_of_) {
    if (c < 0 || c >= num_colors) {
      throw InputError("coloring: color " + std::to_string(c) + " of vertex " +
                       std::to_string(v) + " outside 0.." + std::to_string(num_colors - 1));
    }
  }
}

Color Coloring::of(Vertex v) const {
  auto it = color_of_.find(v);
  if (it == color_of_.end()) throw InputError("coloring: vertex " + std::to_string(v) + " has no color");
  return it->second;
}

ColorSet Coloring::colors_of(const Face& face) const {
  ColorSet mask = 0;
  for (Vertex v : face) mask |= ColorSet{1} << of(v);
  return mask;
}

int popcount(ColorSet a) { return std::popcount(a); }

Count FlagVector::rank_sum(int size) const {
  Count sum = 0;
  for (ColorSet a = 0; a < values_.size(); ++a) {
    if (popcount(a) == size) sum += values_[a];
  }
  return sum;
}

bool check_balanced(const SimplicialComplex& complex, const Coloring& coloring) {
  for (Vertex v : complex.vertices()) coloring.of(v);
  // Rainbow facets imply rainbow faces.
  for (const Face& facet : complex.facets()) {
    if (popcount(coloring.colors_of(facet)) != static_cast<int>(facet.size())) return false;
  }
  return true;
}

SimplicialComplex color_restriction(const SimplicialComplex& complex,
                                    const Coloring& coloring, ColorSet allowed) {
  if (complex.is_void()) return complex;
  std::vector<Face> pieces;
  for (const Face& facet : complex.facets()) {
    Face kept;
    for (Vertex v : facet) {
      if (allowed >> coloring.of(v) & 1U) kept.push_back(v);
    }
    pieces.push_back(std::move(kept));
  }
  return SimplicialComplex::from_facets(std::move(pieces));
}

FlagVector flag_f(const SimplicialComplex& complex, const Coloring& coloring) {
  if (!check_balanced(complex, coloring)) throw InputError("flag vectors need a balanced complex");
  FlagVector f(coloring.num_colors());
  for (const auto& level : complex.faces_by_size()) {
    for (const Face& face : level) ++f[coloring.colors_of(face)];
  }
  return f;
}

FlagVector flag_h_from_f(const FlagVector& f) {
  FlagVector h(f.num_colors());
  const ColorSet full = (ColorSet{1} << f.num_colors()) - 1;
  for (ColorSet a = 0; a <= full; ++a) {
    Count sum = 0;
    // Iterate subsets B of A.
    for (ColorSet b = a;; b = (b - 1) & a) {
      sum += ((popcount(a & ~b) % 2) == 0 ? 1 : -1) * f[b];
      if (b == 0) break;
    }
    h[a] = sum;
  }
  return h;
}

FlagVector flag_f_from_h(const FlagVector& h) {
  FlagVector f(h.num_colors());
  const ColorSet full = (ColorSet{1} << h.num_colors()) - 1;
  for (ColorSet a = 0; a <= full; ++a) {
    Count sum = 0;
    for (ColorSet b = a;; b = (b - 1) & a) {
      sum += h[b];
      if (b == 0) break;
    }
    f[a] = sum;
  }
  return f;
}

FlagVector flag_h(const SimplicialComplex& complex, const Coloring& coloring) {
  return flag_h_from_f(flag_f(complex, coloring));
}

}  // namespace earkit
