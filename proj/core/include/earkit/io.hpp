#pragma once

// Text formats:
//   facet file    one facet per line, space-separated positive integers;
//                 lines starting with '#' are comments.
//   coloring file one "vertex color" pair per line.
//   ears file     facet-list blocks separated by blank lines.

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "earkit/complex.hpp"
#include "earkit/flags.hpp"

namespace earkit {

SimplicialComplex read_facets(std::istream& in);
SimplicialComplex read_facet_file(const std::filesystem::path& path);
void write_facets(std::ostream& out, const SimplicialComplex& complex);
void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& complex);

/// `num_colors` < 0 means one more than the largest color read.
Coloring read_coloring(std::istream& in, int num_colors = -1);
Coloring read_coloring_file(const std::filesystem::path& path, int num_colors = -1);
void write_coloring(std::ostream& out, const Coloring& coloring);
void write_coloring_file(const std::filesystem::path& path, const Coloring& coloring);

std::vector<SimplicialComplex> read_ears(std::istream& in);
std::vector<SimplicialComplex> read_ears_file(const std::filesystem::path& path);
void write_ears(std::ostream& out, const std::vector<SimplicialComplex>& ears);
void write_ears_file(const std::filesystem::path& path, const std::vector<SimplicialComplex>& ears);

}  // namespace earkit
