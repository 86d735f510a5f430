#include "earkit/io.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "earkit/errors.hpp"

namespace earkit {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

Face parse_face(const std::string& line, std::size_t line_no) {
  std::istringstream tokens(line);
  Face face;
  std::string token;
  while (tokens >> token) {
    std::size_t used = 0;
    long value = 0;
    try {
      value = std::stol(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || value <= 0) {
      throw InputError("line " + std::to_string(line_no) + ": expected a positive integer, got '" +
                       token + "'");
    }
    face.push_back(static_cast<Vertex>(value));
  }
  return face;
}

std::ifstream open_in(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  return in;
}

std::ofstream open_out(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw InputError("cannot write " + path.string());
  return out;
}

}  // namespace

SimplicialComplex read_facets(std::istream& in) {
  std::vector<Face> facets;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    facets.push_back(parse_face(body, line_no));
  }
  return SimplicialComplex::from_facets(std::move(facets));
}

SimplicialComplex read_facet_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_facets(in);
}

void write_facets(std::ostream& out, const SimplicialComplex& complex) {
  for (const Face& facet : complex.facets()) {
    for (std::size_t i = 0; i < facet.size(); ++i) {
      if (i) out << ' ';
      out << facet[i];
    }
    out << '\n';
  }
}

void write_facet_file(const std::filesystem::path& path, const SimplicialComplex& complex) {
  auto out = open_out(path);
  write_facets(out, complex);
}

Coloring read_coloring(std::istream& in, int num_colors) {
  std::map<Vertex, Color> colors;
  std::string line;
  std::size_t line_no = 0;
  int max_color = -1;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty() || body.front() == '#') continue;
    std::istringstream tokens(body);
    long vertex = 0;
    long color = -1;
    std::string extra;
    if (!(tokens >> vertex >> color) || (tokens >> extra) || vertex <= 0 || color < 0) {
      throw InputError("coloring line " + std::to_string(line_no) + ": expected 'vertex color'");
    }
    if (!colors.emplace(static_cast<Vertex>(vertex), static_cast<Color>(color)).second) {
      throw InputError("coloring line " + std::to_string(line_no) + ": vertex colored twice");
    }
    max_color = std::max(max_color, static_cast<int>(color));
  }
  return Coloring(num_colors < 0 ? max_color + 1 : num_colors, std::move(colors));
}

Coloring read_coloring_file(const std::filesystem::path& path, int num_colors) {
  auto in = open_in(path);
  return read_coloring(in, num_colors);
}

void write_coloring(std::ostream& out, const Coloring& coloring) {
  for (const auto& [v, c] : coloring.map()) out << v << ' ' << c << '\n';
}

void write_coloring_file(const std::filesystem::path& path, const Coloring& coloring) {
  auto out = open_out(path);
  write_coloring(out, coloring);
}

std::vector<SimplicialComplex> read_ears(std::istream& in) {
  std::vector<SimplicialComplex> ears;
  std::vector<Face> block;
  std::string line;
  std::size_t line_no = 0;
  auto flush = [&] {
    if (!block.empty()) ears.push_back(SimplicialComplex::from_facets(std::move(block)));
    block.clear();
  };
  while (std::getline(in, line)) {
    ++line_no;
    const std::string body = trim(line);
    if (body.empty()) {
      flush();
      continue;
    }
    if (body.front() == '#') continue;
    block.push_back(parse_face(body, line_no));
  }
  flush();
  return ears;
}

std::vector<SimplicialComplex> read_ears_file(const std::filesystem::path& path) {
  auto in = open_in(path);
  return read_ears(in);
}

void write_ears(std::ostream& out, const std::vector<SimplicialComplex>& ears) {
  for (std::size_t j = 0; j < ears.size(); ++j) {
    if (j) out << '\n';
    write_facets(out, ears[j]);
  }
}

void write_ears_file(const std::filesystem::path& path, const std::vector<SimplicialComplex>& ears) {
  auto out = open_out(path);
  write_ears(out, ears);
}

}  // namespace earkit
