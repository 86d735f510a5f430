#include "earkit/ears.hpp"

#include <set>

#include "earkit/errors.hpp"
#include "earkit/m_vectors.hpp"

namespace earkit {

namespace {

using FaceSet = std::set<Face>;

void insert_faces(const SimplicialComplex& complex, FaceSet& into) {
  for (const auto& level : complex.faces_by_size()) into.insert(level.begin(), level.end());
}

FaceSet faces_of(const SimplicialComplex& complex) {
  FaceSet out;
  insert_faces(complex, out);
  return out;
}

EarCondition failure(int ear, std::optional<Face> witness, std::string detail) {
  return EarCondition{false, ear, std::move(witness), std::move(detail)};
}

void require_subcomplexes(const SimplicialComplex& complex, const std::vector<SimplicialComplex>& ears) {
  if (ears.empty()) throw InputError("ear decomposition has no ears");
  for (std::size_t j = 0; j < ears.size(); ++j) {
    if (ears[j].is_void()) throw InputError("ear " + std::to_string(j + 1) + " is void");
    for (const Face& facet : ears[j].facets()) {
      if (!complex.contains(facet)) {
        std::string face = "{";
        for (std::size_t t = 0; t < facet.size(); ++t) face += (t ? "," : "") + std::to_string(facet[t]);
        throw InputError("ear " + std::to_string(j + 1) + " is not a subcomplex: facet " + face + "}");
      }
    }
  }
}

}  // namespace

EarReport verify_ears(const SimplicialComplex& complex, const std::vector<SimplicialComplex>& ears,
                      const Field& field) {
  require_subcomplexes(complex, ears);
  EarReport report;
  report.m = ears.size();
  report.boundaries.resize(ears.size());
  const int d = complex.rank();

  for (std::size_t j = 0; j < ears.size() && report.condition1.ok; ++j) {
    const int index = static_cast<int>(j) + 1;
    const SimplicialComplex& ear = ears[j];
    if (!ear.is_pure() || ear.rank() != d) {
      report.condition1 = failure(index, std::nullopt, "ear is not pure of full dimension");
    } else if (j == 0) {
      const ManifoldCheck sphere = check_homology_sphere(ear, field);
      if (!sphere.ok) report.condition1 = failure(index, sphere.witness, "Δ_1: " + sphere.detail);
    } else {
      BallCheck ball = is_homology_ball(ear, field);
      if (!ball.ok) {
        report.condition1 = failure(index, ball.witness, "not a homology ball: " + ball.detail);
      } else {
        report.boundaries[j] = std::move(ball.boundary);
      }
    }
  }

  if (!report.condition1.ok) {
    report.condition2 = failure(0, std::nullopt, "not evaluated: condition 1 failed");
  } else {
    FaceSet earlier = faces_of(ears[0]);
    for (std::size_t j = 1; j < ears.size() && report.condition2.ok; ++j) {
      const int index = static_cast<int>(j) + 1;
      const FaceSet boundary = faces_of(report.boundaries[j]);
      for (const auto& level : ears[j].faces_by_size()) {
        for (const Face& face : level) {
          const bool shared = earlier.count(face) != 0;
          const bool on_boundary = boundary.count(face) != 0;
          if (shared != on_boundary) {
            report.condition2 = failure(index, face,
                                        shared ? "face shared with earlier ears is interior"
                                               : "boundary face missing from earlier ears");
            break;
          }
        }
        if (!report.condition2.ok) break;
      }
      insert_faces(ears[j], earlier);
    }
  }

  FaceSet all;
  for (const auto& ear : ears) insert_faces(ear, all);
  for (const Face& facet : complex.facets()) {
    if (all.count(facet) == 0) {
      report.condition3 = failure(0, facet, "facet not covered by any ear");
      break;
    }
  }
  return report;
}

ComphReport comph_check(const SimplicialComplex& complex, const std::vector<SimplicialComplex>& ears,
                        const Field& field) {
  require_subcomplexes(complex, ears);
  ComphReport out;
  const HVector h = h_vector(complex);
  const int d = h.d();
  out.rhs.assign(static_cast<std::size_t>(d) + 1, 0);
  for (const auto& ear : ears) {
    const HVector eh = h_vector(ear);
    for (std::size_t i = 0; i < eh.size() && i < out.rhs.size(); ++i) out.rhs[i] += eh[i];
    out.ear_h.push_back(eh);
  }
  for (int i = 0; i <= d; ++i) out.lhs.push_back(h[static_cast<std::size_t>(d - i)]);
  out.ok = out.lhs == out.rhs;

  out.complementary = complementary_h(h);
  out.boundary_g_sum.assign(out.complementary.size(), 0);
  bool balls = true;
  for (std::size_t j = 1; j < ears.size() && balls; ++j) {
    BallCheck ball = is_homology_ball(ears[j], field);
    if (!ball.ok) {
      balls = false;
      break;
    }
    const HVector bh = h_vector(ball.boundary);
    for (std::size_t i = 0; i < out.boundary_g_sum.size(); ++i) {
      const Count hi = i < bh.size() ? bh[i] : 0;
      const Count prev = (i == 0 || i - 1 >= bh.size()) ? 0 : bh[i - 1];
      out.boundary_g_sum[i] += hi - prev;
    }
  }
  out.g_identity_ok = balls && out.boundary_g_sum == out.complementary;
  return out;
}

TwoCmReport two_cm_consequence(const SimplicialComplex& complex, const Field& field,
                               std::size_t vertex_guard) {
  TwoCmReport out;
  out.connectivity = cm_connectivity(complex, field, vertex_guard).connectivity;
  out.ok = out.connectivity >= 2;
  return out;
}

}  // namespace earkit
