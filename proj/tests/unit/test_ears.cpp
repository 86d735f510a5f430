#include <gtest/gtest.h>

#include "earkit/ears.hpp"
#include "earkit/errors.hpp"
#include "earkit/generators.hpp"
#include "earkit/m_vectors.hpp"

using namespace earkit;

namespace {

SimplicialComplex sc(std::vector<Face> facets) { return SimplicialComplex::from_facets(facets); }

// Octahedron split into the hemispheres around vertex 1 and vertex 2.
const SimplicialComplex kOct = cross_polytope_boundary(3);
const SimplicialComplex kNorth = sc({{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}});
const SimplicialComplex kSouth = sc({{2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}});

}  // namespace

TEST(Ears, SphereIsItsOwnDecomposition) {
  const EarReport r = verify_ears(kOct, {kOct});
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.m, 1U);
  EXPECT_FALSE(r.polytopal_verified);
}

TEST(Ears, BallAsFirstEarFails) {
  const EarReport r = verify_ears(kOct, {kNorth, kSouth});
  EXPECT_FALSE(r.ok());
  EXPECT_FALSE(r.condition1.ok);
  EXPECT_EQ(r.condition1.ear, 1);
}

TEST(Ears, MissingFacetsFailCoverage) {
  const SimplicialComplex two_spheres =
      SimplicialComplex::from_facets([] {
        std::vector<Face> f = kOct.facets();
        for (Face x : kNorth.facets()) {
          for (Vertex& v : x) v = (v == 1) ? 7 : v;
          f.push_back(x);
        }
        return f;
      }());
  const EarReport r = verify_ears(two_spheres, {kOct});
  EXPECT_TRUE(r.condition1.ok);
  EXPECT_FALSE(r.condition3.ok);
}

TEST(Ears, BadAttachmentFailsConditionTwo) {
  // Cone over part of the equator attached along a path: boundary mismatch.
  const SimplicialComplex sphere = simplex_boundary(3);
  const SimplicialComplex ear = sc({{1, 2, 5}, {2, 3, 5}});
  std::vector<Face> all = sphere.facets();
  for (const Face& f : ear.facets()) all.push_back(f);
  const EarReport r = verify_ears(SimplicialComplex::from_facets(all), {sphere, ear});
  EXPECT_TRUE(r.condition1.ok);
  EXPECT_FALSE(r.condition2.ok);
  EXPECT_EQ(r.condition2.ear, 2);
}

TEST(Ears, NotASubcomplexThrows) {
  EXPECT_THROW(verify_ears(kNorth, {kOct}), InputError);
}

TEST(Ears, UniformMatroid) {
  for (auto [k, n] : std::vector<std::pair<int, int>>{{2, 4}, {2, 5}, {3, 5}, {3, 6}}) {
    const SimplicialComplex u = uniform_matroid_complex(k, n);
    const auto ears = uniform_matroid_ears(k, n);
    const EarReport r = verify_ears(u, ears);
    EXPECT_TRUE(r.ok()) << k << " " << n << " " << r.condition1.detail << r.condition2.detail;
    const HVector h = h_vector(u);
    EXPECT_EQ(static_cast<Count>(r.m), h.values.back());
    const ComphReport c = comph_check(u, ears);
    EXPECT_TRUE(c.ok);
    EXPECT_TRUE(c.g_identity_ok);
    EXPECT_TRUE(chari_check(h).pass);
  }
}

TEST(Ears, OrderMatters) {
  auto ears = uniform_matroid_ears(2, 4);
  ASSERT_GE(ears.size(), 2U);
  std::swap(ears[0], ears.back());
  EXPECT_FALSE(verify_ears(uniform_matroid_complex(2, 4), ears).ok());
}

TEST(Ears, ComphOnSphere) {
  const ComphReport c = comph_check(kOct, {kOct});
  EXPECT_TRUE(c.ok);
  EXPECT_EQ(c.lhs, (std::vector<Count>{1, 3, 3, 1}));
  EXPECT_EQ(c.complementary, (std::vector<Count>{0, 0}));
  EXPECT_TRUE(c.g_identity_ok);
}

TEST(Ears, TwoCmConsequence) {
  const TwoCmReport oct = two_cm_consequence(kOct);
  EXPECT_TRUE(oct.ok);
  EXPECT_EQ(oct.connectivity, 2);
  EXPECT_FALSE(two_cm_consequence(kNorth).ok);
}
