#include <gtest/gtest.h>

#include "../oracles.hpp"
#include "earkit/errors.hpp"
#include "earkit/flags.hpp"
#include "earkit/generators.hpp"

using namespace earkit;

TEST(Flags, BarycentricSubdivisionCounts) {
  auto [c, col] = barycentric_sd_simplex_boundary(3);
  EXPECT_EQ(f_vector(c).values, (std::vector<Count>{1, 14, 36, 24}));
  EXPECT_TRUE(check_balanced(c, col));
  const FlagVector f = flag_f(c, col);
  // Σ_{|A| = i} f_A = f_i
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(f.rank_sum(i), f_vector(c).values[static_cast<std::size_t>(i)]);
  const FlagVector h = flag_h(c, col);
  for (int i = 0; i <= 3; ++i) EXPECT_EQ(h.rank_sum(i), h_vector(c).values[static_cast<std::size_t>(i)]);
  EXPECT_EQ(flag_f_from_h(h), f);
  // Boolean lattice: h_A counts permutations of [4] with descent set A.
  for (ColorSet a = 0; a < 8; ++a) {
    Count count = 0;
    for (const auto& p : oracle::permutations(4)) count += oracle::descents(p) == a ? 1 : 0;
    EXPECT_EQ(h[a], count) << a;
  }
}

TEST(Flags, SmallSubdivisions) {
  auto [hex, col] = barycentric_sd_simplex_boundary(2);
  EXPECT_EQ(f_vector(hex).values, (std::vector<Count>{1, 6, 6}));
  EXPECT_EQ(col.num_colors(), 2);
  auto [pts, col1] = barycentric_sd_simplex_boundary(1);
  EXPECT_EQ(f_vector(pts).values, (std::vector<Count>{1, 2}));
  EXPECT_THROW(barycentric_sd_simplex_boundary(6), GuardRefusal);
}

TEST(Flags, UnbalancedColoringRejected) {
  const auto tri = simplex_boundary(2);
  const Coloring bad(2, {{1, 0}, {2, 0}, {3, 1}});
  EXPECT_FALSE(check_balanced(tri, bad));
  EXPECT_THROW(flag_f(tri, bad), InputError);
}

TEST(Flags, ColorRestriction) {
  auto [c, col] = barycentric_sd_simplex_boundary(3);
  const auto r = color_restriction(c, col, 0b101);
  const FlagVector f = flag_f(c, col);
  EXPECT_EQ(f_vector(r).values[2], f[0b101]);
}
