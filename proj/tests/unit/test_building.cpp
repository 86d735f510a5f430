#include <gtest/gtest.h>

#include <set>

#include "../oracles.hpp"
#include "earkit/building.hpp"
#include "earkit/errors.hpp"
#include "earkit/homology.hpp"
#include "earkit/weak_order.hpp"

using namespace earkit;

TEST(GaloisField, AxiomsHold) {
  for (int q : {2, 3, 4, 5, 7, 8, 9}) {
    const FiniteField f(q);
    for (int a = 0; a < q; ++a) {
      EXPECT_EQ(f.add(a, f.neg(a)), 0);
      EXPECT_EQ(f.mul(a, 1), a);
      if (a != 0) { EXPECT_EQ(f.mul(a, f.inv(a)), 1) << q << " " << a; }
      for (int b = 0; b < q; ++b) {
        EXPECT_EQ(f.mul(a, b), f.mul(b, a));
        for (int c = 0; c < q; ++c) {
          EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    EXPECT_THROW(f.inv(0), InputError);
  }
  EXPECT_THROW(FiniteField(6), InputError);
  EXPECT_THROW(FiniteField(1), InputError);
}

TEST(Building, ChamberCountMatchesFlagCount) {
  for (int n = 2; n <= 4; ++n) {
    for (int q : {2, 3, 4, 5}) EXPECT_EQ(chamber_count(n, q), oracle::complete_flags(n, q));
  }
}

TEST(Building, RankOne) {
  const Building b = Building::build(2, 3);
  EXPECT_EQ(b.num_chambers(), 4U);
  EXPECT_EQ(b.complex().dim(), 0);
  EXPECT_EQ(b.opposite_chambers(0).size(), 3U);
  EXPECT_EQ(b.diameter(), 1);
}

TEST(Building, FanoFlagComplex) {
  const Building b = Building::build(3, 2);
  EXPECT_EQ(b.num_chambers(), 21U);
  EXPECT_EQ(b.complex().num_vertices(), 14U);
  EXPECT_EQ(b.complex().dim(), 1);
  EXPECT_TRUE(check_balanced(b.complex(), b.coloring()));
  int max_distance = 0;
  for (ChamberId c = 0; c < b.num_chambers(); ++c) {
    EXPECT_EQ(b.neighbors(c).size(), 2U * 2U);
    for (int dist : b.distances_from(c)) max_distance = std::max(max_distance, dist);
  }
  EXPECT_EQ(max_distance, 3);
  const auto opp = b.opposite_chambers(0);
  EXPECT_EQ(opp.size(), 8U);
  std::set<std::vector<ChamberId>> apartments;
  for (ChamberId o : opp) {
    auto ap = b.apartment_of(0, o);
    EXPECT_EQ(ap.size(), 6U);
    EXPECT_TRUE(is_homology_sphere(b.subcomplex(ap), Field::rationals()));
    std::sort(ap.begin(), ap.end());
    apartments.insert(ap);
  }
  EXPECT_EQ(apartments.size(), 8U);
  const ChamberId near = b.neighbors(0)[0];
  EXPECT_THROW(b.apartment_of(0, near), InputError);
  EXPECT_EQ(b.geodesics(0, opp[0]).size(), 2U);
}

TEST(Building, ProjectionIsNearest) {
  const Building b = Building::build(3, 3);
  EXPECT_EQ(b.num_chambers(), 52U);
  for (ChamberId tau = 0; tau < b.num_chambers(); tau += 5) {
    const auto dist = b.distances_from(tau);
    for (Vertex v : b.complex().vertices()) {
      const Face rho{v};
      const ChamberId p = b.projection(rho, tau);
      const Face& chamber = b.chamber(p);
      EXPECT_TRUE(std::binary_search(chamber.begin(), chamber.end(), v));
      for (ChamberId c = 0; c < b.num_chambers(); ++c) {
        const Face& other = b.chamber(c);
        if (c != p && std::binary_search(other.begin(), other.end(), v)) {
          EXPECT_GT(dist[c], dist[p]);
        }
      }
    }
  }
  EXPECT_EQ(b.projection(b.chamber(7), 0), 7U);
}

TEST(Building, GuardsAndInputs) {
  EXPECT_THROW(Building::build(5, 2), InputError);
  EXPECT_THROW(Building::build(3, 6), InputError);
  EXPECT_THROW(Building::build(4, 5), GuardRefusal);
  EXPECT_THROW(Building::build(3, 3, 10), GuardRefusal);
  const Building b = Building::build(2, 2);
  EXPECT_THROW(b.chamber_id(Face{1, 2, 3}), InputError);
  EXPECT_THROW(opposite_order(b, 0, "shuffled"), InputError);
}

TEST(Building, PrimePowerField) {
  const Building b = Building::build(3, 4);
  EXPECT_EQ(b.num_chambers(), static_cast<std::size_t>(oracle::complete_flags(3, 4)));
  EXPECT_EQ(flag_h_direct(b), flag_h_formula(3, 4));
}

TEST(Building, FlagHFormulaMatchesDirect) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}, {3, 3}, {4, 2}}) {
    const Building b = Building::build(n, q);
    EXPECT_EQ(flag_h_direct(b), flag_h_formula(n, q)) << n << " " << q;
  }
  const FlagVector fano = flag_h_formula(3, 2);
  EXPECT_EQ(fano.values(), (std::vector<Count>{1, 6, 6, 8}));
}

TEST(Building, EarDecompositionByApartments) {
  for (auto [n, q] : std::vector<std::pair<int, int>>{{2, 2}, {3, 2}, {3, 3}, {4, 2}}) {
    const Building b = Building::build(n, q);
    for (const std::string spec : {"lex", "random:11"}) {
      const BuildingEars ears = ear_decomposition(b, 0, opposite_order(b, 0, spec));
      EXPECT_TRUE(ears.report.ok());
      Count expected = 1;
      for (int t = 0; t < n * (n - 1) / 2; ++t) expected *= q;
      EXPECT_EQ(static_cast<Count>(ears.report.m), expected);
      std::size_t total = 0;
      for (const auto& chambers : ears.ear_chambers) total += chambers.size();
      EXPECT_EQ(total, b.num_chambers());
    }
  }
}

TEST(Building, FlagInequalityForDominatingPairs) {
  const Building b = Building::build(4, 2);
  const FlagVector h = flag_h_direct(b);
  const CoxeterGroup g = CoxeterGroup::symmetric(4);
  for (const auto& [a, bb] : solve_problem(g, 1, 0).pairs) EXPECT_LE(h[bb], h[a]);
}
