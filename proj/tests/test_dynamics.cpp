#include <gtest/gtest.h>

#include <map>

#include "oracles.hpp"
#include "rpm/dynamics.hpp"

using namespace rpm;

namespace {

HeightPath P(Family f, std::vector<Height> h) { return HeightPath(f, std::move(h)); }

}  // namespace

TEST(Dynamics, AbsorbAtLocalMinimum) {
  const DropResult r = drop_tile(P(Family::Dyck, {0, 1, 0, 1, 0}), 2, Model::A);
  EXPECT_EQ(r.path.heights(), (std::vector<Height>{0, 1, 2, 1, 0}));
  EXPECT_EQ(r.event.kind, EventKind::Absorb);
}

TEST(Dynamics, AvalancheToTheEqualHeight) {
  const DropResult r = drop_tile(P(Family::Dyck, {0, 1, 2, 3, 2, 1, 0}), 1, Model::A);
  EXPECT_EQ(r.path.heights(), (std::vector<Height>{0, 1, 0, 1, 0, 1, 0}));
  EXPECT_EQ(r.event.kind, EventKind::Avalanche);
  EXPECT_EQ(r.event.desorbed, 3);
  EXPECT_EQ(r.event.terminus, 5);
}

TEST(Dynamics, AvalancheLeavingThroughTheBoundary) {
  const DropResult r = drop_tile(P(Family::Ballot, {3, 2, 1, 0}), 1, Model::B);
  EXPECT_EQ(r.path.heights(), (std::vector<Height>{1, 2, 1, 0}));
  EXPECT_EQ(r.event.desorbed, 1);
  EXPECT_EQ(r.event.terminus, -1);
}

TEST(Dynamics, TotalAvalanche) {
  // L = 5 with a single height-1 minimum: every other height drops by 2.
  const DropResult r = drop_tile(P(Family::AnchoredCross, {3, 2, 1, 2, 3, 4}), 2, Model::C);
  EXPECT_EQ(r.path.heights(), (std::vector<Height>{1, 0, 1, 0, 1, 2}));
  EXPECT_EQ(r.event.kind, EventKind::TotalAvalanche);
  EXPECT_EQ(r.event.desorbed, 5);
}

TEST(Dynamics, ReflectAtPeaksAndBoundaries) {
  EXPECT_EQ(drop_tile(P(Family::Dyck, {0, 1, 0}), 1, Model::A).event.kind, EventKind::Reflect);
  EXPECT_EQ(drop_tile(P(Family::Ballot, {1, 0, 1, 0}), 0, Model::B).event.kind, EventKind::Reflect);
  EXPECT_EQ(drop_tile(P(Family::AnchoredCross, {1, 2, 1, 0}), 3, Model::C).event.kind, EventKind::Absorb);
  EXPECT_EQ(drop_tile(P(Family::AnchoredCross, {1, 2, 1, 2}), 3, Model::C).event.kind, EventKind::Reflect);
}

TEST(Dynamics, Errors) {
  EXPECT_THROW(drop_tile(P(Family::Dyck, {0, 1, 0}), 0, Model::A), std::out_of_range);
  EXPECT_THROW(drop_tile(P(Family::Dyck, {0, 1, 0}), 1, Model::C), std::invalid_argument);
}

TEST(Dynamics, AbsorbThenReflect) {
  for (Model m : {Model::A, Model::B, Model::C}) {
    for (int L = 1; L <= 8; ++L) {
      const auto [lo, hi] = site_range(m, L);
      for (const HeightPath& p : enumerate_family(family_of(m), L)) {
        for (int i = lo; i <= hi; ++i) {
          const DropResult r = drop_tile(p, i, m);
          if (r.event.kind != EventKind::Absorb) continue;
          EXPECT_EQ(drop_tile(r.path, i, m).event.kind, EventKind::Reflect);
        }
      }
    }
  }
}

TEST(Dynamics, AgreesWithRuleOracle) {
  for (Model m : {Model::A, Model::B, Model::C}) {
    for (int L = 1; L <= 10; ++L) {
      const auto [lo, hi] = site_range(m, L);
      for (const HeightPath& p : enumerate_family(family_of(m), L)) {
        for (int i = lo; i <= hi; ++i) {
          const DropResult r = drop_tile(p, i, m);
          EXPECT_EQ(oracle::heights_of(r.path), oracle::drop(oracle::heights_of(p), i));
          EXPECT_EQ(r.path.family(), p.family());
        }
      }
    }
  }
}

TEST(Dynamics, IntensityMatrixSmall) {
  // Order: pyramid [0,1,2,1,0], then zigzag [0,1,0,1,0]. Sites 1 and 3 peel
  // the pyramid, site 2 fills the zigzag.
  const IntensityMatrix h = intensity_matrix(Model::A, 4);
  ASSERT_EQ(h.dimension(), 2u);
  EXPECT_EQ(h.space()[0].heights(), (std::vector<Height>{0, 1, 2, 1, 0}));
  EXPECT_EQ(h.at(0, 0), 2);
  EXPECT_EQ(h.at(1, 0), -2);
  EXPECT_EQ(h.at(0, 1), -1);
  EXPECT_EQ(h.at(1, 1), 1);

  const IntensityMatrix one = intensity_matrix(Model::A, 2);
  ASSERT_EQ(one.dimension(), 1u);
  EXPECT_EQ(one.at(0, 0), 0);
}

TEST(Dynamics, IntensityMatchesDenseOracle) {
  for (Model m : {Model::A, Model::B, Model::C}) {
    for (int L = 1; L <= 7; ++L) {
      const IntensityMatrix h = intensity_matrix(m, L);
      std::vector<oracle::Heights> order;
      for (const HeightPath& p : h.space()) order.push_back(oracle::heights_of(p));
      const auto dense = oracle::generator(m, order);
      for (std::size_t r = 0; r < order.size(); ++r) {
        for (std::size_t c = 0; c < order.size(); ++c) EXPECT_EQ(h.at(r, c), dense[r][c]);
      }
    }
  }
}

TEST(Dynamics, ColumnSumsVanish) {
  for (Model m : {Model::A, Model::B, Model::C}) {
    for (int L = 1; L <= 10; ++L) {
      const IntensityMatrix h = intensity_matrix(m, L);
      std::map<std::uint32_t, long> sums;
      for (const MatrixEntry& e : h.sparse().entries) sums[e.col] += e.value;
      for (const auto& [col, s] : sums) EXPECT_EQ(s, 0) << to_string(m) << " L=" << L << " col " << col;
    }
  }
}

TEST(Dynamics, DyckSubspaceIsInvariant) {
  // Model A's generator is the restriction of the open-boundary action to
  // Dyck paths; no drop at a bulk site leaves the subspace.
  for (int L = 2; L <= 10; ++L) {
    for (const HeightPath& p : enumerate_family(Family::Dyck, L)) {
      for (int i = 1; i < L; ++i) {
        auto h = oracle::drop(oracle::heights_of(p), i);
        EXPECT_TRUE(oracle::valid(Family::Dyck, h));
      }
    }
  }
}

TEST(Dynamics, Caps) {
  EXPECT_THROW(intensity_matrix(Model::C, 13), CapExceeded);
  EXPECT_THROW(intensity_matrix(Model::A, 15), CapExceeded);
  EXPECT_THROW(intensity_matrix(Model::A, 0), std::invalid_argument);
  Caps caps;
  caps.c = 3;
  EXPECT_THROW(intensity_matrix(Model::C, 4, caps), CapExceeded);
}

TEST(Dynamics, BoundaryAbsorptionInBallotNeverNeedsFixup) {
  for (int L = 1; L <= 10; ++L) {
    for (const HeightPath& p : enumerate_family(Family::Ballot, L)) {
      for (int i = 0; i < L; ++i) EXPECT_NE(drop_tile(p, i, Model::B).event.kind, EventKind::TotalAvalanche);
    }
  }
}
