#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "rpm/paths.hpp"

using namespace rpm;

namespace {

HeightPath P(Family f, std::vector<Height> h) { return HeightPath(f, std::move(h)); }

std::vector<Contact> C(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<Contact> out;
  for (auto [p, l] : xs) out.push_back({p, l});
  return out;
}

}  // namespace

TEST(Paths, FamilySizes) {
  EXPECT_EQ(enumerate_family(Family::AnchoredCross, 3).size(), 8u);
  EXPECT_EQ(enumerate_family(Family::Ballot, 4).size(), 6u);
  const auto dyck = enumerate_family(Family::Dyck, 4);
  ASSERT_EQ(dyck.size(), 2u);
  std::set<std::vector<Height>> got{dyck[0].heights(), dyck[1].heights()};
  EXPECT_EQ(got, (std::set<std::vector<Height>>{{0, 1, 0, 1, 0}, {0, 1, 2, 1, 0}}));
}

TEST(Paths, CountsMatchClosedForms) {
  for (int L = 1; L <= 14; ++L) {
    const int p = L / 2;
    const mpz_class catalan = oracle::binomial(2 * p, p) / (p + 1);
    const mpz_class catalan_next = oracle::binomial(2 * p + 2, p + 1) / (p + 2);
    EXPECT_EQ(enumerate_family(Family::AnchoredCross, L).size(), 1u << L) << L;
    EXPECT_EQ(mpz_class(enumerate_family(Family::Ballot, L).size()), oracle::binomial(L, L / 2)) << L;
    EXPECT_EQ(mpz_class(enumerate_family(Family::Dyck, L).size()), L % 2 == 0 ? catalan : catalan_next) << L;
  }
}

TEST(Paths, EnumerationMatchesBruteForce) {
  for (Family f : {Family::Dyck, Family::Ballot, Family::AnchoredCross}) {
    for (int L = 1; L <= 10; ++L) {
      std::set<oracle::Heights> expected;
      for (const auto& h : oracle::family(f, L)) expected.insert(h);
      std::set<oracle::Heights> got;
      for (const HeightPath& p : enumerate_family(f, L)) got.insert(oracle::heights_of(p));
      EXPECT_EQ(got, expected) << to_string(f) << " L=" << L;
    }
  }
}

TEST(Paths, CanonicalOrderIsLexOnStepWords) {
  for (Family f : {Family::Dyck, Family::Ballot, Family::AnchoredCross}) {
    const auto paths = enumerate_family(f, 8);
    for (std::size_t i = 1; i < paths.size(); ++i) {
      // Step words compared directly, up before down.
      std::vector<int> a, b;
      for (int k = 0; k < 8; ++k) {
        a.push_back(paths[i - 1][k + 1] > paths[i - 1][k] ? 0 : 1);
        b.push_back(paths[i][k + 1] > paths[i][k] ? 0 : 1);
      }
      EXPECT_LT(a, b);
    }
    EXPECT_EQ(paths, enumerate_family(f, 8));
  }
}

TEST(Paths, InvalidHeightsRejected) {
  EXPECT_THROW(P(Family::Dyck, {0, 1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(P(Family::Ballot, {0, 1, 2}), std::invalid_argument);
  EXPECT_THROW(P(Family::AnchoredCross, {2, 3, 2}), std::invalid_argument);
  EXPECT_THROW(P(Family::AnchoredCross, {0, 1}), std::invalid_argument);
}

TEST(Paths, Contacts) {
  const std::vector<Height> h{1, 2, 1, 0, 1, 0};
  EXPECT_EQ(contacts(P(Family::Dyck, h), Model::A), C({{3, 0}}));
  EXPECT_EQ(contacts(P(Family::Ballot, h), Model::B), C({{0, 1}, {3, 0}}));
  EXPECT_TRUE(contacts(P(Family::Dyck, {0, 1, 2, 1, 0}), Model::A).empty());
  EXPECT_EQ(contacts(P(Family::AnchoredCross, {0, 1, 0, 1, 0}), Model::C), C({{0, 0}, {2, 0}, {4, 0}}));
  EXPECT_THROW(contacts(P(Family::Dyck, {0, 1, 0}), Model::B), std::invalid_argument);
}

TEST(Paths, InteriorMin) {
  EXPECT_EQ(interior_min(P(Family::Dyck, {0, 1, 2, 1, 0}), Model::A), 1);
  EXPECT_EQ(interior_min(P(Family::Ballot, {2, 1, 2, 1, 2, 1, 0}), Model::B), 1);
  EXPECT_EQ(interior_min(P(Family::AnchoredCross, {1, 2, 3, 2, 1, 2, 1, 2}), Model::C), 1);
}

TEST(Paths, LevelSetsByContacts) {
  const HeightPath pyramid = P(Family::Dyck, {0, 1, 2, 3, 2, 1, 0});
  EXPECT_TRUE(in_level_set(pyramid, Model::A, 2));
  const HeightPath zig = P(Family::Dyck, {0, 1, 0, 1, 0, 1, 0});
  EXPECT_TRUE(in_level_set(zig, Model::A, 0));
  EXPECT_FALSE(in_level_set(zig, Model::A, 1));
  EXPECT_EQ(count_contacts(zig, Model::A, 0), 2);
}

TEST(Paths, Shapes) {
  EXPECT_EQ(build_shape(shape::W{6, 2, 1}).heights(), (std::vector<Height>{2, 1, 2, 1, 2, 1, 0}));
  EXPECT_EQ(build_shape(shape::W{6, 0, 2}).heights(), (std::vector<Height>{0, 1, 2, 3, 2, 1, 0}));
  EXPECT_EQ(build_shape(shape::X{6, 1}).heights(), (std::vector<Height>{2, 1, 2, 1, 2, 1, 2}));
  EXPECT_THROW(build_shape(shape::W{6, 1, 1}), std::invalid_argument);
  EXPECT_THROW(build_shape(shape::X{5, 1}), std::invalid_argument);
}

TEST(Paths, WContactCount) {
  for (int L = 1; L <= 12; ++L) {
    for (int h0 = L % 2; h0 <= L; h0 += 2) {
      for (int s = std::max(0, h0 - 1); s <= (L + h0) / 2 - 1; ++s) {
        const HeightPath w = build_shape(shape::W{L, h0, s});
        // Bulk contacts only; h_0 = s adds a boundary contact on top.
        int n = 0;
        for (const Contact& c : contacts(w, Model::B)) n += c.level == s && c.position > 0;
        EXPECT_EQ(n, (L + h0) / 2 - s - 1) << L << " " << h0 << " " << s;
      }
    }
  }
}

TEST(Paths, SubstrateIsPointwiseMinimal) {
  for (Model m : {Model::A, Model::B, Model::C}) {
    for (int L = 1; L <= 9; ++L) {
      const HeightPath sub = build_shape(shape::Substrate{m, L});
      for (const HeightPath& p : enumerate_family(family_of(m), L)) {
        for (int i = 0; i <= L; ++i) EXPECT_LE(sub[i], p[i]);
      }
    }
  }
}

TEST(Paths, Reduce) {
  EXPECT_EQ(reduce(P(Family::Dyck, {0, 1, 2, 1, 0}), Side::Left).heights(), (std::vector<Height>{1, 2, 1, 0}));
  EXPECT_EQ(reduce(P(Family::Ballot, {1, 0, 1, 0, 1, 0}), Side::Right).heights(),
            (std::vector<Height>{2, 1, 2, 1, 2}));
  EXPECT_EQ(reduce(P(Family::Ballot, {1, 2, 1, 2, 1, 0}), Side::Right).heights(),
            (std::vector<Height>{0, 1, 0, 1, 0}));
  for (int L = 2; L <= 10; ++L) {
    for (const HeightPath& p : enumerate_family(Family::Ballot, L)) {
      const HeightPath r = reduce(p, Side::Right);
      EXPECT_EQ(r.family(), Family::AnchoredCross);
      EXPECT_LE(r.min_height(), 1);
    }
  }
}

TEST(Paths, Mirror) {
  EXPECT_EQ(mirror(P(Family::Dyck, {0, 1, 2, 1, 0}), Model::A).heights(), (std::vector<Height>{0, 1, 2, 1, 0}));
  EXPECT_EQ(mirror(P(Family::AnchoredCross, {1, 2, 1, 2}), Model::C).heights(), (std::vector<Height>{1, 0, 1, 0}));
  // The L = 15 pair drawn after the odd-L symmetry statement.
  const HeightPath left = P(Family::Dyck, {1, 2, 1, 2, 3, 2, 3, 2, 1, 0, 1, 2, 1, 0, 1, 0});
  const HeightPath right = P(Family::Dyck, {1, 2, 1, 2, 3, 2, 1, 0, 1, 2, 1, 2, 1, 0, 1, 0});
  EXPECT_EQ(mirror(left, Model::A), right);
  EXPECT_EQ(mirror(right, Model::A), left);
  for (Model m : {Model::A, Model::C}) {
    for (int L = 1; L <= 10; ++L) {
      for (const HeightPath& p : enumerate_family(family_of(m), L)) EXPECT_EQ(mirror(mirror(p, m), m), p);
    }
  }
  EXPECT_THROW(mirror(P(Family::Ballot, {1, 0}), Model::B), std::invalid_argument);
}
