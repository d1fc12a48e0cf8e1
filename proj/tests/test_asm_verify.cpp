#include <gtest/gtest.h>

#include <set>

#include "oracles.hpp"
#include "reference_data.hpp"
#include "rpm/asm.hpp"
#include "rpm/polynomial.hpp"
#include "rpm/verify.hpp"

using namespace rpm;

TEST(Asm, PrintedSequences) {
  for (std::size_t n = 0; n < ref::A_seq.size(); ++n) EXPECT_EQ(asm_number(AsmKind::A, static_cast<int>(n)), ref::A_seq[n]);
  for (std::size_t k = 0; k < ref::AV_odd.size(); ++k) {
    EXPECT_EQ(asm_number(AsmKind::AV, static_cast<int>(2 * k + 1)), ref::AV_odd[k]);
  }
  for (std::size_t k = 0; k < ref::AHT_even.size(); ++k) {
    EXPECT_EQ(asm_number(AsmKind::AHT, static_cast<int>(2 * k)), ref::AHT_even[k]);
  }
  for (std::size_t k = 0; k < ref::AHT_odd.size(); ++k) {
    EXPECT_EQ(asm_number(AsmKind::AHT, static_cast<int>(2 * k + 1)), ref::AHT_odd[k]);
  }
  EXPECT_EQ(asm_number(AsmKind::A, 4), 42);
  EXPECT_EQ(asm_number(AsmKind::AV, 7), 26);
  EXPECT_EQ(asm_number(AsmKind::AHT, 4), 10);
  EXPECT_EQ(asm_number(AsmKind::AHT, 5), 25);
  EXPECT_EQ(asm_number(AsmKind::AVH, 9), 6);
}

TEST(Asm, CountsAgreeWithProductOracle) {
  for (int n = 0; n <= 20; ++n) EXPECT_EQ(asm_number(AsmKind::A, n), oracle::asm_count(n)) << n;
}

TEST(Asm, ParityAndRange) {
  EXPECT_THROW(asm_number(AsmKind::AV, 4), std::invalid_argument);
  EXPECT_THROW(asm_number(AsmKind::AVH, 6), std::invalid_argument);
  EXPECT_THROW(asm_number(AsmKind::A, -1), std::invalid_argument);
  EXPECT_EQ(parse_asm_kind("AHT"), AsmKind::AHT);
  EXPECT_FALSE(parse_asm_kind("B").has_value());
}

TEST(Asm, IdentityExamples) {
  EXPECT_EQ(poly_G(1, 3).evaluate(1), 4);
  EXPECT_EQ(poly_F(4, 2).evaluate(2, 3) / 3, 7);
  EXPECT_EQ(poly_F(4, 1).evaluate(2, 3), 7);
  for (int p = 1; p <= 6; ++p) {
    Rational ratio(asm_number(AsmKind::AVH, 4 * p + 1), asm_number(AsmKind::AVH, 4 * p - 1));
    ratio.canonicalize();
    EXPECT_EQ(ratio, av_step_ratio(p));
  }
}

TEST(Asm, Table) {
  const auto rows = asm_table(7);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_FALSE(rows[4].AV.has_value());
  EXPECT_EQ(*rows[7].AV, 26);
}

TEST(Asm, IdentitySuite) {
  const auto checks = asm_identity_suite(6, 8);
  EXPECT_GT(checks.size(), 50u);
  for (const RelationCheck& c : checks) EXPECT_TRUE(c.pass) << c.relation << " " << c.point << ": " << c.lhs << " vs " << c.rhs;
}

class Conjectures : public ::testing::TestWithParam<std::string> {
 protected:
  static StateCache& cache() {
    static StateCache c;
    return c;
  }
};

TEST_P(Conjectures, PassAtModerateSize) {
  const VerificationReport r = verify_conjecture(GetParam(), 7, cache());
  EXPECT_FALSE(r.instances.empty());
  for (const Instance& i : r.instances) {
    if (!i.informational) EXPECT_TRUE(i.pass) << i.label << ": " << i.lhs << " vs " << i.rhs;
  }
  EXPECT_TRUE(r.passed());
}

INSTANTIATE_TEST_SUITE_P(All, Conjectures, ::testing::ValuesIn(conjecture_ids()));

TEST(Verify, Examples) {
  StateCache cache;
  const VerificationReport two = verify_conjecture("2", 4, cache);
  bool found = false;
  for (const Instance& i : two.instances) found = found || (i.lhs == "33" && i.pass);
  EXPECT_TRUE(found);
  EXPECT_EQ(summarize(cache.get(Model::C, 6)).m, 13);
  EXPECT_EQ(summarize(cache.get(Model::C, 5)).M, 11 * 11 * 50);
  EXPECT_THROW(verify_conjecture("14", 4, cache), std::invalid_argument);
}

TEST(Verify, HexagonOnStates) {
  StateCache cache;
  const VerificationReport r = verify_hexagon_on_states(10, cache);
  EXPECT_TRUE(r.passed());
  EXPECT_GT(r.instances.size(), 20u);
  EXPECT_EQ(7 * 9 + 1 * 133, 196);
}

TEST(Verify, OddMaximizers) {
  // L = 5: every argmax of the model-A state, against the family.
  const StationaryState a5 = stationary_state(Model::A, 5);
  const Summary s = summarize(a5);
  std::set<std::vector<Height>> argmax, family;
  for (std::size_t i = 0; i < a5.size(); ++i) {
    if (a5.weights()[i] == s.M) argmax.insert(a5.space()[i].heights());
  }
  for (const HeightPath& p : odd_maximizers(5)) family.insert(p.heights());
  EXPECT_EQ(argmax, family);
  EXPECT_EQ(family.size(), 3u);
}

TEST(Verify, ReportStatus) {
  VerificationReport r;
  r.instances.push_back({"a", "1", "1", true, false});
  r.instances.push_back({"b", "1", "2", false, true});
  EXPECT_TRUE(r.passed());
  r.instances.push_back({"c", "1", "2", false, false});
  EXPECT_FALSE(r.passed());
  EXPECT_EQ(r.failures(), 1u);
}
