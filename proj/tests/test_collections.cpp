#include <gtest/gtest.h>

#include "burniat/collections.hpp"
#include "burniat/datasets.hpp"
#include "support.hpp"

using namespace burniat;

namespace {

std::array<Int, 3> expected_upsilon_entry(std::size_t i, std::size_t j) {
  // 0-based indices; the pattern of the nontrivial Ext groups.
  if (i == j) return {1, 0, 0};
  if (i <= 1 && j >= 2 && j <= 4) return {0, 0, 1};
  if (i >= 2 && i <= 4 && j == 5) return {0, 0, 2};
  if (i <= 1 && j == 5) return {0, 0, 3};
  return {0, 0, 0};
}

void expect_replays(const VerificationReport& rep) {
  for (const Goal& g : rep.goals)
    if (g.certificate) {
      const ReplayResult r = replay_certificate(*g.certificate);
      EXPECT_TRUE(r.ok) << g.label << ": " << r.error;
    }
  for (std::size_t i = 0; i < rep.table.size(); ++i)
    for (std::size_t j = 0; j < rep.table.size(); ++j)
      if (const auto& c = rep.table.at(i, j).ext1_proof.chain) EXPECT_TRUE(replay_chain(*c).ok);
}

}  // namespace

TEST(Collections, UpsilonVerified) {
  const VerificationReport rep = verify_collection(upsilon(), 10);
  EXPECT_EQ(rep.status, Status::Verified);
  EXPECT_TRUE(rep.unknown_goals.empty());
  EXPECT_TRUE(rep.refuted_goals.empty());
  EXPECT_TRUE(rep.numerical.exceptional);
  expect_replays(rep);
  // 15 backward pairs plus 1 + 3 forward pairs inside blocks, three goals each.
  EXPECT_EQ(rep.goals.size(), 3u * (15 + 1 + 3));
}

TEST(Collections, UpsilonPrimeVerified) {
  const VerificationReport rep = verify_collection(upsilon_prime(), 10);
  EXPECT_EQ(rep.status, Status::Verified);
  expect_replays(rep);
}

TEST(Collections, ZeroAndCanonicalFail) {
  BlockedCollection c{{DivClass::zero(), canonical()}, {1, 1}, {}};
  const VerificationReport rep = verify_collection(c, 10);
  EXPECT_EQ(rep.status, Status::Failed);
  EXPECT_FALSE(rep.numerical.exceptional);
  EXPECT_NE(std::find(rep.refuted_goals.begin(), rep.refuted_goals.end(), "chi(R1-R2)"), rep.refuted_goals.end());
}

TEST(Collections, TorsionPairIsNotVerified) {
  // chi of a nonzero torsion class is 1, so the pair is not even numerically exceptional.
  BlockedCollection c{{DivClass::zero(), DivClass::torsion(TorsionClass(0b11, 0b00, 0b00))}, {2}, {}};
  const VerificationReport rep = verify_collection(c, 10);
  EXPECT_EQ(rep.status, Status::Failed);
  EXPECT_FALSE(rep.refuted_goals.empty());
}

TEST(Collections, Validation) {
  EXPECT_THROW((BlockedCollection{{DivClass::zero(), DivClass::zero()}, {2}, {}}.validate()), std::invalid_argument);
  EXPECT_THROW((BlockedCollection{{DivClass::zero()}, {2}, {}}.validate()), std::invalid_argument);
  EXPECT_THROW((BlockedCollection{{DivClass::zero()}, {0, 1}, {}}.validate()), std::invalid_argument);
  EXPECT_THROW(verify_collection(BlockedCollection{{}, {}, {}}, 10), std::invalid_argument);
  const auto c = upsilon();
  EXPECT_EQ(c.block_of(1), 0u);
  EXPECT_EQ(c.block_of(2), 1u);
  EXPECT_EQ(c.block_of(5), 2u);
  EXPECT_EQ(upsilon_prime().label(5), "R6'");
  EXPECT_EQ(c.label(5), "R6");
}

TEST(Collections, ExtTablePattern) {
  for (const auto& c : {upsilon(), upsilon_prime()}) {
    const ExtTable t = ext_table(c, 10);
    ASSERT_TRUE(t.fully_resolved());
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(*t.at(i, j).triple(), expected_upsilon_entry(i, j)) << i << "," << j;
  }
}

TEST(Collections, FirstBlockIsOrthogonal) {
  const auto u = upsilon();
  BlockedCollection pair{{u.classes[0], u.classes[1]}, {2}, {}};
  const ExtTable t = ext_table(pair, 10);
  EXPECT_EQ(*t.at(0, 1).triple(), (std::array<Int, 3>{0, 0, 0}));
  EXPECT_EQ(*t.at(1, 0).triple(), (std::array<Int, 3>{0, 0, 0}));
  EXPECT_EQ(verify_collection(pair, 10).status, Status::Verified);
}

TEST(Collections, ExtTableCsv) {
  const std::string csv = ext_table(upsilon(), 10).to_csv();
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "i,j,hom,ext1,ext2");
  EXPECT_NE(csv.find("\n2,6,0,0,3\n"), std::string::npos);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 37);
}

TEST(Collections, AlgebraReport) {
  const AlgebraReport a = algebra_report(ext_table(upsilon(), 10));
  EXPECT_EQ(a.vertices, 6u);
  EXPECT_EQ(a.degree0_dim, 6);
  EXPECT_EQ(a.arrow_pairs, 11u);
  // Independent count: six pairs with one arrow, three with two, two with three.
  EXPECT_EQ(a.arrow_total, 6 * 1 + 3 * 2 + 2 * 3);
  EXPECT_EQ(a.degrees, (std::vector<int>{0, 2}));
  EXPECT_TRUE(a.concentrated_in_0_2);
  EXPECT_TRUE(a.compositions_vanish);
  EXPECT_TRUE(a.higher_products_vanish);
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(a.degree2(i, j), i == j ? 0 : expected_upsilon_entry(i, j)[2]);
  EXPECT_EQ(a, algebra_report(ext_table(upsilon_prime(), 10)));
}

TEST(Collections, AlgebraReportRefusesBadTables) {
  ExtTable t(2);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j) {
      auto& c = t.at(i, j);
      c.hom = {i == j ? 1 : 0, EntrySource::Trivial};
      c.ext1 = {0, EntrySource::Trivial};
      c.ext2 = {0, EntrySource::Trivial};
    }
  EXPECT_NO_THROW(algebra_report(t));
  t.at(0, 1).ext1 = {1, EntrySource::Trivial};
  EXPECT_THROW(algebra_report(t), std::domain_error);
  t.at(0, 1).ext1 = {0, EntrySource::Trivial};
  t.at(1, 0).hom = {2, EntrySource::Trivial};
  EXPECT_THROW(algebra_report(t), std::domain_error);
  t.at(1, 0).hom = {};
  EXPECT_THROW(algebra_report(t), std::domain_error);
}

TEST(Collections, K0Report) {
  const K0Report r = k0_report(verify_collection(upsilon(), 10));
  EXPECT_EQ(r.k0_x_rank, 6);
  EXPECT_EQ(r.k0_x_torsion, 6);
  EXPECT_EQ(r.k0_d_rank, 6);
  EXPECT_EQ(r.k0_a_rank, 0);
  EXPECT_EQ(r.k0_a_torsion, 6);
  EXPECT_EQ(r.hh_x, 6);
  EXPECT_EQ(r.hh_a, 0);
  EXPECT_EQ(k0_report_for_length(5).hh_a, 1);
  BlockedCollection bad{{DivClass::zero(), canonical()}, {1, 1}, {}};
  EXPECT_THROW(k0_report(verify_collection(bad, 10)), std::domain_error);
}

TEST(Collections, TwistInvariance) {
  std::mt19937_64 rng(testing_support::kSeed + 10);
  const VerificationReport base = verify_collection(upsilon(), 10);
  for (int i = 0; i < 20; ++i) {
    const DivClass M = testing_support::random_class(rng, 6);
    BlockedCollection c = upsilon();
    for (DivClass& D : c.classes) D += M;
    const VerificationReport rep = verify_collection(c, 10);
    EXPECT_EQ(rep.status, base.status);
    ASSERT_EQ(rep.goals.size(), base.goals.size());
    for (std::size_t k = 0; k < rep.goals.size(); ++k) {
      EXPECT_EQ(rep.goals[k].label, base.goals[k].label);
      EXPECT_EQ(rep.goals[k].divisor, base.goals[k].divisor);
      EXPECT_EQ(rep.goals[k].verdict, base.goals[k].verdict);
      EXPECT_EQ(rep.goals[k].certificate, base.goals[k].certificate);
    }
  }
}

TEST(Collections, SearchLiftsGolden) {
  const LiftSearchResult r = search_lifts(table2_numerical(), 10);
  EXPECT_EQ(r.lifts.size(), 384u);
  EXPECT_TRUE(std::is_sorted(r.lifts.begin(), r.lifts.end()));
  EXPECT_NE(std::find(r.lifts.begin(), r.lifts.end(), upsilon_lift()), r.lifts.end());
  EXPECT_NE(std::find(r.lifts.begin(), r.lifts.end(), upsilon_prime_lift_normalized()), r.lifts.end());
  for (const auto& lift : r.lifts) EXPECT_TRUE(lift.back().is_zero());
  const std::vector<std::vector<int>> counts = {
      {0, 9, 36, 36, 36, 46}, {0, 0, 36, 36, 36, 46}, {0, 0, 0, 12, 12, 42},
      {0, 0, 0, 0, 12, 42},   {0, 0, 0, 0, 0, 42},    {0, 0, 0, 0, 0, 0}};
  EXPECT_EQ(r.admissible_counts, counts);
}

TEST(Collections, SearchLiftsParallelMatchesSerial) {
  const auto a = search_lifts(table2_numerical(), 10, 1);
  const auto b = search_lifts(table2_numerical(), 10, 3);
  EXPECT_EQ(a.lifts, b.lifts);
  EXPECT_EQ(a.admissible_counts, b.admissible_counts);
}

TEST(Collections, SearchLiftsEveryLiftVerifies) {
  const auto r = search_lifts(table2_numerical(), 10);
  ChainSearcher searcher;
  for (std::size_t k = 0; k < r.lifts.size(); k += 17) {
    const VerificationReport rep = verify_collection(apply_lift(table2_numerical(), r.lifts[k]), 10, searcher);
    EXPECT_EQ(rep.status, Status::Verified);
    expect_replays(rep);
  }
}

TEST(Collections, SearchLiftsRejectsNonNumericalInput) {
  NumericalCollection n{{DivClass::zero(), canonical()}, {1, 1}};
  EXPECT_THROW(search_lifts(n, 10), std::invalid_argument);
}

TEST(Collections, StatusNames) {
  EXPECT_EQ(status_name(Status::Inconclusive), "Inconclusive");
  EXPECT_EQ(goal_kind_name(GoalKind::H0Dual), "h0-dual");
}
