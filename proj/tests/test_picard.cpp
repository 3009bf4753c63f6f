#include <gtest/gtest.h>

#include "burniat/datasets.hpp"
#include "burniat/picard.hpp"
#include "oracles/hexagon.hpp"
#include "support.hpp"

using namespace burniat;
using testing_support::random_class;

TEST(Picard, GeneratorRows) {
  EXPECT_EQ(generator(Curve::A0), DivClass(1, -1, 0, 0));
  EXPECT_EQ(generator(Curve::C2), DivClass(2, 1, 0, 0, TorsionClass(0b11, 0b00, 0b00)));
  EXPECT_EQ(canonical(), DivClass(6, 1, 1, 1));
}

TEST(Picard, CongruenceIsEnforced) {
  EXPECT_THROW(DivClass(1, 0, 0, 0), std::invalid_argument);
  EXPECT_NO_THROW(DivClass(1, 1, 1, 0));
}

TEST(Picard, GroupLaw) {
  const DivClass A0 = generator(Curve::A0);
  EXPECT_EQ(A0 + DivClass::zero(), A0);
  EXPECT_TRUE((A0 + (-A0)).is_zero());
  DivClass hexagon;
  for (Curve E : kEllipticCurves) hexagon += generator(E);
  const auto R = default_symbols();
  EXPECT_EQ(hexagon, R.at("R1") + R.at("R2"));
  EXPECT_EQ(R.at("R1") + R.at("R2"), R.at("R3") + R.at("R4") + R.at("R5"));
}

TEST(Picard, IntersectionExamples) {
  EXPECT_EQ(intersect(generator(Curve::A0), generator(Curve::A0)), -1);
  EXPECT_EQ(intersect(canonical(), canonical()), 6);
  EXPECT_EQ(intersect(generator(Curve::A1), generator(Curve::A1)), 0);
  EXPECT_EQ(intersect(generator(Curve::A0), generator(Curve::C3)), 1);
}

TEST(Picard, IntersectionMatchesHexagonOracle) {
  for (Curve x : kEllipticCurves)
    for (Curve y : kEllipticCurves)
      EXPECT_EQ(intersect(generator(x), generator(y)), oracle::hexagon_intersection(x, y))
          << curve_name(x) << "." << curve_name(y);
}

TEST(Picard, RestrictionExamples) {
  EXPECT_EQ(restrict_to(generator(Curve::C3), Curve::A0), (RestrictionClass{1, 0b10}));
  EXPECT_EQ(restrict_to(generator(Curve::C3), Curve::A3), (RestrictionClass{0, 0b00}));
  for (Curve E : kEllipticCurves) EXPECT_EQ(restrict_to(DivClass::zero(), E), (RestrictionClass{0, 0}));
  EXPECT_EQ(restrict_to(default_symbols().at("R5"), Curve::C3), (RestrictionClass{0, 0b01}));
  EXPECT_THROW(restrict_to(canonical(), Curve::A1), std::logic_error);
}

TEST(Picard, CanonicalRestrictsToCornerPoint) {
  for (Curve E : kEllipticCurves) EXPECT_EQ(restrict_to(canonical(), E), (RestrictionClass{1, 0}));
}

TEST(Picard, Adjunction) {
  for (Curve E : kEllipticCurves) EXPECT_EQ(intersect(canonical() + generator(E), generator(E)), 0);
  for (Curve F : kGenus2Curves) EXPECT_EQ(intersect(canonical() + generator(F), generator(F)), 2);
}

TEST(Picard, TorsionOfGeneratorsSpansF2To6) {
  // Gaussian elimination on 6-bit masks.
  std::vector<std::uint8_t> rows;
  for (Curve c : kAllCurves) rows.push_back(generator(c).t().mask());
  int rank = 0;
  for (int bit = 5; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [bit](std::uint8_t r) { return (r >> bit) & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (static_cast<int>(i) != rank && ((rows[i] >> bit) & 1)) rows[i] ^= rows[rank];
    ++rank;
  }
  EXPECT_EQ(rank, 6);
}

TEST(Picard, IndexThree) {
  auto count = [](int lo, int hi) {
    int members = 0;
    for (int d = lo; d <= hi; ++d)
      for (int a = lo; a <= hi; ++a)
        for (int b = lo; b <= hi; ++b)
          for (int c = lo; c <= hi; ++c) {
            bool ok = true;
            try {
              DivClass(d, a, b, c);
            } catch (const std::invalid_argument&) {
              ok = false;
            }
            members += ok;
          }
    return members;
  };
  // Side length divisible by 3: exactly one third.
  EXPECT_EQ(count(-2, 3), 6 * 6 * 6 * 6 / 3);
  EXPECT_EQ(count(-1, 1), 27);
  // 625 points: 209 members, the residue classes split 209/208/208.
  EXPECT_EQ(count(-2, 2), 209);
}

TEST(Picard, TorsionClassBasics) {
  const TorsionClass t(0b11, 0b01, 0b00);
  EXPECT_EQ(t.to_string(), "11,01,00");
  EXPECT_EQ(TorsionClass::from_bits(t.bits()), t);
  EXPECT_TRUE((t + t).is_zero());
  EXPECT_EQ(t.pair(0), 0b11);
  EXPECT_EQ(t.pair(1), 0b01);
  EXPECT_TRUE(t.bit(0));
  EXPECT_FALSE(t.bit(2));
}

TEST(Picard, CurveNames) {
  for (Curve c : kAllCurves) EXPECT_EQ(parse_curve(curve_name(c)), c);
  EXPECT_FALSE(parse_curve("D0"));
  EXPECT_EQ(std::count_if(kAllCurves.begin(), kAllCurves.end(), is_elliptic), 6);
}

class PicardProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{testing_support::kSeed};
};

TEST_F(PicardProperties, CongruenceClosure) {
  for (int i = 0; i < 2000; ++i) {
    const DivClass x = random_class(rng), y = random_class(rng);
    for (const DivClass& z : {x + y, x - y, -x, 3 * x})
      EXPECT_EQ(((z.d() + z.a0() + z.b0() + z.c0()) % 3 + 3) % 3, 0);
  }
}

TEST_F(PicardProperties, BilinearSymmetricTorsionBlind) {
  for (int i = 0; i < 2000; ++i) {
    const DivClass x = random_class(rng), y = random_class(rng), z = random_class(rng);
    EXPECT_EQ(intersect(x + y, z), intersect(x, z) + intersect(y, z));
    EXPECT_EQ(intersect(x, y), intersect(y, x));
    EXPECT_EQ(intersect(x, y + DivClass::torsion(z.t())), intersect(x, y));
    EXPECT_EQ(intersect(x, canonical()), x.d());
  }
}

TEST_F(PicardProperties, RestrictionAdditiveAndDegreeCoherent) {
  for (int i = 0; i < 2000; ++i) {
    const DivClass x = random_class(rng), y = random_class(rng);
    for (Curve E : kEllipticCurves) {
      EXPECT_EQ(restrict_to(x + y, E), restrict_to(x, E) + restrict_to(y, E));
      EXPECT_EQ(restrict_to(x, E).deg, intersect(x, generator(E)));
    }
  }
}
