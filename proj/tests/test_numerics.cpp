#include <gtest/gtest.h>

#include "burniat/datasets.hpp"
#include "burniat/delpezzo.hpp"
#include "burniat/numerics.hpp"
#include "support.hpp"

using namespace burniat;

namespace {
const auto R = default_symbols();
}

TEST(Numerics, ChiExamples) {
  EXPECT_EQ(chi(DivClass::zero()), 1);
  EXPECT_EQ(chi(-R.at("R1")), 3);
  EXPECT_EQ(chi(canonical()), 1);
  EXPECT_EQ(chi(R.at("R3") - R.at("R1")), 1);
}

TEST(Numerics, EulerPairExamples) {
  EXPECT_EQ(euler_pair(R.at("R4"), R.at("R4")), 1);
  EXPECT_EQ(euler_pair(R.at("R3"), R.at("R6")), 2);
  EXPECT_EQ(euler_pair(R.at("R3"), R.at("R1")), 0);
  // R1 - R3 has free part A0: chi = 1 + (A0^2 - A0.K)/2 with A0^2 = -1, A0.K = 1.
  const DivClass D = R.at("R1") - R.at("R3");
  EXPECT_EQ(D.free_part(), generator(Curve::A0));
  EXPECT_EQ(1 + (-1 - 1) / 2, 0);
}

TEST(Numerics, Table2IsNumericallyExceptional) {
  const auto c = upsilon();
  const NumericalCheck n = is_numerically_exceptional(c.classes);
  EXPECT_TRUE(n.exceptional);
  EXPECT_TRUE(n.matrix.is_upper_unitriangular());
  EXPECT_EQ(n.matrix.determinant(), 1);
}

TEST(Numerics, RepeatedClassIsNotExceptional) {
  const std::vector<DivClass> seq = {DivClass::zero(), DivClass::zero()};
  EXPECT_FALSE(is_numerically_exceptional(seq).exceptional);
}

TEST(Numerics, SwappingTheFirstBlockKeepsExceptionality) {
  auto c = upsilon();
  std::swap(c.classes[0], c.classes[1]);
  EXPECT_TRUE(is_numerically_exceptional(c.classes).exceptional);
  EXPECT_EQ(chi(R.at("R2") - R.at("R1")), 0);
  EXPECT_EQ(chi(R.at("R1") - R.at("R2")), 0);
}

TEST(Numerics, EulerMatrixGolden) {
  const auto m = euler_matrix(upsilon().classes);
  EXPECT_EQ(m.to_csv(),
            "1,0,1,1,1,3\n"
            "0,1,1,1,1,3\n"
            "0,0,1,0,0,2\n"
            "0,0,0,1,0,2\n"
            "0,0,0,0,1,2\n"
            "0,0,0,0,0,1\n");
}

TEST(Numerics, Determinant) {
  IntMatrix m(3);
  m(0, 0) = 2; m(0, 1) = 1; m(0, 2) = 0;
  m(1, 0) = 1; m(1, 1) = 3; m(1, 2) = 1;
  m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 4;
  EXPECT_EQ(m.determinant(), 2 * (12 - 1) - 1 * (4 - 0));
  EXPECT_FALSE(m.is_upper_unitriangular());
}

class NumericsProperties : public ::testing::Test {
 protected:
  std::mt19937_64 rng{testing_support::kSeed + 1};
};

TEST_F(NumericsProperties, SerreSymmetryAndTorsionBlindness) {
  for (int i = 0; i < 5000; ++i) {
    const DivClass D = testing_support::random_class(rng, 20);
    EXPECT_EQ(chi(D), chi(canonical() - D));
    EXPECT_EQ(chi(D + DivClass::torsion(testing_support::random_torsion(rng))), chi(D));
  }
}

TEST_F(NumericsProperties, LiftIdentity) {
  std::uniform_int_distribution<int> u(-7, 7);
  for (int i = 0; i < 5000; ++i) {
    const DPClass D{u(rng), u(rng), u(rng), u(rng)};
    EXPECT_EQ(chi(lift_to_X(D, testing_support::random_torsion(rng))), chi_Y(-D));
  }
}
