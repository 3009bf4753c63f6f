#include <gtest/gtest.h>

#include "burniat/delpezzo.hpp"
#include "burniat/numerics.hpp"
#include "oracles/interpolation.hpp"
#include "support.hpp"

using namespace burniat;

namespace {
const DPClass kH{1, 0, 0, 0};
}

TEST(DelPezzo, Classes) {
  EXPECT_EQ(pencil(1), (DPClass{1, 0, 1, 0}));
  EXPECT_EQ(pencil(2), (DPClass{1, 0, 0, 1}));
  EXPECT_EQ(pencil(3), (DPClass{1, 1, 0, 0}));
  EXPECT_EQ(contraction(1), kH);
  EXPECT_EQ(contraction(2), (DPClass{2, 1, 1, 1}));
  EXPECT_EQ(intersect(canonical_Y(), canonical_Y()), 6);
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(intersect(pencil(i), pencil(i)), 0);
    EXPECT_EQ(intersect(pencil(i), -canonical_Y()), 2);
    for (int j = 1; j <= 2; ++j) EXPECT_EQ(intersect(pencil(i), contraction(j)), 1);
  }
  for (int j = 1; j <= 2; ++j) EXPECT_EQ(intersect(contraction(j), contraction(j)), 1);
  EXPECT_EQ(contraction(1) + contraction(2), -canonical_Y());
  EXPECT_THROW(pencil(4), std::out_of_range);
}

TEST(DelPezzo, ToricAssignments) {
  const auto all = valid_toric_assignments();
  EXPECT_EQ(all.size(), 12u);
  EXPECT_EQ(toric_model().curves, all.front());
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
}

TEST(DelPezzo, ToricGramMatchesHexagon) {
  const ToricModel& m = toric_model();
  const auto g = m.toric_gram();
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      EXPECT_EQ(g[i][j], intersect(curve_class_Y(m.curves[i]), curve_class_Y(m.curves[j])));
      const int gap = (i - j + 6) % 6;
      EXPECT_EQ(g[i][j], i == j ? -1 : (gap == 1 || gap == 5 ? 1 : 0));
    }
}

TEST(DelPezzo, DecompositionReproducesTheClass) {
  const ToricModel& m = toric_model();
  std::mt19937_64 rng(testing_support::kSeed + 12);
  std::uniform_int_distribution<int> u(-6, 6);
  for (int i = 0; i < 500; ++i) {
    const DPClass D{u(rng), u(rng), u(rng), u(rng)};
    const auto a = m.decompose(D);
    DPClass sum;
    for (int k = 0; k < 6; ++k) sum = sum + a[k] * curve_class_Y(m.curves[k]);
    EXPECT_EQ(sum, D);
  }
}

TEST(DelPezzo, H0Examples) {
  EXPECT_EQ(h0_Y(pencil(1)), 2);
  EXPECT_EQ(h0_Y(contraction(1)), 3);
  EXPECT_EQ(h0_Y(contraction(1) - pencil(1)), 1);
  EXPECT_EQ(h0_Y(DPClass{}), 1);
  EXPECT_EQ(h0_Y(-canonical_Y()), 7);
  EXPECT_EQ(chi_Y(-canonical_Y()), 7);
}

TEST(DelPezzo, HAllExamples) {
  EXPECT_EQ(h_all_Y(DPClass{}), (std::array<Int, 3>{1, 0, 0}));
  EXPECT_EQ(h_all_Y(canonical_Y()), (std::array<Int, 3>{0, 0, 1}));
  // -f1 = -H + B0: h0 = 0 (negative degree), h2 = h0(-2H + A0 + C0) = 0 and
  // chi = 1 + (f1^2 + f1.K)/2 = 1 + (0 - 2)/2 = 0, so h1 = 0.
  EXPECT_EQ(chi_Y(-pencil(1)), 0);
  EXPECT_EQ(oracle::interpolation_h0(-1, {0, 1, 0}), 0);
  EXPECT_EQ(h_all_Y(-pencil(1)), (std::array<Int, 3>{0, 0, 0}));
  // 2 A0 has a single section and chi = 1 + (-4 + 2)/2 = 0, so h1 = 1.
  EXPECT_EQ(h_all_Y(DPClass{0, -2, 0, 0}), (std::array<Int, 3>{1, 1, 0}));
}

TEST(DelPezzo, RepresentativeIndependence) {
  const ToricModel& m = toric_model();
  // Kernel of the decomposition map: sum_i <e, v_i> e_i for e = (1,0), (0,1).
  std::array<Int, 6> k1{}, k2{};
  for (int i = 0; i < 6; ++i) {
    k1[i] = m.rays[i].x;
    k2[i] = m.rays[i].y;
  }
  std::mt19937_64 rng(testing_support::kSeed + 13);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int i = 0; i < 300; ++i) {
    const DPClass D{u(rng), u(rng), u(rng), u(rng)};
    auto a = m.decompose(D);
    const Int s = u(rng), t = u(rng);
    for (int k = 0; k < 6; ++k) a[k] += s * k1[k] + t * k2[k];
    EXPECT_EQ(m.count_sections(a), h0_Y(D)) << D.to_string();
  }
}

TEST(DelPezzo, MonotoneUnderAddingBoundary) {
  std::mt19937_64 rng(testing_support::kSeed + 14);
  std::uniform_int_distribution<int> u(-4, 6);
  for (int i = 0; i < 500; ++i) {
    const DPClass D{u(rng), u(rng), u(rng), u(rng)};
    for (Curve E : toric_model().curves) EXPECT_GE(h0_Y(D + curve_class_Y(E)), h0_Y(D));
  }
}

TEST(DelPezzo, InterpolationCrossOracle) {
  for (int n = 0; n <= 6; ++n)
    for (int a = 0; a <= 3; ++a)
      for (int b = 0; b <= 3; ++b)
        for (int c = 0; c <= 3; ++c)
          EXPECT_EQ(h0_Y(DPClass{n, a, b, c}), oracle::interpolation_h0(n, {a, b, c}))
              << n << " " << a << " " << b << " " << c;
}

TEST(DelPezzo, HAllNeverNegative) {
  std::mt19937_64 rng(testing_support::kSeed + 15);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int i = 0; i < 1000; ++i) {
    const DPClass D{u(rng), u(rng), u(rng), u(rng)};
    const auto h = h_all_Y(D);
    EXPECT_EQ(h[0] - h[1] + h[2], chi_Y(D));
  }
}

TEST(DelPezzo, SigmaPasses) {
  const DPCollectionReport r = verify_sigma();
  EXPECT_TRUE(r.passed);
  for (const DPCheck& c : r.checks) EXPECT_TRUE(c.passed) << c.name << " " << c.detail;
  int k2 = 0, k3 = 0, k1 = 0;
  for (std::size_t i = 0; i < 6; ++i)
    for (std::size_t j = i + 1; j < 6; ++j) {
      const auto h = r.cohomology[i][j];
      EXPECT_EQ(h[1], 0);
      EXPECT_EQ(h[2], 0);
      k1 += h[0] == 1;
      k2 += h[0] == 2;
      k3 += h[0] == 3;
    }
  EXPECT_EQ(k2, 3);
  EXPECT_EQ(k3, 2);
  EXPECT_EQ(k1, 6);
}

TEST(DelPezzo, SigmaReversedFails) {
  auto cls = sigma_collection();
  auto labels = sigma_labels();
  std::reverse(cls.begin(), cls.end());
  std::reverse(labels.begin(), labels.end());
  const DPCollectionReport r = check_dp_collection(cls, labels, {2, 3, 1});
  EXPECT_FALSE(r.passed);
  const auto exc = std::find_if(r.checks.begin(), r.checks.end(), [](const DPCheck& c) { return c.name == "exceptional"; });
  ASSERT_NE(exc, r.checks.end());
  EXPECT_FALSE(exc->passed);
}

TEST(DelPezzo, PencilsAreMutuallyOrthogonal) {
  const DPCollectionReport r = check_dp_collection(sigma_collection(), sigma_labels(), {1, 1, 1, 1, 1, 1});
  EXPECT_TRUE(r.passed);
  for (int i = 1; i <= 3; ++i)
    for (int j = 1; j <= 3; ++j)
      if (i != j) EXPECT_EQ(h_all_Y(pencil(i) - pencil(j)), (std::array<Int, 3>{0, 0, 0}));
}

TEST(DelPezzo, LiftChiCheck) {
  EXPECT_TRUE(lift_chi_check(DPClass{}, TorsionClass{}));
  for (int m = 0; m < 64; ++m) EXPECT_TRUE(lift_chi_check(pencil(1), TorsionClass(static_cast<std::uint8_t>(m))));
  std::mt19937_64 rng(testing_support::kSeed + 16);
  std::uniform_int_distribution<int> u(-5, 5);
  for (int i = 0; i < 10000; ++i)
    ASSERT_TRUE(lift_chi_check(DPClass{u(rng), u(rng), u(rng), u(rng)}, testing_support::random_torsion(rng)));
}

TEST(DelPezzo, LiftMatchesXSide) {
  // Free parts of the X generators land on the Y curve classes.
  EXPECT_EQ(to_dp(canonical()), -canonical_Y());
  EXPECT_EQ(to_dp(lift_to_X(DPClass{2, 1, -1, 3}, TorsionClass(5))), (DPClass{2, 1, -1, 3}));
}
