#pragma once

#include <random>

#include "burniat/picard.hpp"

namespace testing_support {

inline constexpr std::uint64_t kSeed = 20240611;

inline burniat::TorsionClass random_torsion(std::mt19937_64& rng) {
  return burniat::TorsionClass(static_cast<std::uint8_t>(rng() % burniat::TorsionClass::kCount));
}

/// Uniform over |d|, |a0|, |b0|, |c0| <= r subject to the congruence.
inline burniat::DivClass random_class(std::mt19937_64& rng, int r = 8) {
  std::uniform_int_distribution<int> u(-r, r);
  for (;;) {
    const int d = u(rng), a = u(rng), b = u(rng), c = u(rng);
    if (((d + a + b + c) % 3 + 3) % 3 == 0) return burniat::DivClass(d, a, b, c, random_torsion(rng));
  }
}

}  // namespace testing_support
