#pragma once

// Picard group of a Burniat surface with K^2 = 6.
//
// A class is stored in symmetric coordinates: its degree against K_X and its
// restrictions to the three elliptic curves A0, B0, C0. Each restriction lives
// in Z.P00 + E[2] and is written as an integer degree plus two torsion bits.
// The map to these coordinates is injective; its image is cut out by
// d + a0 + b0 + c0 == 0 (mod 3).

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace burniat {

using Int = std::int64_t;

/// Element of E[2] for one elliptic curve, packed as two bits (t1 t2), t1 high.
using TwoTorsion = std::uint8_t;

/// Element of Tors(Pic X) = A0[2] + B0[2] + C0[2].
///
/// Bit order is (a0^1, a0^2, b0^1, b0^2, c0^1, c0^2); bit 0 of that order is
/// stored in the most significant position so that the integer order of
/// mask() equals the lexicographic order of the bit string.
class TorsionClass {
 public:
  static constexpr int kBits = 6;
  static constexpr int kCount = 1 << kBits;

  constexpr TorsionClass() = default;
  constexpr explicit TorsionClass(std::uint8_t mask) : mask_(mask & (kCount - 1)) {}
  constexpr TorsionClass(TwoTorsion a, TwoTorsion b, TwoTorsion c)
      : mask_(static_cast<std::uint8_t>(((a & 3) << 4) | ((b & 3) << 2) | (c & 3))) {}

  static TorsionClass from_bits(const std::array<int, kBits>& bits);

  constexpr std::uint8_t mask() const { return mask_; }
  constexpr bool bit(int i) const { return (mask_ >> (kBits - 1 - i)) & 1; }
  /// Torsion pair on A0 (k = 0), B0 (k = 1) or C0 (k = 2).
  constexpr TwoTorsion pair(int k) const {
    return static_cast<TwoTorsion>((mask_ >> (2 * (2 - k))) & 3);
  }
  constexpr bool is_zero() const { return mask_ == 0; }
  std::array<int, kBits> bits() const;

  /// "11,01,00"
  std::string to_string() const;

  constexpr TorsionClass operator+(TorsionClass o) const {
    return TorsionClass(static_cast<std::uint8_t>(mask_ ^ o.mask_));
  }
  constexpr TorsionClass operator-(TorsionClass o) const { return *this + o; }
  constexpr auto operator<=>(const TorsionClass&) const = default;

 private:
  std::uint8_t mask_ = 0;
};

/// The twelve branch curves. The underlying value is a stable index used for
/// serialization order (A0..A3, B0..B3, C0..C3).
enum class Curve : std::uint8_t { A0, A1, A2, A3, B0, B1, B2, B3, C0, C1, C2, C3 };

inline constexpr std::array<Curve, 12> kAllCurves = {
    Curve::A0, Curve::A1, Curve::A2, Curve::A3, Curve::B0, Curve::B1,
    Curve::B2, Curve::B3, Curve::C0, Curve::C1, Curve::C2, Curve::C3};

/// Fixed iteration order for the elliptic curves; provers rely on it.
inline constexpr std::array<Curve, 6> kEllipticCurves = {
    Curve::A0, Curve::B0, Curve::C0, Curve::A3, Curve::B3, Curve::C3};

inline constexpr std::array<Curve, 6> kGenus2Curves = {
    Curve::A1, Curve::A2, Curve::B1, Curve::B2, Curve::C1, Curve::C2};

constexpr bool is_elliptic(Curve c) {
  const int i = static_cast<int>(c) % 4;
  return i == 0 || i == 3;
}

std::string_view curve_name(Curve c);
std::optional<Curve> parse_curve(std::string_view name);

/// Class in Z.P00 + E[2] on one elliptic curve.
struct RestrictionClass {
  Int deg = 0;
  TwoTorsion tor = 0;

  RestrictionClass operator+(const RestrictionClass& o) const {
    return {deg + o.deg, static_cast<TwoTorsion>(tor ^ o.tor)};
  }
  RestrictionClass operator-(const RestrictionClass& o) const {
    return {deg - o.deg, static_cast<TwoTorsion>(tor ^ o.tor)};
  }
  bool operator==(const RestrictionClass&) const = default;

  /// "1 10"
  std::string to_string() const;
};

/// Element of Pic X in symmetric coordinates (d, a0, b0, c0; torsion).
class DivClass {
 public:
  constexpr DivClass() = default;
  /// Throws std::invalid_argument when d + a0 + b0 + c0 is not divisible by 3.
  DivClass(Int d, Int a0, Int b0, Int c0, TorsionClass t = {});

  static DivClass zero() { return {}; }
  static DivClass torsion(TorsionClass t) { return DivClass(0, 0, 0, 0, t); }

  Int d() const { return d_; }
  Int a0() const { return a0_; }
  Int b0() const { return b0_; }
  Int c0() const { return c0_; }
  TorsionClass t() const { return t_; }
  /// Coefficient of H in the free part nH - a0 A0 - b0 B0 - c0 C0.
  Int n() const { return (d_ + a0_ + b0_ + c0_) / 3; }

  bool is_zero() const { return *this == DivClass{}; }
  bool is_torsion() const { return d_ == 0 && a0_ == 0 && b0_ == 0 && c0_ == 0; }
  DivClass free_part() const { return DivClass(d_, a0_, b0_, c0_); }
  DivClass with_torsion(TorsionClass t) const { return DivClass(d_, a0_, b0_, c0_, t); }

  DivClass operator+(const DivClass& o) const;
  DivClass operator-(const DivClass& o) const;
  DivClass operator-() const;
  DivClass& operator+=(const DivClass& o) { return *this = *this + o; }
  DivClass& operator-=(const DivClass& o) { return *this = *this - o; }
  friend DivClass operator*(Int k, const DivClass& D);

  auto operator<=>(const DivClass&) const = default;

  /// "(d=3; 1 10, 1 10, 1 10)"
  std::string to_string() const;

 private:
  Int d_ = 0, a0_ = 0, b0_ = 0, c0_ = 0;
  TorsionClass t_{};
};

DivClass generator(Curve c);
DivClass canonical();

Int intersect(const DivClass& x, const DivClass& y);

/// Restriction to one of the six elliptic curves. For A3, B3, C3 the class is
/// computed from the A0/B0/C0 coordinates by the coordinate change formulas.
RestrictionClass restrict_to(const DivClass& D, Curve elliptic);

/// Degree of the restriction to any of the twelve curves.
inline Int degree_on(const DivClass& D, Curve c) { return intersect(D, generator(c)); }

struct DivClassHash {
  std::size_t operator()(const DivClass& D) const noexcept;
};

}  // namespace burniat
