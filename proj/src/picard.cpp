#include "burniat/picard.hpp"

#include <cassert>
#include <sstream>
#include <stdexcept>

#include "burniat/tables.hpp"

namespace burniat {

namespace {

constexpr std::array<std::string_view, 12> kCurveNames = {
    "A0", "A1", "A2", "A3", "B0", "B1", "B2", "B3", "C0", "C1", "C2", "C3"};

Int mod2(Int x) { return ((x % 2) + 2) % 2; }

std::string two_bits(TwoTorsion t) {
  std::string s;
  s += (t & 2) ? '1' : '0';
  s += (t & 1) ? '1' : '0';
  return s;
}

}  // namespace

TorsionClass TorsionClass::from_bits(const std::array<int, kBits>& bits) {
  std::uint8_t m = 0;
  for (int i = 0; i < kBits; ++i) {
    if (bits[i] != 0 && bits[i] != 1) throw std::invalid_argument("torsion bit must be 0 or 1");
    m = static_cast<std::uint8_t>((m << 1) | bits[i]);
  }
  return TorsionClass(m);
}

std::array<int, TorsionClass::kBits> TorsionClass::bits() const {
  std::array<int, kBits> out{};
  for (int i = 0; i < kBits; ++i) out[i] = bit(i) ? 1 : 0;
  return out;
}

std::string TorsionClass::to_string() const {
  return two_bits(pair(0)) + "," + two_bits(pair(1)) + "," + two_bits(pair(2));
}

std::string_view curve_name(Curve c) { return kCurveNames[static_cast<int>(c)]; }

std::optional<Curve> parse_curve(std::string_view name) {
  for (Curve c : kAllCurves)
    if (curve_name(c) == name) return c;
  return std::nullopt;
}

std::string RestrictionClass::to_string() const {
  return std::to_string(deg) + " " + two_bits(tor);
}

DivClass::DivClass(Int d, Int a0, Int b0, Int c0, TorsionClass t)
    : d_(d), a0_(a0), b0_(b0), c0_(c0), t_(t) {
  if ((d + a0 + b0 + c0) % 3 != 0)
    throw std::invalid_argument("d + a0 + b0 + c0 must be divisible by 3");
}

DivClass DivClass::operator+(const DivClass& o) const {
  return DivClass(d_ + o.d_, a0_ + o.a0_, b0_ + o.b0_, c0_ + o.c0_, t_ + o.t_);
}

DivClass DivClass::operator-(const DivClass& o) const {
  return DivClass(d_ - o.d_, a0_ - o.a0_, b0_ - o.b0_, c0_ - o.c0_, t_ + o.t_);
}

DivClass DivClass::operator-() const { return DivClass(-d_, -a0_, -b0_, -c0_, t_); }

DivClass operator*(Int k, const DivClass& D) {
  const TorsionClass t = (k % 2 != 0) ? D.t_ : TorsionClass{};
  return DivClass(k * D.d_, k * D.a0_, k * D.b0_, k * D.c0_, t);
}

std::string DivClass::to_string() const {
  std::ostringstream os;
  os << "(d=" << d_ << "; " << RestrictionClass{a0_, t_.pair(0)}.to_string() << ", "
     << RestrictionClass{b0_, t_.pair(1)}.to_string() << ", "
     << RestrictionClass{c0_, t_.pair(2)}.to_string() << ")";
  return os.str();
}

std::size_t DivClassHash::operator()(const DivClass& D) const noexcept {
  std::size_t h = std::hash<Int>{}(D.d());
  auto mix = [&h](std::size_t v) { h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2); };
  mix(std::hash<Int>{}(D.a0()));
  mix(std::hash<Int>{}(D.b0()));
  mix(std::hash<Int>{}(D.c0()));
  mix(D.t().mask());
  return h;
}

DivClass generator(Curve c) { return generator_row(c).to_class(); }

DivClass canonical() { return canonical_row().to_class(); }

// Pic X / Tors is identified with Pic Y, where the free part is
// nH - a0 A0 - b0 B0 - c0 C0 and the form is diag(1, -1, -1, -1).
Int intersect(const DivClass& x, const DivClass& y) {
  return x.n() * y.n() - x.a0() * y.a0() - x.b0() * y.b0() - x.c0() * y.c0();
}

RestrictionClass restrict_to(const DivClass& D, Curve elliptic) {
  const TorsionClass t = D.t();
  const Int d = D.d(), a = D.a0(), b = D.b0(), c = D.c0();
  auto rotated = [&](Int x, Int y, Int z, TwoTorsion tx, TwoTorsion ty) {
    // Degree on the curve opposite to X0, in terms of the rotated triple (x, y, z).
    const Int num = d + x - 2 * y - 2 * z;
    assert(num % 3 == 0);
    const int hi = static_cast<int>(((tx >> 1) & 1) ^ (ty & 1) ^ mod2(d + x + y));
    return RestrictionClass{num / 3, static_cast<TwoTorsion>((hi << 1) | (tx & 1))};
  };
  switch (elliptic) {
    case Curve::A0: return {a, t.pair(0)};
    case Curve::B0: return {b, t.pair(1)};
    case Curve::C0: return {c, t.pair(2)};
    case Curve::A3: return rotated(a, b, c, t.pair(0), t.pair(1));
    case Curve::B3: return rotated(b, c, a, t.pair(1), t.pair(2));
    case Curve::C3: return rotated(c, a, b, t.pair(2), t.pair(0));
    default: throw std::logic_error("restrict_to: not an elliptic curve");
  }
}

}  // namespace burniat
