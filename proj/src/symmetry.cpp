#include "burniat/symmetry.hpp"

#include <algorithm>

namespace burniat {

namespace {

Curve curve_at(int letter, int index) { return static_cast<Curve>(4 * (letter % 3) + index); }

// Rebuilds a class from its restrictions to the three curves that g sends to
// A0, B0, C0.
DivClass from_restrictions(Int d, const RestrictionClass& a, const RestrictionClass& b, const RestrictionClass& c) {
  return DivClass(d, a.deg, b.deg, c.deg, TorsionClass(a.tor, b.tor, c.tor));
}

}  // namespace

DivClass Symmetry::apply(const DivClass& D) const {
  // (gD)|_{g(E)} = D|_E, so the A0 coordinate of gD is D restricted to g^-1(A0).
  std::array<RestrictionClass, 3> r;
  const std::array<Curve, 3> base = {Curve::A0, Curve::B0, Curve::C0};
  for (int k = 0; k < 3; ++k) {
    const auto it = std::find(image.begin(), image.end(), base[k]);
    const Curve pre = static_cast<Curve>(it - image.begin());
    r[k] = restrict_to(D, pre);
  }
  return from_restrictions(D.d(), r[0], r[1], r[2]);
}

Symmetry Symmetry::compose(const Symmetry& other) const {
  Symmetry s;
  s.name = name + "*" + other.name;
  for (Curve c : kAllCurves) s.image[static_cast<int>(c)] = (*this)(other(c));
  return s;
}

Symmetry identity_symmetry() {
  Symmetry s{"id", {}};
  for (Curve c : kAllCurves) s.image[static_cast<int>(c)] = c;
  return s;
}

Symmetry rotation_symmetry() {
  Symmetry s{"rot", {}};
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 4; ++i) s.image[4 * l + i] = curve_at(l + 1, i);
  return s;
}

Symmetry swap_symmetry() {
  Symmetry s{"swap", {}};
  for (int l = 0; l < 3; ++l)
    for (int i = 0; i < 4; ++i) s.image[4 * l + i] = curve_at(l, 3 - i);
  return s;
}

std::vector<Symmetry> z6_symmetries() {
  std::vector<Symmetry> out;
  Symmetry rot = identity_symmetry();
  for (int k = 0; k < 3; ++k) {
    Symmetry r = rot;
    r.name = "rot^" + std::to_string(k);
    out.push_back(r);
    Symmetry rs = r.compose(swap_symmetry());
    rs.name = "rot^" + std::to_string(k) + "*swap";
    out.push_back(rs);
    rot = rotation_symmetry().compose(rot);
  }
  return out;
}

bool symmetry_consistent(const Symmetry& g) {
  for (Curve c : kAllCurves) {
    const auto it = std::find(g.image.begin(), g.image.end(), c);
    if (it == g.image.end()) return false;
  }
  for (Curve c : kAllCurves)
    if (g.apply(generator(c)) != generator(g(c))) return false;
  return g.apply(canonical()) == canonical();
}

std::optional<std::vector<TorsionClass>> act_on_lift(const Symmetry& g, const NumericalCollection& numerical,
                                                     const std::vector<TorsionClass>& lift) {
  const BlockedCollection src = apply_lift(numerical, lift);
  const std::size_t n = src.classes.size();
  std::vector<std::optional<TorsionClass>> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const DivClass img = g.apply(src.classes[i]);
    std::size_t j = 0;
    while (j < n && numerical.free_parts[j].free_part() != img.free_part()) ++j;
    if (j == n || out[j] || src.block_of(i) != src.block_of(j)) return std::nullopt;
    out[j] = img.t();
  }
  const TorsionClass last = *out[n - 1];
  std::vector<TorsionClass> res;
  for (const auto& t : out) res.push_back(*t - last);
  return res;
}

}  // namespace burniat
