#pragma once

// The Z3 x Z2 = Z6 symmetry of the Burniat configuration: Z3 rotates the
// letters A -> B -> C -> A, Z2 exchanges the index 0 and 3 curves (and 1 with
// 2). Each element is stored as a permutation of the twelve curves; its action
// on Pic X moves restrictions along the permutation.

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "burniat/collections.hpp"
#include "burniat/picard.hpp"

namespace burniat {

struct Symmetry {
  std::string name;
  /// image[c] is the curve c is sent to, indexed by the Curve value.
  std::array<Curve, 12> image{};

  Curve operator()(Curve c) const { return image[static_cast<int>(c)]; }
  DivClass apply(const DivClass& D) const;
  /// (this * other)(c) = this(other(c))
  Symmetry compose(const Symmetry& other) const;
};

Symmetry identity_symmetry();
Symmetry rotation_symmetry();
Symmetry swap_symmetry();
/// All six elements rot^k swap^e, k = 0..2, e = 0..1.
std::vector<Symmetry> z6_symmetries();

/// apply(generator(c)) == generator(image[c]) for all twelve curves and K is fixed.
bool symmetry_consistent(const Symmetry& g);

/// Image of a lift under g, renormalized so that the last torsion vanishes.
/// Empty if g does not permute the free parts block-compatibly.
std::optional<std::vector<TorsionClass>> act_on_lift(const Symmetry& g, const NumericalCollection& numerical,
                                                     const std::vector<TorsionClass>& lift);

}  // namespace burniat
