#pragma once

// Pic Y for Y = Bl_3 P^2, the del Pezzo surface of degree 6, in the basis
// H, A0, B0, C0. Sections are counted on the toric model.

#include <array>
#include <compare>
#include <string>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

/// nH - a A0 - b B0 - c C0.
struct DPClass {
  Int n = 0, a = 0, b = 0, c = 0;

  DPClass operator+(const DPClass& o) const { return {n + o.n, a + o.a, b + o.b, c + o.c}; }
  DPClass operator-(const DPClass& o) const { return {n - o.n, a - o.a, b - o.b, c - o.c}; }
  DPClass operator-() const { return {-n, -a, -b, -c}; }
  friend DPClass operator*(Int k, const DPClass& D) { return {k * D.n, k * D.a, k * D.b, k * D.c}; }
  auto operator<=>(const DPClass&) const = default;

  std::string to_string() const;
};

Int intersect(const DPClass& x, const DPClass& y);
DPClass canonical_Y();

/// Class of the image in Y of one of the twelve curves (free part of its row).
DPClass curve_class_Y(Curve c);
/// Torsion-free part of a class on X, read in Pic Y.
DPClass to_dp(const DivClass& D);
/// The lift of D with the given torsion part.
DivClass lift_to_X(const DPClass& D, TorsionClass t);

/// Pencils f1, f2, f3 (the classes of A1, B1, C1) and the contractions
/// h1 = H, h2 = 2H - A0 - B0 - C0.
DPClass pencil(int i);       // i = 1..3
DPClass contraction(int j);  // j = 1..2

struct Ray {
  Int x = 0, y = 0;
  auto operator<=>(const Ray&) const = default;
};

/// Six rays of the hexagonal fan, counter-clockwise from (1,0), each matched
/// to one of the six elliptic curve classes.
struct ToricModel {
  std::array<Ray, 6> rays;
  std::array<Curve, 6> curves;

  /// Coefficients a_i with sum a_i D_i = D, D_i the boundary divisor of rays[i].
  std::array<Int, 6> decompose(const DPClass& D) const;
  /// Lattice points of {m : <m, v_i> >= -a_i}.
  Int count_sections(const std::array<Int, 6>& a) const;
  /// Toric self-intersections (-1) and adjacency, in ray order.
  std::array<std::array<Int, 6>, 6> toric_gram() const;
};

/// Every assignment of the hexagon A0-C3-B0-A3-C0-B3 to the rays that keeps
/// cyclic adjacency (rotations and reflections) and satisfies both linear
/// relations sum <m, v_i> D_i = 0.
std::vector<std::array<Curve, 6>> valid_toric_assignments();
/// The lexicographically first valid assignment, computed once.
const ToricModel& toric_model();

Int h0_Y(const DPClass& D);
/// 1 + D(D - K_Y)/2.
Int chi_Y(const DPClass& D);
/// (h0, h1, h2) with h2 = h0(K_Y - D). Throws std::logic_error if h1 < 0.
std::array<Int, 3> h_all_Y(const DPClass& D);

struct DPCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct DPCollectionReport {
  std::vector<DPClass> classes;
  std::vector<std::string> labels;
  std::vector<int> blocks;
  /// cohomology[i][j] = h_all_Y(D_j - D_i).
  std::vector<std::vector<std::array<Int, 3>>> cohomology;
  std::vector<DPCheck> checks;
  bool passed = false;
};

/// Strongness, exceptionality and block orthogonality for any collection;
/// compares forward Hom dimensions against `expected_hom` when it is nonempty.
DPCollectionReport check_dp_collection(const std::vector<DPClass>& classes, const std::vector<std::string>& labels,
                                       const std::vector<int>& blocks,
                                       const std::vector<std::vector<Int>>& expected_hom = {});

/// (O, O(f1), O(f2), O(f3), O(h1), O(h2)) in blocks 1+3+2.
std::vector<DPClass> sigma_collection();
std::vector<std::string> sigma_labels();
/// Forward Hom dimensions expected for Sigma.
std::vector<std::vector<Int>> sigma_expected_hom();
DPCollectionReport verify_sigma();

/// chi on X of the lift of D with torsion t equals chi_Y(-D).
bool lift_chi_check(const DPClass& D, TorsionClass t);

}  // namespace burniat
