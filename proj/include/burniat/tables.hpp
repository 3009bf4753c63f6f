#pragma once

// Reference transcription of the generator table and of the two length-6
// collections, exactly as printed (all six elliptic columns). The library only
// reads the d/a0/b0/c0 columns to build classes; the a3/b3/c3 columns exist so
// that the coordinate change can be audited against them.

#include <array>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "burniat/picard.hpp"

namespace burniat {

struct PrintedRow {
  std::string_view name;
  Int d;
  /// Columns a0, b0, c0, a3, b3, c3.
  std::array<RestrictionClass, 6> cols;

  DivClass to_class() const;
};

/// Twelve generator rows (A0, B0, C0, A3, B3, C3, A1, A2, B1, B2, C1, C2)
/// followed by the K_X row.
std::span<const PrintedRow> generator_table();
const PrintedRow& generator_row(Curve c);
const PrintedRow& canonical_row();

/// Rows L1..L6 followed by L6'.
std::span<const PrintedRow> collection_table();

/// Cells where restrict_to() disagrees with a printed a3/b3/c3 entry.
struct TableMismatch {
  std::string row;
  Curve column;
  RestrictionClass printed;
  RestrictionClass derived;
};
std::vector<TableMismatch> audit_table(std::span<const PrintedRow> rows);

/// Linear formula over F2 in the ten base coordinates
/// (d, a0, a0^1, a0^2, b0, b0^1, b0^2, c0, c0^1, c0^2).
struct F2Formula {
  std::array<bool, 10> coeff{};
  bool operator==(const F2Formula&) const = default;
  std::string to_string() const;
};

struct TorsionChange {
  /// Reduced row-echelon form of the 12 x 19 mod-2 generator matrix; rows
  /// beyond the rank are zero and omitted.
  std::vector<std::array<bool, 19>> rref;
  std::vector<int> pivot_columns;
  /// Formulas for a3^1, a3^2, b3^1, b3^2, c3^1, c3^2 in that order.
  std::array<F2Formula, 6> formulas;
  /// The same six formulas written down from the closed form used by
  /// restrict_to().
  std::array<F2Formula, 6> closed_form;
  bool agrees = false;
};

/// Row-reduces the printed generator table over F2 and reads off how the
/// torsion bits on A3, B3, C3 depend on the base coordinates.
TorsionChange derive_torsion_change();

std::string_view column_name(int column);  // 0..18, "d", "a0^0", ...

}  // namespace burniat
