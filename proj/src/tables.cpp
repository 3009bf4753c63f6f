#include "burniat/tables.hpp"

#include <stdexcept>

namespace burniat {

namespace {

constexpr RestrictionClass R(Int deg, TwoTorsion tor) { return {deg, tor}; }

// Torsion pairs are written as binary literals t1t2: 0b10 is "10".
const std::array<PrintedRow, 13> kGeneratorTable = {{
    {"A0", 1, {R(-1, 0b00), R(0, 0b00), R(0, 0b00), R(0, 0b00), R(1, 0b10), R(1, 0b00)}},
    {"B0", 1, {R(0, 0b00), R(-1, 0b00), R(0, 0b00), R(1, 0b00), R(0, 0b00), R(1, 0b10)}},
    {"C0", 1, {R(0, 0b00), R(0, 0b00), R(-1, 0b00), R(1, 0b10), R(1, 0b00), R(0, 0b00)}},
    {"A3", 1, {R(0, 0b00), R(1, 0b10), R(1, 0b00), R(-1, 0b00), R(0, 0b00), R(0, 0b00)}},
    {"B3", 1, {R(1, 0b00), R(0, 0b00), R(1, 0b10), R(0, 0b00), R(-1, 0b00), R(0, 0b00)}},
    {"C3", 1, {R(1, 0b10), R(1, 0b00), R(0, 0b00), R(0, 0b00), R(0, 0b00), R(-1, 0b00)}},
    {"A1", 2, {R(0, 0b00), R(1, 0b01), R(0, 0b00), R(0, 0b00), R(1, 0b11), R(0, 0b00)}},
    {"A2", 2, {R(0, 0b00), R(1, 0b11), R(0, 0b00), R(0, 0b00), R(1, 0b01), R(0, 0b00)}},
    {"B1", 2, {R(0, 0b00), R(0, 0b00), R(1, 0b01), R(0, 0b00), R(0, 0b00), R(1, 0b11)}},
    {"B2", 2, {R(0, 0b00), R(0, 0b00), R(1, 0b11), R(0, 0b00), R(0, 0b00), R(1, 0b01)}},
    {"C1", 2, {R(1, 0b01), R(0, 0b00), R(0, 0b00), R(1, 0b11), R(0, 0b00), R(0, 0b00)}},
    {"C2", 2, {R(1, 0b11), R(0, 0b00), R(0, 0b00), R(1, 0b01), R(0, 0b00), R(0, 0b00)}},
    {"K", 6, {R(1, 0b00), R(1, 0b00), R(1, 0b00), R(1, 0b00), R(1, 0b00), R(1, 0b00)}},
}};

const std::array<PrintedRow, 7> kCollectionTable = {{
    {"L1", 3, {R(0, 0b00), R(0, 0b00), R(0, 0b00), R(1, 0b10), R(1, 0b10), R(1, 0b10)}},
    {"L2", 3, {R(1, 0b10), R(1, 0b10), R(1, 0b10), R(0, 0b00), R(0, 0b00), R(0, 0b00)}},
    {"L3", 2, {R(1, 0b11), R(0, 0b01), R(0, 0b00), R(1, 0b11), R(0, 0b01), R(0, 0b00)}},
    {"L4", 2, {R(0, 0b01), R(0, 0b00), R(1, 0b11), R(0, 0b01), R(0, 0b00), R(1, 0b11)}},
    {"L5", 2, {R(0, 0b00), R(1, 0b11), R(0, 0b01), R(0, 0b00), R(1, 0b11), R(0, 0b01)}},
    {"L6", 0, {R(0, 0b00), R(0, 0b00), R(0, 0b00), R(0, 0b00), R(0, 0b00), R(0, 0b00)}},
    {"L6'", 0, {R(0, 0b10), R(0, 0b10), R(0, 0b10), R(0, 0b10), R(0, 0b10), R(0, 0b10)}},
}};

// Row index in kGeneratorTable for each Curve enumerator.
constexpr std::array<int, 12> kRowOfCurve = {0, 6, 7, 3, 1, 8, 9, 4, 2, 10, 11, 5};

constexpr std::array<std::string_view, 19> kColumnNames = {
    "d",    "a0^0", "a0^1", "a0^2", "b0^0", "b0^1", "b0^2", "c0^0", "c0^1", "c0^2",
    "a3^0", "a3^1", "a3^2", "b3^0", "b3^1", "b3^2", "c3^0", "c3^1", "c3^2"};

std::array<bool, 19> mod2_row(const PrintedRow& r) {
  std::array<bool, 19> out{};
  out[0] = (r.d % 2) != 0;
  for (int k = 0; k < 6; ++k) {
    out[1 + 3 * k] = (r.cols[k].deg % 2) != 0;
    out[2 + 3 * k] = (r.cols[k].tor & 2) != 0;
    out[3 + 3 * k] = (r.cols[k].tor & 1) != 0;
  }
  return out;
}

// Base coordinates occupy columns 0..9 of the printed layout.
constexpr int kBaseColumns = 10;
constexpr std::array<int, 6> kDerivedTorsionColumns = {11, 12, 14, 15, 17, 18};

// Indices into the ten base coordinates.
enum Base { D, A, A1, A2, B, B1, B2, C, C1, C2 };

F2Formula formula(std::initializer_list<Base> terms) {
  F2Formula f;
  for (Base b : terms) f.coeff[b] = !f.coeff[b];
  return f;
}

}  // namespace

DivClass PrintedRow::to_class() const {
  return DivClass(d, cols[0].deg, cols[1].deg, cols[2].deg,
                  TorsionClass(cols[0].tor, cols[1].tor, cols[2].tor));
}

std::span<const PrintedRow> generator_table() { return kGeneratorTable; }

const PrintedRow& generator_row(Curve c) { return kGeneratorTable[kRowOfCurve[static_cast<int>(c)]]; }

const PrintedRow& canonical_row() { return kGeneratorTable[12]; }

std::span<const PrintedRow> collection_table() { return kCollectionTable; }

std::vector<TableMismatch> audit_table(std::span<const PrintedRow> rows) {
  std::vector<TableMismatch> out;
  for (const PrintedRow& row : rows) {
    const DivClass D = row.to_class();
    for (int k = 0; k < 6; ++k) {
      const Curve E = kEllipticCurves[k];
      const RestrictionClass derived = restrict_to(D, E);
      if (derived != row.cols[k]) out.push_back({std::string(row.name), E, row.cols[k], derived});
    }
  }
  return out;
}

std::string_view column_name(int column) { return kColumnNames.at(column); }

std::string F2Formula::to_string() const {
  static constexpr std::array<std::string_view, 10> names = {
      "d", "a0", "a0^1", "a0^2", "b0", "b0^1", "b0^2", "c0", "c0^1", "c0^2"};
  std::string s;
  for (int i = 0; i < 10; ++i) {
    if (!coeff[i]) continue;
    if (!s.empty()) s += " + ";
    s += names[i];
  }
  return s.empty() ? "0" : s;
}

TorsionChange derive_torsion_change() {
  std::vector<std::array<bool, 19>> m;
  for (Curve c : kEllipticCurves) m.push_back(mod2_row(generator_row(c)));
  for (Curve c : kGenus2Curves) m.push_back(mod2_row(generator_row(c)));

  TorsionChange out;
  std::size_t rank = 0;
  for (int col = 0; col < 19 && rank < m.size(); ++col) {
    std::size_t piv = rank;
    while (piv < m.size() && !m[piv][col]) ++piv;
    if (piv == m.size()) continue;
    std::swap(m[rank], m[piv]);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || !m[r][col]) continue;
      for (int k = 0; k < 19; ++k) m[r][k] = m[r][k] != m[rank][k];
    }
    out.pivot_columns.push_back(col);
    ++rank;
  }
  m.resize(rank);
  out.rref = m;

  // A derived column is a function of the base coordinates only if every
  // pivot sits among the base columns. Then for any row vector v of the row
  // space, v[j] = sum_r v[pivot_r] * rref[r][j].
  for (int p : out.pivot_columns)
    if (p >= kBaseColumns)
      throw std::runtime_error("generator table: derived column " + std::string(column_name(p)) +
                               " is not determined by the base coordinates");
  for (int k = 0; k < 6; ++k) {
    const int j = kDerivedTorsionColumns[k];
    for (std::size_t r = 0; r < rank; ++r)
      if (out.rref[r][j]) out.formulas[k].coeff[out.pivot_columns[r]] = true;
  }

  out.closed_form = {
      formula({A1, B2, D, A, B}), formula({A2}),  // a3
      formula({B1, C2, D, B, C}), formula({B2}),  // b3
      formula({C1, A2, D, C, A}), formula({C2}),  // c3
  };
  out.agrees = out.formulas == out.closed_form;
  return out;
}

}  // namespace burniat
