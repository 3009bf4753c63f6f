#include "burniat/datasets.hpp"

#include <stdexcept>

#include "burniat/tables.hpp"

namespace burniat {

namespace {

DivClass row(std::size_t i) { return collection_table()[i].to_class(); }

}  // namespace

BlockedCollection upsilon() {
  BlockedCollection c;
  for (std::size_t i = 0; i < 6; ++i) c.classes.push_back(row(i));
  c.blocks = {2, 3, 1};
  return c;
}

BlockedCollection upsilon_prime() {
  BlockedCollection c = upsilon();
  c.classes[5] = row(6);
  c.labels = {"R1", "R2", "R3", "R4", "R5", "R6'"};
  return c;
}

NumericalCollection table2_numerical() {
  NumericalCollection n;
  for (const DivClass& D : upsilon().classes) n.free_parts.push_back(D.free_part());
  n.blocks = {2, 3, 1};
  return n;
}

std::vector<TorsionClass> upsilon_lift() {
  std::vector<TorsionClass> out;
  for (const DivClass& D : upsilon().classes) out.push_back(D.t());
  return out;
}

std::vector<TorsionClass> upsilon_prime_lift_normalized() {
  const BlockedCollection c = upsilon_prime();
  std::vector<TorsionClass> out;
  for (const DivClass& D : c.classes) out.push_back(D.t() - c.classes.back().t());
  return out;
}

BlockedCollection builtin_collection(const std::string& name) {
  if (name == "table2-upsilon") return upsilon();
  if (name == "table2-upsilon-prime") return upsilon_prime();
  throw std::invalid_argument("unknown built-in collection: " + name);
}

std::map<std::string, DivClass> default_symbols() {
  std::map<std::string, DivClass> s;
  for (Curve c : kAllCurves) s.emplace(std::string(curve_name(c)), generator(c));
  s.emplace("K", canonical());
  const auto rows = collection_table();
  for (std::size_t i = 0; i < 6; ++i) s.emplace("R" + std::to_string(i + 1), rows[i].to_class());
  s.emplace("R6'", rows[6].to_class());
  return s;
}

}  // namespace burniat
