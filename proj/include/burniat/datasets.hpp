#pragma once

// Built-in collections: the two length-6 collections printed with the
// generator table, and their shared numerical data.

#include <map>
#include <string>
#include <vector>

#include "burniat/collections.hpp"

namespace burniat {

/// (R1, ..., R6), blocks 2+3+1.
BlockedCollection upsilon();
/// (R1, ..., R5, R6'), blocks 2+3+1.
BlockedCollection upsilon_prime();
/// Free parts of R1..R6 with blocks 2+3+1.
NumericalCollection table2_numerical();

/// Torsion parts of upsilon() (R6 already has none).
std::vector<TorsionClass> upsilon_lift();
/// Torsion parts of upsilon_prime() shifted so that the last one vanishes.
std::vector<TorsionClass> upsilon_prime_lift_normalized();

/// "table2-upsilon" and "table2-upsilon-prime". Throws std::invalid_argument
/// for other names.
BlockedCollection builtin_collection(const std::string& name);

/// Generators A0..C3, K, and R1..R6, R6' for expression parsing.
std::map<std::string, DivClass> default_symbols();

}  // namespace burniat
