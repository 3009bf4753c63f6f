#pragma once

// Small integer-linear expressions over named classes, e.g. "K-(R5-R6)",
// "A0+B0+C0+A3+B3+C3-K" or "2*K - R1".

#include <map>
#include <string>
#include <string_view>

#include "burniat/picard.hpp"

namespace burniat {

/// Grammar: expr := term (('+'|'-') term)*, term := [int ['*']] atom | '-' term,
/// atom := name | '0' | '(' expr ')'. Names are letters, digits and a trailing
/// apostrophe. Throws std::invalid_argument on syntax errors and unknown names.
DivClass parse_divisor(std::string_view text, const std::map<std::string, DivClass>& symbols);

}  // namespace burniat
