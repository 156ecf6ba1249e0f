#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "morava/rings.hpp"

namespace morava {

/// Parses a relation such as "4", "2a^2", "a^3 + 2" or "(a+1)*(a-1)".
///
/// Grammar: integer literals, the variable a, binary + and -, unary -, * (also
/// implicit, as in 2a), ^ with a non-negative integer exponent, and parentheses.
/// Throws std::invalid_argument with the offending position on bad input.
CoeffElem parse_relation(const CoeffRingSpec& spec, std::string_view text);

/// Splits a comma-separated list and parses each entry.
std::vector<CoeffElem> parse_relation_list(const CoeffRingSpec& spec, std::string_view text);

}  // namespace morava
