#pragma once

#include <string>
#include <string_view>

#include "addbase/intset.hpp"

namespace addbase {

/// Parses a set description and canonicalizes it. Accepted forms:
///
///   E={1,5}; m=6; R={0}; N0=0                      compact text
///   {"exceptional":[1,5],"modulus":6,...}          JSON object
///   naturals | N | evens | odds | 6N               named sets
///
/// In the text form every clause is optional (E={}, m=1, R={}, N0=0) but
/// none may repeat. Throws ParseError or InvalidDescription.
PeriodicSet parse_set(std::string_view input);

/// Canonical compact text, e.g. "E={1,5}; m=6; R={0}; N0=0".
std::string format_set(const PeriodicSet& s);

}  // namespace addbase
