#pragma once

// Ideal text format:
//
//   ring 3;            # number of variables, required first statement
//   vars a,b,c;        # optional renaming, default x1..xn
//   a*b; b^2*c;        # one generator per ';'-terminated product
//
// Whitespace is insignificant and '#' starts a comment. The final ';' may be
// omitted. A generator "1" denotes the unit ideal.

#include <string>
#include <string_view>

#include <json.hpp>

#include "monid/core.hpp"

namespace monid {

/// Parses the ideal text format. Generators are minimalized and duplicates
/// merged. Throws ParseError with a 1-based line and column.
MonomialIdeal parse_ideal(std::string_view text);

/// Reads and parses a file. Throws Error if the file cannot be read.
MonomialIdeal read_ideal_file(const std::string& path);

/// Text form accepted by parse_ideal.
std::string format_ideal(const MonomialIdeal& ideal);

/// Human-readable monomial, e.g. "x1^2*x3" or "1".
std::string format_monomial(const PolyRing& ring, const Exponent& m);

/// Canonical JSON {"n": int, "gens": [[int,...],...]}, gens in lex order.
nlohmann::ordered_json ideal_to_json(const MonomialIdeal& ideal);
MonomialIdeal ideal_from_json(const nlohmann::json& j);

nlohmann::ordered_json exponent_to_json(const Exponent& e);

} // namespace monid
