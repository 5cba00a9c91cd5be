#pragma once

#include <cl2/element.hpp>

#include <string>

namespace cl2cli {

// Parse an element literal: signed terms over 'e1', 'e2', 'e3' with integer,
// fraction (n/d) or decimal coefficients, e.g. "1-2/3e1+0.5e3".  Whitespace
// between tokens is ignored; repeated basis terms accumulate.  Throws
// cl2::ParseError with the 0-based offset of the offending character.
cl2::Element parse_element(const std::string& text);

}  // namespace cl2cli
