#pragma once

#include <string>

#include "relext/extension.hpp"

namespace relext {

// Parses the quiver description language:
//
//   field Q            # or: field F 5
//   vertex 1 2 3
//   arrow alpha : 3 -> 2
//   relation alpha*beta
//   relation alpha*beta - gamma*delta
//   relation 2*alpha*beta - 1/3*gamma*delta
//
// '#' starts a comment. Paths compose left to right. Errors carry 1-based
// line/column positions.
Presentation parse_presentation(const std::string& text);

// Serializes a presentation in the same language; the output re-parses.
std::string presentation_to_string(const Presentation& p);

// DOT digraph; arrows listed in `new_arrows` are styled dashed.
std::string quiver_to_dot(const Quiver& q, const std::vector<int>& new_arrows = {});

} // namespace relext
