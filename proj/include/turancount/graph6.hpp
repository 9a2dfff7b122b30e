#pragma once

#include "turancount/graph.hpp"

#include <string>
#include <string_view>

namespace turancount {

// Standard graph6 (nauty) encoding: N(n) then the upper triangle in
// column order, six bits per byte, each byte offset by 63. Lines must not
// carry the ">>graph6<<" header or a trailing newline.
graph parse_graph6(std::string_view text);
std::string serialize_graph6(const graph& g);

} // namespace turancount
