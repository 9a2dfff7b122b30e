#pragma once

#include "turancount/graph.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace turancount {

// Parse failure with the byte offset into the pattern text.
class pattern_error : public std::invalid_argument {
public:
  pattern_error(const std::string& message, std::size_t offset)
      : std::invalid_argument(message + " (at byte " + std::to_string(offset) + ")"), offset_(offset)
  {
  }

  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

// cycle:<m> | complete:<m> | k4me | g6:<graph6> | file:<path>
graph parse_pattern(std::string_view spec);

// Short display name: C5, K4, K4-e, else the spec text itself.
std::string pattern_name(std::string_view spec);

// A graph6 line (optionally after a ">>graph6<<" header) or the
// "n m / u v" edge-list text form.
graph read_graph_file(const std::string& path);
graph parse_graph_text(const std::string& text);

} // namespace turancount
