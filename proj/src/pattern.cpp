#include "turancount/pattern.hpp"
#include "turancount/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace turancount {

namespace {

int parse_size(std::string_view spec, std::size_t start)
{
  std::string_view digits = spec.substr(start);
  if (digits.empty())
    throw pattern_error("expected a vertex count", start);
  long value = 0;
  for (std::size_t i = 0; i < digits.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(digits[i])))
      throw pattern_error("expected a digit", start + i);
    value = value * 10 + (digits[i] - '0');
    if (value > max_vertices)
      throw pattern_error("vertex count exceeds 64", start);
  }
  return static_cast<int>(value);
}

std::string trim(const std::string& s)
{
  auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos)
    return {};
  auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

} // namespace

graph parse_pattern(std::string_view spec)
{
  if (spec == "k4me")
    return k4_minus_edge();
  auto colon = spec.find(':');
  if (colon == std::string_view::npos)
    throw pattern_error("unknown pattern '" + std::string(spec) +
                            "'; expected cycle:<m>, complete:<m>, k4me, g6:<code> or file:<path>",
                        0);
  std::string_view kind = spec.substr(0, colon);
  std::size_t arg = colon + 1;
  if (kind == "cycle") {
    int m = parse_size(spec, arg);
    if (m < 3)
      throw pattern_error("cycle length must be ≥ 3", arg);
    return cycle(m);
  }
  if (kind == "complete") {
    int m = parse_size(spec, arg);
    if (m < 1)
      throw pattern_error("complete graph needs at least 1 vertex", arg);
    return complete(m);
  }
  if (kind == "g6") {
    try {
      return parse_graph6(spec.substr(arg));
    } catch (const std::exception& e) {
      throw pattern_error(e.what(), arg);
    }
  }
  if (kind == "file") {
    if (arg == spec.size())
      throw pattern_error("missing file path", arg);
    try {
      return read_graph_file(std::string(spec.substr(arg)));
    } catch (const std::exception& e) {
      throw pattern_error(e.what(), arg);
    }
  }
  throw pattern_error("unknown pattern kind '" + std::string(kind) + "'", 0);
}

std::string pattern_name(std::string_view spec)
{
  if (spec == "k4me")
    return "K4-e";
  if (spec.starts_with("cycle:"))
    return "C" + std::string(spec.substr(6));
  if (spec.starts_with("complete:"))
    return "K" + std::string(spec.substr(9));
  return std::string(spec);
}

graph parse_graph_text(const std::string& text)
{
  std::istringstream in(text);
  std::string line;
  std::string first;
  while (std::getline(in, line)) {
    first = trim(line);
    if (!first.empty())
      break;
  }
  if (first.empty())
    throw std::invalid_argument("empty graph file");
  if (std::isdigit(static_cast<unsigned char>(first[0])))
    return parse_edge_list(text);
  if (first.starts_with(">>graph6<<"))
    first = first.substr(10);
  return parse_graph6(first);
}

graph read_graph_file(const std::string& path)
{
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::invalid_argument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_graph_text(buf.str());
}

} // namespace turancount
