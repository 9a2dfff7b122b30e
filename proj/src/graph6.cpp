#include "turancount/graph6.hpp"

#include <stdexcept>

namespace turancount {

namespace {

int sextet(std::string_view text, std::size_t pos)
{
  if (pos >= text.size())
    throw std::invalid_argument("graph6: unexpected end of input at byte " + std::to_string(pos));
  int c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126)
    throw std::invalid_argument("graph6: byte " + std::to_string(c) + " at offset " +
                                std::to_string(pos) + " outside 63..126");
  return c - 63;
}

} // namespace

graph parse_graph6(std::string_view text)
{
  std::size_t pos = 0;
  long n = sextet(text, pos++);
  if (n == 63) {
    if (sextet(text, pos) == 63)
      throw std::invalid_argument("graph6: 8-byte size form not supported (n > 258047)");
    n = 0;
    for (int i = 0; i < 3; ++i)
      n = (n << 6) | sextet(text, pos++);
    if (n < 63)
      throw std::invalid_argument("graph6: non-canonical long size form");
  }
  if (n > max_vertices)
    throw capacity_error("graph6: order " + std::to_string(n) + " exceeds 64");

  graph g(static_cast<int>(n));
  std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::size_t bytes = (pairs + 5) / 6;
  if (text.size() != pos + bytes)
    throw std::invalid_argument("graph6: expected " + std::to_string(pos + bytes) +
                                " bytes, got " + std::to_string(text.size()));

  std::size_t k = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i, ++k) {
      int byte = sextet(text, pos + k / 6);
      if ((byte >> (5 - k % 6)) & 1)
        g.add_edge(i, j);
    }
  if (k % 6 != 0) {
    int last = sextet(text, pos + k / 6);
    if (last & ((1 << (6 - k % 6)) - 1))
      throw std::invalid_argument("graph6: nonzero padding bits");
  }
  return g;
}

std::string serialize_graph6(const graph& g)
{
  int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6)
      out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  }
  int acc = 0, filled = 0;
  for (vertex j = 1; j < n; ++j)
    for (vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.has_edge(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = filled = 0;
      }
    }
  if (filled)
    out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

} // namespace turancount
