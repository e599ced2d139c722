#pragma once

// graph6 encoding: N(n) followed by the upper triangle of the adjacency
// matrix, column by column (x(0,1), x(0,2), x(1,2), x(0,3), ...), packed six
// bits per byte with an offset of 63.

#include <cstddef>
#include <string>
#include <string_view>

#include "specturan/errors.hpp"
#include "specturan/graph.hpp"

namespace specturan {

template <std::size_t W>
std::string graph6_encode(const basic_graph<W>& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
    out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
    out.push_back(static_cast<char>((n & 63) + 63));
  }
  int acc = 0;
  int bits = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + 63));
  return out;
}

/// Decodes one graph6 string. An optional ">>graph6<<" header and a single
/// trailing newline are accepted.
template <std::size_t W = 1>
basic_graph<W> graph6_decode(std::string_view s) {
  std::size_t pos = 0;
  constexpr std::string_view header = ">>graph6<<";
  if (s.substr(0, header.size()) == header) pos = header.size();
  while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.remove_suffix(1);
  if (pos >= s.size()) throw parse_error("empty graph6 string", pos);

  auto byte = [&](std::size_t at) -> int {
    if (at >= s.size()) throw parse_error("truncated graph6 string", at);
    const int c = static_cast<unsigned char>(s[at]);
    if (c < 63 || c > 126) throw parse_error("byte outside graph6 range 63..126", at);
    return c - 63;
  };

  std::size_t n = 0;
  if (byte(pos) < 63) {
    n = static_cast<std::size_t>(byte(pos));
    pos += 1;
  } else {
    if (pos + 1 < s.size() && byte(pos + 1) == 63)
      throw parse_error("graph6 orders above 258047 are not supported", pos);
    n = (static_cast<std::size_t>(byte(pos + 1)) << 12) |
        (static_cast<std::size_t>(byte(pos + 2)) << 6) | static_cast<std::size_t>(byte(pos + 3));
    pos += 4;
  }
  if (n > basic_graph<W>::max_vertices)
    throw parse_error("graph order " + std::to_string(n) + " exceeds capacity " +
                          std::to_string(basic_graph<W>::max_vertices),
                      0);

  const std::size_t pairs = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t expected = pos + (pairs + 5) / 6;
  if (s.size() < expected) throw parse_error("truncated graph6 string", s.size());
  if (s.size() > expected) throw parse_error("trailing bytes after graph6 body", expected);

  basic_graph<W> g(n);
  std::size_t k = 0;
  for (vertex j = 1; j < n; ++j) {
    for (vertex i = 0; i < j; ++i, ++k) {
      const int b = byte(pos + k / 6);
      if ((b >> (5 - k % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (k % 6 != 0) {
    const int b = byte(pos + k / 6);
    if (b & ((1 << (6 - k % 6)) - 1)) throw parse_error("non-zero padding bits", pos + k / 6);
  }
  return g;
}

}  // namespace specturan
