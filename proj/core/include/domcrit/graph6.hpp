#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "domcrit/graph.hpp"

namespace domcrit {

enum class Graph6ErrorKind {
  MalformedLength,    // length byte(s) outside the printable 63..126 window
  UnsupportedOrder,   // decoded vertex count exceeds 64
  UnsupportedFormat,  // sparse6 / digraph6 / incremental input
  TruncatedBits,      // adjacency bit section shorter than n(n-1)/2 bits
  InvalidByte,        // adjacency byte outside 63..126
  TrailingGarbage,    // bytes after a complete encoding
  NonzeroPadding,     // padding bits of the final byte are not zero
};

class Graph6Error : public std::runtime_error {
 public:
  Graph6Error(Graph6ErrorKind kind, std::size_t offset, const std::string& message)
      : std::runtime_error(message), kind_(kind), offset_(offset) {}
  Graph6ErrorKind kind() const { return kind_; }
  /// Byte offset into the input where the problem was detected.
  std::size_t offset() const { return offset_; }

 private:
  Graph6ErrorKind kind_;
  std::size_t offset_;
};

/// Decodes one graph6 token (no surrounding whitespace). Accepts the optional
/// ">>graph6<<" header and both the short and the extended length form, up to
/// 64 vertices. sparse6 and digraph6 inputs are rejected as unsupported.
Graph parse_graph6(std::string_view text);

/// Encodes in the canonical layout: short length byte for n <= 62, extended
/// form above, adjacency bits of the upper triangle in column order, zero
/// padded. parse_graph6(to_graph6(g)) reproduces g exactly.
std::string to_graph6(const Graph& g);

const char* graph6_error_kind_name(Graph6ErrorKind kind);

}  // namespace domcrit
