#include "domcrit/graph6.hpp"

#include <string>

namespace domcrit {

namespace {

constexpr int kLo = 63;   // '?'
constexpr int kHi = 126;  // '~'

[[noreturn]] void fail(Graph6ErrorKind kind, std::size_t offset, const std::string& what) {
  throw Graph6Error(kind, offset, what + " at byte " + std::to_string(offset));
}

}  // namespace

const char* graph6_error_kind_name(Graph6ErrorKind kind) {
  switch (kind) {
    case Graph6ErrorKind::MalformedLength: return "malformed-length";
    case Graph6ErrorKind::UnsupportedOrder: return "unsupported-order";
    case Graph6ErrorKind::UnsupportedFormat: return "unsupported-format";
    case Graph6ErrorKind::TruncatedBits: return "truncated-bits";
    case Graph6ErrorKind::InvalidByte: return "invalid-byte";
    case Graph6ErrorKind::TrailingGarbage: return "trailing-garbage";
    case Graph6ErrorKind::NonzeroPadding: return "nonzero-padding";
  }
  return "unknown";
}

Graph parse_graph6(std::string_view text) {
  std::size_t pos = 0;

  auto starts_with = [&](std::string_view prefix) {
    return text.substr(pos, prefix.size()) == prefix;
  };
  if (starts_with(">>graph6<<")) {
    pos += 10;
  } else if (starts_with(">>sparse6<<") || (pos < text.size() && text[pos] == ':')) {
    fail(Graph6ErrorKind::UnsupportedFormat, pos, "sparse6 input not supported");
  } else if (starts_with(">>digraph6<<") || (pos < text.size() && text[pos] == '&')) {
    fail(Graph6ErrorKind::UnsupportedFormat, pos, "digraph6 input not supported");
  }

  if (pos >= text.size()) {
    fail(Graph6ErrorKind::MalformedLength, pos, "missing length byte");
  }

  auto length_byte = [&](std::size_t at) -> int {
    int b = static_cast<unsigned char>(text[at]);
    if (b < kLo || b > kHi) {
      fail(Graph6ErrorKind::MalformedLength, at, "length byte outside 63..126");
    }
    return b - kLo;
  };

  long n = 0;
  std::size_t length_start = pos;
  int first = length_byte(pos);
  if (first < 63) {
    n = first;
    pos += 1;
  } else {
    // extended form: '~' then three 6-bit digits; '~~' starts the 8-byte form,
    // whose smallest value already exceeds the 64-vertex cap.
    if (pos + 1 < text.size() && text[pos + 1] == '~') {
      fail(Graph6ErrorKind::UnsupportedOrder, pos, "vertex count above 64 not supported");
    }
    if (pos + 3 >= text.size()) {
      fail(Graph6ErrorKind::MalformedLength, text.size(), "extended length form cut short");
    }
    long b1 = length_byte(pos + 1);
    long b2 = length_byte(pos + 2);
    long b3 = length_byte(pos + 3);
    n = (b1 << 12) | (b2 << 6) | b3;
    pos += 4;
  }
  if (n > kMaxVertices) {
    fail(Graph6ErrorKind::UnsupportedOrder, length_start,
         "vertex count " + std::to_string(n) + " above 64 not supported");
  }

  Graph g(static_cast<int>(n));
  long bit_total = n * (n - 1) / 2;
  long bytes_needed = (bit_total + 5) / 6;

  long bit_index = 0;  // runs over columns j = 1..n-1, rows i = 0..j-1
  int col = 1, row = 0;
  for (long k = 0; k < bytes_needed; ++k) {
    if (pos >= text.size()) {
      fail(Graph6ErrorKind::TruncatedBits, text.size(),
           "adjacency section ends before bit " + std::to_string(bit_index));
    }
    int b = static_cast<unsigned char>(text[pos]);
    if (b < kLo || b > kHi) {
      fail(Graph6ErrorKind::InvalidByte, pos, "adjacency byte outside 63..126");
    }
    int group = b - kLo;
    for (int shift = 5; shift >= 0; --shift) {
      int bit = (group >> shift) & 1;
      if (bit_index < bit_total) {
        if (bit) g.add_edge(row, col);
        ++bit_index;
        if (++row == col) {
          row = 0;
          ++col;
        }
      } else if (bit) {
        fail(Graph6ErrorKind::NonzeroPadding, pos, "padding bits must be zero");
      }
    }
    ++pos;
  }

  if (pos != text.size()) {
    fail(Graph6ErrorKind::TrailingGarbage, pos, "unexpected bytes after encoding");
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  std::string out;
  int n = g.n();
  if (n <= 62) {
    out.push_back(static_cast<char>(kLo + n));
  } else {
    out.push_back(static_cast<char>(kHi));
    out.push_back(static_cast<char>(kLo + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(kLo + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(kLo + (n & 63)));
  }

  int group = 0, filled = 0;
  for (int col = 1; col < n; ++col) {
    for (int row = 0; row < col; ++row) {
      group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kLo + group));
        group = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) {
    group <<= (6 - filled);
    out.push_back(static_cast<char>(kLo + group));
  }
  return out;
}

}  // namespace domcrit
