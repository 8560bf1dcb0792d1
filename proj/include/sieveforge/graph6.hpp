// graph6 records: printable bytes 63..126, each carrying six bits. The size
// header is one byte (63 + n) for n <= 62 or '~' plus three bytes for larger
// n, followed by the upper triangle of the adjacency matrix in column-major
// order, one bit per pair, zero-padded to a six-bit boundary.
#pragma once

#include <cstddef>
#include <fstream>
#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "sieveforge/graph.hpp"

namespace sieveforge {

struct Graph6Error : std::runtime_error {
  Graph6Error(const std::string& what, std::size_t offset)
      : std::runtime_error("graph6: " + what + " at byte " + std::to_string(offset)),
        byte_offset(offset) {}
  std::size_t byte_offset;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

namespace detail {

inline int g6_sextet(std::string_view s, std::size_t i) {
  if (i >= s.size()) throw Graph6Error("record truncated", i);
  unsigned char c = static_cast<unsigned char>(s[i]);
  if (c < 63 || c > 126) throw Graph6Error("byte out of printable range", i);
  return c - 63;
}

}  // namespace detail

inline Graph parse_graph6(std::string_view line) {
  std::string_view s = line;
  if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
    s.remove_prefix(kGraph6Header.size());
  if (s.empty()) throw Graph6Error("empty record", 0);

  std::size_t pos = 0;
  long long n = detail::g6_sextet(s, pos++);
  if (n == 63) {
    if (pos < s.size() && s[pos] == '~')
      throw Graph6Error("node counts above 258047 unsupported", pos);
    n = 0;
    for (int k = 0; k < 3; ++k) n = (n << 6) | detail::g6_sextet(s, pos++);
    if (n <= 62) throw Graph6Error("non-minimal size header", 1);
  }

  const long long bits = n * (n - 1) / 2;
  const std::size_t need = static_cast<std::size_t>((bits + 5) / 6);
  if (s.size() - pos < need) throw Graph6Error("bit stream truncated", s.size());
  if (s.size() - pos > need) throw Graph6Error("trailing bytes after record", pos + need);

  std::vector<Edge> edges;
  long long bit = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      if (bit % 6 == 0) cur = detail::g6_sextet(s, pos++);
      if (cur & (1 << (5 - bit % 6))) edges.emplace_back(i, j);
    }
  return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
  const int n = g.node_count();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(63 + n));
  } else if (n <= 258047) {
    out.push_back('~');
    out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
    out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
    out.push_back(static_cast<char>(63 + (n & 63)));
  } else {
    throw std::invalid_argument("graph6: node counts above 258047 unsupported");
  }
  long long bit = 0;
  int cur = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      if (g.has_edge(i, j)) cur |= 1 << (5 - bit % 6);
      if (bit % 6 == 5) {
        out.push_back(static_cast<char>(63 + cur));
        cur = 0;
      }
    }
  if (bit % 6 != 0) out.push_back(static_cast<char>(63 + cur));
  return out;
}

// One graph per nonempty line. A leading ">>graph6<<" header is stripped; a
// line holding only the header is skipped.
inline std::vector<std::pair<std::string, Graph>> read_graph6_stream(std::istream& in) {
  std::vector<std::pair<std::string, Graph>> out;
  std::string line;
  std::size_t record = 0;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::string_view s = line;
    if (s.substr(0, kGraph6Header.size()) == kGraph6Header)
      s.remove_prefix(kGraph6Header.size());
    if (s.empty()) continue;
    ++record;
    out.emplace_back(std::to_string(record), parse_graph6(s));
  }
  return out;
}

inline std::vector<std::pair<std::string, Graph>> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

}  // namespace sieveforge
