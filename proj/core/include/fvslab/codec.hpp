#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "fvslab/graph.hpp"

namespace fvslab {

// Decode failure; `bit` is the offending position in the data bitstream
// (or npos when the problem is structural, e.g. a truncated string).
class CodecError : public std::runtime_error {
 public:
  static constexpr size_t npos = static_cast<size_t>(-1);
  CodecError(const std::string& msg, size_t bit_pos = npos)
      : std::runtime_error(msg), bit(bit_pos) {}
  size_t bit;
};

// graph6: N(n) followed by the upper triangle of the adjacency matrix in
// column order, packed 6 bits per printable byte.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(std::string_view text);

// digraph6: optional '&' header, N(n), then the full n*n adjacency matrix in
// row-major order (bit (i,j) set iff arc i->j). Decoded digraphs are
// validated oriented. Headerless output matches the published strings.
std::string encode_digraph6(const Digraph& d, bool header = true);
Digraph decode_digraph6(std::string_view text);

enum class CodecKind { graph6, digraph6 };

}  // namespace fvslab
