#include "fvslab/codec.hpp"

#include <vector>

namespace fvslab {

namespace {

constexpr int kBias = 63;
constexpr int kSmallMax = 62;
constexpr int kMediumMax = 258047;

void append_number(std::string& out, int n) {
  if (n <= kSmallMax) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3f) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3f) + kBias));
    out.push_back(static_cast<char>((n & 0x3f) + kBias));
  }
}

// Reads N(n) starting at `pos`, advancing it. Validates byte range.
int parse_number(std::string_view text, size_t& pos) {
  auto byte_at = [&](size_t i) -> int {
    if (i >= text.size()) throw CodecError("truncated size field");
    unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > 126) {
      throw CodecError("byte " + std::to_string(i) + " value " + std::to_string(c) +
                       " outside printable range 63..126");
    }
    return c - kBias;
  };
  int first = byte_at(pos);
  if (first < 63) {
    ++pos;
    return first;
  }
  // 126 prefix: 18-bit size. The 8-byte tier (n > 258047) is not supported.
  if (pos + 1 < text.size() && static_cast<unsigned char>(text[pos + 1]) == 126) {
    throw CodecError("graph order beyond " + std::to_string(kMediumMax) + " unsupported");
  }
  int n = 0;
  for (size_t i = pos + 1; i <= pos + 3; ++i) n = (n << 6) | byte_at(i);
  pos += 4;
  return n;
}

class BitWriter {
 public:
  void push(bool b) {
    cur_ = (cur_ << 1) | (b ? 1 : 0);
    if (++filled_ == 6) flush();
  }
  std::string finish() {
    if (filled_ > 0) {
      cur_ <<= (6 - filled_);
      filled_ = 6;
      flush();
    }
    return std::move(out_);
  }

 private:
  void flush() {
    out_.push_back(static_cast<char>(cur_ + kBias));
    cur_ = 0;
    filled_ = 0;
  }
  std::string out_;
  int cur_ = 0;
  int filled_ = 0;
};

class BitReader {
 public:
  BitReader(std::string_view text, size_t pos, size_t want_bits) : text_(text), pos_(pos) {
    size_t need_bytes = (want_bits + 5) / 6;
    if (text.size() - pos != need_bytes) {
      throw CodecError("bad length: " + std::to_string(text.size() - pos) +
                       " data bytes, expected " + std::to_string(need_bytes));
    }
  }
  bool next() {
    if (filled_ == 0) {
      unsigned char c = static_cast<unsigned char>(text_[pos_]);
      if (c < kBias || c > 126) {
        throw CodecError("byte " + std::to_string(pos_) + " value " + std::to_string(c) +
                         " outside printable range 63..126");
      }
      cur_ = c - kBias;
      filled_ = 6;
      ++pos_;
    }
    --filled_;
    return (cur_ >> filled_) & 1;
  }

 private:
  std::string_view text_;
  size_t pos_;
  int cur_ = 0;
  int filled_ = 0;
};

}  // namespace

std::string encode_graph6(const Graph& g) {
  int n = g.order();
  if (n > kMediumMax) throw CodecError("graph order beyond supported N(n) tier");
  std::string out;
  append_number(out, n);
  BitWriter bits;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) bits.push(g.has_edge(i, j));
  out += bits.finish();
  return out;
}

Graph decode_graph6(std::string_view text) {
  if (text.empty()) throw CodecError("empty graph6 string");
  size_t pos = 0;
  if (text.rfind(">>graph6<<", 0) == 0) pos = 10;
  int n = parse_number(text, pos);
  if (n > kMaxVertices) throw CodecError("decoded order exceeds library limit");
  size_t nbits = static_cast<size_t>(n) * (n - 1) / 2;
  BitReader bits(text, pos, nbits);
  std::vector<std::pair<int, int>> edges;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i)
      if (bits.next()) edges.emplace_back(i, j);
  return Graph(n, edges);
}

std::string encode_digraph6(const Digraph& d, bool header) {
  int n = d.order();
  if (n > kMediumMax) throw CodecError("digraph order beyond supported N(n) tier");
  std::string out;
  if (header) out.push_back('&');
  append_number(out, n);
  BitWriter bits;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) bits.push(d.has_arc(i, j));
  out += bits.finish();
  return out;
}

Digraph decode_digraph6(std::string_view text) {
  if (text.empty()) throw CodecError("empty digraph6 string");
  size_t pos = 0;
  if (text.rfind(">>digraph6<<", 0) == 0) pos = 12;
  if (pos < text.size() && text[pos] == '&') ++pos;
  int n = parse_number(text, pos);
  if (n > kMaxVertices) throw CodecError("decoded order exceeds library limit");
  size_t nbits = static_cast<size_t>(n) * n;
  BitReader bits(text, pos, nbits);
  std::vector<std::pair<int, int>> arcs;
  std::vector<std::vector<char>> seen(n, std::vector<char>(n, 0));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      bool b = bits.next();
      if (!b) continue;
      size_t bit = static_cast<size_t>(i) * n + j;
      if (i == j) throw CodecError("loop bit set at (" + std::to_string(i) + "," +
                                       std::to_string(j) + ")",
                                   bit);
      if (seen[j][i]) {
        throw CodecError("antiparallel pair at (" + std::to_string(i) + "," +
                             std::to_string(j) + ")",
                         bit);
      }
      seen[i][j] = 1;
      arcs.emplace_back(i, j);
    }
  }
  return Digraph(n, arcs);
}

}  // namespace fvslab
