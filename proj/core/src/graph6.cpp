#include "leafcert/graph6.hpp"

#include <cstdint>

#include "leafcert/errors.hpp"

namespace leafcert {
namespace {

constexpr char kBias = 63;
constexpr std::string_view kHeader = ">>graph6<<";

std::uint64_t read_six(std::string_view body, std::size_t pos,
                       std::size_t count) {
  std::uint64_t value = 0;
  for (std::size_t i = 0; i < count; ++i) {
    value = (value << 6) | static_cast<std::uint64_t>(body[pos + i] - kBias);
  }
  return value;
}

void append_six(std::string& out, std::uint64_t value, std::size_t count) {
  for (std::size_t i = count; i-- > 0;) {
    out.push_back(static_cast<char>(kBias + ((value >> (6 * i)) & 0x3f)));
  }
}

}  // namespace

Graph from_graph6(std::string_view line) {
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) {
    line.remove_suffix(1);
  }
  std::size_t base = 0;
  if (line.substr(0, kHeader.size()) == kHeader) {
    line.remove_prefix(kHeader.size());
    base = kHeader.size();
  }
  if (line.empty()) throw ParseError("empty graph6 string", base);
  if (line.front() == ':' || line.front() == ';') {
    throw ParseError("sparse6 input is not supported", base);
  }
  if (line.front() == '&') {
    throw ParseError("digraph6 input is not supported", base);
  }
  for (std::size_t i = 0; i < line.size(); ++i) {
    const unsigned char c = static_cast<unsigned char>(line[i]);
    if (c < 63 || c > 126) {
      throw ParseError("character outside printable range 63-126", base + i);
    }
  }

  std::uint64_t n = 0;
  std::size_t pos = 0;
  if (line[0] != 126) {
    n = static_cast<std::uint64_t>(line[0] - kBias);
    pos = 1;
  } else if (line.size() >= 2 && line[1] == 126) {
    if (line.size() < 8) throw ParseError("malformed length byte", base + 1);
    n = read_six(line, 2, 6);
    pos = 8;
    if (n < 258048) throw ParseError("non-canonical length encoding", base);
  } else {
    if (line.size() < 4) throw ParseError("malformed length byte", base);
    n = read_six(line, 1, 3);
    pos = 4;
    if (n < 63) throw ParseError("non-canonical length encoding", base);
  }
  if (n == 0) throw ParseError("graph must have at least one vertex", base);
  if (n > kMaxOrder) {
    throw LimitError("graph6 order " + std::to_string(n) + " exceeds " +
                     std::to_string(kMaxOrder));
  }

  const std::size_t order = static_cast<std::size_t>(n);
  const std::size_t bits = order * (order - 1) / 2;
  const std::size_t expected = (bits + 5) / 6;
  const std::size_t available = line.size() - pos;
  if (available < expected) {
    throw ParseError("truncated edge data", base + line.size());
  }
  if (available > expected) {
    throw ParseError("trailing data after edge bits", base + pos + expected);
  }

  Graph g(order);
  std::size_t bit = 0;
  for (Vertex j = 1; j < order; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      const int byte = line[pos + bit / 6] - kBias;
      if ((byte >> (5 - bit % 6)) & 1) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const int last = line[pos + expected - 1] - kBias;
    const int pad_mask = (1 << (6 - bits % 6)) - 1;
    if (last & pad_mask) {
      throw ParseError("nonzero padding bits", base + pos + expected - 1);
    }
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) throw ArgumentError("graph6 needs at least one vertex");
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(kBias + n));
  } else if (n <= 258047) {
    out.push_back(126);
    append_six(out, n, 3);
  } else {
    out.append(2, static_cast<char>(126));
    append_six(out, n, 6);
  }
  int acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++filled == 6) {
        out.push_back(static_cast<char>(kBias + acc));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>(kBias + (acc << (6 - filled))));
  return out;
}

}  // namespace leafcert
