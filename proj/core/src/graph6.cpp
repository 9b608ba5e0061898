#include "nga/graph6.hpp"

#include <sstream>

namespace nga {

namespace {

constexpr int kBias = 63;   // printable graph6 bytes are 63..126
constexpr int kHigh = 126;

[[noreturn]] void fail(std::size_t offset, const std::string& what) {
  throw InputError("graph6 parse error at byte " + std::to_string(offset) + ": " + what);
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  constexpr std::string_view kHeader = ">>graph6<<";
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
  if (text.empty()) fail(base, "empty input");

  const auto byte = [&](std::size_t i) -> int {
    if (i >= text.size()) fail(base + text.size(), "unexpected end of input");
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (c < kBias || c > kHigh) fail(base + i, "byte out of graph6 range");
    return c - kBias;
  };

  // N(n): one byte for n <= 62, 126 + 3 bytes for n <= 258047
  std::size_t pos = 0;
  long long n = 0;
  if (byte(0) < 63) {
    n = byte(0);
    pos = 1;
  } else if (text.size() >= 2 && byte(1) < 63) {
    n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
    pos = 4;
  } else {
    fail(base + 1, "size forms beyond 258047 vertices are not supported");
  }
  if (n > Graph::kMaxVertices)
    fail(base, "graph order " + std::to_string(n) + " exceeds supported bound " +
                   std::to_string(Graph::kMaxVertices));

  const std::size_t bits_needed = static_cast<std::size_t>(n) * (n - 1) / 2;
  const std::size_t bytes_needed = (bits_needed + 5) / 6;
  if (text.size() - pos != bytes_needed)
    fail(base + text.size(),
         "body length " + std::to_string(text.size() - pos) + " does not match order (expected " +
             std::to_string(bytes_needed) + " bytes)");

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit) {
      const int b = byte(pos + bit / 6);
      if ((b >> (5 - bit % 6)) & 1) edges.push_back(Edge{i, j});
    }
  // trailing pad bits must be zero
  for (std::size_t extra = bits_needed; extra < bytes_needed * 6; ++extra)
    if ((byte(pos + extra / 6) >> (5 - extra % 6)) & 1) fail(base + pos + extra / 6, "nonzero padding bit");
  return Graph(static_cast<int>(n), std::move(edges));
}

std::string to_graph6(const Graph& g) {
  const int n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(kHigh));
    out.push_back(static_cast<char>(((n >> 12) & 63) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 63) + kBias));
    out.push_back(static_cast<char>((n & 63) + kBias));
  }
  const std::size_t bits = static_cast<std::size_t>(n) * (n - 1) / 2;
  std::vector<int> group((bits + 5) / 6, 0);
  std::size_t bit = 0;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i, ++bit)
      if (g.adjacent(i, j)) group[bit / 6] |= 1 << (5 - bit % 6);
  for (int v : group) out.push_back(static_cast<char>(v + kBias));
  return out;
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  long long p = -1, q = -1;
  if (!(in >> p >> q)) throw InputError("edge list: missing 'p q' header");
  if (p < 0 || p > Graph::kMaxVertices) throw InputError("edge list: vertex count out of range");
  if (q < 0) throw InputError("edge list: negative edge count");
  std::vector<Edge> edges;
  for (long long k = 0; k < q; ++k) {
    long long i, j;
    if (!(in >> i >> j)) throw InputError("edge list: expected " + std::to_string(q) + " edges, got " + std::to_string(k));
    if (i < 0 || i >= p || j < 0 || j >= p) throw InputError("edge list: endpoint out of range in edge " + std::to_string(k));
    edges.push_back(make_edge(static_cast<int>(i), static_cast<int>(j)));
  }
  return Graph(static_cast<int>(p), std::move(edges));
}

std::string to_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.order() << ' ' << g.size() << '\n';
  for (const Edge& e : g.edges()) out << e.a << ' ' << e.b << '\n';
  return out.str();
}

}  // namespace nga
