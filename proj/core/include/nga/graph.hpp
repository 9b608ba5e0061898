#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nga/errors.hpp"

namespace nga {

/// Unordered vertex pair with a < b.
struct Edge {
  int a, b;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(int x, int y) {
  if (x == y) throw InputError("loops are not allowed");
  return x < y ? Edge{x, y} : Edge{y, x};
}

/// Finite simple graph on vertices 0..p-1. Edges are kept sorted
/// lexicographically, which fixes the edge indexing used everywhere else
/// (incidence columns, Z-basis order, circuit edge sets).
class Graph {
 public:
  static constexpr int kMaxVertices = 64;

  Graph() : p_(0) {}
  Graph(int p, std::vector<Edge> edges);
  static Graph from_pairs(int p, const std::vector<std::pair<int, int>>& pairs);

  int order() const { return p_; }
  int size() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

  bool adjacent(int x, int y) const { return x != y && (adj_[x] >> y) & 1u; }
  std::uint64_t neighbor_mask(int v) const { return adj_[v]; }
  int degree(int v) const { return __builtin_popcountll(adj_[v]); }

  /// Index of [x,y] in the sorted edge list, or -1.
  int edge_index(int x, int y) const;
  bool has_edge(int x, int y) const { return edge_index(x, y) >= 0; }

  Graph with_edge_removed(Edge e) const;
  Graph relabeled(const std::vector<int>& perm) const;  // vertex v -> perm[v]

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  int p_;
  std::vector<Edge> edges_;
  std::vector<std::uint64_t> adj_;
};

Graph disjoint_union(const Graph& g, const Graph& h);

/// Named small graphs used all over the tests and the classification logic.
Graph path_graph(int p);
Graph cycle_graph(int p);
Graph complete_graph(int p);
Graph star_graph(int leaves);  // center is vertex 0
/// Two edge-disjoint cycles of odd lengths m and n sharing one vertex
/// (path_len = 0) or joined by a path with path_len edges.
Graph paddle_graph(int m, int n, int path_len);

/// Connected components; labels are 0-based in order of smallest vertex.
std::vector<int> component_labels(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

struct BipartiteStructure {
  int components = 0;
  int bipartite_components = 0;
  /// For each component (indexed as in component_labels), the two parts as
  /// vertex bitmasks when the component is bipartite.
  std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> parts;
  std::vector<int> component_of;
};

BipartiteStructure bipartite_structure(const Graph& g);

/// true iff deleting e increases the number of components. e must exist.
bool is_bridge(const Graph& g, Edge e);

struct CycleList {
  /// Each cycle is a vertex sequence starting at its smallest vertex with its
  /// smaller neighbor second (the lexicographically least rotation/reflection).
  std::vector<std::vector<int>> cycles;

  int count_of_length(int len) const;
};

/// All simple cycles of length 3..max_len, deduplicated up to
/// rotation/reflection. max_len must be >= 3.
CycleList enumerate_cycles(const Graph& g, int max_len);

struct PaddleShape {
  int m, n;      // odd cycle lengths, m <= n
  int path_len;  // 0 when the cycles share a vertex
};

/// Recognizes doubly-odd paddle graphs: two edge-disjoint odd cycles sharing
/// one vertex or joined by a path.
std::optional<PaddleShape> paddle_decomposition(const Graph& g);

}  // namespace nga
