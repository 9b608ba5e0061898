#include "nga/graph.hpp"

#include <algorithm>

namespace nga {

Graph::Graph(int p, std::vector<Edge> edges) : p_(p), edges_(std::move(edges)) {
  if (p < 0 || p > kMaxVertices) throw InputError("vertex count out of range");
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(static_cast<std::size_t>(p), 0);
  const Edge* prev = nullptr;
  for (const Edge& e : edges_) {
    if (e.a < 0 || e.b >= p_ || e.a >= e.b) throw InputError("edge endpoint out of range");
    if (prev && *prev == e) throw InputError("duplicate edge");
    prev = &e;
    adj_[e.a] |= std::uint64_t{1} << e.b;
    adj_[e.b] |= std::uint64_t{1} << e.a;
  }
}

Graph Graph::from_pairs(int p, const std::vector<std::pair<int, int>>& pairs) {
  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto& [x, y] : pairs) edges.push_back(make_edge(x, y));
  return Graph(p, std::move(edges));
}

int Graph::edge_index(int x, int y) const {
  if (x == y) return -1;
  const Edge e = make_edge(x, y);
  const auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

Graph Graph::with_edge_removed(Edge e) const {
  const int idx = edge_index(e.a, e.b);
  if (idx < 0) throw InputError("edge not in graph");
  std::vector<Edge> rest = edges_;
  rest.erase(rest.begin() + idx);
  return Graph(p_, std::move(rest));
}

Graph Graph::relabeled(const std::vector<int>& perm) const {
  if (static_cast<int>(perm.size()) != p_) throw InputError("permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(edges_.size());
  for (const Edge& e : edges_) edges.push_back(make_edge(perm[e.a], perm[e.b]));
  return Graph(p_, std::move(edges));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& e : h.edges()) edges.push_back(Edge{e.a + g.order(), e.b + g.order()});
  return Graph(g.order() + h.order(), std::move(edges));
}

Graph path_graph(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < p; ++i) edges.push_back(Edge{i, i + 1});
  return Graph(p, std::move(edges));
}

Graph cycle_graph(int p) {
  if (p < 3) throw InputError("cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < p; ++i) edges.push_back(Edge{i, i + 1});
  edges.push_back(Edge{0, p - 1});
  return Graph(p, std::move(edges));
}

Graph complete_graph(int p) {
  std::vector<Edge> edges;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j) edges.push_back(Edge{i, j});
  return Graph(p, std::move(edges));
}

Graph star_graph(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back(Edge{0, i});
  return Graph(leaves + 1, std::move(edges));
}

Graph paddle_graph(int m, int n, int path_len) {
  if (m < 3 || n < 3 || path_len < 0) throw InputError("bad paddle parameters");
  std::vector<std::pair<int, int>> pairs;
  // first cycle on 0..m-1
  for (int i = 0; i + 1 < m; ++i) pairs.emplace_back(i, i + 1);
  pairs.emplace_back(0, m - 1);
  // path from vertex 0 through path_len new vertices... joint vertex of the
  // second cycle is 0 itself when path_len == 0.
  int tail = 0;
  int next = m;
  for (int i = 0; i < path_len; ++i) {
    pairs.emplace_back(tail, next);
    tail = next++;
  }
  // second cycle: tail plus n-1 new vertices
  std::vector<int> ring;
  ring.push_back(tail);
  for (int i = 0; i + 1 < n; ++i) ring.push_back(next++);
  for (int i = 0; i + 1 < n; ++i) pairs.emplace_back(ring[i], ring[i + 1]);
  pairs.emplace_back(ring[0], ring[n - 1]);
  return Graph::from_pairs(next, pairs);
}

std::vector<int> component_labels(const Graph& g) {
  const int p = g.order();
  std::vector<int> label(static_cast<std::size_t>(p), -1);
  int next = 0;
  for (int s = 0; s < p; ++s) {
    if (label[s] >= 0) continue;
    std::vector<int> stack{s};
    label[s] = next;
    while (!stack.empty()) {
      const int v = stack.back();
      stack.pop_back();
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        const int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        if (label[u] < 0) {
          label[u] = next;
          stack.push_back(u);
        }
      }
    }
    ++next;
  }
  return label;
}

int component_count(const Graph& g) {
  const auto labels = component_labels(g);
  return labels.empty() ? 0 : 1 + *std::max_element(labels.begin(), labels.end());
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

BipartiteStructure bipartite_structure(const Graph& g) {
  BipartiteStructure out;
  out.component_of = component_labels(g);
  out.components = g.order() ? 1 + *std::max_element(out.component_of.begin(), out.component_of.end()) : 0;
  out.parts.assign(static_cast<std::size_t>(out.components), std::nullopt);

  std::vector<int> color(static_cast<std::size_t>(g.order()), -1);
  for (int s = 0; s < g.order(); ++s) {
    if (color[s] >= 0) continue;
    // s is the smallest vertex of its component; BFS 2-coloring from it
    const int comp = out.component_of[s];
    bool ok = true;
    std::uint64_t part0 = 0, part1 = 0;
    std::vector<int> queue{s};
    color[s] = 0;
    part0 |= std::uint64_t{1} << s;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const int v = queue[qi];
      std::uint64_t nb = g.neighbor_mask(v);
      while (nb) {
        const int u = __builtin_ctzll(nb);
        nb &= nb - 1;
        if (color[u] < 0) {
          color[u] = 1 - color[v];
          (color[u] == 0 ? part0 : part1) |= std::uint64_t{1} << u;
          queue.push_back(u);
        } else if (color[u] == color[v]) {
          ok = false;
        }
      }
    }
    if (ok) {
      out.parts[comp] = std::make_pair(part0, part1);
      ++out.bipartite_components;
    }
  }
  return out;
}

bool is_bridge(const Graph& g, Edge e) {
  if (g.edge_index(e.a, e.b) < 0) throw InputError("is_bridge: edge not in graph");
  return component_count(g.with_edge_removed(e)) > component_count(g);
}

int CycleList::count_of_length(int len) const {
  int n = 0;
  for (const auto& c : cycles)
    if (static_cast<int>(c.size()) == len) ++n;
  return n;
}

namespace {

void cycle_dfs(const Graph& g, int start, std::vector<int>& path, std::uint64_t used, int max_len,
               std::vector<std::vector<int>>& out) {
  const int v = path.back();
  std::uint64_t nb = g.neighbor_mask(v);
  while (nb) {
    const int u = __builtin_ctzll(nb);
    nb &= nb - 1;
    if (u == start && path.size() >= 3) {
      // close the cycle; keep one direction only: second vertex < last vertex
      if (path[1] < path.back()) out.push_back(path);
      continue;
    }
    if (u <= start || ((used >> u) & 1) || static_cast<int>(path.size()) >= max_len) continue;
    path.push_back(u);
    cycle_dfs(g, start, path, used | (std::uint64_t{1} << u), max_len, out);
    path.pop_back();
  }
}

}  // namespace

CycleList enumerate_cycles(const Graph& g, int max_len) {
  if (max_len < 3) throw InputError("enumerate_cycles: max_len must be >= 3");
  CycleList out;
  std::vector<int> path;
  for (int s = 0; s < g.order(); ++s) {
    path.assign(1, s);
    cycle_dfs(g, s, path, std::uint64_t{1} << s, max_len, out.cycles);
  }
  std::sort(out.cycles.begin(), out.cycles.end(),
            [](const std::vector<int>& a, const std::vector<int>& b) {
              return a.size() != b.size() ? a.size() < b.size() : a < b;
            });
  return out;
}

std::optional<PaddleShape> paddle_decomposition(const Graph& g) {
  const int p = g.order();
  const int q = g.size();
  if (q != p + 1 || !is_connected(g)) return std::nullopt;
  const CycleList cycles = enumerate_cycles(g, p);
  if (cycles.cycles.size() != 2) return std::nullopt;
  const auto& c0 = cycles.cycles[0];
  const auto& c1 = cycles.cycles[1];
  const int m = static_cast<int>(c0.size());
  const int n = static_cast<int>(c1.size());
  if (m % 2 == 0 || n % 2 == 0) return std::nullopt;

  std::uint64_t verts0 = 0, verts1 = 0;
  for (int v : c0) verts0 |= std::uint64_t{1} << v;
  for (int v : c1) verts1 |= std::uint64_t{1} << v;
  const int shared = __builtin_popcountll(verts0 & verts1);
  const int path_len = q - m - n;
  if (path_len < 0) return std::nullopt;
  if (path_len == 0 ? (shared != 1 || p != m + n - 1) : (shared != 0 || p != m + n + path_len - 1))
    return std::nullopt;

  // degree profile: a shared vertex of degree 4, or one degree-3 attachment
  // on each cycle, everything else degree 2 (rules out stray pendants)
  if (path_len == 0) {
    const std::uint64_t hinge = verts0 & verts1;
    for (int v = 0; v < p; ++v)
      if (g.degree(v) != (((hinge >> v) & 1) ? 4 : 2)) return std::nullopt;
  } else {
    std::uint64_t degree3 = 0;
    for (int v = 0; v < p; ++v) {
      if (g.degree(v) == 3)
        degree3 |= std::uint64_t{1} << v;
      else if (g.degree(v) != 2)
        return std::nullopt;
    }
    if (__builtin_popcountll(degree3) != 2 || __builtin_popcountll(degree3 & verts0) != 1 ||
        __builtin_popcountll(degree3 & verts1) != 1)
      return std::nullopt;
  }
  return PaddleShape{m, n, path_len};
}

}  // namespace nga
