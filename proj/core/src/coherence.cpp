#include "nga/coherence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "nga/short_functional.hpp"

namespace nga {

namespace {

RatMatrix incidence_columns(const Graph& g, const std::vector<int>& edges) {
  RatMatrix m(g.order(), edges.size());
  for (std::size_t c = 0; c < edges.size(); ++c) {
    const int e = edges[c];
    if (e < 0 || e >= g.size()) throw InputError("invalid edge index in edge set");
    m.at(g.edge(e).a, c) = 1;
    m.at(g.edge(e).b, c) = 1;
  }
  return m;
}

/// Integer rank of the incidence columns selected by `edges`.
std::size_t columns_rank(const Graph& g, const std::vector<int>& edges) {
  const std::size_t p = static_cast<std::size_t>(g.order());
  std::vector<std::int64_t> data(edges.size() * p, 0);
  for (std::size_t r = 0; r < edges.size(); ++r) {  // rows = edges (rank is symmetric)
    data[r * p + g.edge(edges[r]).a] = 1;
    data[r * p + g.edge(edges[r]).b] = 1;
  }
  const auto rank = detail::bareiss_rank_int64(std::move(data), edges.size(), p);
  if (!rank) throw InvariantViolation("integer rank overflow on a 0/1 matrix");
  return *rank;
}

}  // namespace

std::optional<CoherenceCertificate> coherence_certificate(const Graph& g,
                                                          const std::vector<int>& edges) {
  if (edges.empty()) throw InputError("coherence needs a nonempty edge set");
  const auto kernel = kernel_basis(incidence_columns(g, edges));
  if (kernel.empty()) return std::nullopt;
  return CoherenceCertificate{edges, kernel.front()};
}

bool is_minimally_coherent(const Graph& g, const std::vector<int>& edges) {
  if (edges.empty()) throw InputError("coherence needs a nonempty edge set");
  if (columns_rank(g, edges) + 1 != edges.size()) return false;
  const auto kernel = kernel_basis(incidence_columns(g, edges));
  return kernel.size() == 1 &&
         std::all_of(kernel[0].begin(), kernel[0].end(), [](const Rational& x) { return x != 0; });
}

namespace {

/// Depth-first growth of independent column sets with an incremental
/// fraction-free elimination. Each retained row remembers the combination of
/// original columns it stands for, so a column reducing to zero hands over its
/// dependence support (the fundamental circuit) with no extra solve.
class CircuitSearch {
 public:
  CircuitSearch(const Graph& g, int max_size) : g_(g), max_size_(max_size) {}

  std::vector<std::vector<int>> run() {
    grow(0);
    std::vector<std::vector<int>> out(circuits_.begin(), circuits_.end());
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    return out;
  }

 private:
  struct Row {
    std::vector<std::int64_t> vec;                   // reduced column, length p
    std::vector<std::pair<int, std::int64_t>> expr;  // in terms of original columns
    int pivot;
  };

  static void normalize(Row& row) {
    constexpr std::int64_t kGuard = std::int64_t{1} << 50;
    std::int64_t g = 0;
    for (std::int64_t v : row.vec) g = std::gcd(g, v < 0 ? -v : v);
    for (const auto& [idx, c] : row.expr) g = std::gcd(g, c < 0 ? -c : c);
    if (g > 1) {
      for (auto& v : row.vec) v /= g;
      for (auto& [idx, c] : row.expr) c /= g;
    }
    for (std::int64_t v : row.vec)
      if (v > kGuard || v < -kGuard)
        throw InvariantViolation("circuit search coefficients overflow");
  }

  /// reduced = pivot_val * reduced - factor * row (vec and expr alike)
  static void eliminate(Row& target, const Row& row, std::int64_t factor) {
    const std::int64_t pivot_val = row.vec[row.pivot];
    for (std::size_t i = 0; i < target.vec.size(); ++i)
      target.vec[i] = pivot_val * target.vec[i] - factor * row.vec[i];
    std::vector<std::pair<int, std::int64_t>> merged;
    merged.reserve(target.expr.size() + row.expr.size());
    std::size_t a = 0, b = 0;
    while (a < target.expr.size() || b < row.expr.size()) {
      if (b == row.expr.size() ||
          (a < target.expr.size() && target.expr[a].first < row.expr[b].first)) {
        merged.emplace_back(target.expr[a].first, pivot_val * target.expr[a].second);
        ++a;
      } else if (a == target.expr.size() || row.expr[b].first < target.expr[a].first) {
        merged.emplace_back(row.expr[b].first, -factor * row.expr[b].second);
        ++b;
      } else {
        const std::int64_t c = pivot_val * target.expr[a].second - factor * row.expr[b].second;
        if (c != 0) merged.emplace_back(target.expr[a].first, c);
        ++a;
        ++b;
      }
    }
    target.expr = std::move(merged);
    normalize(target);
  }

  void grow(int start) {
    for (int e = start; e < g_.size(); ++e) {
      Row reduced;
      reduced.vec.assign(g_.order(), 0);
      reduced.vec[g_.edge(e).a] = 1;
      reduced.vec[g_.edge(e).b] = 1;
      reduced.expr = {{e, 1}};
      for (const Row& row : rows_)
        if (reduced.vec[row.pivot] != 0) eliminate(reduced, row, reduced.vec[row.pivot]);

      int pivot = -1;
      for (int i = 0; i < g_.order(); ++i)
        if (reduced.vec[i] != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) {
        // dependent: the tracked expression is the fundamental circuit
        std::vector<int> circuit;
        for (const auto& [idx, c] : reduced.expr)
          if (c != 0) circuit.push_back(idx);
        circuits_.insert(std::move(circuit));
        continue;
      }
      if (static_cast<int>(rows_.size()) + 1 < max_size_) {
        reduced.pivot = pivot;
        rows_.push_back(std::move(reduced));
        grow(e + 1);
        rows_.pop_back();
      }
    }
  }

  const Graph& g_;
  int max_size_;
  std::vector<Row> rows_;
  std::set<std::vector<int>> circuits_;
};

}  // namespace

std::vector<std::vector<int>> minimal_coherent_subgraphs(const Graph& g, int max_size) {
  if (max_size > g.size()) throw InputError("max_size exceeds the number of edges");
  if (max_size < 1) return {};
  return CircuitSearch(g, max_size).run();
}

CircuitShape classify_minimal_coherent(const Graph& g, const std::vector<int>& edges) {
  if (!is_minimally_coherent(g, edges))
    throw InputError("classify_minimal_coherent: edge set is not a circuit");

  // compact edge-induced subgraph
  std::vector<int> vertex_map(g.order(), -1);
  int next = 0;
  std::vector<std::pair<int, int>> pairs;
  for (int e : edges) {
    const auto [a, b] = g.edge(e);
    if (vertex_map[a] < 0) vertex_map[a] = next++;
    if (vertex_map[b] < 0) vertex_map[b] = next++;
    pairs.emplace_back(vertex_map[a], vertex_map[b]);
  }
  const Graph h = Graph::from_pairs(next, pairs);

  CircuitShape shape;
  bool all_degree_two = true;
  for (int v = 0; v < h.order(); ++v) all_degree_two = all_degree_two && h.degree(v) == 2;
  if (all_degree_two && is_connected(h) && h.size() % 2 == 0) {
    shape.even_cycle = true;
    shape.cycle_len = h.size();
    return shape;
  }
  if (const auto paddle = paddle_decomposition(h)) {
    shape.m = paddle->m;
    shape.n = paddle->n;
    shape.path_len = paddle->path_len;
    return shape;
  }
  throw InvariantViolation("circuit is neither an even cycle nor a doubly-odd paddle");
}

PosaWitness posa_witness(const Graph& g) {
  if (g.order() < 4 || g.size() < g.order() + 1)
    throw InputError("posa_witness needs p >= 4 and q >= p+1");

  // greedy independent growth; the first dependent edge closes a circuit
  std::vector<int> independent;
  std::vector<int> circuit;
  for (int e = 0; e < g.size() && circuit.empty(); ++e) {
    independent.push_back(e);
    if (columns_rank(g, independent) == independent.size()) continue;
    const auto kernel = kernel_basis(incidence_columns(g, independent));
    for (std::size_t i = 0; i < independent.size(); ++i)
      if (kernel.front()[i] != 0) circuit.push_back(independent[i]);
  }
  if (circuit.empty()) throw InvariantViolation("no circuit found despite q > rank");

  const CircuitShape shape = classify_minimal_coherent(g, circuit);
  PosaWitness w;
  if (shape.even_cycle) {
    w.even_cycle = true;
    w.cycle_edges = circuit;
    return w;
  }
  // split the paddle circuit into its two odd cycles (drop the path edges)
  std::vector<int> vertex_map(g.order(), -1);
  int next = 0;
  std::vector<std::pair<int, int>> pairs;
  for (int e : circuit) {
    const auto [a, b] = g.edge(e);
    if (vertex_map[a] < 0) vertex_map[a] = next++;
    if (vertex_map[b] < 0) vertex_map[b] = next++;
    pairs.emplace_back(vertex_map[a], vertex_map[b]);
  }
  const Graph h = Graph::from_pairs(next, pairs);
  const CycleList cycles = enumerate_cycles(h, h.order());
  if (cycles.cycles.size() != 2) throw InvariantViolation("paddle circuit without two cycles");
  for (int which = 0; which < 2; ++which) {
    const auto& cyc = cycles.cycles[which];
    std::vector<int>& target = which == 0 ? w.cycle_edges : w.second_cycle_edges;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      const int x = cyc[i];
      const int y = cyc[(i + 1) % cyc.size()];
      // translate back to g's edge indexing
      for (int e : circuit) {
        const auto [a, b] = g.edge(e);
        if ((vertex_map[a] == x && vertex_map[b] == y) ||
            (vertex_map[a] == y && vertex_map[b] == x)) {
          target.push_back(e);
          break;
        }
      }
    }
    std::sort(target.begin(), target.end());
  }
  return w;
}

bool is_mc_edge_connected(const Graph& g) {
  const int q = g.size();
  if (q == 0) return true;  // vacuous
  const auto circuits = minimal_coherent_subgraphs(g, q);
  if (circuits.empty()) return false;

  std::vector<int> parent(q);
  for (int e = 0; e < q; ++e) parent[e] = e;
  const auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  std::vector<bool> covered(q, false);
  for (const auto& c : circuits) {
    for (int e : c) covered[e] = true;
    for (std::size_t i = 1; i < c.size(); ++i) parent[find(c[i])] = find(c[0]);
  }
  if (!std::all_of(covered.begin(), covered.end(), [](bool b) { return b; })) return false;
  const int root = find(0);
  for (int e = 1; e < q; ++e)
    if (find(e) != root) return false;
  return true;
}

int paddle_count(int p) {
  if (p < 5) return 0;
  int count = 0;
  for (int m = 3; m + m <= p + 1; m += 2)
    for (int n = m; m + n <= p + 1; n += 2) ++count;
  return count;
}

bool verify_edge_scaling_scalar(const Graph& g, const GradedMap& m) {
  // the map must live on the graph algebra of g itself
  const AlgebraHandle reference = graph_algebra(g);
  if (m.source != m.target || m.source->dim_u() != reference->dim_u() ||
      m.source->dim_z() != reference->dim_z())
    throw InputError("verify_edge_scaling_scalar: map does not act on the graph algebra");
  for (std::size_t i = 0; i < reference->dim_u(); ++i)
    for (std::size_t j = i; j < reference->dim_u(); ++j)
      if (m.source->basis_product(i, j) != reference->basis_product(i, j))
        throw InputError("verify_edge_scaling_scalar: map is not over the graph algebra of G");
  if (!is_mc_edge_connected(g))
    throw InputError("verify_edge_scaling_scalar: graph is not MC-edge connected");
  if (!annihilator_basis(g).empty())
    throw InputError("verify_edge_scaling_scalar: annihilator is nonzero");
  if (!edge_scaling_data(g, m))
    throw InputError("verify_edge_scaling_scalar: map is not edge-scaling");

  const Rational alpha = m.u_block.at(0, 0);
  if (alpha == 0) return false;
  const GradedMap expected = scalar_automorphism(m.source, alpha);
  return m.u_block == expected.u_block && m.z_block == expected.z_block;
}

}  // namespace nga
