#pragma once

#include <optional>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/graph.hpp"
#include "nga/matrix.hpp"

namespace nga {

/// Scalars on an edge set summing to zero at every vertex; exists iff the
/// corresponding incidence columns are linearly dependent.
struct CoherenceCertificate {
  std::vector<int> edge_set;
  std::vector<Rational> scalars;  // aligned with edge_set, not all zero
};

std::optional<CoherenceCertificate> coherence_certificate(const Graph& g,
                                                          const std::vector<int>& edges);

/// Circuit test for the incidence matroid: the columns have rank |S|-1 and
/// the unique dependence has full support.
bool is_minimally_coherent(const Graph& g, const std::vector<int>& edges);

/// All incidence-matroid circuits with at most max_size edges, as sorted edge
/// index sets in deterministic (size, lexicographic) order.
std::vector<std::vector<int>> minimal_coherent_subgraphs(const Graph& g, int max_size);

struct CircuitShape {
  bool even_cycle = false;
  int cycle_len = 0;            // even-cycle case
  int m = 0, n = 0, path_len = 0;  // paddle case
};

/// Shape of a circuit's edge-induced subgraph. Every circuit must be an even
/// cycle or a doubly-odd paddle; anything else raises InvariantViolation.
CircuitShape classify_minimal_coherent(const Graph& g, const std::vector<int>& edges);

struct PosaWitness {
  bool even_cycle = false;
  std::vector<int> cycle_edges;         // the even cycle, or the first odd cycle
  std::vector<int> second_cycle_edges;  // second odd cycle (paddle case)
};

/// For p >= 4 and q >= p+1 a circuit always exists; returns the even cycle or
/// the two edge-disjoint odd cycles it yields.
PosaWitness posa_witness(const Graph& g);

/// Builds the overlap graph of minimally coherent subgraphs: true when every
/// edge is covered and any two edges are linked through overlapping circuits.
bool is_mc_edge_connected(const Graph& g);

/// Number of unordered pairs {m,n} of odd integers >= 3 with m+n <= p+1
/// (the doubly-odd paddle graphs of order p); 0 for p < 5.
int paddle_count(int p);

/// Property check behind the edge-scaling proposition: for an MC-edge
/// connected graph with zero annihilator, an edge-scaling automorphism of the
/// graph algebra must be scalar. m.source must be the graph algebra of g.
bool verify_edge_scaling_scalar(const Graph& g, const GradedMap& m);

}  // namespace nga
