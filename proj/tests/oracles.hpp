#pragma once

// Brute-force reference implementations kept independent of the library's
// algorithms: subset/permutation enumeration instead of DFS, path growth, or
// refinement. Slow on purpose; only used at small orders.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "nga/graph.hpp"
#include "nga/rational.hpp"

namespace oracles {

/// Number of simple k-cycles: for every k-subset of vertices, count Hamilton
/// cycles of the subset by enumerating permutations (each cycle appears
/// 2k times among the closed tours).
inline int naive_cycle_count(const nga::Graph& g, int k) {
  const int p = g.order();
  std::vector<int> vertices(p);
  std::iota(vertices.begin(), vertices.end(), 0);
  std::vector<bool> pick(p, false);
  std::fill(pick.begin(), pick.begin() + k, true);
  std::sort(pick.begin(), pick.end());  // lowest subsets first for next_permutation

  int total = 0;
  do {
    std::vector<int> subset;
    for (int v = 0; v < p; ++v)
      if (pick[v]) subset.push_back(v);
    if (static_cast<int>(subset.size()) != k) continue;
    std::vector<int> perm(subset.begin() + 1, subset.end());
    std::sort(perm.begin(), perm.end());
    int tours = 0;
    do {
      bool ok = g.adjacent(subset[0], perm.front()) && g.adjacent(perm.back(), subset[0]);
      for (std::size_t i = 0; ok && i + 1 < perm.size(); ++i)
        ok = g.adjacent(perm[i], perm[i + 1]);
      if (ok) ++tours;
    } while (std::next_permutation(perm.begin(), perm.end()));
    total += tours / 2;  // the two directions share a tour set
  } while (std::next_permutation(pick.begin(), pick.end()));
  return total;
}

/// |aut(G)| by testing every vertex permutation.
inline long long brute_force_automorphism_count(const nga::Graph& g) {
  std::vector<int> perm(g.order());
  std::iota(perm.begin(), perm.end(), 0);
  long long count = 0;
  do {
    bool ok = true;
    for (const nga::Edge& e : g.edges())
      if (!g.adjacent(perm[e.a], perm[e.b])) {
        ok = false;
        break;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

inline nga::Graph random_graph(int p, double edge_prob, std::mt19937& rng) {
  std::bernoulli_distribution flip(edge_prob);
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < p; ++i)
    for (int j = i + 1; j < p; ++j)
      if (flip(rng)) pairs.emplace_back(i, j);
  return nga::Graph::from_pairs(p, pairs);
}

inline nga::Rational random_rational(std::mt19937& rng, int num_range = 4, int den_range = 3) {
  std::uniform_int_distribution<int> num(-num_range, num_range);
  std::uniform_int_distribution<int> den(1, den_range);
  return nga::Rational(num(rng), den(rng));
}

}  // namespace oracles
