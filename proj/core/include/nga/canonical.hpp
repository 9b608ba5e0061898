#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "nga/graph.hpp"

namespace nga {

using Permutation = std::vector<int>;

Permutation permutation_inverse(const Permutation& p);
/// (f after g): result[v] = f[g[v]].
Permutation permutation_compose(const Permutation& f, const Permutation& g);

constexpr int kCanonicalMaxVertices = 16;

struct CanonicalResult {
  Graph canonical;
  Permutation to_canonical;                       // input vertex -> canonical label
  std::vector<Permutation> automorphism_generators;  // on input labels
};

/// Canonical labeling by colour refinement plus backtracking over
/// refinement-stable orderings; canonical_form(G) == canonical_form(H) iff
/// G and H are isomorphic. Requires order <= 16.
CanonicalResult canonicalize(const Graph& g);
Graph canonical_form(const Graph& g);

/// Generators of the full automorphism group (group order recoverable by
/// closure). Requires order <= 16.
std::vector<Permutation> automorphism_generators(const Graph& g);
unsigned long long automorphism_group_order(const Graph& g);

unsigned long long permutation_group_order(const std::vector<Permutation>& generators, int n);

/// Upper-triangle adjacency bits of the canonical form, packed little-endian
/// ((0,1),(0,2),...,(p-2,p-1)); with the order this is a complete isomorphism
/// invariant for p <= 16.
std::pair<std::uint64_t, std::uint64_t> canonical_certificate(const Graph& g);
Graph graph_from_certificate(int p, std::pair<std::uint64_t, std::uint64_t> cert);

}  // namespace nga
