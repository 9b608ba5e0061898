#pragma once

#include <optional>
#include <string>

#include "nga/algebra.hpp"
#include "nga/graph.hpp"

namespace nga {

enum class ClassificationTag {
  TreeF0Op,           // every edge a square, q = p-1
  OddUnicyclicOp,     // every edge a square, q = p
  EvenCycleF0Tp,      // every edge pair a square support, q = p
  DoublyOddPaddleTp,  // every edge pair a square support, q = p+1
  Unclassified,
};

std::string to_string(ClassificationTag tag);

struct ClassificationReport {
  ClassificationTag tag = ClassificationTag::Unclassified;
  int p = 0;
  int q = 0;
  std::optional<int> m, n, path_len;  // cycle data, when applicable
  /// Verified isomorphism from the graph algebra onto the named canonical
  /// algebra (absent for Unclassified).
  std::optional<GradedMap> iso;
};

/// Tests whether every edge is a square (witness route) and, on success,
/// produces the isomorphism onto F0 + Op(p-1) for trees or Op(p) for odd
/// unicyclic graphs. G must be connected.
ClassificationReport classify_edge_square(const Graph& g);

/// For a connected graph that is not edge-square: tests whether every edge
/// pair supports a square (fixing one edge and testing the q-1 pairs through
/// it, which is sufficient) and produces the isomorphism onto F0 + Tp(p-1)
/// for even cycles or Tp(p) for doubly-odd paddles.
ClassificationReport classify_pair_square(const Graph& g);

/// Exhaustive variant of the pair test over all C(q,2) pairs; used to audit
/// the fixed-edge reduction on small graphs.
bool is_pair_square_exhaustive(const Graph& g);

bool is_edge_square(const Graph& g);

}  // namespace nga
