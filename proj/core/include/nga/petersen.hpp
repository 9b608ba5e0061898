#pragma once

#include <array>
#include <string>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/graph.hpp"

namespace nga {

/// The Petersen graph with its 2-subset vertex labels: vertex {i,j} adjacent
/// to {k,l} exactly when the four indices differ. Edges carry both the
/// four-index symbol (the two vertex pairs) and the six-index symbol that
/// adds the pair {missing index, 6}.
struct PetersenModel {
  Graph graph;  // p = 10, q = 15
  AlgebraHandle algebra;
  std::array<std::pair<int, int>, 10> vertex_pairs;  // lexicographic 2-subsets of {1..5}
  std::vector<std::string> vertex_labels;
  std::vector<std::string> edge_labels;
  std::vector<std::string> enhanced_edge_labels;  // three pairs sorted by first index

  int vertex_of_pair(int i, int j) const;
  /// Edge index of the six-symbol string, e.g. "162345"; InputError if absent.
  int edge_of_enhanced(const std::string& symbol) const;
};

/// Construction plus structural sanity: 3-regular, girth 5, automorphism
/// group of order 120.
PetersenModel build_petersen();

/// The 15 spans whose squares have weight 3, found by running the generic
/// square-support search over all 3-subsets of edges: the ten vertex spans
/// plus five sums with entries +-1/2.
struct Weight3Spans {
  std::vector<std::vector<Rational>> spans;  // normalized, in support-search order
  std::vector<std::string> labels;           // "ij" for vertices, "i6" for the sums
};
Weight3Spans weight3_spans(const PetersenModel& m);

/// True when no single edge and no edge pair is the support of a square
/// (checked by brute force over all 15 + 105 candidate supports).
bool low_weight_absence(const PetersenModel& m);

/// The six 5-element families of weight-3 spans with pairwise zero products,
/// found by brute force over all C(15,5) subsets. families[d] collects the
/// spans whose labels contain the digit d+1.
std::array<std::vector<int>, 6> families_F(const PetersenModel& m, const Weight3Spans& spans);

/// The involutive non-graphical automorphism: 1k -> k6 on the four vertices
/// showing 1, identity on the rest, edges mapped by swapping the partners of
/// 1 and 6 in the six-symbol. Verified to be an algebra automorphism.
GradedMap build_t(const PetersenModel& m, const Weight3Spans& spans);

struct Sym6Actions {
  std::array<std::vector<int>, 6> families;      // span indices
  std::array<std::vector<int>, 6> h_sets;        // edge indices, rows matching the table
  std::vector<std::vector<int>> pentagon_pairs;  // six pairs, each as 10 edge indices
  /// The full group generated by the graph automorphisms and t, recorded as
  /// aligned permutation pairs on {0..5}: index i = action on family i+1 /
  /// H-row i+1. Order 720, faithful on both sides.
  std::vector<std::array<int, 6>> f_perms;
  std::vector<std::array<int, 6>> h_perms;
};

/// Builds the six H-rows from the size-11 circuits over the six disjoint
/// pentagon pairs (five circuits each; the five eleventh edges form a
/// 1-factor) and the two faithful actions of the generated group.
Sym6Actions sym6_actions(const PetersenModel& m);

/// edge -> the two H-rows containing it; a bijection onto the 2-subsets of
/// {1..6}. Entries are (edge index, row pair) with rows 1-based.
std::vector<std::pair<int, std::pair<int, int>>> duad_syntheme(const PetersenModel& m,
                                                               const Sym6Actions& actions);

struct CubicFingerprint {
  std::string graph6;
  int four_cycles = 0;
  int six_cycles = 0;
  int edges_in_four_cycles = 0;
};

/// Fingerprints of the 19 connected cubic graphs of order 10: the data that
/// separates all of their graph algebras.
std::vector<CubicFingerprint> uniqueness_census();

struct NamedCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// The full verification suite; every claim of the case study as one named
/// check. All checks pass on a correct build.
std::vector<NamedCheck> petersen_verification();

}  // namespace nga
