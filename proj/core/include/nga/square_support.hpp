#pragma once

#include <optional>
#include <vector>

#include "nga/graph.hpp"
#include "nga/matrix.hpp"

namespace nga {

/// Solutions u (up to scale) of supp(u^2) = S, i.e. lambda_f(u) = 0 off S and
/// lambda_e(u) != 0 on S.
struct SquareSupportResult {
  std::vector<std::vector<Rational>> spans;  // first nonzero scaled to 1
  std::size_t kernel_dim = 0;                // dim {u : lambda_f(u) = 0 for f not in S}
  /// When true, `spans` lists every solution span. This holds whenever the
  /// kernel is at most one-dimensional (always the case in the classification
  /// theorems); for larger kernels with nonempty solution sets the spans are
  /// representatives only, since infinitely many spans qualify. Emptiness of
  /// `spans` decides existence faithfully in every case.
  bool exhaustive = true;
};

SquareSupportResult square_support_solutions(const Graph& g, const std::vector<int>& support);

/// Existence only, decided by integer rank computations: solutions exist iff
/// the off-S kernel is nonzero and no lambda_e (e in S) vanishes on it.
bool square_support_exists(const Graph& g, const std::vector<int>& support);

struct SquareWitness {
  std::vector<Rational> u;
  std::vector<int> target_support;
};

/// Witness with u^2 = e when the edge sits in an odd cycle with G - e
/// bipartite (coefficients +-1/2) or is a bridge with a bipartite side
/// (coefficients +-1 and 0); otherwise nullopt, with the absence certified by
/// an empty square-support search. G must be connected.
std::optional<SquareWitness> edge_square_witness(const Graph& g, Edge e);

}  // namespace nga
