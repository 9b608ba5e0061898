#pragma once

#include <optional>
#include <vector>

#include "nga/algebra.hpp"
#include "nga/graph.hpp"
#include "nga/matrix.hpp"

namespace nga {

/// A pair of functionals (lambda on the vertex basis, mu on the edge basis)
/// describing a homomorphism onto the spline algebra. Three conditions hold:
///  1. nonadjacent vertices never both carry nonzero lambda,
///  2. lambda(x) != 0 implies lambda(x) = sum of lambda over the neighbours,
///  3. mu([x,y]) = lambda(x) lambda(y) on edges.
struct ShortFunctional {
  std::vector<Rational> lambda;
  std::vector<Rational> mu;
  std::optional<Edge> source_edge;
};

/// Throws InvariantViolation when the three conditions fail.
void validate_short_functional(const Graph& g, const ShortFunctional& f);

/// The functional of an edge [a,b]: lambda the indicator of {a,b}, mu the
/// indicator of the edge.
ShortFunctional lambda_of_edge(const Graph& g, Edge e);

/// Independent enumeration that does not assume the classification theorem:
/// for every clique K with |K| >= 2, solve lambda(x) = sum over neighbours in
/// K and keep solution spans with full support on K. Over the rationals this
/// yields exactly one span per edge.
std::vector<ShortFunctional> oracle_short_functionals(const Graph& g);

/// lambda_e(u) for one edge: the sum of u's coordinates at the endpoints.
Rational edge_functional_value(const Graph& g, int edge_index, const std::vector<Rational>& u);

/// q x p matrix whose rows are the edge functionals on the vertex basis
/// (the transpose of the unoriented incidence matrix).
RatMatrix lambda_matrix(const Graph& g);

struct SupportProfile {
  std::vector<int> support;  // edge indices with nonzero coefficient
  int weight = 0;
};

/// Support and weight of a pure-Z element of a graph algebra.
SupportProfile support_profile(const Element& z);

/// Basis of {u : lambda_e(u) = 0 for all edges} = {u : u^2 = 0}; each basis
/// vector is cross-checked by squaring in the graph algebra.
std::vector<std::vector<Rational>> annihilator_basis(const Graph& g);

/// Vertices x edges; the oriented variant puts -1 at the smaller endpoint
/// (edges oriented from smaller to larger index).
RatMatrix incidence_matrix(const Graph& g, bool oriented);

/// rank I(G) = p - (number of bipartite components); oriented variant
/// rank I'(G) = p - (number of components).
std::size_t incidence_rank(const Graph& g, bool oriented);

/// multiply(u,v) matches the edge-functional expansion and
/// supp(uv) = supp(u^2) & supp(v^2).
bool verify_product_identity(const Graph& g, const Element& u, const Element& v);

}  // namespace nga
