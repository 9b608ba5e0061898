#include "nga/short_functional.hpp"

#include <algorithm>

namespace nga {

void validate_short_functional(const Graph& g, const ShortFunctional& f) {
  const int p = g.order();
  if (f.lambda.size() != static_cast<std::size_t>(p) ||
      f.mu.size() != static_cast<std::size_t>(g.size()))
    throw InvariantViolation("short functional has wrong dimensions");
  for (int x = 0; x < p; ++x)
    for (int y = x + 1; y < p; ++y)
      if (!g.adjacent(x, y) && f.lambda[x] != 0 && f.lambda[y] != 0)
        throw InvariantViolation("short functional: nonadjacent support");
  for (int x = 0; x < p; ++x) {
    if (f.lambda[x] == 0) continue;
    Rational sum = 0;
    std::uint64_t nb = g.neighbor_mask(x);
    while (nb) {
      const int t = __builtin_ctzll(nb);
      nb &= nb - 1;
      sum += f.lambda[t];
    }
    if (sum != f.lambda[x]) throw InvariantViolation("short functional: neighbour sum fails");
  }
  for (int e = 0; e < g.size(); ++e) {
    const auto [x, y] = g.edge(e);
    if (f.mu[e] != f.lambda[x] * f.lambda[y])
      throw InvariantViolation("short functional: mu mismatch on an edge");
  }
}

ShortFunctional lambda_of_edge(const Graph& g, Edge e) {
  const int idx = g.edge_index(e.a, e.b);
  if (idx < 0) throw InputError("lambda_of_edge: edge not in graph");
  ShortFunctional f;
  f.lambda.assign(g.order(), Rational(0));
  f.mu.assign(g.size(), Rational(0));
  f.lambda[e.a] = f.lambda[e.b] = 1;
  f.mu[idx] = 1;
  f.source_edge = e;
  validate_short_functional(g, f);
  return f;
}

namespace {

void clique_dfs(const Graph& g, std::vector<int>& clique, std::uint64_t common, int min_next,
                std::vector<std::vector<int>>& out) {
  if (clique.size() >= 2) out.push_back(clique);
  for (int v = min_next; v < g.order(); ++v) {
    if (!((common >> v) & 1)) continue;
    clique.push_back(v);
    clique_dfs(g, clique, common & g.neighbor_mask(v), v + 1, out);
    clique.pop_back();
  }
}

}  // namespace

std::vector<ShortFunctional> oracle_short_functionals(const Graph& g) {
  std::vector<std::vector<int>> cliques;
  std::vector<int> clique;
  for (int v = 0; v < g.order(); ++v) {
    clique.assign(1, v);
    clique_dfs(g, clique, g.neighbor_mask(v), v + 1, cliques);
  }

  std::vector<ShortFunctional> out;
  for (const auto& k : cliques) {
    // lambda(x) = sum of lambda over K \ {x}; unknowns are the values on K
    const std::size_t n = k.size();
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.at(i, j) = (i == j) ? -1 : 1;
    for (const auto& v : kernel_basis(m)) {
      if (std::any_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; }))
        continue;  // support must be exactly K
      ShortFunctional f;
      f.lambda.assign(g.order(), Rational(0));
      f.mu.assign(g.size(), Rational(0));
      for (std::size_t i = 0; i < n; ++i) f.lambda[k[i]] = v[i];
      for (int e = 0; e < g.size(); ++e) {
        const auto [x, y] = g.edge(e);
        f.mu[e] = f.lambda[x] * f.lambda[y];
      }
      if (n == 2) f.source_edge = Edge{k[0], k[1]};
      validate_short_functional(g, f);
      out.push_back(std::move(f));
    }
  }
  return out;
}

Rational edge_functional_value(const Graph& g, int edge_index, const std::vector<Rational>& u) {
  const auto [x, y] = g.edge(edge_index);
  return u[x] + u[y];
}

RatMatrix lambda_matrix(const Graph& g) {
  RatMatrix m(g.size(), g.order());
  for (int e = 0; e < g.size(); ++e) {
    const auto [x, y] = g.edge(e);
    m.at(e, x) = 1;
    m.at(e, y) = 1;
  }
  return m;
}

SupportProfile support_profile(const Element& z) {
  if (std::any_of(z.u.begin(), z.u.end(), [](const Rational& x) { return x != 0; }))
    throw InputError("support_profile: element has a nonzero U-part");
  SupportProfile out;
  for (std::size_t e = 0; e < z.z.size(); ++e)
    if (z.z[e] != 0) out.support.push_back(static_cast<int>(e));
  out.weight = static_cast<int>(out.support.size());
  return out;
}

std::vector<std::vector<Rational>> annihilator_basis(const Graph& g) {
  auto basis = kernel_basis(lambda_matrix(g));
  // cross-check through the structure constants: each basis vector squares to 0
  const AlgebraHandle alg = graph_algebra(g);
  for (const auto& v : basis) {
    const Element u = u_element(alg, v);
    if (!is_zero(multiply(u, u)))
      throw InvariantViolation("annihilator vector with nonzero square");
  }
  return basis;
}

RatMatrix incidence_matrix(const Graph& g, bool oriented) {
  RatMatrix m(g.order(), g.size());
  for (int e = 0; e < g.size(); ++e) {
    const auto [x, y] = g.edge(e);
    m.at(x, e) = oriented ? -1 : 1;  // tail at the smaller endpoint
    m.at(y, e) = 1;
  }
  return m;
}

std::size_t incidence_rank(const Graph& g, bool oriented) {
  return rank(incidence_matrix(g, oriented));
}

bool verify_product_identity(const Graph& g, const Element& u, const Element& v) {
  if (std::any_of(u.z.begin(), u.z.end(), [](const Rational& x) { return x != 0; }) ||
      std::any_of(v.z.begin(), v.z.end(), [](const Rational& x) { return x != 0; }))
    throw InputError("verify_product_identity: factors must be pure-U");
  const Element uv = multiply(u, v);
  for (int e = 0; e < g.size(); ++e) {
    const Rational expected = edge_functional_value(g, e, u.u) * edge_functional_value(g, e, v.u);
    if (uv.z[e] != expected) return false;
  }
  const Element uu = multiply(u, u);
  const Element vv = multiply(v, v);
  for (int e = 0; e < g.size(); ++e) {
    const bool in_uv = uv.z[e] != 0;
    const bool in_meet = uu.z[e] != 0 && vv.z[e] != 0;
    if (in_uv != in_meet) return false;
  }
  return true;
}

}  // namespace nga
