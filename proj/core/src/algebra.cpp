#include "nga/algebra.hpp"

#include <algorithm>

namespace nga {

NormalAlgebra::NormalAlgebra(std::size_t dim_u, std::size_t dim_z,
                             std::vector<std::vector<Rational>> structure,
                             std::vector<std::string> u_labels, std::vector<std::string> z_labels)
    : dim_u_(dim_u),
      dim_z_(dim_z),
      structure_(std::move(structure)),
      u_labels_(std::move(u_labels)),
      z_labels_(std::move(z_labels)) {
  if (structure_.size() != pair_count(dim_u_))
    throw InputError("structure constant table has wrong size");
  for (const auto& v : structure_)
    if (v.size() != dim_z_) throw InputError("structure constant vector has wrong length");
  if (!u_labels_.empty() && u_labels_.size() != dim_u_)
    throw InputError("U label count mismatch");
  if (!z_labels_.empty() && z_labels_.size() != dim_z_)
    throw InputError("Z label count mismatch");
}

std::size_t NormalAlgebra::pair_index(std::size_t dim_u, std::size_t i, std::size_t j) {
  if (i > j) std::swap(i, j);
  // row-major upper triangle
  return i * dim_u - i * (i + 1) / 2 + j;
}

Element zero_element(const AlgebraHandle& a) {
  return Element{a, std::vector<Rational>(a->dim_u(), Rational(0)),
                 std::vector<Rational>(a->dim_z(), Rational(0))};
}

Element u_element(const AlgebraHandle& a, std::vector<Rational> coeffs) {
  if (coeffs.size() != a->dim_u()) throw InputError("u coefficient length mismatch");
  Element e = zero_element(a);
  e.u = std::move(coeffs);
  return e;
}

Element z_element(const AlgebraHandle& a, std::vector<Rational> coeffs) {
  if (coeffs.size() != a->dim_z()) throw InputError("z coefficient length mismatch");
  Element e = zero_element(a);
  e.z = std::move(coeffs);
  return e;
}

Element u_basis_element(const AlgebraHandle& a, std::size_t i) {
  Element e = zero_element(a);
  e.u.at(i) = 1;
  return e;
}

Element z_basis_element(const AlgebraHandle& a, std::size_t i) {
  Element e = zero_element(a);
  e.z.at(i) = 1;
  return e;
}

Element add(const Element& a, const Element& b) {
  if (a.algebra != b.algebra) throw InputError("elements of different algebras");
  Element out = a;
  for (std::size_t i = 0; i < out.u.size(); ++i) out.u[i] += b.u[i];
  for (std::size_t i = 0; i < out.z.size(); ++i) out.z[i] += b.z[i];
  return out;
}

Element scale(const Element& a, const Rational& s) {
  Element out = a;
  for (auto& x : out.u) x *= s;
  for (auto& x : out.z) x *= s;
  return out;
}

bool is_zero(const Element& a) {
  return std::all_of(a.u.begin(), a.u.end(), [](const Rational& x) { return x == 0; }) &&
         std::all_of(a.z.begin(), a.z.end(), [](const Rational& x) { return x == 0; });
}

bool equal(const Element& a, const Element& b) {
  return a.algebra == b.algebra && a.u == b.u && a.z == b.z;
}

Element multiply(const Element& a, const Element& b) {
  if (a.algebra != b.algebra) throw InputError("mismatched algebra handles");
  const NormalAlgebra& alg = *a.algebra;
  Element out = zero_element(a.algebra);
  for (std::size_t i = 0; i < alg.dim_u(); ++i) {
    if (a.u[i] == 0 && b.u[i] == 0) continue;
    for (std::size_t j = i; j < alg.dim_u(); ++j) {
      const Rational coeff = (i == j) ? Rational(a.u[i] * b.u[i])
                                      : Rational(a.u[i] * b.u[j] + a.u[j] * b.u[i]);
      if (coeff == 0) continue;
      const auto& prod = alg.basis_product(i, j);
      for (std::size_t k = 0; k < alg.dim_z(); ++k)
        if (prod[k] != 0) out.z[k] += coeff * prod[k];
    }
  }
  return out;
}

AlgebraHandle graph_algebra(const Graph& g) { return graph_algebra(g, {}, {}); }

AlgebraHandle graph_algebra(const Graph& g, std::vector<std::string> u_labels,
                            std::vector<std::string> z_labels) {
  const std::size_t p = static_cast<std::size_t>(g.order());
  const std::size_t q = static_cast<std::size_t>(g.size());
  std::vector<std::vector<Rational>> sc(NormalAlgebra::pair_count(p),
                                        std::vector<Rational>(q, Rational(0)));
  const auto idx = [p](std::size_t i, std::size_t j) { return NormalAlgebra::pair_index(p, i, j); };
  for (int e = 0; e < g.size(); ++e) {
    const auto [x, y] = g.edge(e);
    sc[idx(x, y)][e] = 1;  // xy = [x,y]
    sc[idx(x, x)][e] = 1;  // x^2 accumulates the edges at x
    sc[idx(y, y)][e] = 1;
  }
  return std::make_shared<NormalAlgebra>(p, q, std::move(sc), std::move(u_labels),
                                         std::move(z_labels));
}

AlgebraHandle f0_algebra() {
  return std::make_shared<NormalAlgebra>(1, 0,
                                         std::vector<std::vector<Rational>>{{}},
                                         std::vector<std::string>{"w"},
                                         std::vector<std::string>{});
}

AlgebraHandle build_canonical(CanonicalKind kind, int p) {
  if (kind != CanonicalKind::Spline && p < 1) throw InputError("canonical algebra needs p >= 1");
  if (kind == CanonicalKind::Spline) p = 1;
  const std::size_t n = static_cast<std::size_t>(p);
  const std::size_t dim_z = (kind == CanonicalKind::Tp) ? n + 1 : n;
  std::vector<std::vector<Rational>> sc(NormalAlgebra::pair_count(n),
                                        std::vector<Rational>(dim_z, Rational(0)));
  std::vector<std::string> u_labels, z_labels;
  const auto idx = [n](std::size_t i, std::size_t j) { return NormalAlgebra::pair_index(n, i, j); };
  switch (kind) {
    case CanonicalKind::Spline:
      sc[0][0] = 1;
      u_labels = {"r"};
      z_labels = {"s"};
      break;
    case CanonicalKind::Op:
      for (std::size_t i = 0; i < n; ++i) sc[idx(i, i)][i] = 1;
      for (std::size_t i = 0; i < n; ++i) u_labels.push_back("w" + std::to_string(i + 1));
      for (std::size_t i = 0; i < n; ++i) z_labels.push_back("z" + std::to_string(i + 1));
      break;
    case CanonicalKind::Tp:
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
          sc[idx(i, j)][0] = 1;
          if (i == j) sc[idx(i, i)][i + 1] = 1;
        }
      for (std::size_t i = 0; i < n; ++i) u_labels.push_back("w" + std::to_string(i + 1));
      for (std::size_t i = 0; i <= n; ++i) z_labels.push_back("z" + std::to_string(i));
      break;
  }
  return std::make_shared<NormalAlgebra>(n, dim_z, std::move(sc), std::move(u_labels),
                                         std::move(z_labels));
}

AlgebraHandle direct_sum(const AlgebraHandle& a, const AlgebraHandle& b) {
  const std::size_t du = a->dim_u() + b->dim_u();
  const std::size_t dz = a->dim_z() + b->dim_z();
  std::vector<std::vector<Rational>> sc(NormalAlgebra::pair_count(du),
                                        std::vector<Rational>(dz, Rational(0)));
  const auto idx = [du](std::size_t i, std::size_t j) { return NormalAlgebra::pair_index(du, i, j); };
  for (std::size_t i = 0; i < a->dim_u(); ++i)
    for (std::size_t j = i; j < a->dim_u(); ++j) {
      const auto& prod = a->basis_product(i, j);
      for (std::size_t k = 0; k < a->dim_z(); ++k) sc[idx(i, j)][k] = prod[k];
    }
  for (std::size_t i = 0; i < b->dim_u(); ++i)
    for (std::size_t j = i; j < b->dim_u(); ++j) {
      const auto& prod = b->basis_product(i, j);
      for (std::size_t k = 0; k < b->dim_z(); ++k)
        sc[idx(a->dim_u() + i, a->dim_u() + j)][a->dim_z() + k] = prod[k];
    }
  std::vector<std::string> ul, zl;
  if (!a->u_labels().empty() && !b->u_labels().empty()) {
    ul = a->u_labels();
    ul.insert(ul.end(), b->u_labels().begin(), b->u_labels().end());
  }
  if (!a->z_labels().empty() && !b->z_labels().empty()) {
    zl = a->z_labels();
    zl.insert(zl.end(), b->z_labels().begin(), b->z_labels().end());
  }
  return std::make_shared<NormalAlgebra>(du, dz, std::move(sc), std::move(ul), std::move(zl));
}

Element apply(const GradedMap& m, const Element& e) {
  if (e.algebra != m.source) throw InputError("apply: element not in the source algebra");
  return Element{m.target, m.u_block.apply(e.u), m.z_block.apply(e.z)};
}

GradedMap compose(const GradedMap& f, const GradedMap& g) {
  if (g.target != f.source) throw InputError("compose: domain mismatch");
  return GradedMap{g.source, f.target, f.u_block * g.u_block, f.z_block * g.z_block};
}

GradedMap identity_map(const AlgebraHandle& a) {
  return GradedMap{a, a, RatMatrix::identity(a->dim_u()), RatMatrix::identity(a->dim_z())};
}

bool is_homomorphism(const GradedMap& m) {
  if (m.u_block.rows() != m.target->dim_u() || m.u_block.cols() != m.source->dim_u() ||
      m.z_block.rows() != m.target->dim_z() || m.z_block.cols() != m.source->dim_z())
    return false;
  const std::size_t n = m.source->dim_u();
  std::vector<Element> images;
  images.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Rational> col(m.target->dim_u());
    for (std::size_t r = 0; r < col.size(); ++r) col[r] = m.u_block.at(r, i);
    images.push_back(u_element(m.target, std::move(col)));
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const std::vector<Rational> lhs = m.z_block.apply(m.source->basis_product(i, j));
      const Element rhs = multiply(images[i], images[j]);
      if (lhs != rhs.z) return false;
    }
  return true;
}

bool is_invertible(const GradedMap& m) {
  return m.u_block.rows() == m.u_block.cols() && m.z_block.rows() == m.z_block.cols() &&
         rank(m.u_block) == m.u_block.rows() && rank(m.z_block) == m.z_block.rows();
}

GradedMap graphical_automorphism(const AlgebraHandle& a, const Graph& g, const Permutation& perm) {
  const std::size_t p = static_cast<std::size_t>(g.order());
  const std::size_t q = static_cast<std::size_t>(g.size());
  if (a->dim_u() != p || a->dim_z() != q)
    throw InputError("algebra dimensions do not match the graph");
  if (perm.size() != p) throw InputError("permutation size mismatch");
  RatMatrix ub(p, p), zb(q, q);
  for (std::size_t v = 0; v < p; ++v) ub.at(perm[v], v) = 1;
  for (int e = 0; e < g.size(); ++e) {
    const auto [x, y] = g.edge(e);
    const int img = g.edge_index(perm[x], perm[y]);
    if (img < 0) throw InputError("permutation is not a graph automorphism");
    zb.at(img, e) = 1;
  }
  return GradedMap{a, a, std::move(ub), std::move(zb)};
}

GradedMap scalar_automorphism(const AlgebraHandle& a, const Rational& alpha) {
  if (alpha == 0) throw InputError("scalar automorphism needs alpha != 0");
  RatMatrix ub(a->dim_u(), a->dim_u()), zb(a->dim_z(), a->dim_z());
  for (std::size_t i = 0; i < a->dim_u(); ++i) ub.at(i, i) = alpha;
  for (std::size_t i = 0; i < a->dim_z(); ++i) zb.at(i, i) = alpha * alpha;
  return GradedMap{a, a, std::move(ub), std::move(zb)};
}

std::optional<std::vector<Rational>> edge_scaling_data(const Graph& g, const GradedMap& m) {
  if (m.source != m.target) throw InputError("edge_scaling_data: map is not an endomorphism");
  if (m.source->dim_u() != static_cast<std::size_t>(g.order()) ||
      m.source->dim_z() != static_cast<std::size_t>(g.size()))
    throw InputError("edge_scaling_data: algebra does not match the graph");
  if (!is_homomorphism(m) || !is_invertible(m))
    throw InputError("edge_scaling_data: map is not an automorphism");
  const std::size_t q = m.source->dim_z();
  std::vector<Rational> scales(q);
  for (std::size_t c = 0; c < q; ++c) {
    for (std::size_t r = 0; r < q; ++r)
      if (r != c && m.z_block.at(r, c) != 0) return std::nullopt;
    scales[c] = m.z_block.at(c, c);
  }
  return scales;
}

}  // namespace nga
