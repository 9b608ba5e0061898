#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "nga/canonical.hpp"
#include "nga/graph.hpp"
#include "nga/matrix.hpp"

namespace nga {

/// Commutative graded algebra U + Z with U*U in Z and all products involving
/// Z equal to zero. Only the U x U -> Z structure constants are stored, so the
/// grading cannot be violated by construction.
class NormalAlgebra {
 public:
  NormalAlgebra(std::size_t dim_u, std::size_t dim_z,
                std::vector<std::vector<Rational>> structure,
                std::vector<std::string> u_labels = {}, std::vector<std::string> z_labels = {});

  std::size_t dim_u() const { return dim_u_; }
  std::size_t dim_z() const { return dim_z_; }

  /// z-coefficients of the product of U-basis elements i and j (unordered).
  const std::vector<Rational>& basis_product(std::size_t i, std::size_t j) const {
    return structure_[pair_index(i, j)];
  }

  const std::vector<std::string>& u_labels() const { return u_labels_; }
  const std::vector<std::string>& z_labels() const { return z_labels_; }

  std::size_t pair_index(std::size_t i, std::size_t j) const {
    return pair_index(dim_u_, i, j);
  }
  static std::size_t pair_index(std::size_t dim_u, std::size_t i, std::size_t j);
  static std::size_t pair_count(std::size_t dim_u) { return dim_u * (dim_u + 1) / 2; }

 private:
  std::size_t dim_u_, dim_z_;
  std::vector<std::vector<Rational>> structure_;  // one z-vector per unordered pair
  std::vector<std::string> u_labels_, z_labels_;
};

using AlgebraHandle = std::shared_ptr<const NormalAlgebra>;

struct Element {
  AlgebraHandle algebra;
  std::vector<Rational> u;
  std::vector<Rational> z;
};

Element zero_element(const AlgebraHandle& a);
Element u_element(const AlgebraHandle& a, std::vector<Rational> coeffs);
Element z_element(const AlgebraHandle& a, std::vector<Rational> coeffs);
Element u_basis_element(const AlgebraHandle& a, std::size_t i);
Element z_basis_element(const AlgebraHandle& a, std::size_t i);

Element add(const Element& a, const Element& b);
Element scale(const Element& a, const Rational& s);
bool is_zero(const Element& a);
bool equal(const Element& a, const Element& b);

/// Bilinear product. The u-part of the result is always zero and z-parts of
/// the factors are annihilated by the grading. Factors must share a handle.
Element multiply(const Element& a, const Element& b);

/// The normal graph algebra: U spanned by vertices, Z by edges, xy = [x,y]
/// for adjacent vertices and x^2 the sum of the edges at x.
AlgebraHandle graph_algebra(const Graph& g);
AlgebraHandle graph_algebra(const Graph& g, std::vector<std::string> u_labels,
                            std::vector<std::string> z_labels);

/// One U generator with zero square: the summand contributed by each
/// bipartite component.
AlgebraHandle f0_algebra();

enum class CanonicalKind {
  Spline,  // one generator r with r^2 = s
  Op,      // w_i^2 = z_i, w_i w_j = 0
  Tp,      // w_i w_j = z_0 + delta_ij z_i
};

AlgebraHandle build_canonical(CanonicalKind kind, int p);

AlgebraHandle direct_sum(const AlgebraHandle& a, const AlgebraHandle& b);

/// Linear map respecting the grading: independent U- and Z-blocks.
struct GradedMap {
  AlgebraHandle source, target;
  RatMatrix u_block;  // dim_u(target) x dim_u(source)
  RatMatrix z_block;  // dim_z(target) x dim_z(source)
};

Element apply(const GradedMap& m, const Element& e);
GradedMap compose(const GradedMap& f, const GradedMap& g);
GradedMap identity_map(const AlgebraHandle& a);

/// phi(u_i u_j) == phi(u_i) phi(u_j) on all U-basis pairs; bilinearity
/// extends this to the whole algebra, so it decides the homomorphism property.
bool is_homomorphism(const GradedMap& m);
bool is_invertible(const GradedMap& m);

/// The algebra automorphism induced by a graph automorphism: permutation
/// matrices on vertices and on edges. Throws when perm is not an automorphism.
GradedMap graphical_automorphism(const AlgebraHandle& a, const Graph& g, const Permutation& perm);

/// u -> alpha u, z -> alpha^2 z.
GradedMap scalar_automorphism(const AlgebraHandle& a, const Rational& alpha);

/// When m (an automorphism of the graph algebra of g) acts diagonally on the
/// edge basis, the per-edge scale factors; otherwise nullopt.
std::optional<std::vector<Rational>> edge_scaling_data(const Graph& g, const GradedMap& m);

}  // namespace nga
