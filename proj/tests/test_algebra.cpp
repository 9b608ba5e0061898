#include <random>

#include "doctest.h"
#include "nga/algebra.hpp"
#include "nga/census.hpp"
#include "nga/short_functional.hpp"
#include "oracles.hpp"

using namespace nga;

namespace {

Element random_element(const AlgebraHandle& a, std::mt19937& rng, bool pure_u = false) {
  Element e = zero_element(a);
  for (auto& x : e.u) x = oracles::random_rational(rng);
  if (!pure_u)
    for (auto& x : e.z) x = oracles::random_rational(rng);
  return e;
}

}  // namespace

TEST_CASE("graph algebra products on K2 and isolated vertices") {
  const Graph k2 = Graph::from_pairs(2, {{0, 1}});
  const AlgebraHandle a = graph_algebra(k2);
  const Element x = u_basis_element(a, 0);
  const Element y = u_basis_element(a, 1);
  const Element edge = z_basis_element(a, 0);
  CHECK(equal(multiply(x, y), edge));
  CHECK(equal(multiply(x, x), edge));
  CHECK(equal(multiply(y, y), edge));

  const AlgebraHandle lonely = graph_algebra(disjoint_union(k2, Graph(1, {})));
  CHECK(is_zero(multiply(u_basis_element(lonely, 2), u_basis_element(lonely, 2))));
}

TEST_CASE("path-of-order-4 basis computations") {
  // vertices a,b,c,d with edges e=[a,b], f=[b,c], g=[c,d]
  const Graph t1 = path_graph(4);
  const AlgebraHandle a = graph_algebra(t1);
  const Element u0 = u_element(a, {1, -1, 1, -1});
  const Element u1 = u_element(a, {1, 0, 0, 0});
  const Element u2 = u_element(a, {rat(1, 2), rat(-1, 2), rat(-1, 2), rat(1, 2)});
  const Element u3 = u_element(a, {0, 0, 0, 1});

  CHECK(is_zero(multiply(u0, u2)));
  const std::vector<Element> basis{u0, u1, u2, u3};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      const Element prod = multiply(basis[i], basis[j]);
      if (i == j && i > 0) {
        CHECK(equal(prod, z_basis_element(a, i - 1)));  // diag(0, e, f, g)
      } else {
        CHECK(is_zero(prod));
      }
    }
}

TEST_CASE("grading, commutativity, and vanishing triple products") {
  std::mt19937 rng(404);
  const auto graphs = census(5);
  for (int trial = 0; trial < 25; ++trial) {
    const Graph& g = graphs[rng() % graphs.size()];
    const AlgebraHandle a = graph_algebra(g);
    const Element x = random_element(a, rng);
    const Element y = random_element(a, rng);
    const Element xy = multiply(x, y);
    for (const auto& coeff : xy.u) CHECK(coeff == 0);  // grading
    CHECK(equal(xy, multiply(y, x)));                  // commutativity
    CHECK(is_zero(multiply(xy, random_element(a, rng))));  // triple products
    Element pure_z = zero_element(a);
    pure_z.z = random_element(a, rng).z;
    CHECK(is_zero(multiply(x, pure_z)));
  }
}

TEST_CASE("structure-constant product equals the edge-functional expansion") {
  std::mt19937 rng(505);
  for (const Graph& g : census(5)) {
    const AlgebraHandle a = graph_algebra(g);
    const Element u = random_element(a, rng, true);
    const Element v = random_element(a, rng, true);
    CHECK(verify_product_identity(g, u, v));
  }
}

TEST_CASE("canonical algebras") {
  CHECK_THROWS_AS(build_canonical(CanonicalKind::Op, 0), InputError);

  const AlgebraHandle spline = build_canonical(CanonicalKind::Spline, 1);
  CHECK(spline->dim_u() == 1);
  CHECK(spline->dim_z() == 1);
  CHECK(spline->basis_product(0, 0) == std::vector<Rational>{1});

  const AlgebraHandle op1 = build_canonical(CanonicalKind::Op, 1);
  CHECK(op1->dim_u() == spline->dim_u());
  CHECK(op1->basis_product(0, 0) == spline->basis_product(0, 0));

  const AlgebraHandle op2 = build_canonical(CanonicalKind::Op, 2);
  CHECK(op2->basis_product(0, 1) == std::vector<Rational>{0, 0});
  CHECK(op2->basis_product(0, 0) == std::vector<Rational>{1, 0});

  const AlgebraHandle tp3 = build_canonical(CanonicalKind::Tp, 3);
  CHECK(tp3->dim_z() == 4);
  CHECK(tp3->basis_product(0, 1) == std::vector<Rational>{1, 0, 0, 0});       // w1 w2 = z0
  CHECK(tp3->basis_product(0, 0) == std::vector<Rational>{1, 1, 0, 0});       // w1^2 = z0 + z1
  CHECK(tp3->basis_product(2, 2) == std::vector<Rational>{1, 0, 0, 1});
}

TEST_CASE("direct sums") {
  const Graph g = path_graph(3);
  const Graph h = complete_graph(3);
  const AlgebraHandle sum = direct_sum(graph_algebra(g), graph_algebra(h));
  const AlgebraHandle whole = graph_algebra(disjoint_union(g, h));
  // identity relabeling is an isomorphism: structure constants agree slotwise
  REQUIRE(sum->dim_u() == whole->dim_u());
  REQUIRE(sum->dim_z() == whole->dim_z());
  GradedMap id{whole, sum, RatMatrix::identity(sum->dim_u()), RatMatrix::identity(sum->dim_z())};
  CHECK(is_homomorphism(id));
  CHECK(is_invertible(id));

  // Op(p1) + Op(p2) has exactly the relations of Op(p1+p2)
  const AlgebraHandle split = direct_sum(build_canonical(CanonicalKind::Op, 2),
                                         build_canonical(CanonicalKind::Op, 3));
  const AlgebraHandle op5 = build_canonical(CanonicalKind::Op, 5);
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = i; j < 5; ++j)
      CHECK(split->basis_product(i, j) == op5->basis_product(i, j));

  const AlgebraHandle with_f0 = direct_sum(graph_algebra(g), f0_algebra());
  CHECK(with_f0->dim_u() == graph_algebra(g)->dim_u() + 1);
  CHECK(with_f0->dim_z() == graph_algebra(g)->dim_z());
  CHECK(is_zero(multiply(u_basis_element(with_f0, 3), u_basis_element(with_f0, 3))));
}

TEST_CASE("homomorphism checks") {
  // the two order-4 trees with matching bases
  const Graph t1 = path_graph(4);
  const Graph t2 = star_graph(3);
  const AlgebraHandle a1 = graph_algebra(t1);
  const AlgebraHandle a2 = graph_algebra(t2);

  // columns express each u_i in vertex coordinates
  RatMatrix basis1(4, 4);
  {
    const std::vector<std::vector<Rational>> cols = {
        {1, -1, 1, -1}, {1, 0, 0, 0}, {rat(1, 2), rat(-1, 2), rat(-1, 2), rat(1, 2)}, {0, 0, 0, 1}};
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) basis1.at(r, c) = cols[c][r];
  }
  RatMatrix basis2(4, 4);
  {
    const std::vector<std::vector<Rational>> cols = {
        {1, -1, -1, -1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}};
    for (int c = 0; c < 4; ++c)
      for (int r = 0; r < 4; ++r) basis2.at(r, c) = cols[c][r];
  }
  const auto inv1 = inverse(basis1);
  REQUIRE(inv1.has_value());
  const GradedMap iso{a1, a2, basis2 * *inv1, RatMatrix::identity(3)};
  CHECK(is_homomorphism(iso));
  CHECK(is_invertible(iso));

  CHECK(is_homomorphism(identity_map(a1)));

  // collapsing w2 onto w1 in Op(2) breaks phi(w2^2) = phi(w2)^2
  const AlgebraHandle op2 = build_canonical(CanonicalKind::Op, 2);
  RatMatrix collapse(2, 2);
  collapse.at(0, 0) = 1;
  collapse.at(0, 1) = 1;
  CHECK(!is_homomorphism(GradedMap{op2, op2, collapse, RatMatrix::identity(2)}));
}

TEST_CASE("graphical and scalar automorphisms") {
  const Graph c4 = cycle_graph(4);
  const AlgebraHandle a = graph_algebra(c4);

  const GradedMap rot = graphical_automorphism(a, c4, {1, 2, 3, 0});
  CHECK(is_homomorphism(rot));
  CHECK(is_invertible(rot));
  CHECK_THROWS_AS(graphical_automorphism(a, c4, {1, 0, 2, 3}), InputError);

  const GradedMap id = graphical_automorphism(a, c4, {0, 1, 2, 3});
  CHECK(id.u_block == RatMatrix::identity(4));
  CHECK(id.z_block == RatMatrix::identity(4));

  const Graph k2 = Graph::from_pairs(2, {{0, 1}});
  const AlgebraHandle ak2 = graph_algebra(k2);
  const GradedMap swap = graphical_automorphism(ak2, k2, {1, 0});
  CHECK(swap.z_block == RatMatrix::identity(1));

  const GradedMap doubling = scalar_automorphism(a, 2);
  CHECK(is_homomorphism(doubling));
  for (std::size_t e = 0; e < 4; ++e) CHECK(doubling.z_block.at(e, e) == 4);
  const GradedMap negate = scalar_automorphism(a, -1);
  CHECK(negate.z_block == RatMatrix::identity(4));
  CHECK_THROWS_AS(scalar_automorphism(a, 0), InputError);

  SUBCASE("edge scaling data") {
    const auto scales = edge_scaling_data(c4, scalar_automorphism(a, 3));
    REQUIRE(scales.has_value());
    for (const auto& s : *scales) CHECK(s == 9);
    CHECK(!edge_scaling_data(c4, rot).has_value());  // rotation moves edges
    CHECK_THROWS_AS(edge_scaling_data(c4, GradedMap{a, a, RatMatrix(4, 4), RatMatrix(4, 4)}),
                    InputError);
  }
}

TEST_CASE("element plumbing") {
  const AlgebraHandle a = graph_algebra(path_graph(3));
  const AlgebraHandle b = graph_algebra(path_graph(3));
  CHECK_THROWS_AS(multiply(u_basis_element(a, 0), u_basis_element(b, 0)), InputError);
  CHECK_THROWS_AS(u_element(a, {1}), InputError);
  const Element sum = add(u_basis_element(a, 0), scale(u_basis_element(a, 1), -1));
  CHECK(sum.u == std::vector<Rational>{1, -1, 0});
}
