#include <map>
#include <numeric>
#include <set>

#include "doctest.h"
#include "nga/census.hpp"
#include "nga/coherence.hpp"
#include "nga/short_functional.hpp"
#include "oracles.hpp"

using namespace nga;

TEST_CASE("coherence certificates") {
  const Graph c4 = cycle_graph(4);
  std::vector<int> all_edges(c4.size());
  std::iota(all_edges.begin(), all_edges.end(), 0);

  const auto cert = coherence_certificate(c4, all_edges);
  REQUIRE(cert.has_value());
  // signs alternate when the edges are walked around the cycle
  const std::vector<int> walk = {c4.edge_index(0, 1), c4.edge_index(1, 2), c4.edge_index(2, 3),
                                 c4.edge_index(0, 3)};
  for (int i = 0; i < 4; ++i) {
    const Rational& a = cert->scalars[walk[i]];
    const Rational& b = cert->scalars[walk[(i + 1) % 4]];
    CHECK(a == -b);
    CHECK(a != 0);
  }
  // scalars sum to zero at every vertex
  for (int v = 0; v < 4; ++v) {
    Rational sum = 0;
    for (std::size_t k = 0; k < cert->edge_set.size(); ++k) {
      const Edge e = c4.edge(cert->edge_set[k]);
      if (e.a == v || e.b == v) sum += cert->scalars[k];
    }
    CHECK(sum == 0);
  }

  SUBCASE("tree edges are never coherent") {
    const Graph tree = path_graph(5);
    std::vector<int> edges(tree.size());
    std::iota(edges.begin(), edges.end(), 0);
    CHECK(!coherence_certificate(tree, edges).has_value());
  }
  SUBCASE("any p+1 edges are coherent") {
    std::mt19937 rng(22);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = oracles::random_graph(6, 0.7, rng);
      if (g.size() < g.order() + 1) continue;
      std::vector<int> edges(g.order() + 1);
      std::iota(edges.begin(), edges.end(), 0);
      CHECK(coherence_certificate(g, edges).has_value());
    }
  }
  SUBCASE("coherence matches column dependence") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
      const Graph g = oracles::random_graph(5 + rng() % 3, 0.5, rng);
      if (g.size() == 0) continue;
      std::vector<int> edges;
      for (int e = 0; e < g.size(); ++e)
        if (rng() % 2) edges.push_back(e);
      if (edges.empty()) continue;
      RatMatrix cols(g.order(), edges.size());
      for (std::size_t c = 0; c < edges.size(); ++c) {
        cols.at(g.edge(edges[c]).a, c) = 1;
        cols.at(g.edge(edges[c]).b, c) = 1;
      }
      CHECK(coherence_certificate(g, edges).has_value() == (rank(cols) < edges.size()));
    }
  }
  CHECK_THROWS_AS(coherence_certificate(c4, {}), InputError);
}

TEST_CASE("minimal coherence") {
  const Graph c4 = cycle_graph(4);
  CHECK(is_minimally_coherent(c4, {0, 1, 2, 3}));

  const Graph butterfly = paddle_graph(3, 3, 0);
  std::vector<int> all(butterfly.size());
  std::iota(all.begin(), all.end(), 0);
  CHECK(is_minimally_coherent(butterfly, all));

  // a circuit plus one extra edge is no longer minimal
  const Graph c4_plus = Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}});
  std::vector<int> super(c4_plus.size());
  std::iota(super.begin(), super.end(), 0);
  CHECK(!is_minimally_coherent(c4_plus, super));
}

TEST_CASE("circuit enumeration") {
  SUBCASE("forests have no circuits") {
    CHECK(minimal_coherent_subgraphs(path_graph(6), 5).empty());
  }
  SUBCASE("a lone even cycle") {
    const auto circuits = minimal_coherent_subgraphs(cycle_graph(4), 4);
    REQUIRE(circuits.size() == 1);
    CHECK(circuits[0] == std::vector<int>{0, 1, 2, 3});
  }
  SUBCASE("odd cycles are independent") {
    CHECK(minimal_coherent_subgraphs(cycle_graph(5), 5).empty());
  }
  SUBCASE("every enumerated circuit is minimally coherent") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 10; ++trial) {
      const Graph g = oracles::random_graph(6, 0.5, rng);
      for (const auto& circuit : minimal_coherent_subgraphs(g, g.size()))
        CHECK(is_minimally_coherent(g, circuit));
    }
  }
  SUBCASE("bound respected") {
    CHECK_THROWS_AS(minimal_coherent_subgraphs(cycle_graph(4), 5), InputError);
  }
}

TEST_CASE("circuit shapes") {
  const auto even = classify_minimal_coherent(cycle_graph(6), {0, 1, 2, 3, 4, 5});
  CHECK(even.even_cycle);
  CHECK(even.cycle_len == 6);

  const Graph butterfly = paddle_graph(3, 3, 0);
  std::vector<int> all(butterfly.size());
  std::iota(all.begin(), all.end(), 0);
  const auto paddle = classify_minimal_coherent(butterfly, all);
  CHECK(!paddle.even_cycle);
  CHECK(paddle.m == 3);
  CHECK(paddle.n == 3);
  CHECK(paddle.path_len == 0);

  CHECK_THROWS_AS(classify_minimal_coherent(cycle_graph(5), {0, 1, 2, 3, 4}), InputError);
}

namespace {

void check_posa_witness(const Graph& g, const PosaWitness& w) {
  const auto is_cycle = [&](const std::vector<int>& edges) -> int {
    std::map<int, int> degree;
    for (int e : edges) {
      ++degree[g.edge(e).a];
      ++degree[g.edge(e).b];
    }
    for (const auto& [v, d] : degree)
      if (d != 2) return 0;
    if (degree.size() != edges.size()) return 0;
    return static_cast<int>(edges.size());
  };
  if (w.even_cycle) {
    const int len = is_cycle(w.cycle_edges);
    CHECK(len > 0);
    CHECK(len % 2 == 0);
  } else {
    const int len1 = is_cycle(w.cycle_edges);
    const int len2 = is_cycle(w.second_cycle_edges);
    CHECK(len1 % 2 == 1);
    CHECK(len2 % 2 == 1);
    std::set<int> joint(w.cycle_edges.begin(), w.cycle_edges.end());
    for (int e : w.second_cycle_edges) CHECK(!joint.count(e));
  }
}

}  // namespace

TEST_CASE("posa witnesses") {
  const PosaWitness k4 = posa_witness(complete_graph(4));
  CHECK(k4.even_cycle);
  check_posa_witness(complete_graph(4), k4);

  const Graph butterfly = paddle_graph(3, 3, 0);
  const PosaWitness two = posa_witness(butterfly);
  CHECK(!two.even_cycle);
  check_posa_witness(butterfly, two);

  const Graph chorded = Graph::from_pairs(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {0, 5}, {0, 3}});
  const PosaWitness chord = posa_witness(chorded);
  CHECK(chord.even_cycle);
  check_posa_witness(chorded, chord);

  CHECK_THROWS_AS(posa_witness(cycle_graph(6)), InputError);     // q = p
  CHECK_THROWS_AS(posa_witness(complete_graph(3)), InputError);  // p < 4
}

TEST_CASE("MC-edge connectivity") {
  CHECK(!is_mc_edge_connected(path_graph(5)));
  CHECK(is_mc_edge_connected(cycle_graph(4)));
  // an even cycle with a pendant edge: the pendant edge lies in no circuit
  CHECK(!is_mc_edge_connected(Graph::from_pairs(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {3, 4}})));
}

TEST_CASE("paddle counts") {
  CHECK(paddle_count(4) == 0);
  const std::vector<int> expected = {1, 1, 2, 2, 4};
  for (int p = 5; p <= 9; ++p) CHECK(paddle_count(p) == expected[p - 5]);

  // independent route: summed closed form over even totals
  for (int p = 5; p <= 20; ++p) {
    int total = 0;
    for (int t = 6; t <= p + 1; t += 2) total += (t - 2) / 4;
    CHECK(paddle_count(p) == total);
  }
}

TEST_CASE("edge-scaling automorphisms of strongly coherent graphs are scalar") {
  // K4 is MC-edge connected with zero annihilator
  const Graph k4 = complete_graph(4);
  const AlgebraHandle a = graph_algebra(k4);
  CHECK(verify_edge_scaling_scalar(k4, scalar_automorphism(a, 2)));
  CHECK(verify_edge_scaling_scalar(k4, scalar_automorphism(a, rat(-3, 7))));

  // a diagonal map over Op(3) does not act on any graph algebra
  const AlgebraHandle op3 = build_canonical(CanonicalKind::Op, 3);
  RatMatrix ub = RatMatrix::identity(3), zb = RatMatrix::identity(3);
  ub.at(2, 2) = 2;
  zb.at(2, 2) = 4;
  CHECK_THROWS_AS(verify_edge_scaling_scalar(complete_graph(3), GradedMap{op3, op3, ub, zb}),
                  InputError);
}
