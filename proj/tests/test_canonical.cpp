#include <numeric>
#include <random>
#include <set>

#include "doctest.h"
#include "nga/canonical.hpp"
#include "nga/census.hpp"
#include "nga/graph6.hpp"
#include "oracles.hpp"

using namespace nga;

namespace {

std::vector<int> random_permutation(int n, std::mt19937& rng) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

}  // namespace

TEST_CASE("canonical form is relabeling-invariant") {
  const Graph p4 = path_graph(4);
  const Graph canon = canonical_form(p4);
  std::vector<int> perm{0, 1, 2, 3};
  do {
    CHECK(canonical_form(p4.relabeled(perm)) == canon);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

TEST_CASE("canonical form separates non-isomorphic trees") {
  CHECK(canonical_form(path_graph(4)) != canonical_form(star_graph(3)));
}

TEST_CASE("canonical form is idempotent") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = oracles::random_graph(1 + rng() % 10, 0.45, rng);
    const Graph canon = canonical_form(g);
    CHECK(canonical_form(canon) == canon);
  }
  CHECK_THROWS_AS(canonical_form(Graph(17, {})), InputError);
}

TEST_CASE("automorphism group orders on named graphs") {
  CHECK(automorphism_group_order(cycle_graph(6)) == 12);
  CHECK(automorphism_group_order(complete_graph(4)) == 24);
  CHECK(automorphism_group_order(path_graph(4)) == 2);
  CHECK(automorphism_group_order(star_graph(3)) == 6);
  CHECK(automorphism_group_order(Graph(5, {})) == 120);
}

TEST_CASE("generated group matches brute force on small graphs") {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 25; ++trial) {
    const int p = 2 + static_cast<int>(rng() % 5);  // up to 6
    const Graph g = oracles::random_graph(p, 0.5, rng);
    CHECK(automorphism_group_order(g) ==
          static_cast<unsigned long long>(oracles::brute_force_automorphism_count(g)));
  }
  for (const Graph& g : census(5))
    CHECK(automorphism_group_order(g) ==
          static_cast<unsigned long long>(oracles::brute_force_automorphism_count(g)));
}

TEST_CASE("an asymmetric graph has a trivial group") {
  // search deterministically for a 6-vertex instance certified by brute force
  std::mt19937 rng(31);
  for (;;) {
    const Graph g = oracles::random_graph(6, 0.5, rng);
    if (oracles::brute_force_automorphism_count(g) != 1) continue;
    CHECK(automorphism_group_order(g) == 1);
    const auto gens = automorphism_generators(g);
    REQUIRE(gens.size() == 1);  // identity only
    for (int v = 0; v < 6; ++v) CHECK(gens[0][v] == v);
    break;
  }
}

TEST_CASE("generators are always automorphisms") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = oracles::random_graph(3 + rng() % 8, 0.4, rng);
    for (const auto& perm : canonicalize(g).automorphism_generators) CHECK(g.relabeled(perm) == g);
  }
}

TEST_CASE("petersen-sized symmetry") {
  // Kneser-style construction without labels: 2-subsets of {0..4}
  std::vector<std::pair<int, int>> subsets;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) subsets.emplace_back(i, j);
  std::vector<std::pair<int, int>> edges;
  for (int x = 0; x < 10; ++x)
    for (int y = x + 1; y < 10; ++y) {
      const auto [a, b] = subsets[x];
      const auto [c, d] = subsets[y];
      if (a != c && a != d && b != c && b != d) edges.emplace_back(x, y);
    }
  const Graph petersen = Graph::from_pairs(10, edges);
  CHECK(automorphism_group_order(petersen) == 120);

  std::mt19937 rng(77);
  const Graph canon = canonical_form(petersen);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(canonical_form(petersen.relabeled(random_permutation(10, rng))) == canon);
}

TEST_CASE("census sizes match the catalog counts") {
  CHECK(census(1).size() == 1);
  CHECK(census(2).size() == 2);
  CHECK(census(3).size() == 4);
  CHECK(census(4).size() == 11);
  CHECK(census(5).size() == 34);
  CHECK(census(6).size() == 156);

  CensusOptions connected;
  connected.connected = true;
  CHECK(census(4, connected).size() == 6);
  CHECK(census(5, connected).size() == 21);
  CHECK(census(6, connected).size() == 112);
  CHECK(census(7, connected).size() == 853);
}

TEST_CASE("census(4) agrees with labeled brute force") {
  // all 2^6 labeled graphs on 4 vertices, deduplicated by canonical form
  std::set<std::pair<std::uint64_t, std::uint64_t>> classes;
  for (int mask = 0; mask < 64; ++mask) {
    std::vector<std::pair<int, int>> pairs;
    int bit = 0;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j, ++bit)
        if ((mask >> bit) & 1) pairs.emplace_back(i, j);
    classes.insert(canonical_certificate(Graph::from_pairs(4, pairs)));
  }
  CHECK(classes.size() == 11);
  CHECK(census(4).size() == classes.size());
}

TEST_CASE("census output is canonical, sorted, and duplicate-free") {
  const auto graphs = census(6);
  std::set<std::pair<std::uint64_t, std::uint64_t>> seen;
  std::pair<std::uint64_t, std::uint64_t> prev{0, 0};
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const auto cert = canonical_certificate(graphs[i]);
    CHECK(canonical_form(graphs[i]) == graphs[i]);
    CHECK(seen.insert(cert).second);
    if (i > 0) CHECK(prev < cert);
    prev = cert;
  }
}

TEST_CASE("regular censuses") {
  CensusOptions cubic;
  cubic.regular_degree = 3;
  cubic.connected = true;
  CHECK(census(4, cubic).size() == 1);
  CHECK(census(6, cubic).size() == 2);
  CHECK(census(8, cubic).size() == 5);
  CHECK(census(5, cubic).empty());  // odd degree sum

  CensusOptions two_regular;
  two_regular.regular_degree = 2;
  CHECK(census(6, two_regular).size() == 2);  // the 6-cycle and two triangles
  two_regular.connected = true;
  CHECK(census(6, two_regular).size() == 1);

  CensusOptions bad;
  CHECK_THROWS_AS(census(9, bad), InputError);
  bad.connected = true;
  CHECK_THROWS_AS(census(10, bad), InputError);
  bad.regular_degree = 3;
  CHECK_THROWS_AS(census(11, bad), InputError);
}
