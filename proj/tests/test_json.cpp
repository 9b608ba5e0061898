#include <random>
#include <set>

#include "doctest.h"
#include "nga/census.hpp"
#include "nga/classify.hpp"
#include "nga/json_io.hpp"
#include "oracles.hpp"

using namespace nga;
using nlohmann::json;

TEST_CASE("algebra dump round trip") {
  std::mt19937 rng(616);
  for (int trial = 0; trial < 15; ++trial) {
    const Graph g = oracles::random_graph(2 + rng() % 6, 0.5, rng);
    const AlgebraHandle a = graph_algebra(g);
    const AlgebraHandle back = algebra_from_json(algebra_to_json(*a));
    REQUIRE(back->dim_u() == a->dim_u());
    REQUIRE(back->dim_z() == a->dim_z());
    for (std::size_t i = 0; i < a->dim_u(); ++i)
      for (std::size_t j = i; j < a->dim_u(); ++j)
        CHECK(back->basis_product(i, j) == a->basis_product(i, j));
  }

  // rationals serialize as num/den strings
  const AlgebraHandle tp = build_canonical(CanonicalKind::Tp, 3);
  const json dumped = algebra_to_json(*tp);
  CHECK(dumped.at("dimU") == 3);
  CHECK(dumped.at("dimZ") == 4);
  for (const auto& entry : dumped.at("sc"))
    for (const auto& coeff : entry.at(2)) CHECK(coeff.at(1) == "1/1");
}

TEST_CASE("classification reports validate against the schema") {
  CensusOptions connected;
  connected.connected = true;
  const std::set<std::string> tags = {"Tree_F0_Op", "OddUnicyclic_Op", "EvenCycle_F0_Tp",
                                      "DoublyOddPaddle_Tp", "Unclassified"};
  for (int p = 2; p <= 6; ++p)
    for (const Graph& g : census(p, connected)) {
      ClassificationReport r = classify_edge_square(g);
      if (r.tag == ClassificationTag::Unclassified && g.size() >= 2)
        r = classify_pair_square(g);
      const json j = json::parse(classification_to_json(r).dump());
      CHECK(tags.count(j.at("tag").get<std::string>()) == 1);
      CHECK(j.at("params").at("p").get<int>() == g.order());
      CHECK(j.at("params").at("q").get<int>() == g.size());
      if (j.contains("iso")) {
        CHECK(j.at("iso").contains("u_block"));
        CHECK(j.at("iso").at("u_block").size() == j.at("iso").at("target").at("dimU").get<std::size_t>());
      }
    }
}
