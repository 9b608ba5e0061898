#include "doctest.h"
#include "nga/json_io.hpp"
#include "nga/petersen.hpp"
#include "nga/short_functional.hpp"

using namespace nga;

TEST_CASE("petersen model basics") {
  const PetersenModel m = build_petersen();
  CHECK(m.graph.order() == 10);
  CHECK(m.graph.size() == 15);

  // 14 ~ 35 but 14 is not adjacent to 13
  CHECK(m.graph.adjacent(m.vertex_of_pair(1, 4), m.vertex_of_pair(3, 5)));
  CHECK(!m.graph.adjacent(m.vertex_of_pair(1, 4), m.vertex_of_pair(1, 3)));

  CHECK(m.vertex_labels[0] == "12");
  CHECK(m.edge_labels[0] == "1234");
  CHECK(m.enhanced_edge_labels[0] == "123456");
  CHECK(m.edge_of_enhanced("162345") == m.graph.edge_index(m.vertex_of_pair(2, 3), m.vertex_of_pair(4, 5)));
  CHECK(m.edge_of_enhanced("436512") == m.edge_of_enhanced("123456"));  // switching rules
  CHECK_THROWS_AS(m.edge_of_enhanced("123455"), InputError);  // repeated digit
  CHECK_THROWS_AS(m.edge_of_enhanced("12345"), InputError);   // wrong length

  // vertex squares are claw sums: 12^2 = 1234 + 1235 + 1245
  const Element sq = multiply(u_basis_element(m.algebra, 0), u_basis_element(m.algebra, 0));
  const auto profile = support_profile(sq);
  CHECK(profile.weight == 3);
  CHECK(profile.support == std::vector<int>{m.edge_of_enhanced("123456"),
                                            m.edge_of_enhanced("123546"),
                                            m.edge_of_enhanced("124536")});
}

TEST_CASE("the full verification suite passes") {
  const auto checks = petersen_verification();
  CHECK(checks.size() >= 14);
  for (const auto& c : checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.passed);
  }
  // report serialization carries one entry per check
  const auto j = checks_to_json(checks);
  CHECK(j.size() == checks.size());
  for (const auto& entry : j) CHECK(entry.at("status") == "pass");
}
