#pragma once

#include <nlohmann/json.hpp>

#include "nga/algebra.hpp"
#include "nga/classify.hpp"
#include "nga/petersen.hpp"

namespace nga {

/// Dump format: {dimU, dimZ, labels, sc: [[i, j, [[k, "num/den"], ...]], ...]}
/// listing only pairs with a nonzero product.
nlohmann::json algebra_to_json(const NormalAlgebra& a);
AlgebraHandle algebra_from_json(const nlohmann::json& j);

nlohmann::json graded_map_to_json(const GradedMap& m);

/// {tag, params: {p, q, m?, n?, path_len?}, iso?}
nlohmann::json classification_to_json(const ClassificationReport& r);

/// Ordered list of {name, status, witness?} entries.
nlohmann::json checks_to_json(const std::vector<NamedCheck>& checks);

}  // namespace nga
