#pragma once

#include <optional>
#include <vector>

#include "nga/graph.hpp"

namespace nga {

struct CensusOptions {
  bool connected = false;
  std::optional<int> regular_degree;
};

/// Exactly one representative per isomorphism class, canonically labeled and
/// sorted by canonical certificate. Bounds: regular censuses p <= 10,
/// connected p <= 9, unrestricted p <= 8. Results are memoized.
std::vector<Graph> census(int p, const CensusOptions& options = {});

}  // namespace nga
