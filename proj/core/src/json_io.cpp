#include "nga/json_io.hpp"

namespace nga {

using nlohmann::json;

json algebra_to_json(const NormalAlgebra& a) {
  json j;
  j["dimU"] = a.dim_u();
  j["dimZ"] = a.dim_z();
  j["labels"] = json{{"u", a.u_labels()}, {"z", a.z_labels()}};
  json sc = json::array();
  for (std::size_t i = 0; i < a.dim_u(); ++i)
    for (std::size_t k = i; k < a.dim_u(); ++k) {
      const auto& prod = a.basis_product(i, k);
      json coeffs = json::array();
      for (std::size_t z = 0; z < prod.size(); ++z)
        if (prod[z] != 0) coeffs.push_back(json::array({z, fraction_string(prod[z])}));
      if (!coeffs.empty()) sc.push_back(json::array({i, k, coeffs}));
    }
  j["sc"] = sc;
  return j;
}

AlgebraHandle algebra_from_json(const json& j) {
  const std::size_t dim_u = j.at("dimU").get<std::size_t>();
  const std::size_t dim_z = j.at("dimZ").get<std::size_t>();
  std::vector<std::vector<Rational>> sc(NormalAlgebra::pair_count(dim_u),
                                        std::vector<Rational>(dim_z, Rational(0)));
  for (const auto& entry : j.at("sc")) {
    const std::size_t i = entry.at(0).get<std::size_t>();
    const std::size_t k = entry.at(1).get<std::size_t>();
    if (i >= dim_u || k >= dim_u) throw InputError("sc entry out of range");
    for (const auto& coeff : entry.at(2)) {
      const std::size_t z = coeff.at(0).get<std::size_t>();
      if (z >= dim_z) throw InputError("sc coefficient index out of range");
      sc[NormalAlgebra::pair_index(dim_u, i, k)][z] =
          parse_rational(coeff.at(1).get<std::string>());
    }
  }
  std::vector<std::string> ul, zl;
  if (j.contains("labels")) {
    const auto& labels = j.at("labels");
    if (labels.contains("u")) ul = labels.at("u").get<std::vector<std::string>>();
    if (labels.contains("z")) zl = labels.at("z").get<std::vector<std::string>>();
  }
  return std::make_shared<NormalAlgebra>(dim_u, dim_z, std::move(sc), std::move(ul),
                                         std::move(zl));
}

namespace {

json matrix_to_json(const RatMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(fraction_string(m.at(r, c)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

json graded_map_to_json(const GradedMap& m) {
  return json{{"source", {{"dimU", m.source->dim_u()}, {"dimZ", m.source->dim_z()}}},
              {"target", {{"dimU", m.target->dim_u()}, {"dimZ", m.target->dim_z()}}},
              {"u_block", matrix_to_json(m.u_block)},
              {"z_block", matrix_to_json(m.z_block)}};
}

json classification_to_json(const ClassificationReport& r) {
  json params{{"p", r.p}, {"q", r.q}};
  if (r.m) params["m"] = *r.m;
  if (r.n) params["n"] = *r.n;
  if (r.path_len) params["path_len"] = *r.path_len;
  json j{{"tag", to_string(r.tag)}, {"params", params}};
  if (r.iso) j["iso"] = graded_map_to_json(*r.iso);
  return j;
}

json checks_to_json(const std::vector<NamedCheck>& checks) {
  json out = json::array();
  for (const auto& c : checks) {
    json entry{{"name", c.name}, {"status", c.passed ? "pass" : "fail"}};
    if (!c.detail.empty()) entry["witness"] = c.detail;
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace nga
