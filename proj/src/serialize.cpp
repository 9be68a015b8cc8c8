#include "clifford/serialize.hpp"

#include <stdexcept>

namespace clifford {

using nlohmann::json;

json to_json(const GroupTable& g) {
  json table = json::array();
  for (ElementIndex r = 0; r < g.order(); ++r) {
    json row = json::array();
    for (ElementIndex c = 0; c < g.order(); ++c) row.push_back(g.multiply(r, c));
    table.push_back(std::move(row));
  }
  return {{"order", g.order()},
          {"elements", std::vector<std::string>(g.labels().begin(), g.labels().end())},
          {"table", std::move(table)}};
}

GroupTable group_from_json(const json& j) {
  const auto labels = j.at("elements").get<std::vector<std::string>>();
  if (j.at("order").get<std::size_t>() != labels.size()) throw std::invalid_argument("order does not match elements");
  std::vector<ElementIndex> table;
  const auto& rows = j.at("table");
  if (rows.size() != labels.size()) throw std::invalid_argument("table row count does not match order");
  for (const auto& row : rows) {
    if (row.size() != labels.size()) throw std::invalid_argument("table row length does not match order");
    for (const auto& v : row) table.push_back(v.get<ElementIndex>());
  }
  return GroupTable(labels, std::move(table));
}

json to_json(const GaussianMatrix& m) {
  json rows = json::array();
  for (std::size_t r = 0; r < m.dim(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < m.dim(); ++c) row.push_back({m(r, c).re, m(r, c).im});
    rows.push_back(std::move(row));
  }
  return rows;
}

GaussianMatrix matrix_from_json(const json& j) {
  const std::size_t d = j.size();
  GaussianMatrix m(d);
  for (std::size_t r = 0; r < d; ++r) {
    if (j[r].size() != d) throw std::invalid_argument("matrix is not square");
    for (std::size_t c = 0; c < d; ++c) m(r, c) = {j[r][c].at(0).get<std::int64_t>(), j[r][c].at(1).get<std::int64_t>()};
  }
  return m;
}

json to_json(const GammaBasis& b) {
  json gammas = json::array();
  for (const auto& g : b.gammas()) gammas.push_back(to_json(g));
  json j{{"name", b.name()},
         {"p", b.signature().p()},
         {"q", b.signature().q()},
         {"dim", b.dim()},
         {"gammas", std::move(gammas)}};
  if (b.first_label() != 1) j["first_label"] = b.first_label();
  return j;
}

GammaBasis basis_from_json(const json& j) {
  std::vector<GaussianMatrix> gammas;
  for (const auto& g : j.at("gammas")) gammas.push_back(matrix_from_json(g));
  GammaBasis b(j.at("name").get<std::string>(), AlgebraSignature(j.at("p").get<int>(), j.at("q").get<int>()),
               std::move(gammas), j.value("first_label", 1));
  if (b.dim() != j.at("dim").get<std::size_t>()) throw std::invalid_argument("dim does not match the matrices");
  return b;
}

json to_json(const SignedTable& t) {
  json rows = json::array();
  for (std::size_t r = 0; r < t.size(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < t.size(); ++c) {
      row.push_back({{"key", t.labels[t.at(r, c).index]}, {"phase", to_string(t.at(r, c).phase)}});
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

json to_json(const ExtGroup& ext) {
  json keys = json::array(), labels = json::array();
  for (AutKey k : kAutKeys) {
    keys.push_back(to_string(k));
    labels.push_back(gamma_label(ext.basis, ext.blade(k)));
  }
  return {{"basis", to_json(ext.basis)},
          {"keys", std::move(keys)},
          {"blade_labels", std::move(labels)},
          {"table", to_json(ext.table)},
          {"signature", signature_string(ext.signature)},
          {"inner_star", ext.inner_star},
          {"pi_solved", ext.pi_solved}};
}

}  // namespace clifford
