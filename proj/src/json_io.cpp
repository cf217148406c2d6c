#include "hlroots/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace hlroots {

namespace {

Json coefficient_json(const BigInt& c) {
  if (c >= std::numeric_limits<std::int64_t>::min() && c <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(c);
  return c.str();
}

Json coefficient_json(const Rational& c) {
  if (boost::multiprecision::denominator(c) == 1)
    return coefficient_json(BigInt(boost::multiprecision::numerator(c)));
  return c.str();
}

template <class R>
Json polynomial_json(const Polynomial<R>& p) {
  Json out = Json::object();
  for (int e = 0; e <= p.degree(); ++e)
    if (p[e] != 0) out[std::to_string(e)] = coefficient_json(p[e]);
  return out;
}

template <class C>
Json symfunction_json(const SymFunction<C>& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms)
    terms.push_back({{"partition", to_json(lambda)}, {"coeff", to_json(c)}});
  return {{"basis", std::string(1, basis_tag(f.basis))}, {"degree", f.degree}, {"terms", terms}};
}

std::vector<int> int_list(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of integers");
  std::vector<int> out;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw std::invalid_argument("expected an integer");
    out.push_back(x.get<int>());
  }
  return out;
}

}  // namespace

Json to_json(const Partition& lambda) { return lambda.parts(); }

Json to_json(const PartitionTuple& tuple) {
  Json out = Json::array();
  for (const auto& p : tuple) out.push_back(to_json(p));
  return out;
}

Json to_json(const IntPolynomial& p) { return polynomial_json(p); }
Json to_json(const RatPolynomial& p) { return polynomial_json(p); }

Json to_json(const Cyclotomic<Rational>& v) {
  return {{"order", v.order()}, {"residue", polynomial_json(v.residue())}};
}

Json to_json(const RibbonTableau& t) {
  Json ribbons = Json::array();
  for (const auto& r : t.ribbons()) {
    Json cells = Json::array();
    for (const auto& c : r.cells) cells.push_back({c.row, c.col});
    ribbons.push_back({{"label", r.label}, {"cells", cells}});
  }
  return {{"shape", to_json(t.shape())}, {"k", t.k()}, {"ribbons", ribbons}};
}

Json to_json(const TupleTableau& t) {
  Json out = Json::array();
  for (const auto& comp : t.components()) out.push_back(comp.rows());
  return out;
}

Json to_json(const DiagonalVector& d) { return d.entries; }

Json to_json(const RiggedConfiguration& rc) {
  return {{"shapes", to_json(rc.config().shapes())}, {"riggings", rc.riggings()}};
}

Json to_json(const IntMatrix& m) { return m; }

Json to_json(const QSymFunction& f) { return symfunction_json(f); }
Json to_json(const RootSymFunction& f) { return symfunction_json(f); }

Partition partition_from_json(const Json& j) { return Partition(int_list(j)); }

PartitionTuple partition_tuple_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of partitions");
  PartitionTuple out;
  for (const auto& p : j) out.push_back(partition_from_json(p));
  return out;
}

IntPolynomial polynomial_from_json(const Json& j) {
  if (!j.is_object()) throw std::invalid_argument("expected an exponent -> coefficient map");
  IntPolynomial out;
  for (const auto& [key, value] : j.items()) {
    const int e = std::stoi(key);
    BigInt c = value.is_string() ? BigInt(value.get<std::string>()) : BigInt(value.get<std::int64_t>());
    out.add_term(c, e);
  }
  return out;
}

RibbonTableau ribbon_tableau_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("k") || !j.contains("ribbons"))
    throw std::invalid_argument("ribbon tableau needs shape, k and ribbons");
  std::vector<Ribbon> ribbons;
  for (const auto& r : j.at("ribbons")) {
    std::vector<Cell> cells;
    for (const auto& c : r.at("cells")) {
      const auto rc = int_list(c);
      if (rc.size() != 2) throw std::invalid_argument("cells are [row, col] pairs");
      cells.push_back({rc[0], rc[1]});
    }
    ribbons.push_back(Ribbon::make(std::move(cells), r.at("label").get<int>()));
  }
  return RibbonTableau(partition_from_json(j.at("shape")), j.at("k").get<int>(), std::move(ribbons));
}

TupleTableau tuple_from_json(const Json& j, const std::vector<int>& content_offsets) {
  if (!j.is_array()) throw std::invalid_argument("expected a JSON array of tableaux");
  std::vector<YoungTableau> comps;
  for (const auto& comp : j) {
    if (!comp.is_array()) throw std::invalid_argument("each component must be an array");
    std::vector<std::vector<int>> rows;
    if (!comp.empty() && comp.front().is_number()) {
      rows.push_back(int_list(comp));
    } else {
      for (const auto& row : comp) rows.push_back(int_list(row));
    }
    comps.emplace_back(std::move(rows));
  }
  return TupleTableau(std::move(comps), content_offsets);
}

RiggedConfiguration rigged_configuration_from_json(const Json& j, const Partition& lambda,
                                                   const Partition& mu) {
  Configuration config(partition_tuple_from_json(j.at("shapes")), lambda, mu);
  return RiggedConfiguration(std::move(config), j.at("riggings").get<Riggings>());
}

}  // namespace hlroots
