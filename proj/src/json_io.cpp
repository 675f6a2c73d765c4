#include "sandpile/json_io.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sandpile {

using nlohmann::json;

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) {
    return json(static_cast<std::int64_t>(z.get_si()));
  }
  return json(z.get_str());
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) {
      // get<uint64_t> may exceed long; go through the decimal string.
      return mpz_class(std::to_string(j.get<std::uint64_t>()));
    }
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) {
    try {
      return mpz_class(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("not a decimal integer string: " +
                                  j.get<std::string>());
    }
  }
  throw std::invalid_argument("expected an integer or a decimal string, got " +
                              j.dump());
}

json graph_to_json(const Multigraph& g) {
  json edges = json::array();
  const std::size_t n = g.vertex_count();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (g.weight(i, j) != 0) {
        edges.push_back(json::array({i, j, mpz_to_json(g.weight(i, j))}));
      }
    }
  }
  return json{{"vertex_count", n}, {"edges", std::move(edges)}};
}

Multigraph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertex_count") || !j.contains("edges")) {
    throw std::invalid_argument(
        "graph JSON must be {\"vertex_count\": n, \"edges\": [[i,j,m],...]}");
  }
  const json& vc = j.at("vertex_count");
  if (!vc.is_number_integer() || vc.get<std::int64_t>() < 1) {
    throw std::invalid_argument("vertex_count must be a positive integer");
  }
  const auto n = vc.get<std::uint64_t>();
  Multigraph g(static_cast<std::size_t>(n));
  const json& edges = j.at("edges");
  if (!edges.is_array()) {
    throw std::invalid_argument("edges must be an array of [i, j, m] triples");
  }
  for (const json& e : edges) {
    if (!e.is_array() || e.size() != 3) {
      throw std::invalid_argument("each edge must be an [i, j, m] triple");
    }
    if (!e[0].is_number_integer() || !e[1].is_number_integer()) {
      throw std::invalid_argument("edge endpoints must be integers");
    }
    const std::int64_t i = e[0].get<std::int64_t>();
    const std::int64_t jj = e[1].get<std::int64_t>();
    if (i < 0 || jj < 0 || static_cast<std::uint64_t>(i) >= n ||
        static_cast<std::uint64_t>(jj) >= n) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (i >= jj) {
      throw std::invalid_argument("edge endpoints must satisfy i < j");
    }
    const mpz_class m = mpz_from_json(e[2]);
    if (m < 1) {
      throw std::invalid_argument("edge multiplicities must be >= 1");
    }
    if (g.weight(static_cast<std::size_t>(i), static_cast<std::size_t>(jj)) !=
        0) {
      throw std::invalid_argument("duplicate edge pair in graph JSON");
    }
    g.set_weight(static_cast<std::size_t>(i), static_cast<std::size_t>(jj), m);
  }
  return g;
}

json group_to_json(const AbelianGroup& g) {
  json factors = json::array();
  for (const mpz_class& f : g.invariant_factors()) {
    factors.push_back(mpz_to_json(f));
  }
  return json{{"invariant_factors", std::move(factors)},
              {"order", mpz_to_json(g.order())}};
}

AbelianGroup group_from_json(const json& j) {
  if (!j.is_object() || !j.contains("invariant_factors")) {
    throw std::invalid_argument(
        "group JSON must contain \"invariant_factors\"");
  }
  const json& factors = j.at("invariant_factors");
  if (!factors.is_array()) {
    throw std::invalid_argument("invariant_factors must be an array");
  }
  std::vector<mpz_class> chain;
  chain.reserve(factors.size());
  for (const json& f : factors) chain.push_back(mpz_from_json(f));
  AbelianGroup g(std::move(chain));
  if (j.contains("order") && mpz_from_json(j.at("order")) != g.order()) {
    throw std::invalid_argument(
        "group JSON order does not match the factor product");
  }
  return g;
}

json divisor_to_json(const Divisor& d) {
  json values = json::array();
  for (const mpz_class& v : d.values()) values.push_back(mpz_to_json(v));
  return values;
}

Divisor divisor_from_json(const json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument(
        "divisor JSON must be a nonempty integer array");
  }
  std::vector<mpz_class> values;
  values.reserve(j.size());
  for (const json& v : j) values.push_back(mpz_from_json(v));
  return Divisor(std::move(values));
}

}  // namespace sandpile
