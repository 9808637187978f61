// SPDX-License-Identifier: Apache-2.0
#include "dynr_io.hpp"

#include "dynr/errors.hpp"

namespace dynr::io {

namespace {

Root simple_root(int rank, int k) {
  if (k < 1 || k > rank) throw SchemaError("simple root index a" + std::to_string(k) + " out of range");
  Root r(static_cast<std::size_t>(rank), 0);
  r[static_cast<std::size_t>(k - 1)] = 1;
  return r;
}

Root root_key(const std::string& key, int rank) {
  if (key.size() > 1 && key[0] == 'a') return simple_root(rank, std::stoi(key.substr(1)));
  try {
    const auto parsed = Json::parse(key);
    const auto r = roots(Json::array({parsed}), rank);
    return r.front();
  } catch (const Json::exception&) {
    throw SchemaError("cannot read root '" + key + "'");
  }
}

template <std::size_t K>
Json tensor_json(const LieAlgebra& g, const Tensor<K>& t) {
  Json out = Json::array();
  for (const auto& [k, c] : t.terms()) {
    Json slots = Json::array();
    for (auto i : k) slots.push_back(g.name(i));
    out.push_back({{"slots", slots}, {"coeff", field(c)}});
  }
  return out;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw SchemaError(std::string("missing field '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string field(const FieldElement& f) { return f.to_string(); }

FieldElement field(const ContextPtr& ctx, const Json& j) {
  if (j.is_number_integer()) return FieldElement(j.get<long>());
  if (!j.is_string()) throw SchemaError("coefficient must be a string or integer");
  try {
    return FieldElement::parse(ctx, j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("bad coefficient: ") + e.what());
  }
}

Json roots(const std::vector<Root>& rs) {
  Json out = Json::array();
  for (const auto& r : rs) out.push_back(r);
  return out;
}

std::vector<Root> roots(const Json& j, int rank) {
  if (!j.is_array()) throw SchemaError("root list must be an array");
  std::vector<Root> out;
  for (const auto& r : j) {
    if (!r.is_array() || r.size() != static_cast<std::size_t>(rank))
      throw SchemaError("root must have " + std::to_string(rank) + " integer coordinates");
    Root root;
    for (const auto& c : r) {
      if (!c.is_number_integer()) throw SchemaError("root coordinates must be integers");
      root.push_back(c.get<int>());
    }
    out.push_back(root);
  }
  return out;
}

Json tensor(const LieAlgebra& g, const Tensor2& t) { return tensor_json(g, t); }
Json tensor(const LieAlgebra& g, const Tensor3& t) { return tensor_json(g, t); }

Tensor2 tensor2(const LieAlgebra& g, const ContextPtr& ctx, const Json& j) {
  if (!j.is_array()) throw SchemaError("tensor must be an array of terms");
  Tensor2 out;
  for (const auto& term : j) {
    const Json& slots = require(term, "slots");
    if (!slots.is_array() || slots.size() != 2) throw SchemaError("tensor term needs two slots");
    std::array<std::size_t, 2> key{};
    for (std::size_t s = 0; s < 2; ++s) {
      try {
        key[s] = g.index(slots[s].get<std::string>());
      } catch (const std::exception&) {
        throw SchemaError("unknown basis element in tensor term");
      }
    }
    out.add_term(key, field(ctx, require(term, "coeff")));
  }
  return out;
}

Json uea(const UEATensor& u) {
  Json terms = Json::array();
  for (const auto& [k, c] : u.terms()) terms.push_back({{"exp", k}, {"coeff", field(c)}});
  return {{"gens", u.algebra()->gen_names()}, {"terms", terms}};
}

UEATensor uea(const UEAPtr& alg, std::size_t slots, const Json& j) {
  if (require(j, "gens").get<std::vector<std::string>>() != alg->gen_names())
    throw SchemaError("generator header does not match the algebra");
  UEATensor out(alg, slots);
  for (const auto& t : require(j, "terms")) {
    const auto key = require(t, "exp").get<UEATensor::Key>();
    if (key.size() != slots) throw SchemaError("term has the wrong number of slots");
    for (const auto& e : key)
      if (e.size() != alg->ngens()) throw SchemaError("exponent vector has the wrong length");
    out.add_term(key, field(twist_context(), require(t, "coeff")));
  }
  return out;
}

Json twist(const TwistSeries& J) {
  if (J.slots != 2) throw InvalidInput("only two-slot twist series are serialized");
  Json orders = Json::array();
  for (std::size_t k = 0; k < J.orders.size(); ++k) {
    Json terms = Json::array();
    for (const auto& [key, c] : J.orders[k].terms())
      terms.push_back({{"left", key[0]}, {"right", key[1]}, {"coeff", field(c)}});
    orders.push_back({{"k", k}, {"terms", terms}});
  }
  return {{"N", J.order()}, {"gens", J.alg->gen_names()}, {"orders", orders}};
}

TwistSeries twist(const UEAPtr& alg, const Json& j) {
  try {
    const std::size_t N = require(j, "N").get<std::size_t>();
    if (j.contains("gens") && j.at("gens").get<std::vector<std::string>>() != alg->gen_names())
      throw SchemaError("generator header does not match the algebra");
    TwistSeries J = TwistSeries::trivial(alg, N);
    J.orders[0] = UEATensor(alg, 2);
    for (const auto& o : require(j, "orders")) {
      const std::size_t k = require(o, "k").get<std::size_t>();
      if (k > N) throw SchemaError("order index exceeds N");
      for (const auto& t : require(o, "terms")) {
        const auto l = require(t, "left").get<Exponent>(), r = require(t, "right").get<Exponent>();
        if (l.size() != alg->ngens() || r.size() != alg->ngens())
          throw SchemaError("exponent vector has the wrong length");
        J.orders[k].add_term({l, r}, field(twist_context(), require(t, "coeff")));
      }
    }
    return J;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed twist series: ") + e.what());
  }
}

Json orbit(const OrbitFunction& f) {
  Json terms = Json::array();
  for (const auto& [e, c] : f.terms()) terms.push_back({{"exp", e}, {"coeff", field(c)}});
  return {{"coords", {"g11", "g12", "g21", "g22"}}, {"terms", terms}};
}

Json coefficients(const RootSystem& rs, const CoefficientFamily& fam) {
  Json out = Json::array();
  for (std::size_t i = 0; i < rs.size(); ++i) out.push_back({{"root", rs.root(i)}, {"x", field(fam.x[i])}});
  return out;
}

Json conditions(const ConditionReport& rep) {
  Json out = Json::object();
  const std::pair<const char*, const ConditionResult*> items[] = {{"a", &rep.a}, {"b", &rep.b}, {"c", &rep.c}, {"d", &rep.d}};
  for (const auto& [name, r] : items) {
    Json c{{"status", r->passed ? "pass" : "fail"}};
    if (!r->passed) {
      c["witness"] = roots(r->witness);
      c["residual"] = field(r->residual);
    }
    out[name] = c;
  }
  return out;
}

Json oracle(const OracleReport& rep) {
  Json diff = Json::array();
  for (std::size_t i = 0; i < rep.difference.size(); ++i)
    if (!rep.difference[i].is_zero())
      diff.push_back({{"index", i}, {"coeff", field(rep.difference[i])}});
  Json composed = Json::array();
  for (const auto& c : rep.composed) composed.push_back(field(c));
  return {{"V", rep.V},
          {"W", rep.W},
          {"depth", rep.depth},
          {"composed", composed},
          {"difference_terms", diff},
          {"status", rep.passed() ? "pass" : "fail"}};
}

DynrSpec spec(const Json& j) {
  try {
    const std::string type = require(j, "type").get<std::string>();
    const int rank = require(j, "rank").get<int>();
    if (type.size() != 1) throw SchemaError("type must be a single letter");
    RootSystem rs = [&] {
      try {
        return RootSystem(type[0], rank);
      } catch (const InvalidInput& e) {
        throw SchemaError(e.what());
      }
    }();
    const auto delta = j.contains("Delta") ? roots(j.at("Delta"), rank) : std::vector<Root>{};
    const auto U = j.contains("U") ? roots(j.at("U"), rank) : std::vector<Root>{};
    std::map<Root, FieldElement> bind;
    if (j.contains("t")) {
      if (!j.at("t").is_object()) throw SchemaError("t must map roots to expressions");
      for (const auto& [key, v] : j.at("t").items()) bind[root_key(key, rank)] = field(t_context(rank), v);
    }
    DynrSpec s = make_spec(rs, delta, U, bind);
    if (j.contains("Pi")) s.pi = roots(j.at("Pi"), rank);
    return s;
  } catch (const Json::exception& e) {
    throw SchemaError(std::string("malformed classification job: ") + e.what());
  }
}

}  // namespace dynr::io
