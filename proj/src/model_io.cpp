#include "nmfo/model_io.hpp"

#include <fstream>

#include "nmfo/errors.hpp"

namespace nmfo {

using nlohmann::json;

namespace {

std::string tuple_key(const std::vector<std::string>& domain, std::size_t offset, int arity) {
  std::vector<std::string> parts(static_cast<std::size_t>(arity));
  for (int i = arity - 1; i >= 0; --i) {
    parts[static_cast<std::size_t>(i)] = domain[offset % domain.size()];
    offset /= domain.size();
  }
  std::string out = "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += ',';
    out += parts[i];
  }
  return out + ")";
}

std::vector<std::string> parse_tuple_key(const std::string& key) {
  if (key.size() < 2 || key.front() != '(' || key.back() != ')') throw ModelError("bad tuple key '" + key + "'");
  std::vector<std::string> out;
  const std::string inner = key.substr(1, key.size() - 2);
  if (inner.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    const auto comma = inner.find(',', start);
    std::string item = inner.substr(start, comma - start);
    while (!item.empty() && item.front() == ' ') item.erase(item.begin());
    while (!item.empty() && item.back() == ' ') item.pop_back();
    if (item.empty()) throw ModelError("bad tuple key '" + key + "'");
    out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

Rational rational_field(const json& j, const std::string& what) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long>());
  throw ModelError(what + ": expected a \"p/q\" string");
}

const json& field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ModelError(std::string("missing field '") + key + "'");
  return j.at(key);
}

ChainSpec chain_field(const json& j) {
  const json& c = field(j, "chain");
  if (!c.is_string()) throw ModelError("'chain' must be a string");
  return ChainSpec::parse(c.get<std::string>());
}

}  // namespace

json to_json(const FiniteModel& m) {
  json preds = json::object();
  for (const auto& [name, arity] : m.signature()) {
    json table = json::object();
    const auto& values = m.table(name);
    for (std::size_t i = 0; i < values.size(); ++i) table[tuple_key(m.domain(), i, arity)] = values[i].str();
    preds[name] = table;
  }
  json consts = json::object();
  for (const auto& [name, idx] : m.constants()) consts[name] = m.domain()[static_cast<std::size_t>(idx)];
  return {{"chain", m.chain().name()}, {"domain", m.domain()}, {"predicates", preds}, {"constants", consts}};
}

FiniteModel finite_model_from_json(const json& j) {
  try {
    const ChainSpec chain = chain_field(j);
    const json& dom = field(j, "domain");
    if (!dom.is_array()) throw ModelError("'domain' must be an array");
    FiniteModel m(chain, dom.get<std::vector<std::string>>());
    const json& preds = field(j, "predicates");
    if (!preds.is_object()) throw ModelError("'predicates' must be an object");
    for (const auto& [name, table] : preds.items()) {
      if (!table.is_object() || table.empty()) throw ModelError("predicate '" + name + "' has no entries");
      const int arity = static_cast<int>(parse_tuple_key(table.begin().key()).size());
      m.declare(name, arity);
      std::size_t expected = 1;
      for (int i = 0; i < arity; ++i) expected *= m.domain().size();
      if (table.size() != expected)
        throw ModelError("predicate '" + name + "' is not totally interpreted (" + std::to_string(table.size()) +
                         " of " + std::to_string(expected) + " tuples)");
      for (const auto& [key, value] : table.items()) {
        const auto tuple = parse_tuple_key(key);
        if (static_cast<int>(tuple.size()) != arity)
          throw ArityError("predicate '" + name + "' has tuples of different lengths");
        m.set(name, tuple, rational_field(value, name + key));
      }
    }
    if (j.contains("constants"))
      for (const auto& [name, ind] : j.at("constants").items()) m.set_constant(name, ind.get<std::string>());
    return m;
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed model: ") + e.what());
  }
}

json to_json(const EventualSeq& s) {
  json exc = json::object();
  for (const auto& [idx, v] : s.exceptions) exc[std::to_string(idx)] = v.str();
  return {{"tail", {{"base", s.tail.base.str()}, {"coeff", s.tail.coeff.str()}, {"shift", s.tail.shift}}},
          {"exceptions", exc}};
}

json to_json(const OmegaModel& m) {
  json monadic = json::object();
  for (const auto& [name, s] : m.monadic()) monadic[name] = to_json(s);
  json zeroary = json::object();
  for (const auto& [name, v] : m.zeroary()) zeroary[name] = v.str();
  return {{"chain", m.chain().name()}, {"monadic", monadic}, {"zeroary", zeroary}};
}

OmegaModel omega_model_from_json(const json& j) {
  try {
    const ChainSpec chain = chain_field(j);
    std::map<std::string, EventualSeq> monadic;
    std::map<std::string, Rational> zeroary;
    if (j.contains("monadic"))
      for (const auto& [name, sj] : j.at("monadic").items()) {
        EventualSeq s;
        const json& t = field(sj, "tail");
        s.tail.base = rational_field(field(t, "base"), name + ".base");
        s.tail.coeff = t.contains("coeff") ? rational_field(t.at("coeff"), name + ".coeff") : Rational(0);
        s.tail.shift = t.contains("shift") ? t.at("shift").get<long>() : 0;
        if (s.tail.shift < 0) throw ModelError(name + ": shift must be non-negative");
        if (sj.contains("exceptions"))
          for (const auto& [idx, v] : sj.at("exceptions").items()) {
            std::size_t used = 0;
            const long k = std::stol(idx, &used);
            if (used != idx.size() || k < 0) throw ModelError(name + ": bad exception index '" + idx + "'");
            s.exceptions[k] = rational_field(v, name + ".exceptions");
          }
        monadic[name] = std::move(s);
      }
    if (j.contains("zeroary"))
      for (const auto& [name, v] : j.at("zeroary").items()) zeroary[name] = rational_field(v, name);
    return OmegaModel(chain, std::move(monadic), std::move(zeroary));
  } catch (const json::exception& e) {
    throw ModelError(std::string("malformed omega-model: ") + e.what());
  } catch (const std::invalid_argument&) {
    throw ModelError("malformed omega-model: bad exception index");
  }
}

AnyModel model_from_json(const json& j) {
  if (j.is_object() && (j.contains("monadic") || j.contains("zeroary"))) return omega_model_from_json(j);
  return finite_model_from_json(j);
}

AnyModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ModelError("'" + path + "' is not valid JSON: " + e.what());
  }
  return model_from_json(j);
}

}  // namespace nmfo
