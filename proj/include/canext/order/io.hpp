#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

#include "canext/core/errors.hpp"
#include "canext/order/lattice.hpp"

namespace canext::io {

using Json = nlohmann::json;

namespace detail {

inline Monotonicity parse_tag(const Json& j) {
  const auto s = j.get<std::string>();
  if (s == "+") return Monotonicity::preserving;
  if (s == "-") return Monotonicity::reversing;
  if (s == "?") return Monotonicity::untagged;
  throw Error(ErrorKind::invalid_document, "monotonicity tag must be one of + - ? (got '" + s + "')");
}

inline void fill_table(const Lattice& L, const Json& node, std::size_t depth, std::size_t arity, std::vector<Elem>& prefix,
                       std::vector<Elem>& table, const std::string& opname) {
  if (!node.is_object()) throw Error(ErrorKind::invalid_document, "operation '" + opname + "' table must be nested objects");
  for (Elem a = 0; a < L.size(); ++a) {
    auto it = node.find(L.name(a));
    if (it == node.end())
      throw Error(ErrorKind::invalid_document, "operation '" + opname + "' is not total: missing argument '" + L.name(a) + "'");
    prefix.push_back(a);
    if (depth + 1 == arity) {
      if (!it->is_string()) throw Error(ErrorKind::invalid_document, "operation '" + opname + "' values must be element names");
      table[tuple_index(prefix, L.size())] = L.index(it->get<std::string>());
    } else {
      fill_table(L, *it, depth + 1, arity, prefix, table, opname);
    }
    prefix.pop_back();
  }
  if (node.size() != L.size())
    throw Error(ErrorKind::invalid_document, "operation '" + opname + "' table names an unknown argument");
}

inline Operation parse_operation(const Lattice& L, const std::string& name, const Json& j) {
  if (!j.is_object()) throw Error(ErrorKind::invalid_document, "operation '" + name + "' must be an object");
  Operation op;
  op.name = name;
  op.arity = j.value("arity", std::size_t{1});
  if (op.arity == 0) throw Error(ErrorKind::invalid_document, "operation '" + name + "' has arity 0");
  if (auto m = j.find("monotone"); m != j.end()) {
    for (const auto& t : *m) op.tags.push_back(parse_tag(t));
  } else {
    op.tags.assign(op.arity, Monotonicity::untagged);
  }
  if (!j.contains("table")) throw Error(ErrorKind::invalid_document, "operation '" + name + "' has no table");
  op.table.assign(int_pow(L.size(), op.arity), 0);
  std::vector<Elem> prefix;
  fill_table(L, j.at("table"), 0, op.arity, prefix, op.table, name);
  return op;
}

inline Json table_to_json(const Lattice& L, const Operation& op, std::vector<Elem>& prefix) {
  Json node = Json::object();
  for (Elem a = 0; a < L.size(); ++a) {
    prefix.push_back(a);
    if (prefix.size() == op.arity)
      node[L.name(a)] = L.name(op.apply(prefix, L.size()));
    else
      node[L.name(a)] = table_to_json(L, op, prefix);
    prefix.pop_back();
  }
  return node;
}

}  // namespace detail

/// Reads the lattice document format. Unary `complement` and `diamond`
/// tables at top level (the modal algebra extension) become operations named
/// "complement" (tagged -) and "diamond" (tagged +).
inline Lattice lattice_from_json(const Json& doc) {
  try {
    if (!doc.is_object()) throw Error(ErrorKind::invalid_document, "document must be a JSON object");
    if (!doc.contains("elements")) throw Error(ErrorKind::invalid_document, "missing 'elements'");
    auto names = doc.at("elements").get<std::vector<std::string>>();
    std::vector<std::pair<std::string, std::string>> covers;
    if (auto c = doc.find("covers"); c != doc.end()) {
      for (const auto& pair : *c) {
        if (!pair.is_array() || pair.size() != 2)
          throw Error(ErrorKind::invalid_document, "each cover must be a [lower, upper] pair");
        covers.emplace_back(pair[0].get<std::string>(), pair[1].get<std::string>());
      }
    }
    Lattice L = Lattice::from_poset(Poset::from_covers(std::move(names), covers));
    if (auto ops = doc.find("operations"); ops != doc.end()) {
      if (!ops->is_object()) throw Error(ErrorKind::invalid_document, "'operations' must be an object");
      for (const auto& [name, spec] : ops->items()) L.add_operation(detail::parse_operation(L, name, spec));
    }
    for (const auto& [key, tag] : {std::pair{"complement", "-"}, std::pair{"diamond", "+"}}) {
      if (auto t = doc.find(key); t != doc.end()) {
        const Json spec = {{"arity", 1}, {"monotone", Json::array({tag})}, {"table", *t}};
        L.add_operation(detail::parse_operation(L, key, spec));
      }
    }
    return L;
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_document, e.what());
  }
}

inline Json lattice_to_json(const Lattice& L, const std::string& name = "") {
  Json doc;
  doc["name"] = name;
  doc["elements"] = L.names();
  Json covers = Json::array();
  for (const auto& [lo, hi] : L.poset().covers()) covers.push_back({L.name(lo), L.name(hi)});
  doc["covers"] = covers;
  if (!L.operations().empty()) {
    Json ops = Json::object();
    for (const auto& [opname, op] : L.operations()) {
      Json tags = Json::array();
      for (auto t : op.tags) tags.push_back(std::string(1, to_symbol(t)));
      std::vector<Elem> prefix;
      ops[opname] = {{"arity", op.arity}, {"monotone", tags}, {"table", detail::table_to_json(L, op, prefix)}};
    }
    doc["operations"] = ops;
  }
  return doc;
}

inline Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::invalid_document, e.what());
  }
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::invalid_document, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Lattice load_lattice(const std::string& text) { return lattice_from_json(parse_json_text(text)); }
inline Lattice load_lattice_file(const std::string& path) { return load_lattice(read_file(path)); }

}  // namespace canext::io
