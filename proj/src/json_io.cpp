#include "algtype/json_io.hpp"

#include <fstream>
#include <limits>
#include <sstream>

#include "algtype/error.hpp"

namespace algtype {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

const json& field(const json& j, const char* name, const std::string& where) {
  if (!j.is_object()) throw LoadError(where + ": expected an object");
  auto it = j.find(name);
  if (it == j.end()) throw LoadError(where + "." + name + ": missing");
  return *it;
}

std::size_t as_count(const json& j, const std::string& where) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) {
    throw LoadError(where + ": expected a nonnegative integer");
  }
  return j.get<std::size_t>();
}

std::vector<Element> as_elements(const json& j, const std::string& where) {
  if (!j.is_array()) throw LoadError(where + ": expected an array");
  std::vector<Element> out;
  out.reserve(j.size());
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::size_t v = as_count(j[i], where + "[" + std::to_string(i) + "]");
    if (v > std::numeric_limits<Element>::max()) {
      throw LoadError(where + "[" + std::to_string(i) + "]: value too large");
    }
    out.push_back(static_cast<Element>(v));
  }
  return out;
}

template <typename F>
auto with_context(const std::string& where, F&& f) {
  try {
    return f();
  } catch (const LoadError& e) {
    throw LoadError(where + ": " + e.what());
  }
}

}  // namespace

Signature signature_from_json(const json& j) {
  const json& symbols = field(j, "symbols", "signature");
  if (!symbols.is_array()) throw LoadError("signature.symbols: expected an array");
  std::vector<Symbol> out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    const std::string where = "signature.symbols[" + std::to_string(i) + "]";
    const json& name = field(symbols[i], "name", where);
    if (!name.is_string()) throw LoadError(where + ".name: expected a string");
    out.push_back({name.get<std::string>(), as_count(field(symbols[i], "arity", where), where + ".arity")});
  }
  return with_context("signature.symbols", [&] { return Signature(std::move(out)); });
}

ordered_json to_json(const Signature& sig) {
  ordered_json symbols = ordered_json::array();
  for (const auto& s : sig.symbols()) symbols.push_back({{"name", s.name}, {"arity", s.arity}});
  return {{"symbols", symbols}};
}

FiniteAlgebra algebra_from_json(const json& j) {
  Signature sig = signature_from_json(field(j, "signature", "algebra"));
  const std::size_t n = as_count(field(j, "carrier", "algebra"), "algebra.carrier");
  if (n == 0) throw LoadError("algebra.carrier: must be positive");
  const json& tables = field(j, "tables", "algebra");
  if (!tables.is_object()) throw LoadError("algebra.tables: expected an object");
  std::vector<std::vector<Element>> out;
  for (const auto& s : sig.symbols()) {
    auto it = tables.find(s.name);
    if (it == tables.end()) throw LoadError("algebra.tables." + s.name + ": missing");
    out.push_back(as_elements(*it, "algebra.tables." + s.name));
  }
  for (auto it = tables.begin(); it != tables.end(); ++it) {
    if (!sig.find(it.key())) throw LoadError("algebra.tables." + it.key() + ": not in the signature");
  }
  return with_context("algebra", [&] { return FiniteAlgebra(std::move(sig), n, std::move(out)); });
}

ordered_json to_json(const FiniteAlgebra& alg) {
  ordered_json tables = ordered_json::object();
  for (std::size_t s = 0; s < alg.signature().size(); ++s) {
    const auto values = alg.operation(s).values();
    tables[alg.signature()[s].name] = std::vector<Element>(values.begin(), values.end());
  }
  return {{"signature", to_json(alg.signature())}, {"carrier", alg.carrier_size()}, {"tables", tables}};
}

OperationTable operation_table_from_json(const json& j) {
  const std::size_t k = as_count(field(j, "arity", "operation"), "operation.arity");
  const std::size_t n = as_count(field(j, "carrier", "operation"), "operation.carrier");
  auto values = as_elements(field(j, "table", "operation"), "operation.table");
  return with_context("operation.table", [&] { return OperationTable(k, n, std::move(values)); });
}

ordered_json to_json(const OperationTable& op) {
  const auto values = op.values();
  return {{"arity", op.arity()},
          {"carrier", op.carrier_size()},
          {"table", std::vector<Element>(values.begin(), values.end())}};
}

ordered_json to_json(const RecoveredType& recovered) {
  ordered_json classes = ordered_json::array();
  for (const auto& c : recovered.classes) classes.push_back({{"size", c.size}, {"rank", c.rank}});
  return {{"arities", recovered.arities},
          {"basis", recovered.basis_size},
          {"depth", recovered.depth},
          {"classes", classes}};
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw LoadError(path.string() + ": cannot open");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw LoadError(path.string() + ": invalid JSON: " + e.what());
  }
}

Signature load_signature(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_context(path.string(), [&] { return signature_from_json(j); });
}

FiniteAlgebra load_algebra(const std::filesystem::path& path) {
  const json j = read_json_file(path);
  return with_context(path.string(), [&] { return algebra_from_json(j); });
}

}  // namespace algtype
