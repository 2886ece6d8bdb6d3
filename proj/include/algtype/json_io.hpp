#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "algtype/clone.hpp"
#include "algtype/finite_algebra.hpp"
#include "algtype/recovery.hpp"
#include "algtype/signature.hpp"

namespace algtype {

// File formats. All loaders throw LoadError with a message naming the
// offending field.
//
//   signature:  {"symbols":[{"name":"f","arity":2}, ...]}
//   algebra:    {"signature":{...}, "carrier":n, "tables":{"f":[...], ...}}
//   op table:   {"arity":k, "carrier":n, "table":[...]}
//
// Tables use the leftmost-argument-most-significant index convention.

Signature signature_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const Signature& sig);

FiniteAlgebra algebra_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const FiniteAlgebra& alg);

OperationTable operation_table_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const OperationTable& op);

// {"arities":[...sorted...],"basis":m,"depth":d,"classes":[{"size":..,"rank":..}]}
nlohmann::ordered_json to_json(const RecoveredType& recovered);

nlohmann::json read_json_file(const std::filesystem::path& path);

Signature load_signature(const std::filesystem::path& path);
FiniteAlgebra load_algebra(const std::filesystem::path& path);

}  // namespace algtype
