#include "algtype/clone.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <unordered_map>

#include "algtype/error.hpp"

namespace algtype {

bool is_support(const OperationTable& op, std::span<const std::size_t> subset) {
  std::vector<bool> keep(op.arity(), false);
  for (std::size_t c : subset) {
    if (c >= op.arity()) {
      throw LoadError("coordinate " + std::to_string(c) + " is outside arity " +
                      std::to_string(op.arity()));
    }
    keep[c] = true;
  }
  // Group all tuples by their restriction to the subset.
  std::unordered_map<std::size_t, Element> seen;
  for (std::size_t i = 0; i < op.size(); ++i) {
    const auto tuple = op.tuple_at(i);
    std::size_t key = 0;
    for (std::size_t j = 0; j < tuple.size(); ++j) {
      if (keep[j]) key = key * op.carrier_size() + tuple[j];
    }
    auto [it, inserted] = seen.emplace(key, op.at(i));
    if (!inserted && it->second != op.at(i)) return false;
  }
  return true;
}

CoordinateSet minimal_support(const OperationTable& op) {
  const std::size_t n = op.carrier_size();
  CoordinateSet out;
  std::size_t stride = op.size();
  for (std::size_t c = 0; c < op.arity(); ++c) {
    stride /= n;  // n^(k-1-c): index step for coordinate c
    bool essential = false;
    for (std::size_t i = 0; i < op.size() && !essential; ++i) {
      if ((i / stride) % n != 0) continue;  // base tuples with coordinate c = 0
      for (std::size_t v = 1; v < n; ++v) {
        if (op.at(i + v * stride) != op.at(i)) {
          essential = true;
          break;
        }
      }
    }
    if (essential) out.push_back(c);
  }
  return out;
}

std::size_t essential_rank(const OperationTable& op) { return minimal_support(op).size(); }

std::string RankEstimate::to_string() const {
  return value_ ? std::to_string(*value_) : std::string("countably_infinite");
}

RankEstimate variety_rank_estimate(const Signature& sig) {
  const std::size_t max_arity = sig.max_arity();
  if (max_arity >= 2) return RankEstimate::countably_infinite();
  return RankEstimate::finite(max_arity);
}

std::optional<std::size_t> CloneFragment::find(const OperationTable& table) const {
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].table == table) return i;
  }
  return std::nullopt;
}

CloneFragment generate_clone_fragment(const FiniteAlgebra& alg, std::size_t basis_size,
                                      std::size_t max_depth, std::size_t cap) {
  const auto terms = enumerate_terms(alg.signature(), basis_size, max_depth, cap);
  CloneFragment out;
  out.basis_size = basis_size;
  out.max_depth = max_depth;

  // Tables are built compositionally: a term's table is its head operation
  // applied pointwise to the already computed tables of its arguments, which
  // always precede it in enumeration order.
  std::unordered_map<const void*, std::size_t> table_of_term;
  std::map<std::vector<Element>, std::size_t> index_of_values;
  std::vector<OperationTable> tables;
  tables.reserve(terms.size());
  for (const auto& t : terms) {
    OperationTable table = [&] {
      if (t.is_variable()) return projection(alg.carrier_size(), basis_size, t.variable_index());
      std::vector<OperationTable> parts;
      for (const auto& a : t.arguments()) parts.push_back(tables[table_of_term.at(a.id())]);
      return compose_tables(alg.operation(t.symbol()), parts, basis_size);
    }();
    std::vector<Element> values(table.values().begin(), table.values().end());
    if (index_of_values.emplace(std::move(values), out.entries.size()).second) {
      out.entries.push_back({table, t});
    }
    table_of_term.emplace(t.id(), tables.size());
    tables.push_back(std::move(table));
  }
  return out;
}

}  // namespace algtype
