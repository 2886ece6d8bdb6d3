#pragma once

// Seeded random generators shared by the property tests and the acceptance
// suite.

#include <algorithm>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "algtype/finite_algebra.hpp"
#include "algtype/operation_table.hpp"
#include "algtype/signature.hpp"
#include "algtype/term.hpp"

namespace algtype::testing {

using Rng = std::mt19937_64;

inline std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline std::vector<std::size_t> random_arities(Rng& rng, std::size_t min_symbols,
                                               std::size_t max_symbols, std::size_t max_arity) {
  std::vector<std::size_t> out(uniform(rng, min_symbols, max_symbols));
  for (auto& a : out) a = uniform(rng, 0, max_arity);
  return out;
}

// Names drawn from a pool so renamings and permutations are exercised.
inline Signature random_signature(Rng& rng, std::size_t min_symbols, std::size_t max_symbols,
                                  std::size_t max_arity, const std::string& prefix = "op") {
  const auto arities = random_arities(rng, min_symbols, max_symbols, max_arity);
  std::vector<std::size_t> ids(arities.size() * 3);
  for (std::size_t i = 0; i < ids.size(); ++i) ids[i] = i;
  std::shuffle(ids.begin(), ids.end(), rng);
  std::vector<Symbol> symbols;
  for (std::size_t i = 0; i < arities.size(); ++i) {
    symbols.push_back({prefix + std::to_string(ids[i]), arities[i]});
  }
  return Signature(std::move(symbols));
}

inline OperationTable random_table(Rng& rng, std::size_t arity, std::size_t carrier) {
  std::vector<Element> values(table_length(carrier, arity));
  // Bias towards tables with inessential coordinates: sometimes ignore a coordinate.
  const bool structured = uniform(rng, 0, 1) == 1 && arity > 0;
  if (!structured) {
    for (auto& v : values) v = static_cast<Element>(uniform(rng, 0, carrier - 1));
    return OperationTable(arity, carrier, std::move(values));
  }
  std::vector<bool> used(arity);
  for (std::size_t j = 0; j < arity; ++j) used[j] = uniform(rng, 0, 2) != 0;
  OperationTable shape(arity, carrier, std::vector<Element>(values.size(), 0));
  std::vector<Element> by_key(values.size());
  for (auto& v : by_key) v = static_cast<Element>(uniform(rng, 0, carrier - 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    auto tuple = shape.tuple_at(i);
    for (std::size_t j = 0; j < arity; ++j) {
      if (!used[j]) tuple[j] = 0;
    }
    values[i] = by_key[shape.index_of(tuple)];
  }
  return OperationTable(arity, carrier, std::move(values));
}

inline FiniteAlgebra random_algebra(Rng& rng, const Signature& sig, std::size_t carrier) {
  std::vector<std::vector<Element>> tables;
  for (const auto& s : sig.symbols()) {
    auto t = random_table(rng, s.arity, carrier);
    tables.emplace_back(t.values().begin(), t.values().end());
  }
  return FiniteAlgebra(sig, carrier, std::move(tables));
}

inline Term random_term(Rng& rng, const Signature& sig, std::size_t basis, std::size_t max_depth) {
  std::vector<std::size_t> leaves;
  std::vector<std::size_t> nodes;
  for (std::size_t s = 0; s < sig.size(); ++s) (sig[s].arity == 0 ? leaves : nodes).push_back(s);
  const std::size_t leaf_choices = basis + leaves.size();
  const bool stop =
      leaf_choices > 0 && (max_depth == 0 || nodes.empty() || uniform(rng, 0, 3) == 0);
  if (stop) {
    const std::size_t pick = uniform(rng, 0, leaf_choices - 1);
    if (pick < basis) return Term::variable(pick);
    return Term::apply(sig, leaves[pick - basis], {});
  }
  const std::size_t s = nodes[uniform(rng, 0, nodes.size() - 1)];
  std::vector<Term> args;
  for (std::size_t i = 0; i < sig[s].arity; ++i) {
    args.push_back(random_term(rng, sig, basis, max_depth - 1));
  }
  return Term::apply(sig, s, std::move(args));
}

// All n_b^{n_a} maps, in lexicographic order.
inline std::vector<std::vector<Element>> all_maps(std::size_t from, std::size_t to) {
  std::vector<std::vector<Element>> out;
  std::vector<Element> cur(from, 0);
  while (true) {
    out.push_back(cur);
    std::size_t pos = from;
    while (pos > 0) {
      --pos;
      if (++cur[pos] < to) break;
      cur[pos] = 0;
      if (pos == 0) return out;
    }
    if (from == 0) return out;
  }
}

}  // namespace algtype::testing
